//! Exact linear programming over the rationals.
//!
//! Systems are lists of rows `c . v + d  (>= | > | =)  0` over free unknowns.
//! The solver is a dense two-phase tableau simplex with Bland's rule, so
//! every run visits the same bases in the same order.
//!
//! Strict rows never need an epsilon. Feasibility of the strict system is
//! decided by maximising a common slack `s` on the strict rows; when the best
//! slack is zero, a Farkas certificate is read off from an auxiliary LP over
//! the row multipliers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, content_gcd, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Ge,
    Gt,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Eq => "=",
        }
    }

    pub fn holds(self, value: &Rational) -> bool {
        match self {
            Relation::Ge => !value.is_negative(),
            Relation::Gt => value.is_positive(),
            Relation::Eq => value.is_zero(),
        }
    }
}

/// One row `coeffs . v + constant  relation  0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub label: String,
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub relation: Relation,
}

impl Row {
    pub fn new(label: impl Into<String>, coeffs: Vec<Rational>, constant: Rational, relation: Relation) -> Self {
        Row { label: label.into(), coeffs, constant, relation }
    }

    pub fn value_at(&self, point: &[Rational]) -> Rational {
        dot(&self.coeffs, point) + &self.constant
    }

    pub fn holds_at(&self, point: &[Rational]) -> bool {
        self.relation.holds(&self.value_at(point))
    }

    pub fn render(&self, vars: &[String]) -> String {
        let mut out = String::new();
        for (c, v) in self.coeffs.iter().zip(vars) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            if mag.is_one() {
                out.push_str(v);
            } else {
                out.push_str(&format!("{mag}*{v}"));
            }
        }
        if !self.constant.is_zero() || out.is_empty() {
            if out.is_empty() {
                out.push_str(&self.constant.to_string());
            } else if self.constant.is_negative() {
                out.push_str(&format!(" - {}", self.constant.abs()));
            } else {
                out.push_str(&format!(" + {}", self.constant));
            }
        }
        format!("{out} {} 0", self.relation.symbol())
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A finite system of linear rows over named free unknowns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSystem")]
pub struct IneqSystem {
    vars: Vec<String>,
    rows: Vec<Row>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    vars: Vec<String>,
    rows: Vec<Row>,
}

impl TryFrom<RawSystem> for IneqSystem {
    type Error = Error;

    fn try_from(raw: RawSystem) -> Result<Self> {
        IneqSystem::new(raw.vars, raw.rows)
    }
}

impl IneqSystem {
    pub fn new(vars: Vec<String>, rows: Vec<Row>) -> Result<Self> {
        for row in &rows {
            if row.coeffs.len() != vars.len() {
                return Err(Error::DimensionMismatch { expected: vars.len(), found: row.coeffs.len() });
            }
        }
        Ok(IneqSystem { vars, rows })
    }

    pub fn builder(vars: &[&str]) -> SystemBuilder {
        SystemBuilder { vars: vars.iter().map(|s| s.to_string()).collect(), rows: Vec::new(), error: None }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        point.len() == self.vars.len() && self.rows.iter().all(|r| r.holds_at(point))
    }

    /// The same rows with every `>` relaxed to `>=`.
    pub fn closure(&self) -> IneqSystem {
        self.map_rows(|r| Row {
            relation: if r.relation == Relation::Gt { Relation::Ge } else { r.relation },
            ..r.clone()
        })
    }

    pub fn without_row(&self, index: usize) -> IneqSystem {
        let rows = self.rows.iter().enumerate().filter(|(i, _)| *i != index).map(|(_, r)| r.clone()).collect();
        IneqSystem { vars: self.vars.clone(), rows }
    }

    pub fn with_row(&self, row: Row) -> Result<IneqSystem> {
        let mut rows = self.rows.clone();
        rows.push(row);
        IneqSystem::new(self.vars.clone(), rows)
    }

    pub fn with_relation(&self, index: usize, relation: Relation) -> IneqSystem {
        let mut out = self.clone();
        out.rows[index].relation = relation;
        out
    }

    /// Multiplies every row by the positive factor `c`.
    pub fn scaled(&self, c: &Rational) -> Result<IneqSystem> {
        if !c.is_positive() {
            return Err(Error::InvalidArgument("row scaling must be positive".into()));
        }
        Ok(self.map_rows(|r| Row {
            coeffs: r.coeffs.iter().map(|x| x * c).collect(),
            constant: &r.constant * c,
            ..r.clone()
        }))
    }

    fn map_rows(&self, f: impl Fn(&Row) -> Row) -> IneqSystem {
        IneqSystem { vars: self.vars.clone(), rows: self.rows.iter().map(f).collect() }
    }

    pub fn render(&self) -> Vec<String> {
        self.rows.iter().map(|r| format!("{}: {}", r.label, r.render(&self.vars))).collect()
    }
}

pub struct SystemBuilder {
    vars: Vec<String>,
    rows: Vec<Row>,
    error: Option<Error>,
}

impl SystemBuilder {
    /// Adds `sum(c * var) + constant  relation  0`.
    pub fn row(mut self, label: &str, terms: &[(&str, Rational)], constant: Rational, relation: Relation) -> Self {
        let mut coeffs = vec![Rational::zero(); self.vars.len()];
        for (name, c) in terms {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => coeffs[i] += c,
                None => {
                    self.error
                        .get_or_insert(Error::UnknownBasisElement { space: "system".into(), name: name.to_string() });
                }
            }
        }
        self.rows.push(Row::new(label, coeffs, constant, relation));
        self
    }

    pub fn build(self) -> Result<IneqSystem> {
        match self.error {
            Some(e) => Err(e),
            None => IneqSystem::new(self.vars, self.rows),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFunctional {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl LinearFunctional {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearFunctional { coeffs, constant: Rational::zero() }
    }

    pub fn value_at(&self, point: &[Rational]) -> Rational {
        dot(&self.coeffs, point) + &self.constant
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Min,
    Max,
}

/// Row multipliers proving that a system has no solution.
///
/// Multipliers on `>=`/`>` rows are non-negative; multipliers on `=` rows are
/// unrestricted. The weighted sum of the rows has zero coefficients and a
/// constant that is negative, or zero with positive weight on some strict row.
/// Multipliers are scaled to coprime integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarkasCertificate {
    pub multipliers: Vec<Rational>,
    pub combined_coeffs: Vec<Rational>,
    pub combined_constant: Rational,
    pub strict: bool,
}

impl FarkasCertificate {
    fn from_multipliers(system: &IneqSystem, multipliers: Vec<Rational>) -> Self {
        let (combined_coeffs, combined_constant, strict) = combine(system, &multipliers);
        FarkasCertificate { multipliers, combined_coeffs, combined_constant, strict }
    }

    /// Recombines the rows of `system` with the stored multipliers and checks
    /// that the result is a contradiction.
    pub fn replay(&self, system: &IneqSystem) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(format!("Farkas replay: {msg}")));
        if self.multipliers.len() != system.rows.len() {
            return fail(format!("{} multipliers for {} rows", self.multipliers.len(), system.rows.len()));
        }
        for (y, row) in self.multipliers.iter().zip(&system.rows) {
            if row.relation != Relation::Eq && y.is_negative() {
                return fail(format!("negative multiplier on `{}`", row.label));
            }
        }
        let (coeffs, constant, strict) = combine(system, &self.multipliers);
        if coeffs != self.combined_coeffs || constant != self.combined_constant || strict != self.strict {
            return fail("stored combination does not match the rows".into());
        }
        if coeffs.iter().any(|c| !c.is_zero()) {
            return fail("combined coefficients are not all zero".into());
        }
        let contradiction = constant.is_negative() || (constant.is_zero() && strict);
        if !contradiction {
            return fail(format!("combined row `{constant} >= 0` is not contradictory"));
        }
        Ok(())
    }

    /// The contradiction as text, e.g. `0 > 0` or `0 >= 1`.
    pub fn contradiction(&self) -> String {
        let rhs = -&self.combined_constant;
        if self.strict {
            format!("0 > {rhs}")
        } else {
            format!("0 >= {rhs}")
        }
    }
}

impl fmt::Display for FarkasCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ys: Vec<String> = self.multipliers.iter().map(|y| y.to_string()).collect();
        write!(f, "multipliers ({}) give {}", ys.join(", "), self.contradiction())
    }
}

fn combine(system: &IneqSystem, ys: &[Rational]) -> (Vec<Rational>, Rational, bool) {
    let n = system.vars.len();
    let mut coeffs = vec![Rational::zero(); n];
    let mut constant = Rational::zero();
    let mut strict = false;
    for (y, row) in ys.iter().zip(&system.rows) {
        if y.is_zero() {
            continue;
        }
        for (acc, c) in coeffs.iter_mut().zip(&row.coeffs) {
            *acc += y * c;
        }
        constant += y * &row.constant;
        if row.relation == Relation::Gt && y.is_positive() {
            strict = true;
        }
    }
    (coeffs, constant, strict)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Feasibility {
    /// A point satisfying every row, including strict ones.
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LpOutcome {
    /// `value` is the exact optimum over the system. When `attained` is true,
    /// `vertex` satisfies every row and achieves `value`; otherwise the value
    /// is only a supremum/infimum, approached along the strict rows, and
    /// `vertex` is the optimal point of the closure.
    Optimal {
        value: Rational,
        vertex: Vec<Rational>,
        attained: bool,
    },
    /// The objective is unbounded; `witness` is one feasible point.
    Unbounded {
        witness: Vec<Rational>,
    },
    Infeasible(FarkasCertificate),
}

/// Decides feasibility of `system`, returning a point or a certificate.
pub fn feasibility(system: &IneqSystem) -> Feasibility {
    let n = system.num_vars();
    let strict: Vec<usize> = (0..system.rows.len()).filter(|&i| system.rows[i].relation == Relation::Gt).collect();
    // Unknowns (v, s); maximise s with strict rows shifted by s and s <= 1.
    let mut rows: Vec<ClosedRow> = system
        .rows
        .iter()
        .map(|r| {
            let mut coeffs = r.coeffs.clone();
            coeffs.push(if r.relation == Relation::Gt { -Rational::one() } else { Rational::zero() });
            ClosedRow { coeffs, constant: r.constant.clone(), equality: r.relation == Relation::Eq }
        })
        .collect();
    let mut cap = vec![Rational::zero(); n];
    cap.push(-Rational::one());
    rows.push(ClosedRow { coeffs: cap, constant: Rational::one(), equality: false });
    let mut obj = vec![Rational::zero(); n];
    obj.push(-Rational::one());
    match solve_closed(n, 1, &rows, &obj) {
        ClosedOutcome::Optimal { point, .. } => {
            let s = &point[n];
            if s.is_positive() || strict.is_empty() {
                Feasibility::Feasible(point[..n].to_vec())
            } else {
                Feasibility::Infeasible(certificate(system))
            }
        }
        ClosedOutcome::Infeasible => Feasibility::Infeasible(certificate(system)),
        ClosedOutcome::Unbounded => unreachable!("slack is capped"),
    }
}

/// Finds a Farkas certificate for a system known to be infeasible.
fn certificate(system: &IneqSystem) -> FarkasCertificate {
    let rows_in = system.rows();
    let eq_idx: Vec<usize> = (0..rows_in.len()).filter(|&i| rows_in[i].relation == Relation::Eq).collect();
    let ineq_idx: Vec<usize> = (0..rows_in.len()).filter(|&i| rows_in[i].relation != Relation::Eq).collect();
    // Unknowns: free multipliers for `=` rows first, then non-negative ones.
    let order: Vec<usize> = eq_idx.iter().chain(&ineq_idx).copied().collect();
    let k = order.len();
    let mut rows = Vec::new();
    for var in 0..system.num_vars() {
        rows.push(ClosedRow {
            coeffs: order.iter().map(|&i| rows_in[i].coeffs[var].clone()).collect(),
            constant: Rational::zero(),
            equality: true,
        });
    }
    rows.push(ClosedRow {
        coeffs: order.iter().map(|&i| -&rows_in[i].constant).collect(),
        constant: Rational::zero(),
        equality: false,
    });
    for j in 0..k {
        for sign in [-1i64, 1] {
            if sign == 1 && j >= eq_idx.len() {
                continue;
            }
            let mut coeffs = vec![Rational::zero(); k];
            coeffs[j] = Rational::integer(sign);
            rows.push(ClosedRow { coeffs, constant: Rational::one(), equality: false });
        }
    }
    // Minimise sum(y d) - sum_{strict} y.
    let obj: Vec<Rational> = order
        .iter()
        .map(|&i| {
            let r = &rows_in[i];
            if r.relation == Relation::Gt {
                &r.constant - Rational::one()
            } else {
                r.constant.clone()
            }
        })
        .collect();
    let ClosedOutcome::Optimal { point, value } = solve_closed(eq_idx.len(), ineq_idx.len(), &rows, &obj) else {
        unreachable!("multiplier LP is feasible and bounded");
    };
    assert!(value.is_negative(), "certificate requested for a feasible system");
    let mut ys = vec![Rational::zero(); rows_in.len()];
    for (pos, &i) in order.iter().enumerate() {
        ys[i] = point[pos].clone();
    }
    FarkasCertificate::from_multipliers(system, primitive_integer(&ys))
}

fn primitive_integer(v: &[Rational]) -> Vec<Rational> {
    let den = common_denominator(v);
    let scaled: Vec<Rational> = v.iter().map(|x| x * Rational::from_bigint(den.clone())).collect();
    let g = content_gcd(&scaled);
    if g.is_zero() {
        return scaled;
    }
    let inv = Rational::from_bigints(BigInt::one(), g).expect("nonzero gcd");
    scaled.iter().map(|x| x * &inv).collect()
}

/// Optimises `objective` over `system`.
pub fn lp_optimize(system: &IneqSystem, objective: &LinearFunctional, sense: Sense) -> Result<LpOutcome> {
    let n = system.num_vars();
    if objective.coeffs.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: objective.coeffs.len() });
    }
    if let Feasibility::Infeasible(cert) = feasibility(system) {
        return Ok(LpOutcome::Infeasible(cert));
    }
    let sign = match sense {
        Sense::Min => Rational::one(),
        Sense::Max => -Rational::one(),
    };
    let closure = system.closure();
    let rows: Vec<ClosedRow> = closure
        .rows
        .iter()
        .map(|r| ClosedRow {
            coeffs: r.coeffs.clone(),
            constant: r.constant.clone(),
            equality: r.relation == Relation::Eq,
        })
        .collect();
    let obj: Vec<Rational> = objective.coeffs.iter().map(|c| c * &sign).collect();
    match solve_closed(n, 0, &rows, &obj) {
        ClosedOutcome::Unbounded => {
            let Feasibility::Feasible(witness) = feasibility(system) else { unreachable!() };
            Ok(LpOutcome::Unbounded { witness })
        }
        ClosedOutcome::Infeasible => unreachable!("closure of a feasible system is feasible"),
        ClosedOutcome::Optimal { point, .. } => {
            let value = objective.value_at(&point);
            if system.is_satisfied_by(&point) {
                return Ok(LpOutcome::Optimal { value, vertex: point, attained: true });
            }
            let face = system.with_row(Row::new(
                "optimal face",
                objective.coeffs.clone(),
                &objective.constant - &value,
                Relation::Eq,
            ))?;
            Ok(match feasibility(&face) {
                Feasibility::Feasible(p) => LpOutcome::Optimal { value, vertex: p, attained: true },
                Feasibility::Infeasible(_) => LpOutcome::Optimal { value, vertex: point, attained: false },
            })
        }
    }
}

/// Row `coeffs . (z, w) + constant (>= | =) 0` of a closed system with `nf`
/// free unknowns `z` followed by non-negative unknowns `w`.
struct ClosedRow {
    coeffs: Vec<Rational>,
    constant: Rational,
    equality: bool,
}

enum ClosedOutcome {
    Optimal { point: Vec<Rational>, value: Rational },
    Unbounded,
    Infeasible,
}

/// Minimises `obj . (z, w)` over a closed system by rewriting it in standard
/// form: `z = z+ - z-`, one surplus column per inequality.
fn solve_closed(nf: usize, nn: usize, rows: &[ClosedRow], obj: &[Rational]) -> ClosedOutcome {
    let nvars = nf + nn;
    let n_ineq = rows.iter().filter(|r| !r.equality).count();
    let ncols = 2 * nf + nn + n_ineq;
    let mut a = Vec::with_capacity(rows.len());
    let mut b = Vec::with_capacity(rows.len());
    let mut surplus = 2 * nf + nn;
    for r in rows {
        let mut row = vec![Rational::zero(); ncols];
        for k in 0..nf {
            row[2 * k] = r.coeffs[k].clone();
            row[2 * k + 1] = -&r.coeffs[k];
        }
        for k in 0..nn {
            row[2 * nf + k] = r.coeffs[nf + k].clone();
        }
        if !r.equality {
            row[surplus] = -Rational::one();
            surplus += 1;
        }
        a.push(row);
        b.push(-&r.constant);
    }
    let mut c = vec![Rational::zero(); ncols];
    for k in 0..nf {
        c[2 * k] = obj[k].clone();
        c[2 * k + 1] = -&obj[k];
    }
    for k in 0..nn {
        c[2 * nf + k] = obj[nf + k].clone();
    }
    match simplex_standard(&a, &b, &c) {
        StdOutcome::Infeasible => ClosedOutcome::Infeasible,
        StdOutcome::Unbounded => ClosedOutcome::Unbounded,
        StdOutcome::Optimal(x) => {
            let mut point = Vec::with_capacity(nvars);
            for k in 0..nf {
                point.push(&x[2 * k] - &x[2 * k + 1]);
            }
            for k in 0..nn {
                point.push(x[2 * nf + k].clone());
            }
            let value = dot(obj, &point);
            ClosedOutcome::Optimal { point, value }
        }
    }
}

enum StdOutcome {
    Optimal(Vec<Rational>),
    Unbounded,
    Infeasible,
}

struct Tableau {
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.t[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pv = self.t[r][c].recip().expect("nonzero pivot");
        for v in self.t[r].iter_mut() {
            *v *= &pv;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule iterations for `min cost . x`, entering only columns
    /// below `allowed`. Returns false when unbounded.
    fn run(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut red = cost[j].clone();
                for (i, &bv) in self.basis.iter().enumerate() {
                    if !cost[bv].is_zero() && !self.t[i][j].is_zero() {
                        red -= &cost[bv] * &self.t[i][j];
                    }
                }
                red.is_negative()
            });
            let Some(j) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.t.len() {
                if !self.t[i][j].is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / &self.t[i][j];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else { return false };
            self.pivot(r, j);
        }
    }
}

/// Two-phase simplex for `min c . x` subject to `A x = b`, `x >= 0`.
fn simplex_standard(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> StdOutcome {
    let m = a.len();
    let n = c.len();
    let width = n + m;
    let mut t = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rational> = a[i].iter().map(|v| if flip { -v } else { v.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut tab = Tableau { t, basis: (n..n + m).collect(), width };
    let mut phase1 = vec![Rational::zero(); width];
    for v in phase1.iter_mut().skip(n) {
        *v = Rational::one();
    }
    tab.run(&phase1, width);
    let infeas: Rational = (0..m).filter(|&i| tab.basis[i] >= n).map(|i| tab.rhs(i).clone()).sum();
    if infeas.is_positive() {
        return StdOutcome::Infeasible;
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < tab.t.len() {
        if tab.basis[i] >= n {
            match (0..n).find(|&j| !tab.t[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.t.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut cost = c.to_vec();
    cost.resize(width, Rational::zero());
    if !tab.run(&cost, n) {
        return StdOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in tab.basis.iter().enumerate() {
        x[bv] = tab.rhs(i).clone();
    }
    StdOutcome::Optimal(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn single_bound() {
        let sys = IneqSystem::builder(&["x"]).row("x>=3", &[("x", q!(1))], q!(-3), Relation::Ge).build().unwrap();
        let out = lp_optimize(&sys, &LinearFunctional::new(vec![q!(1)]), Sense::Min).unwrap();
        assert_eq!(out, LpOutcome::Optimal { value: q!(3), vertex: vec![q!(3)], attained: true });
    }

    #[test]
    fn direct_contradiction() {
        let sys = IneqSystem::builder(&["a"])
            .row("a>=0", &[("a", q!(1))], q!(0), Relation::Ge)
            .row("-a>=1", &[("a", q!(-1))], q!(-1), Relation::Ge)
            .build()
            .unwrap();
        let out = lp_optimize(&sys, &LinearFunctional::new(vec![q!(0)]), Sense::Min).unwrap();
        let LpOutcome::Infeasible(cert) = out else { panic!("expected infeasible") };
        assert_eq!(cert.multipliers, vec![q!(1), q!(1)]);
        cert.replay(&sys).unwrap();
        assert_eq!(cert.contradiction(), "0 >= 1");
    }

    #[test]
    fn strict_optimum_not_attained() {
        let sys = IneqSystem::builder(&["x"]).row("x>0", &[("x", q!(1))], q!(0), Relation::Gt).build().unwrap();
        let out = lp_optimize(&sys, &LinearFunctional::new(vec![q!(1)]), Sense::Min).unwrap();
        assert_eq!(out, LpOutcome::Optimal { value: q!(0), vertex: vec![q!(0)], attained: false });
    }

    #[test]
    fn strict_row_off_the_optimal_face() {
        // min x s.t. x >= 1, y > 0: optimum 1 is attained at some y > 0
        let sys = IneqSystem::builder(&["x", "y"])
            .row("x>=1", &[("x", q!(1))], q!(-1), Relation::Ge)
            .row("y>0", &[("y", q!(1))], q!(0), Relation::Gt)
            .build()
            .unwrap();
        let LpOutcome::Optimal { value, vertex, attained } =
            lp_optimize(&sys, &LinearFunctional::new(vec![q!(1), q!(0)]), Sense::Min).unwrap()
        else {
            panic!()
        };
        assert_eq!(value, q!(1));
        assert!(attained);
        assert!(sys.is_satisfied_by(&vertex));
    }

    #[test]
    fn unbounded_and_empty() {
        let sys = IneqSystem::builder(&["x"]).build().unwrap();
        let out = lp_optimize(&sys, &LinearFunctional::new(vec![q!(1)]), Sense::Max).unwrap();
        assert!(matches!(out, LpOutcome::Unbounded { .. }));
    }

    #[test]
    fn strict_infeasibility_certificate() {
        // x > 0 and -x >= 0
        let sys = IneqSystem::builder(&["x"])
            .row("x>0", &[("x", q!(1))], q!(0), Relation::Gt)
            .row("-x>=0", &[("x", q!(-1))], q!(0), Relation::Ge)
            .build()
            .unwrap();
        let Feasibility::Infeasible(cert) = feasibility(&sys) else { panic!() };
        cert.replay(&sys).unwrap();
        assert!(cert.strict);
        assert_eq!(cert.contradiction(), "0 > 0");
    }

    #[test]
    fn equality_rows_take_signed_multipliers() {
        // x = 1, x = 2
        let sys = IneqSystem::builder(&["x"])
            .row("x=1", &[("x", q!(1))], q!(-1), Relation::Eq)
            .row("x=2", &[("x", q!(1))], q!(-2), Relation::Eq)
            .build()
            .unwrap();
        let Feasibility::Infeasible(cert) = feasibility(&sys) else { panic!() };
        cert.replay(&sys).unwrap();
    }

    #[test]
    fn unknown_variable_rejected() {
        let err = IneqSystem::builder(&["x"]).row("r", &[("z", q!(1))], q!(0), Relation::Ge).build();
        assert!(err.is_err());
    }

    #[test]
    fn deserialisation_checks_row_lengths() {
        let ok =
            r#"{"vars": ["a"], "rows": [{"label": "a >= 1", "coeffs": ["1"], "constant": "-1", "relation": "ge"}]}"#;
        assert!(serde_json::from_str::<IneqSystem>(ok).is_ok());
        let bad =
            r#"{"vars": ["a"], "rows": [{"label": "r", "coeffs": ["1", "2"], "constant": "0", "relation": "ge"}]}"#;
        assert!(serde_json::from_str::<IneqSystem>(bad).is_err());
    }
}
