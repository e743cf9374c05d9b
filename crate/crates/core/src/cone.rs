//! Linear cone constraints on classes `Z = a M + b phi*L - m E_P` and the
//! exact lower bound on the slope of effective divisors with `lambda < 9/5`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{lambda_slope, lambda_slope_poly, GeometryModel, DT, ES};
use crate::lattice::{apply_map, pair, pair_rational, DivClass};
use crate::lp::{
    feasibility, lp_optimize, FarkasCertificate, Feasibility, IneqSystem, LinearFunctional, LpOutcome, Relation, Row,
    Sense,
};
use crate::poly::Poly2;
use crate::q;
use crate::rational::Rational;
use crate::report::{Report, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTriple {
    pub a: Rational,
    pub b: Rational,
    pub m: Rational,
}

impl ClassTriple {
    pub fn new(a: Rational, b: Rational, m: Rational) -> Self {
        ClassTriple { a, b, m }
    }

    pub fn ints(a: i64, b: i64, m: i64) -> Self {
        ClassTriple::new(q!(a), q!(b), q!(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeRow {
    pub name: String,
    pub satisfied: bool,
    pub slack: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeVerdict {
    pub rows: Vec<ConeRow>,
    pub overall: bool,
}

/// A linear form `c . (a, b, m)` with a display name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleForm {
    pub name: String,
    pub coeffs: [Rational; 3],
}

impl TripleForm {
    pub fn eval(&self, t: &ClassTriple) -> Rational {
        &self.coeffs[0] * &t.a + &self.coeffs[1] * &t.b + &self.coeffs[2] * &t.m
    }
}

/// Cone constraints whose coefficients are read off the intersection model.
pub struct ConeCertifier<'a> {
    model: &'a GeometryModel,
    /// `Z . l_S >= 0`, i.e. `a - m >= 0`.
    pub fibre: TripleForm,
    /// `(M - phi*L/2)|_{E_S} . Z|_{E_S} / 6 >= 0`, i.e. `a/2 + b - 9m/2 >= 0`.
    pub section: TripleForm,
    /// `nu^*Z . C_node / 2 >= 0`, i.e. `b - 2m >= 0`, valid when `Z` contains
    /// no nodal lifting.
    pub bitangent: TripleForm,
}

fn triple_form(name: &str, f: impl Fn(&ClassTriple) -> Rational) -> TripleForm {
    TripleForm {
        name: name.to_string(),
        coeffs: [f(&ClassTriple::ints(1, 0, 0)), f(&ClassTriple::ints(0, 1, 0)), f(&ClassTriple::ints(0, 0, 1))],
    }
}

impl<'a> ConeCertifier<'a> {
    pub fn new(model: &'a GeometryModel) -> Result<Self> {
        let z = |t: &ClassTriple| model.triple_class(&t.a, &t.b, &t.m);
        let l_s = model.curve("l_S")?.clone();
        let fibre = triple_form("a >= m", |t| crate::lattice::pair_curve_rational(&l_s, &z(t)).expect("Y class"));

        let nef_es = apply_map(&model.restrict_es, &(model.yc("M") - &model.yc("phi*L").scale(&q!(1, 2))))?;
        let section = triple_form("a/2 + b >= 9m/2", |t| {
            let zr = apply_map(&model.restrict_es, &z(t)).expect("Y class");
            pair_rational(&model.es, &[&nef_es, &zr]).expect("E_S classes") / q!(6)
        });

        let c_node = model.class(DT, "C_node")?.clone();
        let bitangent = triple_form("b >= 2m", |t| {
            let zr = apply_map(&model.nu_pull, &z(t)).expect("Y class");
            pair_rational(&model.dt, &[&zr, &c_node]).expect("D~ classes") / q!(2)
        });
        Ok(ConeCertifier { model, fibre, section, bitangent })
    }

    pub fn model(&self) -> &GeometryModel {
        self.model
    }

    pub fn necessary_conditions(&self, t: &ClassTriple, assume_nodal_free: bool) -> ConeVerdict {
        let mut forms = vec![&self.fibre, &self.section];
        if assume_nodal_free {
            forms.push(&self.bitangent);
        }
        let rows: Vec<ConeRow> = forms
            .into_iter()
            .map(|f| {
                let slack = f.eval(t);
                ConeRow { name: f.name.clone(), satisfied: !slack.is_negative(), slack }
            })
            .collect();
        let overall = rows.iter().all(|r| r.satisfied);
        ConeVerdict { rows, overall }
    }

    /// Slope of `D`, the threshold of the extremality condition.
    pub fn d_slope(&self) -> Result<Rational> {
        let [a, b, m] = self.model.class_triple(self.model.yc("D"))?;
        let c = |p: &Poly2| p.as_constant().ok_or_else(|| Error::InvalidArgument("D is not constant".into()));
        lambda_slope(&c(&a)?, &c(&b)?, &c(&m)?)
    }

    /// True iff the push-forward slope is strictly below that of `D`,
    /// equivalently `a/5 + b < 3m`.
    pub fn extremality_test(&self, t: &ClassTriple) -> Result<bool> {
        if !t.a.is_positive() {
            return Err(Error::InvalidArgument(format!("extremality needs a > 0, got a = {}", t.a)));
        }
        Ok(lambda_slope(&t.a, &t.b, &t.m)? < self.d_slope()?)
    }

    /// The extremality row `-(a/5 + b - 3m) > 0`, obtained by clearing the
    /// positive denominator `a` in `slope(D) - slope(Z) > 0`.
    pub fn extremality_form(&self) -> Result<TripleForm> {
        let s = self.d_slope()?;
        // slope(D) a - (2a + b - 3m)
        Ok(TripleForm { name: "a/5 + b < 3m".into(), coeffs: [&s - q!(2), q!(-1), q!(3)] })
    }

    /// The system of the nodal corollary over `(a, b, m)`.
    pub fn nodal_system(&self) -> Result<IneqSystem> {
        let ext = self.extremality_form()?;
        let row = |f: &TripleForm, rel| Row::new(f.name.clone(), f.coeffs.to_vec(), Rational::zero(), rel);
        IneqSystem::new(
            vec!["a".into(), "b".into(), "m".into()],
            vec![
                row(&ext, Relation::Gt),
                row(&self.section, Relation::Ge),
                row(&self.bitangent, Relation::Ge),
                Row::new("a > 0", vec![q!(1), q!(0), q!(0)], Rational::zero(), Relation::Gt),
                Row::new("m >= 0", vec![q!(0), q!(0), q!(1)], Rational::zero(), Relation::Ge),
            ],
        )
    }

    /// Exact certificate that no extremal class is free of nodal liftings.
    pub fn nodal_infeasibility(&self) -> Result<FarkasCertificate> {
        let system = self.nodal_system()?;
        match feasibility(&system) {
            Feasibility::Infeasible(cert) => {
                cert.replay(&system)?;
                Ok(cert)
            }
            Feasibility::Feasible(p) => Err(Error::Verification(format!("nodal system is feasible at {p:?}"))),
        }
    }

    /// For each row in the support of the certificate, a point satisfying
    /// all other rows.
    pub fn nodal_minimality(&self) -> Result<Vec<(String, Vec<Rational>)>> {
        let system = self.nodal_system()?;
        let cert = self.nodal_infeasibility()?;
        let mut out = Vec::new();
        for (i, y) in cert.multipliers.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            match feasibility(&system.without_row(i)) {
                Feasibility::Feasible(p) => out.push((system.rows()[i].label.clone(), p)),
                Feasibility::Infeasible(_) => {
                    return Err(Error::Verification(format!("still infeasible without `{}`", system.rows()[i].label)))
                }
            }
        }
        Ok(out)
    }

    /// A point of the system with the extremality row relaxed to `>=`.
    pub fn nodal_boundary(&self) -> Result<Vec<Rational>> {
        let system = self.nodal_system()?.with_relation(0, Relation::Ge);
        match feasibility(&system) {
            Feasibility::Feasible(p) => Ok(p),
            Feasibility::Infeasible(c) => Err(Error::Verification(format!("boundary system infeasible: {c}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NefMembership {
    pub member: bool,
    /// Coefficient of `Rt - 27 l_S`.
    pub u: Rational,
    /// Coefficient of `l_S`.
    pub v: Rational,
}

/// Membership in the nef cone `<Rt - 27 l_S, l_S>` of `E_S`.
pub fn nef_membership_es(c: &DivClass) -> Result<NefMembership> {
    let [u, v] = nef_coordinates_es(c)?;
    let (u, v) = match (u.as_constant(), v.as_constant()) {
        (Some(u), Some(v)) => (u, v),
        _ => return Err(Error::InvalidArgument("parametric class; use nef_coordinates_es".into())),
    };
    Ok(NefMembership { member: !u.is_negative() && !v.is_negative(), u, v })
}

/// Coordinates `(u, v)` with `c = u (Rt - 27 l_S) + v l_S`.
pub fn nef_coordinates_es(c: &DivClass) -> Result<[Poly2; 2]> {
    if c.space().name() != ES {
        return Err(Error::SpaceMismatch { expected: ES.into(), found: c.space().name().into() });
    }
    let u = c.coeff("Rt")?.clone();
    let v = c.coeff("l_S")? + &u.scale(&q!(27));
    Ok([u, v])
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem13Bound {
    pub lambda_min: Rational,
    /// Optimal `(x, y)`.
    pub vertex: (Rational, Rational),
    pub ratio: Rational,
    /// Homogenised system in `t = 1/x`, `r = y/x`.
    pub system: IneqSystem,
    pub report: Report,
}

const SRC_13: &str = "theorem-main1-3";

fn linear_row(label: &str, p: &Poly2) -> Result<Row> {
    if p.total_degree().unwrap_or(0) > 1 {
        return Err(Error::InvalidArgument(format!("constraint `{label}` is not linear: {p}")));
    }
    // c0 + cx x + cy y >= 0 with x > 0 becomes c0 t + cx + cy r >= 0.
    Ok(Row::new(label, vec![p.coeff(0, 0), p.coeff(0, 1)], p.coeff(1, 0), Relation::Ge))
}

/// Lower bound on the slope of `E_S + x D + y E_P` under the constraints
/// forced by effectivity on `E_S` and by the nef class `alpha` on `D~`.
pub fn theorem13_bound(model: &GeometryModel) -> Result<Theorem13Bound> {
    let mut rep = Report::new("Lower bound");
    let g = "constraints";
    let x = Poly2::x();
    let y = Poly2::y();
    let eta = &(model.yc("E_S") + &model.yc("D").scale_poly(&x)) + &model.yc("E_P").scale_poly(&y);

    // (1) Restriction to E_S and its nef coordinates.
    let on_es = apply_map(&model.restrict_es, &eta)?;
    let expect_rt = Poly2::from_ints(&[(0, 0, -1), (1, 0, 28), (0, 1, 1)]);
    let expect_l = Poly2::from_ints(&[(0, 0, 18), (1, 0, -720)]);
    check_poly(&mut rep, g, "Rt-coefficient of eta|_{E_S}", &expect_rt, on_es.coeff("Rt")?)?;
    check_poly(&mut rep, g, "l_S-coefficient of eta|_{E_S}", &expect_l, on_es.coeff("l_S")?)?;
    let [u, v] = nef_coordinates_es(&on_es)?;
    check_poly(&mut rep, g, "facet -1 + 28x + y >= 0", &expect_rt, &u)?;
    let expect_v = Poly2::from_ints(&[(0, 0, -9), (1, 0, 36), (0, 1, 27)]);
    check_poly(&mut rep, g, "facet -9(1 - 4x - 3y) >= 0", &expect_v, &v)?;
    let sq = pair(&model.y, &[&eta, &eta, model.yc("E_S")])?;
    let f1 = Poly2::from_ints(&[(0, 0, 1), (1, 0, -28), (0, 1, -1)]);
    let f2 = Poly2::from_ints(&[(0, 0, 1), (1, 0, -4), (0, 1, -3)]);
    check_poly(&mut rep, g, "eta^2.E_S = 18(1-28x-y)(1-4x-3y)", &(&f1 * &f2).scale(&q!(18)), &sq)?;
    check_poly(&mut rep, g, "eta^2.E_S = 2uv on E_S", &(&u * &v).scale(&q!(2)), &sq)?;

    // (2) The nef class alpha on D~.
    let pull = |c: &DivClass| apply_map(&model.nu_pull, c);
    let alpha = &pull(model.yc("E_S"))? + &model.class(DT, "C_node_agg")?.scale(&q!(1, 2));
    let g2 = "alpha";
    let dp = |a: &DivClass, b: &DivClass| pair_rational(&model.dt, &[a, b]);
    rep.compare_exact(g2, "alpha.C_node,t", &q!(0), &dp(&alpha, model.class(DT, "C_node")?)?, SRC_13);
    rep.compare_exact(g2, "alpha.nu^*E_S", &q!(360), &dp(&alpha, &pull(model.yc("E_S"))?)?, SRC_13);
    rep.compare_exact(g2, "alpha.nu^*D", &q!(-576), &dp(&alpha, &pull(model.yc("D"))?)?, SRC_13);
    rep.compare_exact(g2, "alpha.nu^*E_P", &q!(2088), &dp(&alpha, &pull(model.yc("E_P"))?)?, SRC_13);
    let a_eta = pair(&model.dt, &[&alpha, &pull(&eta)?])?;
    let expect_alpha = Poly2::from_ints(&[(0, 0, 5), (1, 0, -8), (0, 1, 29)]).scale(&q!(72));
    check_poly(&mut rep, g2, "alpha.nu^*eta = 72(5 - 8x + 29y)", &expect_alpha, &a_eta)?;

    // (3) Minimise r = y/x.
    let system = IneqSystem::new(
        vec!["t".into(), "r".into()],
        vec![
            linear_row("-1 + 28x + y >= 0", &u)?,
            linear_row("y >= (1 - 4x)/3", &v.scale(&q!(1, 9)))?,
            linear_row("5 - 8x + 29y >= 0", &a_eta.scale(&q!(1, 72)))?,
            Row::new("x > 0", vec![q!(1), q!(0)], Rational::zero(), Relation::Gt),
        ],
    )?;
    let objective = LinearFunctional::new(vec![q!(0), q!(1)]);
    let (ratio, t_opt) = match lp_optimize(&system, &objective, Sense::Min)? {
        LpOutcome::Optimal { value, vertex, attained: true } => (value, vertex[0].clone()),
        other => return Err(Error::Verification(format!("slope LP did not attain an optimum: {other:?}"))),
    };
    let x_opt = t_opt.recip()?;
    let y_opt = &ratio * &x_opt;

    // Closed-form vertex: the facets v = 0 and alpha = 0 as lines in (x, y).
    let (cx, cy) = solve_lines(&v, &a_eta)?;
    rep.compare("optimum", "vertex (x, y)", format!("({cx}, {cy})"), format!("({x_opt}, {y_opt})"), SRC_13);
    rep.compare_exact("optimum", "min y/x", &q!(-3, 11), &ratio, SRC_13);
    let slack_u = u.eval_at(&x_opt, &y_opt);
    rep.push(
        "optimum",
        "facet -1 + 28x + y at vertex",
        "inactive".into(),
        slack_u.to_string(),
        if slack_u.is_positive() { Status::Pass } else { Status::Fail },
        SRC_13,
        "",
    );

    // Slope as a function of eta = y/x, from the class triple.
    let eta_x = DivClass::from_polys(eta.space(), eta.coeffs().iter().map(|c| c.substitute_y_times_x()).collect())?;
    let [a, b, m] = model.class_triple(&eta_x)?;
    let slope = lambda_slope_poly(&a, &b, &m)?;
    let lambda_min = slope.eval(Some(&x_opt), Some(&ratio))?;
    rep.compare_exact("optimum", "lambda >= 39/22", &q!(39, 22), &lambda_min, SRC_13);
    if !rep.ok() {
        let f: Vec<String> = rep.failures().iter().map(|r| r.quantity.clone()).collect();
        return Err(Error::Verification(format!("lower bound checks failed: {}", f.join("; "))));
    }
    Ok(Theorem13Bound { lambda_min, vertex: (x_opt, y_opt), ratio, system, report: rep })
}

fn check_poly(rep: &mut Report, group: &str, quantity: &str, printed: &Poly2, derived: &Poly2) -> Result<()> {
    rep.compare(group, quantity, printed.to_string(), derived.to_string(), SRC_13);
    Ok(())
}

/// Intersection of the lines `p = 0` and `q = 0` for linear `p`, `q` in `(x, y)`.
fn solve_lines(p: &Poly2, q: &Poly2) -> Result<(Rational, Rational)> {
    let (a1, b1, c1) = (p.coeff(1, 0), p.coeff(0, 1), p.coeff(0, 0));
    let (a2, b2, c2) = (q.coeff(1, 0), q.coeff(0, 1), q.coeff(0, 0));
    let det = &a1 * &b2 - &a2 * &b1;
    let x = (&b1 * &c2 - &b2 * &c1).checked_div(&det)?;
    let y = (&a2 * &c1 - &a1 * &c2).checked_div(&det)?;
    Ok((x, y))
}

/// Input accepted by the `verify` command.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeInput {
    #[serde(default)]
    pub triples: Vec<TripleInput>,
    #[serde(default)]
    pub systems: Vec<SystemInput>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TripleInput {
    pub a: Rational,
    pub b: Rational,
    pub m: Rational,
    #[serde(default)]
    pub nodal_free: bool,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SystemInput {
    pub name: String,
    pub system: IneqSystem,
    #[serde(default)]
    pub objective: Option<Vec<Rational>>,
    #[serde(default)]
    pub sense: Option<Sense>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleResult {
    pub triple: ClassTriple,
    pub verdict: ConeVerdict,
    pub slope: Option<Rational>,
    pub extremal: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SystemResult {
    pub name: String,
    pub feasibility: Feasibility,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimum: Option<LpOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeOutput {
    pub triples: Vec<TripleResult>,
    pub systems: Vec<SystemResult>,
}

pub fn run_input(cert: &ConeCertifier<'_>, input: &ConeInput) -> Result<ConeOutput> {
    let mut triples = Vec::new();
    for t in &input.triples {
        let triple = ClassTriple::new(t.a.clone(), t.b.clone(), t.m.clone());
        let verdict = cert.necessary_conditions(&triple, t.nodal_free);
        let (slope, extremal) = if triple.a.is_positive() {
            (Some(lambda_slope(&triple.a, &triple.b, &triple.m)?), Some(cert.extremality_test(&triple)?))
        } else {
            (None, None)
        };
        triples.push(TripleResult { triple, verdict, slope, extremal });
    }
    let mut systems = Vec::new();
    for s in &input.systems {
        let feas = feasibility(&s.system);
        if let Feasibility::Infeasible(c) = &feas {
            c.replay(&s.system)?;
        }
        let optimum = match &s.objective {
            Some(c) => {
                if c.len() != s.system.num_vars() {
                    return Err(Error::DimensionMismatch { expected: s.system.num_vars(), found: c.len() });
                }
                Some(lp_optimize(&s.system, &LinearFunctional::new(c.clone()), s.sense.unwrap_or(Sense::Min))?)
            }
            None => None,
        };
        systems.push(SystemResult { name: s.name.clone(), feasibility: feas, optimum });
    }
    Ok(ConeOutput { triples, systems })
}

/// Report rows for the necessary conditions, extremality and nodal
/// infeasibility.
pub fn cone_report(cert: &ConeCertifier<'_>) -> Result<Report> {
    let mut r = Report::new("Cone constraints");
    let g = "necessary conditions";
    let src = "lemma-necessary-conditions";
    let show = |f: &TripleForm| format!("({}, {}, {})", f.coeffs[0], f.coeffs[1], f.coeffs[2]);
    r.compare(g, "Z.l_S as (a, b, m)-form", "(1, 0, -1)".into(), show(&cert.fibre), src);
    r.compare(g, "(M-phi*L/2).Z.E_S/6 as (a, b, m)-form", "(1/2, 1, -9/2)".into(), show(&cert.section), src);
    r.compare(
        g,
        "nu^*Z.C_node/2 as (a, b, m)-form",
        "(0, 1, -2)".into(),
        show(&cert.bitangent),
        "inequality-bitangent",
    );
    r.compare(
        g,
        "extremality as (a, b, m)-form",
        "(-1/5, -1, 3)".into(),
        show(&cert.extremality_form()?),
        "conditionextremal",
    );
    let d = ClassTriple::ints(30, 0, 2);
    let verdict = cert.necessary_conditions(&d, true);
    let failed: Vec<&str> = verdict.rows.iter().filter(|r| !r.satisfied).map(|r| r.name.as_str()).collect();
    r.compare(g, "D violates only b >= 2m", "b >= 2m".into(), failed.join(", "), "corollarynodal");
    r.compare_exact(g, "slope of D", &q!(9, 5), &cert.d_slope()?, "theorem-main1");
    let g = "nodal corollary";
    let cert_n = cert.nodal_infeasibility()?;
    let ys: Vec<String> = cert_n.multipliers.iter().map(|y| y.to_string()).collect();
    r.compare(g, "Farkas multipliers", "(5, 2, 3, 0, 0)".into(), format!("({})", ys.join(", ")), "corollarynodal");
    r.compare(g, "combined row", "0 > 0".into(), cert_n.contradiction(), "corollarynodal");
    let minimal = cert.nodal_minimality()?;
    r.compare(
        g,
        "rows in support whose removal restores feasibility",
        "3".into(),
        minimal.len().to_string(),
        "corollarynodal",
    );
    let b = cert.nodal_boundary()?;
    let on_boundary = b[0] == &b[2] * &q!(5) && b[1] == &b[2] * &q!(2);
    r.compare(g, "relaxed system point on a = 5m, b = 2m", "true".into(), on_boundary.to_string(), "corollarynodal");
    Ok(r)
}
