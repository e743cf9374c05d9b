//! Divisor-class lattices with symmetric intersection forms.
//!
//! A [`LatticeSpace`] is a named basis together with an arity: 3 for
//! threefolds (triple products) and 2 for surfaces. Divisor classes carry one
//! [`Poly2`] coefficient per basis element so the same pairing routine expands
//! both numeric and parametric classes. Curves are stored only through their
//! intersection numbers with the basis divisors.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly2;
use crate::rational::Rational;

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct LatticeSpace {
    name: String,
    basis: Vec<String>,
    arity: usize,
}

pub type Space = Arc<LatticeSpace>;

impl LatticeSpace {
    pub fn new(name: &str, basis: &[&str], arity: usize) -> Result<Space> {
        if !(2..=3).contains(&arity) {
            return Err(Error::InvalidLattice(format!("arity {arity} for `{name}`; expected 2 or 3")));
        }
        if basis.is_empty() {
            return Err(Error::InvalidLattice(format!("empty basis for `{name}`")));
        }
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].contains(b) {
                return Err(Error::InvalidLattice(format!("basis element `{b}` repeated in `{name}`")));
            }
        }
        Ok(Arc::new(LatticeSpace {
            name: name.to_string(),
            basis: basis.iter().map(|s| s.to_string()).collect(),
            arity,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::UnknownBasisElement { space: self.name.clone(), name: name.to_string() })
    }

    /// All sorted index tuples of length `arity`.
    pub fn monomials(&self) -> Vec<Vec<usize>> {
        fn rec(start: usize, rank: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for i in start..rank {
                cur.push(i);
                rec(i, rank, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, self.rank(), self.arity, &mut Vec::new(), &mut out);
        out
    }

    /// Renders a sorted index tuple, e.g. `M^2*E_S`.
    pub fn monomial_name(&self, mono: &[usize]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < mono.len() {
            let mut j = i;
            while j < mono.len() && mono[j] == mono[i] {
                j += 1;
            }
            let name = &self.basis[mono[i]];
            parts.push(if j - i == 1 { name.clone() } else { format!("{name}^{}", j - i) });
            i = j;
        }
        parts.join("*")
    }

    pub fn basis_class(self: &Arc<Self>, name: &str) -> Result<DivClass> {
        self.class(&[(name, Rational::one())])
    }

    /// Rational linear combination of basis elements.
    pub fn class(self: &Arc<Self>, terms: &[(&str, Rational)]) -> Result<DivClass> {
        let mut coeffs = vec![Poly2::zero(); self.rank()];
        for (name, c) in terms {
            let i = self.index_of(name)?;
            coeffs[i] = &coeffs[i] + &Poly2::constant(c.clone());
        }
        Ok(DivClass { space: self.clone(), coeffs })
    }

    fn check(&self, other: &LatticeSpace) -> Result<()> {
        if self != other {
            return Err(Error::SpaceMismatch { expected: self.name.clone(), found: other.name.clone() });
        }
        Ok(())
    }
}

/// Symmetric multilinear form stored on sorted basis monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    space: Space,
    values: HashMap<Vec<usize>, Rational>,
}

/// Builds a form from `(monomial, value)` pairs, each monomial given as a
/// list of basis names in any order. Every sorted monomial must appear
/// exactly once.
pub fn make_form<M, N>(space: &Space, entries: impl IntoIterator<Item = (M, Rational)>) -> Result<IntersectionForm>
where
    M: IntoIterator<Item = N>,
    N: AsRef<str>,
{
    let mut values = HashMap::new();
    for (mono, v) in entries {
        let mut idx = mono.into_iter().map(|n| space.index_of(n.as_ref())).collect::<Result<Vec<usize>>>()?;
        if idx.len() != space.arity() {
            return Err(Error::InvalidLattice(format!(
                "monomial of length {} on `{}` (arity {})",
                idx.len(),
                space.name(),
                space.arity()
            )));
        }
        idx.sort_unstable();
        if values.contains_key(&idx) {
            return Err(Error::DuplicateMonomial { space: space.name().into(), monomial: space.monomial_name(&idx) });
        }
        values.insert(idx, v);
    }
    for mono in space.monomials() {
        if !values.contains_key(&mono) {
            return Err(Error::MissingMonomial { space: space.name().into(), monomial: space.monomial_name(&mono) });
        }
    }
    Ok(IntersectionForm { space: space.clone(), values })
}

impl IntersectionForm {
    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Value on basis indices, in any order.
    pub fn value(&self, indices: &[usize]) -> &Rational {
        let mut key = indices.to_vec();
        key.sort_unstable();
        &self.values[&key]
    }

    /// Value on basis names, in any order.
    pub fn value_named(&self, names: &[&str]) -> Result<Rational> {
        if names.len() != self.space.arity() {
            return Err(Error::DimensionMismatch { expected: self.space.arity(), found: names.len() });
        }
        let idx = names.iter().map(|n| self.space.index_of(n)).collect::<Result<Vec<_>>>()?;
        Ok(self.value(&idx).clone())
    }

    /// Entries in a stable order (lexicographic on sorted indices).
    pub fn entries(&self) -> Vec<(Vec<usize>, Rational)> {
        self.space
            .monomials()
            .into_iter()
            .map(|m| {
                let v = self.values[&m].clone();
                (m, v)
            })
            .collect()
    }

    pub fn to_document(&self) -> FormDocument {
        FormDocument {
            space: self.space.name().to_string(),
            basis: self.space.basis().to_vec(),
            arity: self.space.arity(),
            entries: self
                .entries()
                .into_iter()
                .map(|(m, value)| FormEntry {
                    monomial: m.iter().map(|&i| self.space.basis()[i].clone()).collect(),
                    value,
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &FormDocument) -> Result<IntersectionForm> {
        let basis: Vec<&str> = doc.basis.iter().map(String::as_str).collect();
        let space = LatticeSpace::new(&doc.space, &basis, doc.arity)?;
        make_form(&space, doc.entries.iter().map(|e| (e.monomial.clone(), e.value.clone())))
    }
}

/// JSON shape of a form: space name, basis, arity and monomial values as
/// exact `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDocument {
    pub space: String,
    pub basis: Vec<String>,
    pub arity: usize,
    pub entries: Vec<FormEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormEntry {
    pub monomial: Vec<String>,
    pub value: Rational,
}

/// Multilinear expansion of the form on `classes`.
pub fn pair(form: &IntersectionForm, classes: &[&DivClass]) -> Result<Poly2> {
    let arity = form.space.arity();
    if classes.len() != arity {
        return Err(Error::DimensionMismatch { expected: arity, found: classes.len() });
    }
    for c in classes {
        form.space.check(&c.space)?;
    }
    let supports: Vec<Vec<usize>> =
        classes.iter().map(|c| (0..c.coeffs.len()).filter(|&i| !c.coeffs[i].is_zero()).collect()).collect();
    let mut total = Poly2::zero();
    let mut idx = vec![0usize; arity];
    expand(form, classes, &supports, 0, &mut idx, &Poly2::one(), &mut total);
    Ok(total)
}

fn expand(
    form: &IntersectionForm,
    classes: &[&DivClass],
    supports: &[Vec<usize>],
    depth: usize,
    idx: &mut Vec<usize>,
    acc: &Poly2,
    total: &mut Poly2,
) {
    if depth == classes.len() {
        let v = form.value(idx);
        if !v.is_zero() {
            *total = &*total + &acc.scale(v);
        }
        return;
    }
    for &i in &supports[depth] {
        idx[depth] = i;
        let next = acc * &classes[depth].coeffs[i];
        expand(form, classes, supports, depth + 1, idx, &next, total);
    }
}

/// [`pair`] for classes with constant coefficients.
pub fn pair_rational(form: &IntersectionForm, classes: &[&DivClass]) -> Result<Rational> {
    let p = pair(form, classes)?;
    p.as_constant().ok_or_else(|| Error::InvalidArgument(format!("pairing depends on parameters: {p}")))
}

/// A divisor class: one polynomial coefficient per basis element.
#[derive(Clone, PartialEq, Eq)]
pub struct DivClass {
    space: Space,
    coeffs: Vec<Poly2>,
}

impl DivClass {
    pub fn zero(space: &Space) -> Self {
        DivClass { space: space.clone(), coeffs: vec![Poly2::zero(); space.rank()] }
    }

    pub fn from_rationals(space: &Space, coeffs: Vec<Rational>) -> Result<Self> {
        DivClass::from_polys(space, coeffs.into_iter().map(Poly2::constant).collect())
    }

    pub fn from_polys(space: &Space, coeffs: Vec<Poly2>) -> Result<Self> {
        if coeffs.len() != space.rank() {
            return Err(Error::DimensionMismatch { expected: space.rank(), found: coeffs.len() });
        }
        Ok(DivClass { space: space.clone(), coeffs })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn coeffs(&self) -> &[Poly2] {
        &self.coeffs
    }

    pub fn coeff(&self, name: &str) -> Result<&Poly2> {
        Ok(&self.coeffs[self.space.index_of(name)?])
    }

    /// Coefficients as rationals, if none depends on a parameter.
    pub fn rationals(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(Poly2::as_constant).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DivClass { space: self.space.clone(), coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn scale_poly(&self, c: &Poly2) -> Self {
        DivClass { space: self.space.clone(), coeffs: self.coeffs.iter().map(|p| p * c).collect() }
    }

    pub fn checked_add(&self, other: &DivClass) -> Result<DivClass> {
        self.space.check(&other.space)?;
        Ok(DivClass {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Evaluates parametric coefficients at `(x, y)`.
    pub fn specialize(&self, x: &Rational, y: &Rational) -> DivClass {
        DivClass {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().map(|p| Poly2::constant(p.eval_at(x, y))).collect(),
        }
    }

    pub fn to_document(&self) -> ClassDocument {
        ClassDocument {
            space: self.space.name().to_string(),
            coefficients: self.space.basis().iter().cloned().zip(self.coeffs.iter().cloned()).collect(),
        }
    }

    pub fn display_in(&self, xv: &str, yv: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (c, name) in self.coeffs.iter().zip(self.space.basis()) {
            if c.is_zero() {
                continue;
            }
            let term = match c.as_constant() {
                Some(r) if r.is_one() => name.clone(),
                Some(r) if r == -1 => format!("-{name}"),
                Some(r) => format!("{r}*{name}"),
                None => format!("({})*{name}", c.display_in(xv, yv)),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {p}")),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDocument {
    pub space: String,
    pub coefficients: BTreeMap<String, Poly2>,
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x", "y"))
    }
}

impl fmt::Debug for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivClass[{}]({self})", self.space.name())
    }
}

/// Panics if the spaces differ; use [`DivClass::checked_add`] otherwise.
impl Add for &DivClass {
    type Output = DivClass;
    fn add(self, rhs: &DivClass) -> DivClass {
        self.checked_add(rhs).expect("classes on the same space")
    }
}

impl Sub for &DivClass {
    type Output = DivClass;
    fn sub(self, rhs: &DivClass) -> DivClass {
        self.checked_add(&-rhs).expect("classes on the same space")
    }
}

impl Neg for &DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass { space: self.space.clone(), coeffs: self.coeffs.iter().map(|p| -p).collect() }
    }
}

impl Add for DivClass {
    type Output = DivClass;
    fn add(self, rhs: DivClass) -> DivClass {
        &self + &rhs
    }
}

impl Sub for DivClass {
    type Output = DivClass;
    fn sub(self, rhs: DivClass) -> DivClass {
        &self - &rhs
    }
}

/// A curve, known through its intersection numbers with the basis divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    name: String,
    space: Space,
    pairing: Vec<Rational>,
}

impl CurveClass {
    pub fn new(space: &Space, name: &str, pairing: Vec<Rational>) -> Result<Self> {
        if pairing.len() != space.rank() {
            return Err(Error::DimensionMismatch { expected: space.rank(), found: pairing.len() });
        }
        Ok(CurveClass { name: name.to_string(), space: space.clone(), pairing })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn pairing(&self) -> &[Rational] {
        &self.pairing
    }
}

pub fn pair_curve(curve: &CurveClass, class: &DivClass) -> Result<Poly2> {
    curve.space.check(&class.space)?;
    let mut total = Poly2::zero();
    for (p, c) in curve.pairing.iter().zip(&class.coeffs) {
        total = &total + &c.scale(p);
    }
    Ok(total)
}

pub fn pair_curve_rational(curve: &CurveClass, class: &DivClass) -> Result<Rational> {
    let p = pair_curve(curve, class)?;
    p.as_constant().ok_or_else(|| Error::InvalidArgument(format!("pairing depends on parameters: {p}")))
}

/// Linear map of divisor classes; column `j` is the image of source basis
/// element `j`, written in the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    name: String,
    source: Space,
    target: Space,
    matrix: Vec<Vec<Rational>>,
}

impl LinearMap {
    /// Builds the map from the images of the source basis, in basis order.
    pub fn from_images(name: &str, source: &Space, target: &Space, images: &[DivClass]) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::DimensionMismatch { expected: source.rank(), found: images.len() });
        }
        let mut matrix = vec![vec![Rational::zero(); source.rank()]; target.rank()];
        for (j, img) in images.iter().enumerate() {
            target.check(&img.space)?;
            let col = img
                .rationals()
                .ok_or_else(|| Error::InvalidArgument(format!("image of `{}` is parametric", source.basis()[j])))?;
            for (i, v) in col.into_iter().enumerate() {
                matrix[i][j] = v;
            }
        }
        Ok(LinearMap { name: name.to_string(), source: source.clone(), target: target.clone(), matrix })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Space {
        &self.source
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        self.source.check(&inner.target)?;
        let images = (0..inner.source.rank())
            .map(|j| {
                let e = DivClass::from_rationals(
                    &inner.source,
                    (0..inner.source.rank()).map(|k| Rational::integer((k == j) as i64)).collect(),
                )?;
                apply_map(self, &apply_map(inner, &e)?)
            })
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_images(&format!("{}∘{}", self.name, inner.name), &inner.source, &self.target, &images)
    }
}

pub fn apply_map(map: &LinearMap, class: &DivClass) -> Result<DivClass> {
    map.source.check(&class.space)?;
    let coeffs = map
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(&class.coeffs)
                .fold(Poly2::zero(), |acc, (m, c)| if m.is_zero() { acc } else { &acc + &c.scale(m) })
        })
        .collect();
    Ok(DivClass { space: map.target.clone(), coeffs })
}

/// A curve on `map.target` seen on `map.source` by the projection formula:
/// for a pull-back or restriction `map`, the curve pairs with a source
/// divisor `A` as `form(map(A), curve)`.
pub fn push_curve(map: &LinearMap, form: &IntersectionForm, curve: &DivClass, name: &str) -> Result<CurveClass> {
    if form.space.arity() != 2 {
        return Err(Error::InvalidLattice(format!("`{}` is not a surface lattice", form.space.name())));
    }
    form.space.check(&map.target)?;
    let pairing = (0..map.source.rank())
        .map(|j| {
            let e = DivClass::from_rationals(
                &map.source,
                (0..map.source.rank()).map(|k| Rational::integer((k == j) as i64)).collect(),
            )?;
            pair_rational(form, &[&apply_map(map, &e)?, curve])
        })
        .collect::<Result<Vec<_>>>()?;
    CurveClass::new(&map.source, name, pairing)
}

/// Pulls a form back along a map between spaces of the same arity.
pub fn pull_back_form(form: &IntersectionForm, map: &LinearMap) -> Result<IntersectionForm> {
    form.space.check(&map.target)?;
    if map.source.arity() != form.space.arity() {
        return Err(Error::InvalidLattice("pull-back between lattices of different arity".into()));
    }
    let basis: Vec<DivClass> = (0..map.source.rank())
        .map(|j| {
            let e = DivClass::from_rationals(
                &map.source,
                (0..map.source.rank()).map(|k| Rational::integer((k == j) as i64)).collect(),
            )?;
            apply_map(map, &e)
        })
        .collect::<Result<_>>()?;
    let mut entries = Vec::new();
    for mono in map.source.monomials() {
        let classes: Vec<&DivClass> = mono.iter().map(|&i| &basis[i]).collect();
        let v = pair_rational(form, &classes)?;
        let names: Vec<String> = mono.iter().map(|&i| map.source.basis()[i].clone()).collect();
        entries.push((names, v));
    }
    make_form(&map.source, entries)
}

/// Result of [`change_basis`]: the new space and both coordinate maps.
#[derive(Clone, Debug)]
pub struct BasisChange {
    pub space: Space,
    /// Old coordinates to new coordinates.
    pub forward: LinearMap,
    /// New coordinates to old coordinates.
    pub inverse: LinearMap,
}

/// Re-expresses `space` in a new basis given as classes on `space`.
pub fn change_basis(space: &Space, new_name: &str, new_names: &[&str], new_basis: &[DivClass]) -> Result<BasisChange> {
    if new_basis.len() != space.rank() || new_names.len() != space.rank() {
        return Err(Error::DimensionMismatch { expected: space.rank(), found: new_basis.len() });
    }
    let new_space = LatticeSpace::new(new_name, new_names, space.arity())?;
    let inverse = LinearMap::from_images("to_old", &new_space, space, new_basis)?;
    let inv = invert(&inverse.matrix).ok_or(Error::SingularBasis)?;
    let forward = LinearMap { name: "to_new".into(), source: space.clone(), target: new_space.clone(), matrix: inv };
    Ok(BasisChange { space: new_space, forward, inverse })
}

fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|k| Rational::integer((k == i) as i64)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        let inv = a[col][col].recip().ok()?;
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                *v -= &f * p;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn surface() -> (Space, IntersectionForm) {
        let s = LatticeSpace::new("T", &["zeta_T", "l_T"], 2).unwrap();
        let f = make_form(
            &s,
            [(vec!["zeta_T", "zeta_T"], q!(-90)), (vec!["zeta_T", "l_T"], q!(1)), (vec!["l_T", "l_T"], q!(0))],
        )
        .unwrap();
        (s, f)
    }

    #[test]
    fn form_completeness() {
        let s = LatticeSpace::new("T", &["zeta_T", "l_T"], 2).unwrap();
        let missing = make_form(&s, [(vec!["zeta_T", "zeta_T"], q!(-90)), (vec!["l_T", "zeta_T"], q!(1))]);
        assert_eq!(missing, Err(Error::MissingMonomial { space: "T".into(), monomial: "l_T^2".into() }));
        let dup = make_form(
            &s,
            [
                (vec!["zeta_T", "l_T"], q!(1)),
                (vec!["l_T", "zeta_T"], q!(1)),
                (vec!["zeta_T", "zeta_T"], q!(0)),
                (vec!["l_T", "l_T"], q!(0)),
            ],
        );
        assert!(matches!(dup, Err(Error::DuplicateMonomial { .. })));
    }

    #[test]
    fn surface_pairing() {
        let (s, f) = surface();
        let r = s.class(&[("zeta_T", q!(1)), ("l_T", q!(36))]).unwrap();
        assert_eq!(pair_rational(&f, &[&r, &r]).unwrap(), q!(-18));
    }

    #[test]
    fn space_mismatch_is_reported() {
        let (s, f) = surface();
        let other = LatticeSpace::new("U", &["a", "b"], 2).unwrap();
        let a = other.basis_class("a").unwrap();
        let z = s.basis_class("zeta_T").unwrap();
        assert!(matches!(pair(&f, &[&a, &z]), Err(Error::SpaceMismatch { .. })));
    }

    #[test]
    fn singular_basis_rejected() {
        let (s, _) = surface();
        let z = s.basis_class("zeta_T").unwrap();
        let r = change_basis(&s, "bad", &["a", "b"], &[z.clone(), z]);
        assert_eq!(r.err(), Some(Error::SingularBasis));
    }

    #[test]
    fn form_document_round_trip() {
        let (_, f) = surface();
        let doc = f.to_document();
        let json = serde_json::to_string(&doc).unwrap();
        let back: FormDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(IntersectionForm::from_document(&back).unwrap().entries(), f.entries());
    }

    #[test]
    fn monomial_listing() {
        let s = LatticeSpace::new("Y", &["M", "E_S", "E_P"], 3).unwrap();
        let monos = s.monomials();
        assert_eq!(monos.len(), 10);
        assert_eq!(s.monomial_name(&[0, 1, 1]), "M*E_S^2");
    }
}
