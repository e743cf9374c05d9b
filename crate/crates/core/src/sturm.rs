//! Real root isolation by Sturm sequences.
//!
//! All counts are exact. For a squarefree `p`, `V(a) - V(b)` equals the number
//! of roots in the half-open interval `(a, b]`, even when `a` or `b` is itself
//! a root.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly1;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Poly1>,
}

impl SturmSequence {
    /// Builds the chain from the squarefree part of `p`.
    pub fn new(p: &Poly1) -> Result<Self> {
        let p0 = p.squarefree_part()?;
        let mut chain = vec![p0.clone()];
        let mut prev = p0.clone();
        let mut cur = p0.derivative();
        while !cur.is_zero() {
            chain.push(cur.clone());
            let (_, r) = prev.div_rem(&cur)?;
            prev = cur;
            cur = -&r;
        }
        Ok(SturmSequence { chain })
    }

    /// The squarefree polynomial heading the chain.
    pub fn base(&self) -> &Poly1 {
        &self.chain[0]
    }

    pub fn variations_at(&self, t: &Rational) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at(t)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        count_variations(self.chain.iter().map(Poly1::sign_at_pos_infinity))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        count_variations(self.chain.iter().map(Poly1::sign_at_neg_infinity))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let n = self.count_half_open(a, b);
        if self.base().sign_at(b) == 0 {
            n - 1
        } else {
            n
        }
    }

    /// Number of distinct real roots in the closed interval `[a, b]`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        let n = self.count_half_open(a, b);
        if self.base().sign_at(a) == 0 {
            n + 1
        } else {
            n
        }
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// An open interval holding exactly one real root of `poly`.
///
/// `poly` is squarefree and nonzero at both endpoints, so the endpoint signs
/// are opposite. `exact` is set when bisection happened to land on the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootBracket {
    pub lower: Rational,
    pub upper: Rational,
    #[serde(skip)]
    pub poly: Poly1,
    pub sign_lower: i8,
    pub sign_upper: i8,
    pub exact: Option<Rational>,
}

impl RootBracket {
    fn from_endpoints(poly: &Poly1, lower: Rational, upper: Rational, exact: Option<Rational>) -> Self {
        RootBracket {
            sign_lower: poly.sign_at(&lower),
            sign_upper: poly.sign_at(&upper),
            lower,
            upper,
            poly: poly.clone(),
            exact,
        }
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn midpoint(&self) -> Rational {
        self.lower.midpoint(&self.upper)
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lower < t && t < &self.upper
    }

    /// Re-checks the bracket from scratch: fresh Sturm chain, root count of
    /// exactly one, nonzero endpoint signs that agree with the stored ones and
    /// differ from each other.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Verification(format!("bracket ({}, {}): {msg}", self.lower, self.upper)));
        if self.lower >= self.upper {
            return fail("empty interval");
        }
        let sl = self.poly.sign_at(&self.lower);
        let su = self.poly.sign_at(&self.upper);
        if sl == 0 || su == 0 {
            return fail("endpoint is a root");
        }
        if sl != self.sign_lower || su != self.sign_upper {
            return fail("stored endpoint signs are stale");
        }
        if sl == su {
            return fail("no sign change");
        }
        let seq = SturmSequence::new(&self.poly)?;
        if seq.count_open(&self.lower, &self.upper) != 1 {
            return fail("Sturm count differs from one");
        }
        if let Some(r) = &self.exact {
            if !self.contains(r) || !self.poly.eval(r).is_zero() {
                return fail("recorded exact root is wrong");
            }
        }
        Ok(())
    }

    /// Bisects until the width is at most `tol`.
    pub fn refine(&self, tol: &Rational) -> Result<RootBracket> {
        if !tol.is_positive() {
            return Err(Error::InvalidArgument("tolerance must be positive".into()));
        }
        let mut b = self.clone();
        while &b.width() > tol {
            if let Some(r) = &b.exact {
                let two = Rational::integer(2);
                let w = [tol / &two, (r - &b.lower) / &two, (&b.upper - r) / &two].into_iter().min().expect("nonempty");
                return Ok(RootBracket::from_endpoints(&b.poly, r - &w, r + &w, Some(r.clone())));
            }
            let m = b.midpoint();
            let sm = b.poly.sign_at(&m);
            b = if sm == 0 {
                RootBracket { exact: Some(m), ..b }
            } else if sm == b.sign_lower {
                RootBracket::from_endpoints(&b.poly, m, b.upper.clone(), None)
            } else {
                RootBracket::from_endpoints(&b.poly, b.lower.clone(), m, None)
            };
        }
        Ok(b)
    }
}

/// Isolates every real root of `p` in the closed interval `[lo, hi]`.
///
/// Brackets are disjoint and sorted. When `lo` or `hi` is itself a root, the
/// corresponding bracket extends slightly past the interval so that its
/// endpoints stay away from roots.
pub fn sturm_isolate(p: &Poly1, lo: &Rational, hi: &Rational) -> Result<Vec<RootBracket>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty interval [{lo}, {hi}]")));
    }
    let seq = SturmSequence::new(p)?;
    let base = seq.base().clone();
    if base.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let a = widen(&seq, lo, -1);
    let b = widen(&seq, hi, 1);
    let mut out = Vec::new();
    let mut stack = vec![(a, b)];
    while let Some((a, b)) = stack.pop() {
        match seq.count_open(&a, &b) {
            0 => {}
            1 => out.push(RootBracket::from_endpoints(&base, a, b, None)),
            _ => {
                let m = split_point(&base, &a, &b);
                // Push the right half first so the left half is handled first.
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    out.sort_by(|x, y| x.lower.cmp(&y.lower));
    Ok(out)
}

/// Moves `t` outward (direction `dir`) by a step small enough that no new
/// root is included and the new endpoint is not a root.
fn widen(seq: &SturmSequence, t: &Rational, dir: i8) -> Rational {
    let base = seq.base();
    if base.sign_at(t) != 0 {
        return t.clone();
    }
    let mut step = Rational::one();
    loop {
        let cand = if dir < 0 { t - &step } else { t + &step };
        let (a, b) = if dir < 0 { (&cand, t) } else { (t, &cand) };
        if base.sign_at(&cand) != 0 && seq.count_open(a, b) == 0 {
            return cand;
        }
        step /= Rational::integer(2);
    }
}

/// A point strictly inside `(a, b)` that is not a root, close to the midpoint.
fn split_point(p: &Poly1, a: &Rational, b: &Rational) -> Rational {
    let mid = a.midpoint(b);
    if p.sign_at(&mid) != 0 {
        return mid;
    }
    let mut off = (b - a) / Rational::integer(4);
    loop {
        for cand in [&mid + &off, &mid - &off] {
            if p.sign_at(&cand) != 0 {
                return cand;
            }
        }
        off /= Rational::integer(2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn sqrt_two() {
        let p = Poly1::from_ints(&[-2, 0, 1]);
        let roots = sturm_isolate(&p, &q!(0), &q!(2)).unwrap();
        assert_eq!(roots.len(), 1);
        let r = roots[0].refine(&q!(1, 1000)).unwrap();
        r.verify().unwrap();
        assert!(r.lower < q!(1415, 1000) && r.upper > q!(1414, 1000));
    }

    #[test]
    fn no_real_roots() {
        let p = Poly1::from_ints(&[1, 0, 1]);
        assert!(sturm_isolate(&p, &q!(-10), &q!(10)).unwrap().is_empty());
        assert_eq!(SturmSequence::new(&p).unwrap().count_real(), 0);
    }

    #[test]
    fn endpoint_and_midpoint_roots() {
        // roots 0, 1, 2: both endpoints and the first midpoint are roots
        let p = Poly1::from_ints(&[0, 2, -3, 1]);
        let roots = sturm_isolate(&p, &q!(0), &q!(2)).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, expect) in roots.iter().zip([q!(0), q!(1), q!(2)]) {
            r.verify().unwrap();
            assert!(r.contains(&expect));
            let fine = r.refine(&q!(1, 1_000_000)).unwrap();
            fine.verify().unwrap();
            assert!(fine.contains(&expect));
        }
    }

    #[test]
    fn repeated_roots_are_counted_once() {
        // (t - 1)^3 (t + 1)
        let p = &Poly1::from_ints(&[-1, 3, -3, 1]) * &Poly1::from_ints(&[1, 1]);
        let roots = sturm_isolate(&p, &q!(-5), &q!(5)).unwrap();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(sturm_isolate(&Poly1::zero(), &q!(0), &q!(1)), Err(Error::ZeroPolynomial));
    }
}
