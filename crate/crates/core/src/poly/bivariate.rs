use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::univariate::{monomial_str, push_term, Poly1};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sparse polynomial in two variables, called `x` and `y` internally.
///
/// The second variable plays the role of either `y` or the slope parameter
/// `eta`, depending on context; [`Poly2::display_in`] picks the name used when
/// printing. Keys are `(deg_x, deg_y)` and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly2 {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut out = Poly2::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn from_ints(terms: &[(u32, u32, i64)]) -> Self {
        Poly2::new(terms.iter().map(|&(i, j, c)| ((i, j), Rational::integer(c))))
    }

    pub fn zero() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly2::new([((0, 0), c)])
    }

    pub fn x() -> Self {
        Poly2::new([((1, 0), Rational::one())])
    }

    pub fn y() -> Self {
        Poly2::new([((0, 1), Rational::one())])
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        Poly2::new([((i, j), c)])
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    /// The value of a constant polynomial, or `None` if it depends on a variable.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(0, 0))
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly2::new(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly2::one(), |acc, _| &acc * self)
    }

    /// Evaluates at a point. A variable may be left unbound only if no term
    /// of the polynomial involves it.
    pub fn eval(&self, x: Option<&Rational>, y: Option<&Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = c.clone();
            if i > 0 {
                term *= x.ok_or_else(|| Error::MissingBinding("x".into()))?.pow(i);
            }
            if j > 0 {
                term *= y.ok_or_else(|| Error::MissingBinding("y".into()))?.pow(j);
            }
            total += term;
        }
        Ok(total)
    }

    pub fn eval_at(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval(Some(x), Some(y)).expect("both variables bound")
    }

    /// Nested Horner evaluation: first in `y` per power of `x`, then in `x`.
    /// Shares no code with [`Poly2::eval`], so the two serve as mutual checks.
    pub fn eval_horner(&self, x: &Rational, y: &Rational) -> Rational {
        self.coeffs_in_x().iter().rev().fold(Rational::zero(), |acc, cy| acc * x + cy.eval(y))
    }

    /// Coefficients of the powers of `x`, each a polynomial in `y`.
    pub fn coeffs_in_x(&self) -> Vec<Poly1> {
        let Some(dx) = self.degree_x() else { return Vec::new() };
        let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); dx as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut rows[i as usize];
            if row.len() <= j as usize {
                row.resize(j as usize + 1, Rational::zero());
            }
            row[j as usize] = c.clone();
        }
        rows.into_iter().map(Poly1::new).collect()
    }

    pub fn from_coeffs_in_x(coeffs: &[Poly1]) -> Self {
        let mut out = Poly2::zero();
        for (i, p) in coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                out.add_term((i as u32, j as u32), c.clone());
            }
        }
        out
    }

    /// `self(x, y0)` as a polynomial in `x`.
    pub fn specialize_y(&self, y0: &Rational) -> Poly1 {
        Poly1::new(self.coeffs_in_x().iter().map(|p| p.eval(y0)).collect())
    }

    /// `self(x0, y)` as a polynomial in `y`.
    pub fn specialize_x(&self, x0: &Rational) -> Poly1 {
        let Some(dy) = self.degree_y() else { return Poly1::zero() };
        let mut coeffs = vec![Rational::zero(); dy as usize + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[j as usize] += c * x0.pow(i);
        }
        Poly1::new(coeffs)
    }

    pub fn derivative_x(&self) -> Self {
        Poly2::new(
            self.terms
                .iter()
                .filter(|(k, _)| k.0 > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * Rational::integer(i as i64))),
        )
    }

    pub fn derivative_y(&self) -> Self {
        Poly2::new(
            self.terms
                .iter()
                .filter(|(k, _)| k.1 > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * Rational::integer(j as i64))),
        )
    }

    /// Substitutes `y -> x * y`, turning a polynomial in `(x, y)` into one in
    /// `(x, eta)` with `y = eta * x`.
    pub fn substitute_y_times_x(&self) -> Self {
        Poly2::new(self.terms.iter().map(|(&(i, j), c)| ((i + j, j), c.clone())))
    }

    pub fn display_in(&self, xv: &str, yv: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
        for (i, j) in keys {
            let mono = monomial_str(&[(xv, i as usize), (yv, j as usize)]);
            push_term(&mut out, &self.terms[&(i, j)], &mono);
        }
        out
    }
}

impl From<Rational> for Poly2 {
    fn from(c: Rational) -> Self {
        Poly2::constant(c)
    }
}

impl From<i64> for Poly2 {
    fn from(c: i64) -> Self {
        Poly2::constant(Rational::integer(c))
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x", "y"))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct Term(u32, u32, Rational);

impl Serialize for Poly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self.terms.iter().map(|(&(i, j), c)| Term(i, j, c.clone())).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        Ok(Poly2::new(terms.into_iter().map(|Term(i, j, c)| ((i, j), c))))
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2::new(self.terms.iter().map(|(k, c)| (*k, -c)))
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(self, rhs: Poly2) -> Poly2 {
        &self + &rhs
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: Poly2) -> Poly2 {
        &self - &rhs
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}
