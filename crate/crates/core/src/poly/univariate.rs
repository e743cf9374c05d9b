use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, content_gcd, Rational};

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zeros are never stored, so the zero polynomial has an
/// empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Poly1 {
    coeffs: Vec<Rational>,
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly1::new(coeffs.iter().map(|&c| Rational::integer(c)).collect())
    }

    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly1::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Poly1::new(coeffs)
    }

    /// The identity polynomial `t`.
    pub fn var() -> Self {
        Poly1::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn sign_at(&self, t: &Rational) -> i8 {
        self.eval(t).signum()
    }

    /// Sign of the polynomial as `t -> +inf`.
    pub fn sign_at_pos_infinity(&self) -> i8 {
        self.leading_coeff().signum()
    }

    /// Sign of the polynomial as `t -> -inf`.
    pub fn sign_at_neg_infinity(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) if d % 2 == 0 => self.leading_coeff().signum(),
            Some(_) => -self.leading_coeff().signum(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly1::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly1::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::integer(k as i64)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip().expect("nonzero leading coefficient"))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly1) -> Result<(Poly1, Poly1)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.leading_coeff().recip()?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Poly1::zero(), Poly1::zero()));
        };
        if sd < dd {
            return Ok((Poly1::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let sub = &c * dc;
                rem[k + j] -= sub;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly1::new(quot), Poly1::new(rem)))
    }

    /// Exact division; fails when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly1) -> Result<Poly1> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly1) -> Poly1 {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, which has the same roots, all simple.
    pub fn squarefree_part(&self) -> Result<Poly1> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(self.clone());
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
    }

    /// Substitutes `inner` for the variable: `self(inner(t))`.
    pub fn compose(&self, inner: &Poly1) -> Poly1 {
        self.coeffs.iter().rev().fold(Poly1::zero(), |acc, c| &(&acc * inner) + &Poly1::constant(c.clone()))
    }

    /// Positive scalar multiple with coprime integer coefficients.
    pub fn primitive(&self) -> Poly1 {
        if self.is_zero() {
            return self.clone();
        }
        let den = common_denominator(&self.coeffs);
        let scaled = self.scale(&Rational::from_bigint(den));
        let g = content_gcd(&scaled.coeffs);
        let mut out = scaled.scale(&Rational::from_bigints(BigInt::one(), g).expect("nonzero content"));
        if out.leading_coeff().is_negative() {
            out = -&out;
        }
        out
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lc = self.leading_coeff().abs();
        if lc.is_zero() {
            return Rational::one();
        }
        let max_ratio = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_default();
        max_ratio + Rational::integer(2)
    }

    /// All rational roots, via the rational root theorem on the primitive
    /// integer form. Returns `None` when the constant or leading
    /// coefficient is too large to factor by trial division.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.primitive();
        let mut roots = Vec::new();
        while p.coeff(0).is_zero() && p.degree().unwrap_or(0) > 0 {
            roots.push(Rational::zero());
            p = p.exact_div(&Poly1::var()).ok()?;
        }
        let Some(deg) = p.degree() else { return Some(roots) };
        if deg == 0 {
            return Some(roots);
        }
        let a0 = p.coeff(0).numer().abs();
        let an = p.leading_coeff().numer().abs();
        let num_divs = divisors(&a0)?;
        let den_divs = divisors(&an)?;
        let mut candidates: Vec<Rational> = Vec::new();
        for n in &num_divs {
            for d in &den_divs {
                let r = Rational::from_bigints(n.clone(), d.clone()).ok()?;
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            if p.eval(&c).is_zero() {
                roots.push(c);
            }
        }
        roots.sort();
        Some(roots)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            push_term(&mut out, c, &monomial_str(&[(var, k)]));
        }
        out
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const LIMIT: u64 = 10_000_000;
    if n.is_zero() {
        return None;
    }
    let mut m = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        if p > BigInt::from(LIMIT) {
            return None;
        }
        let mut e = 0;
        while m.mod_floor(&p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if m > BigInt::one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut power = BigInt::one();
            for _ in 0..=e {
                next.push(d * &power);
                power *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

pub(crate) fn monomial_str(parts: &[(&str, usize)]) -> String {
    parts
        .iter()
        .filter(|(_, k)| *k > 0)
        .map(|(v, k)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn push_term(out: &mut String, c: &Rational, mono: &str) {
    let negative = c.is_negative();
    let mag = c.abs();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&format!("{mag}*{mono}"));
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1({self})")
    }
}

impl Add for &Poly1 {
    type Output = Poly1;
    fn add(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: &Poly1) -> Poly1 {
        if self.is_zero() || rhs.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly1::new(out)
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly1 {
    type Output = Poly1;
    fn add(self, rhs: Poly1) -> Poly1 {
        &self + &rhs
    }
}

impl Sub for Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: Poly1) -> Poly1 {
        &self - &rhs
    }
}

impl Mul for Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: Poly1) -> Poly1 {
        &self * &rhs
    }
}
