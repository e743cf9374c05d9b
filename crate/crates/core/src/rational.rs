//! Arbitrary-precision rational scalars.
//!
//! [`Rational`] wraps [`num_rational::BigRational`], which keeps every value
//! in lowest terms with a positive denominator. The wrapper adds the parsing
//! and rendering conventions used throughout the crate: values print as
//! `p/q` (or `p` when integral) and parse from `p/q`, integers, plain
//! decimals and scientific notation, always exactly.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn midpoint(&self, other: &Rational) -> Rational {
        (self + other) / Rational::integer(2)
    }

    pub fn pow10(digits: u32) -> Rational {
        Rational::from_bigint(num_traits::pow(BigInt::from(10), digits as usize))
    }

    /// Lossy conversion; only used for rendering coordinates.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering rounded toward negative infinity.
    pub fn to_decimal_floor(&self, digits: u32) -> String {
        let scaled = (self * &Rational::pow10(digits)).floor();
        render_scaled(&scaled, digits)
    }

    /// Decimal rendering rounded toward positive infinity.
    pub fn to_decimal_ceil(&self, digits: u32) -> String {
        let scaled = (self * &Rational::pow10(digits)).ceil();
        render_scaled(&scaled, digits)
    }

    /// Decimal rendering rounded to nearest, ties away from zero.
    pub fn to_decimal_round(&self, digits: u32) -> String {
        let scaled = self * &Rational::pow10(digits);
        let half = Rational::new(1, 2);
        let rounded = if scaled.is_negative() { -((-scaled) + half).floor() } else { (scaled + half).floor() };
        render_scaled(&rounded, digits)
    }

    /// Decimal truncated toward zero.
    pub fn to_decimal_trunc(&self, digits: u32) -> String {
        if self.is_negative() {
            self.to_decimal_ceil(digits)
        } else {
            self.to_decimal_floor(digits)
        }
    }
}

fn render_scaled(scaled: &BigInt, digits: u32) -> String {
    let negative = scaled.is_negative();
    let magnitude = scaled.abs().to_string();
    let digits = digits as usize;
    let body = if digits == 0 {
        magnitude
    } else {
        let padded = format!("{:0>width$}", magnitude, width = digits + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - digits);
        format!("{int_part}.{frac_part}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            return Rational::from_bigints(n, d).map_err(|_| bad());
        }
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(pos) => {
                let exp: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
                (&s[..pos], exp)
            }
            None => (s, 0),
        };
        let (negative, mantissa) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = digits.parse().map_err(|_| bad())?;
        let scale = exponent - frac_part.len() as i64;
        let ten = BigInt::from(10);
        let mut value = if scale >= 0 {
            Rational::from_bigint(numer * num_traits::pow(ten, scale as usize))
        } else {
            Rational::from_bigints(numer, num_traits::pow(ten, (-scale) as usize))?
        };
        if negative {
            value = -value;
        }
        Ok(value)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Str(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Rational::integer(n)),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::integer(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::integer(*other)))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                self.0.$assign_method(rhs.0);
            }
        }
        impl<'a> $assign_trait<&'a Rational> for Rational {
            fn $assign_method(&mut self, rhs: &'a Rational) {
                self.0.$assign_method(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
// Division panics on a zero divisor, like the integer types; fallible call
// sites use `checked_div`.
binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Least common multiple of the denominators, used to clear fractions.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Greatest common divisor of the numerators (non-negative).
pub fn content_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()))
}

#[macro_export]
macro_rules! q {
    ($n:expr) => {
        $crate::Rational::integer($n)
    };
    ($n:expr, $d:expr) => {
        $crate::Rational::new($n, $d)
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(Rational::new(10, 5).to_string(), "2");
    }

    #[test]
    fn parses_exact_forms() {
        assert_eq!("39/22".parse::<Rational>().unwrap(), Rational::new(39, 22));
        assert_eq!("-0.047976".parse::<Rational>().unwrap(), Rational::new(-47976, 1_000_000));
        assert_eq!("1e-7".parse::<Rational>().unwrap(), Rational::new(1, 10_000_000));
        assert_eq!("2.5E2".parse::<Rational>().unwrap(), Rational::integer(250));
        assert_eq!(".5".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("-".parse::<Rational>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        let r = Rational::new(39, 22);
        assert_eq!(r.to_decimal_floor(4), "1.7727");
        assert_eq!(r.to_decimal_ceil(4), "1.7728");
        assert_eq!(Rational::new(-1, 3).to_decimal_floor(3), "-0.334");
        assert_eq!(Rational::new(-1, 3).to_decimal_trunc(3), "-0.333");
        assert_eq!(Rational::new(-479_755, 10_000_000).to_decimal_round(6), "-0.047976");
        assert_eq!(Rational::new(1, 50).to_decimal_round(3), "0.020");
        assert_eq!(Rational::integer(3).to_decimal_floor(0), "3");
    }

    #[test]
    fn serde_round_trip() {
        let r = Rational::new(-108, 7);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"-108/7\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let int: Rational = serde_json::from_str("18").unwrap();
        assert_eq!(int, 18);
    }
}
