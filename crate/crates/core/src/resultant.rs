//! Sylvester resultants.
//!
//! Convention: the Sylvester matrix lists the `deg q` shifted coefficient rows
//! of `p` (leading coefficient first) above the `deg p` rows of `q`. With this
//! ordering `Res(x - e, x + e) = 2e`.

use crate::error::{Error, Result};
use crate::poly::{Poly1, Poly2};
use crate::rational::Rational;

fn sylvester_rows<T: Clone>(p: &[T], q: &[T], zero: &T) -> Vec<Vec<T>> {
    // p, q are given leading coefficient first.
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![zero.clone(); size];
        row[shift..shift + p.len()].clone_from_slice(p);
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![zero.clone(); size];
        row[shift..shift + q.len()].clone_from_slice(q);
        rows.push(row);
    }
    rows
}

/// Determinant over the rationals by Gaussian elimination.
pub fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
        }
    }
    det
}

/// Resultant of two univariate polynomials of positive degree.
pub fn resultant_univariate(p: &Poly1, q: &Poly1) -> Result<Rational> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if dp == 0 || dq == 0 {
        return Err(Error::DegreeZeroInX);
    }
    let pc: Vec<Rational> = p.coeffs().iter().rev().cloned().collect();
    let qc: Vec<Rational> = q.coeffs().iter().rev().cloned().collect();
    Ok(determinant(sylvester_rows(&pc, &qc, &Rational::zero())))
}

/// Fraction-free (Bareiss) determinant of a matrix with polynomial entries.
fn bareiss(mut a: Vec<Vec<Poly1>>) -> Result<Poly1> {
    let n = a.len();
    if n == 0 {
        return Ok(Poly1::constant(Rational::one()));
    }
    let mut sign = Rational::one();
    let mut prev = Poly1::constant(Rational::one());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Poly1::zero());
            };
            a.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = Poly1::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(a[n - 1][n - 1].scale(&sign))
}

/// Resultant eliminating `x` from two bivariate polynomials, returned as a
/// polynomial in the second variable.
pub fn resultant_x(p: &Poly2, q: &Poly2) -> Result<Poly1> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree_x() == Some(0) || q.degree_x() == Some(0) {
        return Err(Error::DegreeZeroInX);
    }
    let pc: Vec<Poly1> = p.coeffs_in_x().into_iter().rev().collect();
    let qc: Vec<Poly1> = q.coeffs_in_x().into_iter().rev().collect();
    bareiss(sylvester_rows(&pc, &qc, &Poly1::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn linear_pair() {
        let p = &Poly2::x() - &Poly2::y();
        let q_ = &Poly2::x() + &Poly2::y();
        assert_eq!(resultant_x(&p, &q_).unwrap(), Poly1::from_ints(&[0, 2]));
    }

    #[test]
    fn identical_inputs_give_zero() {
        let p = &Poly2::x().pow(2) - &Poly2::y();
        assert!(resultant_x(&p, &p).unwrap().is_zero());
    }

    #[test]
    fn degree_zero_rejected() {
        let p = Poly2::y();
        assert_eq!(resultant_x(&p, &Poly2::x()), Err(Error::DegreeZeroInX));
        assert_eq!(
            resultant_univariate(&Poly1::from_ints(&[3]), &Poly1::from_ints(&[0, 1])),
            Err(Error::DegreeZeroInX)
        );
    }

    #[test]
    fn univariate_matches_product_of_differences() {
        // p = (t-1)(t-2), q = (t-3): Res = q(1) q(2) up to lc powers = (-2)(-1) = 2
        let p = Poly1::from_ints(&[2, -3, 1]);
        let q_ = Poly1::from_ints(&[-3, 1]);
        assert_eq!(resultant_univariate(&p, &q_).unwrap(), q!(2));
    }

    #[test]
    fn specialisation_commutes() {
        // p = x^2 + y x - 1, q = 2x - y^2 + 3
        let p = Poly2::from_ints(&[(2, 0, 1), (1, 1, 1), (0, 0, -1)]);
        let q_ = Poly2::from_ints(&[(1, 0, 2), (0, 2, -1), (0, 0, 3)]);
        let r = resultant_x(&p, &q_).unwrap();
        for y0 in [q!(0), q!(1, 3), q!(-7, 2)] {
            let direct = resultant_univariate(&p.specialize_y(&y0), &q_.specialize_y(&y0)).unwrap();
            assert_eq!(r.eval(&y0), direct);
        }
    }
}
