//! Polynomial arithmetic over the rationals.

mod bivariate;
mod univariate;

pub use bivariate::Poly2;
pub use univariate::Poly1;
