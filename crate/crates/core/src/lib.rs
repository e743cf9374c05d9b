//! Exact intersection-theory toolkit for the projectivised cotangent bundle
//! of a degree-two K3 surface.
//!
//! The crate is organised bottom-up:
//!
//! * [`Rational`], [`Poly1`], [`Poly2`], [`sturm`], [`resultant`] and [`lp`]
//!   form the exact kernel;
//! * [`lattice`] holds named bases, intersection forms and linear maps;
//! * [`geometry`] instantiates the concrete lattices and verifies the tables;
//! * [`cone`] and [`positivity`] certify the lower and upper slope bounds;
//! * [`report`] and [`svg`] render results.

pub mod cone;
pub mod error;
pub mod geometry;
pub mod lattice;
pub mod lp;
pub mod poly;
pub mod positivity;
pub mod rational;
pub mod report;
pub mod resultant;
pub mod sturm;
pub mod svg;

pub use error::{Error, Result};
pub use poly::{Poly1, Poly2};
pub use rational::Rational;
