//! Exact `k`-th Milnor and Tjurina numbers of plane curve and foliation
//! germs, computed from local standard bases.

pub mod cli;
pub mod error;
pub mod invariants;
pub mod ring;
pub mod scenarios;
pub mod stdbasis;

pub use error::{Error, Result};

/// Arbitrary-precision rationals, the default coefficient field.
pub type Rational = num_rational::BigRational;
pub type QPoly = ring::Poly<Rational>;
pub type QIdeal = stdbasis::Ideal<Rational>;
pub type QFoliation = invariants::Foliation<Rational>;
pub type QCurve = invariants::CurveGerm<Rational>;
