//! Exact coefficients, bivariate monomials under the local order, and sparse
//! polynomials.

mod coefficient;
mod monomial;
mod poly;

pub use coefficient::Coefficient;
pub use monomial::{local_cmp, Monomial};
pub use poly::Poly;
