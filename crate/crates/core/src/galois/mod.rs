//! Prime fields and sparse multivariate polynomials over them.

pub mod field;
pub mod matrix;
pub mod parse;
pub mod poly;

pub use field::{FpElem, MAX_MODULUS};
pub use matrix::{jacobian_det, PolyMatrix};
pub use parse::parse;
pub use poly::{Monomial, Poly, PolyRing};
