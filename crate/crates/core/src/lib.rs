//! Exact computer algebra for Dickson invariants, the conjugation
//! representation of `PU(p^l)` on its maximal elementary abelian p-subgroup,
//! and mod-p Milnor primitives, together with verifiers for the polynomial
//! identities relating them.

pub mod error;
pub mod galois;

pub use error::{Error, Result};
pub mod chern;
pub mod cyclo;
pub mod dickson;
pub mod relations;
pub mod report;
pub mod steenrod;
pub mod suite;
