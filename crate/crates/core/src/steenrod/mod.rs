//! The mod-p cohomology of `BV^m`, `Λ(a_1..a_m) ⊗ F_p[y_1..y_m]` with
//! `β(a_g) = y_g`, and the Steenrod operations acting on it.
//!
//! For `V^{2l}` generator `2k−1` is the pair `(a_k, ξ_k)` and generator `2k`
//! is `(b_k, η_k)`.

mod class;
mod ops;
mod text;
mod verify;

pub use class::{CohAlgebra, CohClass, CohMonomial, MAX_GENERATORS};
pub use ops::{milnor_expansion, milnor_q, r_closed, x_class, OperationWord, SteenrodOp, MAX_MILNOR_DEPTH};
pub use verify::{verify_jacobian_independence, verify_steenrod};
