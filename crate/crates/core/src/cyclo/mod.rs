//! Exact arithmetic in `Z[ω]` and the monomial matrices of the extraspecial
//! group `p^{1+2}_+` acting on `p × p` matrices by conjugation.

mod int;
mod matrix;
mod rep;

pub use int::CycInt;
pub use matrix::{conj_act, CycMatrix};
pub use rep::{
    a_matrix, gen_matrices, kron_a_matrix, level_generators, verify_extraspecial, verify_representation,
    verify_weight_basis, WeightTable, Weights, MAX_REP_SIZE,
};
