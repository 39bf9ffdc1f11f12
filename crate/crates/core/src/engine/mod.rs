//! Cochains of the deformation complex and the L∞ brackets built from them.

mod algebra;
mod brackets;
mod cochain;

pub use algebra::{validate_algebra, AlgebraInstance, AxiomReport};
pub use brackets::{
    delta, l_0, l_k, l_k_sum, l_k_with, output_degree, qme_residual, qme_sign, substitute_and_evaluate, verify_ln_relation,
    SignRule,
};
pub use cochain::{Cochain, InhomogeneousCochain};
