//! Lowest-weight vectors, holographic operators `Ψ_n`, Clebsch–Gordan
//! expansions and q-Rankin–Cohen brackets.

mod cg;
mod lowest;
mod psi;
mod qrc;

pub use cg::{cg_check, cg_coefficient, cg_suite, cg_table, CgTable};
pub use lowest::{
    level_weight, lowest_weight_check, lowest_weight_coeff, lowest_weight_poly, lowest_weight_space_dim,
    lowest_weight_vector, uniqueness_check, LowestWeightVector,
};
pub use psi::{
    casimir_separation_check, phi_psi_check, psi_apply, psi_basis_check, psi_intertwining_check, psi_matrix, psi_plane,
    psi_tx, psi_tx_lowering_check,
};
pub use qrc::{
    classical_limit_check, classical_rc, qrc, qrc_adjoint_check, qrc_degree_check, qrc_intertwining_check, qrc_plane,
    qrc_symbol_check, qrc_terms, BracketTerm, ClassicalLimit,
};
