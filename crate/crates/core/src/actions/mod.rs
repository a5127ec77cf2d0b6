//! `U_q(sl_2)` actions on every realization, the q-Fischer products, truncated
//! operator matrices with adjoints, and the checks tying them together.

mod checks;
mod dagger;
mod generators;
mod opmatrix;

pub use checks::{
    adjoint_suite, casimir_central_check, contragredient_adjoint_check, dq2_adjoint_check, ev_adjoint_check,
    relation_suite, relations_check, rxy_adjoint_check, symbol_check, tensor_grading_check, tx_conjugation_check,
    verma_casimir_check,
};
pub use dagger::{ev, ev_dagger, right_mul, rx_dagger, ry_dagger, symbol_operator};
pub use generators::{
    casimir_eigenvalue, casimir_tensor_tx, contragredient_act, tensor_act, tx_act, verma_act, Action, Contragredient,
    Generator, Tensor, TxAction, Verma,
};
pub use opmatrix::{
    fischer_gram, fischer_inner, fischer_inner_tensor, fischer_norm, one_var_keys, plane_keys, tx_keys, OpMatrix,
};
