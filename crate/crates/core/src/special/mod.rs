//! q-derivatives, little q-Jacobi polynomials with their q-difference
//! operator, and q-Hahn polynomials on the finite grid.

mod algebra;
mod deriv;
mod jacobi;
mod qhahn;

pub use algebra::{hahn_pair, qhahn_algebra_check, HahnPair, Realization};
pub use deriv::{dq_deriv, dq_deriv_pow, QDeriv};
pub use jacobi::{
    jacobi_check, little_qjacobi, little_qjacobi_alt, theta_apply, theta_eigenvalue, JacobiForm, ALPHA, BETA,
};
pub use qhahn::{
    param_a, param_b, qhahn, qhahn_diffop_check, qhahn_eigenvalue, qhahn_recurrence, qhahn_top_closed_form,
    qhahn_tridiagonal_check, qhahn_value, qhahn_values_check, GridFunction, Recurrence,
};
