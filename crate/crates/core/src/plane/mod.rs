//! Polynomial spaces: `C[z]`, `C[X]`, the quantum plane `C_q[x, y]` and
//! `C[t, tX]`, with the isomorphism `φ` between the last two.

mod poly;
mod qplane;
mod tx;

pub use poly::{Basis, BasisLabel, OnePoly, PlaneBasis, Poly, QPlanePoly, TXPoly, TxBasis, XBasis, XPoly, ZBasis};
pub use qplane::{is_homogeneous, monomial, qp_mul, qp_pow, qp_pow_linear, u, v, x, x_plus_uy, y};
pub use tx::{
    descending_product, phi, phi_basis, phi_bijection_check, phi_inv, phi_inv_basis, t_mul, t_times_x, x_part,
};
