//! Exact computations for tensor products of `U_q(sl_2)` Verma modules:
//! the quantum-plane realization, holographic operators built from little
//! q-Jacobi polynomials, q-Hahn Clebsch–Gordan coefficients and the
//! q-Rankin–Cohen brackets.
//!
//! All coefficients live in `Q(q, u, v)` where `u = q^λ` and `v = q^λ'`
//! are independent indeterminates, so every identity is checked for
//! generic weights.

pub mod actions;
pub mod coeff;
pub mod error;
pub mod intertwiners;
pub mod linalg;
pub mod plane;
pub mod special;
pub mod verify;

pub use coeff::{Monomial, Scalar, WeightExpr};
pub use error::{Error, Result};
