//! Exact arithmetic in `Q(q, u, v)` with `u = q^λ`, `v = q^λ'`, and the
//! q-combinatorics built on it.

mod eval;
mod laurent;
mod monomial;
mod qcomb;
mod scalar;
mod weight;

pub use eval::{scalar_eval, Point, PointSampler};
pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use qcomb::{qbinom, qfact, qint, qnum, qpoch, qpow};
pub use scalar::{latex as scalar_latex, Factor, Scalar};
pub use weight::WeightExpr;
