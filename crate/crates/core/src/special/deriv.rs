use serde::{Deserialize, Serialize};

use crate::coeff::Scalar;
use crate::plane::{Basis, Poly};

/// Step of a Jackson q-derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QDeriv {
    /// `D_{q²}`, sends `z^n` to `q^{n-1}[n] z^{n-1}`.
    Q2,
    /// `D_{q^{-2}}`, sends `z^n` to `q^{-(n-1)}[n] z^{n-1}`.
    QInv2,
    /// `D_q`, sends `z^n` to `(1 - q^n)/(1 - q) z^{n-1}`.
    Q,
}

impl QDeriv {
    fn step(self) -> i32 {
        match self {
            QDeriv::Q2 => 2,
            QDeriv::QInv2 => -2,
            QDeriv::Q => 1,
        }
    }

    /// The eigen-factor on `z^n`: `(1 - p^n)/(1 - p) = Σ_{i<n} p^i` for step `p`.
    pub fn factor(self, n: u32) -> Scalar {
        (0..n as i32).map(|i| Scalar::q_pow(self.step() * i)).sum()
    }
}

/// `(f(z) - f(pz)) / ((1 - p) z)` on a one-variable polynomial.
pub fn dq_deriv<B: Basis<Key = u32>>(variant: QDeriv, p: &Poly<B>) -> Poly<B> {
    Poly::from_terms(p.iter().filter(|(&n, _)| n > 0).map(|(&n, c)| (n - 1, c * &variant.factor(n))))
}

/// `variant` applied `k` times.
pub fn dq_deriv_pow<B: Basis<Key = u32>>(variant: QDeriv, p: &Poly<B>, k: u32) -> Poly<B> {
    (0..k).fold(p.clone(), |acc, _| dq_deriv(variant, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{qbinom, qint};
    use crate::plane::{OnePoly, XPoly};

    #[test]
    fn examples() {
        assert!(dq_deriv(QDeriv::Q2, &OnePoly::one()).is_zero());
        let d = dq_deriv(QDeriv::Q2, &OnePoly::basis(2));
        assert_eq!(d, OnePoly::term(1, &Scalar::q_pow(1) * &qint(2)));
        for n in 1..6 {
            let m = QDeriv::QInv2.factor(n);
            assert_eq!(m, &Scalar::q_pow(1 - n as i32) * &qint(n as i32));
        }
        // D_q z^2 = (1 + q) z
        let d = dq_deriv(QDeriv::Q, &OnePoly::basis(2));
        assert_eq!(d.coeff(1), &Scalar::one() + &Scalar::q_pow(1));
    }

    #[test]
    fn q_leibniz_for_inverse_step() {
        // D^n(fg)(X) = Σ_k [n k] q^{-k(n-k)} D^k f(q^{-2(n-k)} X) · D^{n-k} g(X)
        let f = XPoly::from_terms([(0, Scalar::from_int(2)), (1, qint(3)), (3, Scalar::q_pow(-1))]);
        let g = XPoly::from_terms([(1, Scalar::one()), (2, Scalar::from_int(-5)), (4, qint(2))]);
        for n in 0..5u32 {
            let lhs = dq_deriv_pow(QDeriv::QInv2, &f.mul(&g), n);
            let mut rhs = XPoly::zero();
            for k in 0..=n {
                let fk = dq_deriv_pow(QDeriv::QInv2, &f, k).dilate(&Scalar::q_pow(-2 * (n - k) as i32));
                let gk = dq_deriv_pow(QDeriv::QInv2, &g, n - k);
                let c = &qbinom(n as i64, k as i64) * &Scalar::q_pow(-((k * (n - k)) as i32));
                rhs = rhs.add(&fk.mul(&gk).scale(&c));
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
