//! The q-Hahn algebra in its two realizations on the weight-`N` space.

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::jacobi::{little_qjacobi, theta_apply, ALPHA, BETA};
use super::qhahn::{param_a, param_b, qhahn_eigenvalue};
use crate::actions::{verma_act, Action, Generator, Tensor};
use crate::coeff::{qpow, Scalar, WeightExpr};
use crate::error::{Error, Result};
use crate::intertwiners::psi_plane;
use crate::linalg::Matrix;
use crate::plane::{descending_product, OnePoly, QPlanePoly, XPoly};
use crate::verify::{Check, Report, Verifier};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Realization {
    /// `U = q^{-2N}X + (1-X)T_{q^{-2}}`, `V` from Θ, on transported monomials.
    TxPicture,
    /// `U = q^λ K⁻¹ ⊗ 1`, `V = q^{λ+λ'-1} Δ(C)` on `x^l y^{N-l}`.
    Tensor,
}

/// `U`, `V` on the weight-`N` space, together with coordinates of the
/// expected `V`-eigenvectors (eigenvalue index `k = 0..=N`).
pub struct HahnPair {
    pub u: Matrix,
    pub v: Matrix,
    pub v_eigenvectors: Vec<Vec<Scalar>>,
}

/// `Π_{s<N-l}(1 - q^{-2s}X) X^l`, the image of `x^l y^{N-l}` up to `t^N` and a scalar.
fn transported(n: u32, l: u32) -> XPoly {
    descending_product(n - l).shift(l)
}

/// Coordinates over the transported basis; each `b_l` starts at `X^l`
/// with coefficient 1, so elimination runs upward from degree 0.
fn transported_coords(n: u32, f: &XPoly) -> Result<Vec<Scalar>> {
    let mut rest = f.clone();
    let mut out = Vec::with_capacity(n as usize + 1);
    for l in 0..=n {
        let c = rest.coeff(l);
        rest = rest.sub(&transported(n, l).scale(&c));
        out.push(c);
    }
    if !rest.is_zero() {
        return Err(Error::TruncationLeak {
            source_label: "X-polynomial".into(),
            target_label: format!("degree > {n}"),
        });
    }
    Ok(out)
}

fn tx_u(n: u32, f: &XPoly) -> XPoly {
    let shifted = f.dilate(&Scalar::q_pow(-2));
    let one_minus_x = XPoly::from_terms([(0, Scalar::one()), (1, Scalar::from_int(-1))]);
    f.shift(1).scale(&Scalar::q_pow(-2 * n as i32)).add(&one_minus_x.mul(&shifted))
}

fn tx_v(f: &XPoly) -> XPoly {
    let qq = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
    let theta_scale = &qpow((ALPHA + BETA).shift(1)) * &(&qq * &qq);
    let shift = &qpow((ALPHA + BETA).shift(1).times(2)) + &Scalar::one();
    theta_apply(f).scale(&theta_scale).add(&f.scale(&shift))
}

fn plane_coords(n: u32, p: &QPlanePoly) -> Result<Vec<Scalar>> {
    if let Some(&(k, l)) = p.keys().find(|&&(k, l)| k + l != n) {
        return Err(Error::TruncationLeak {
            source_label: format!("weight {n}"),
            target_label: format!("x^{k} y^{l}"),
        });
    }
    Ok((0..=n).map(|l| p.coeff((l, n - l))).collect())
}

pub fn hahn_pair(realization: Realization, n: u32) -> Result<HahnPair> {
    let size = n as usize + 1;
    match realization {
        Realization::TxPicture => {
            let cols = |op: &dyn Fn(&XPoly) -> XPoly| {
                (0..=n).map(|l| transported_coords(n, &op(&transported(n, l)))).collect::<Result<Vec<_>>>()
            };
            let u = Matrix::from_columns(cols(&|f| tx_u(n, f))?, size);
            let v = Matrix::from_columns(cols(&tx_v)?, size);
            let v_eigenvectors = (0..=n).map(|k| transported_coords(n, &little_qjacobi(k))).collect::<Result<_>>()?;
            Ok(HahnPair { u, v, v_eigenvectors })
        }
        Realization::Tensor => {
            let lam = WeightExpr::LAMBDA;
            let u_cols = (0..=n)
                .map(|l| {
                    // K⁻¹ ⊗ 1 only sees the x-degree
                    let c = verma_act(Generator::KInv, &OnePoly::basis(l), lam).coeff(l);
                    plane_coords(n, &QPlanePoly::term((l, n - l), &qpow(lam) * &c))
                })
                .collect::<Result<Vec<_>>>()?;
            let scale = qpow(WeightExpr::SUM.shift(-1));
            let v_cols = (0..=n)
                .map(|l| plane_coords(n, &Tensor.casimir(&QPlanePoly::basis((l, n - l))).scale(&scale)))
                .collect::<Result<Vec<_>>>()?;
            let v_eigenvectors = (0..=n).map(|k| plane_coords(n, &psi_plane(k, n - k))).collect::<Result<_>>()?;
            Ok(HahnPair {
                u: Matrix::from_columns(u_cols, size),
                v: Matrix::from_columns(v_cols, size),
                v_eigenvectors,
            })
        }
    }
}

/// `[A, B]_q / (q - q⁻¹) = (qAB - q⁻¹BA) / (q - q⁻¹)`.
fn qcomm(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let qq = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
    let ab = a.mul(b)?.scale(&Scalar::q_pow(1));
    let ba = b.mul(a)?.scale(&Scalar::q_pow(-1));
    Ok(ab.sub(&ba).scale(&qq.inv()))
}

fn relations(c: &mut Check, pair: &HahnPair, n: u32) -> Result<()> {
    let (a, b) = (param_a(), param_b());
    let one = Scalar::one();
    let q2 = Scalar::q_pow(2);
    let id = Matrix::identity(n as usize + 1);
    let top = Scalar::q_pow(2 + 2 * n as i32);
    let low = Scalar::q_pow(-2 * n as i32);
    let ab = &a * &b;
    let x1 = &low * &(&(&(&one + &a) + &(&a * &top)) + &(&ab * &top));
    let x2 = &low * &(&(&(&one + &b) + &(&b * &top)) + &(&ab * &top));
    let one_q2 = &one + &q2;

    let w = qcomm(&pair.v, &pair.u)?;
    let uw = qcomm(&pair.u, &w)?;
    let rhs1 = pair.u.scale(&x1).sub(&id.scale(&(&(&a * &low) * &one_q2)));
    c.matrix("[U, W]_q", &uw, &rhs1);
    let wv = qcomm(&w, &pair.v)?;
    let rhs2 =
        pair.v.scale(&x1).add(&pair.u.scale(&(&ab * &(&one_q2 * &one_q2)))).sub(&id.scale(&(&(&a * &one_q2) * &x2)));
    c.matrix("[W, V]_q", &wv, &rhs2);
    Ok(())
}

/// The relations of the q-Hahn algebra and the spectra of `U` and `V`.
pub fn qhahn_algebra_check(realization: Realization, n: u32, v: &Verifier) -> Report {
    let mut c = v.check("qhahn-algebra", json!({ "realization": realization, "N": n }));
    let pair = match hahn_pair(realization, n) {
        Ok(p) => p,
        Err(e) => {
            c.error("building U and V", &e);
            return c.finish();
        }
    };
    if let Err(e) = relations(&mut c, &pair, n) {
        c.error("matrix arithmetic", &e);
    }
    let spec_u = Matrix::diagonal((0..=n).map(|l| Scalar::q_pow(-2 * l as i32)).collect());
    c.matrix("Sp(U) on the monomial eigenbasis", &pair.u, &spec_u);
    for (k, w) in pair.v_eigenvectors.iter().enumerate() {
        let col = Matrix::from_columns(vec![w.clone()], w.len());
        c.holds(format!("eigenvector {k} nonzero"), !col.is_zero());
        match pair.v.mul(&col) {
            Ok(vw) => {
                c.matrix(format!("V on eigenvector {k}"), &vw, &col.scale(&qhahn_eigenvalue(k as u32)));
            }
            Err(e) => c.error(format!("eigenvector {k}"), &e),
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_realizations() {
        let v = Verifier::symbolic();
        for n in 1..=3 {
            for r in [Realization::TxPicture, Realization::Tensor] {
                let rep = qhahn_algebra_check(r, n, &v);
                assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
            }
        }
        assert!(!qhahn_algebra_check(Realization::Tensor, 2, &v.poisoned()).passed());
    }

    #[test]
    fn u_is_diagonal_on_transported_basis() {
        for l in 0..=3 {
            let b = transported(3, l);
            assert_eq!(tx_u(3, &b), b.scale(&Scalar::q_pow(-2 * l as i32)));
        }
    }
}
