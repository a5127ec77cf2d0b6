//! Holographic operators `Ψ_n : V_{λ+λ'+2n} → V_λ ⊗ V_λ'` in the plane and
//! `(t, X)` pictures.

use serde_json::json;

use super::lowest::{level_weight, lowest_weight_poly};
use crate::actions::{
    casimir_eigenvalue, casimir_tensor_tx, plane_keys, tensor_act, tx_act, verma_act, Action, Generator, OpMatrix,
    Tensor,
};
use crate::coeff::{qnum, qpoch, qpow, PointSampler, WeightExpr};
use crate::plane::{phi, qp_mul, qp_pow_linear, t_times_x, u, OnePoly, PlaneBasis, QPlanePoly, TXPoly, ZBasis};
use crate::special::little_qjacobi;
use crate::verify::{Mode, Report, Verifier};

/// `(x + q^λ y)^k P_n`.
pub fn psi_plane(n: u32, k: u32) -> QPlanePoly {
    qp_mul(&qp_pow_linear(&u(), k), &lowest_weight_poly(n))
}

/// `t^{k+n} j_n(X)`.
pub fn psi_tx(n: u32, k: u32) -> TXPoly {
    t_times_x(k + n, &little_qjacobi(n))
}

/// `Ψ_n` applied to a polynomial in `z`.
pub fn psi_apply(n: u32, f: &OnePoly) -> QPlanePoly {
    let pn = lowest_weight_poly(n);
    f.map_linear(|k| qp_mul(&qp_pow_linear(&u(), k), &pn))
}

/// Matrix of `Ψ_n` from `z^0..z^d` into the plane of degree `<= d + n`.
pub fn psi_matrix(n: u32, d: u32) -> crate::Result<OpMatrix> {
    let pn = lowest_weight_poly(n);
    let keys: Vec<u32> = (0..=d).collect();
    OpMatrix::from_map::<ZBasis, PlaneBasis>(&keys, &plane_keys(d + n), |k| qp_mul(&qp_pow_linear(&u(), k), &pn))
}

/// `φ([λ]_n t^{n+k} j_n) = q^{nλ} (x + q^λ y)^k P_n`.
pub fn phi_psi_check(max_n: u32, max_k: u32, v: &Verifier) -> Report {
    let mut c = v.check("phi-psi", json!({ "max_n": max_n, "max_k": max_k }));
    for n in 0..=max_n {
        let lhs_scale = qpoch(WeightExpr::LAMBDA, n);
        let rhs_scale = qpow(WeightExpr::LAMBDA.times(n as i32));
        for k in 0..=max_k {
            let lhs = phi(&psi_tx(n, k)).scale(&lhs_scale);
            if !c.poly(format!("n = {n}, k = {k}"), &lhs, &psi_plane(n, k).scale(&rhs_scale)) {
                return c.finish();
            }
        }
    }
    c.finish()
}

/// `Δ(g) Ψ_n(z^k) = Ψ_n(π_{λ+λ'+2n}(g) z^k)` for every generator.
pub fn psi_intertwining_check(max_n: u32, max_k: u32, v: &Verifier) -> Report {
    let mut c = v.check("psi-intertwining", json!({ "max_n": max_n, "max_k": max_k }));
    'outer: for n in 0..=max_n {
        let w = level_weight(n);
        for k in 0..=max_k {
            for g in Generator::ALL {
                let lhs = tensor_act(g, &psi_plane(n, k));
                let rhs = psi_apply(n, &verma_act(g, &OnePoly::basis(k), w));
                if !c.poly(format!("{g}, n = {n}, k = {k}"), &lhs, &rhs) {
                    break 'outer;
                }
            }
        }
    }
    c.finish()
}

/// `Δ(C)` acts on `Ψ_n(z^k)` by `q^{λ+λ'+2n-1} + q^{1-λ-λ'-2n}`, in both pictures.
pub fn casimir_separation_check(max_total: u32, v: &Verifier) -> Report {
    let mut c = v.check("casimir-separation", json!({ "max_n_plus_k": max_total }));
    'outer: for n in 0..=max_total {
        let eig = casimir_eigenvalue(level_weight(n));
        for k in 0..=max_total - n {
            let p = psi_plane(n, k);
            let t = psi_tx(n, k);
            if !c.poly(format!("plane, n = {n}, k = {k}"), &Tensor.casimir(&p), &p.scale(&eig))
                || !c.poly(format!("tx, n = {n}, k = {k}"), &casimir_tensor_tx(&t), &t.scale(&eig))
            {
                break 'outer;
            }
        }
    }
    c.finish()
}

/// `Δ(F)` kills `t^n j_n` in the `(t, X)` picture, and lowers `t^{n+k} j_n`
/// by `-[λ+λ'+2n+k-1][k]`.
pub fn psi_tx_lowering_check(max_total: u32, v: &Verifier) -> Report {
    let mut c = v.check("psi-tx-lowering", json!({ "max_n_plus_k": max_total }));
    'outer: for n in 0..=max_total {
        for k in 0..=max_total - n {
            let lhs = tx_act(Generator::F, &psi_tx(n, k));
            let rhs = match k {
                0 => TXPoly::zero(),
                _ => {
                    let c = &qnum(level_weight(n).shift(k as i32 - 1)) * &qnum(WeightExpr::int(k as i32));
                    psi_tx(n, k - 1).scale(&-c)
                }
            };
            if !c.poly(format!("F, n = {n}, k = {k}"), &lhs, &rhs) {
                break 'outer;
            }
        }
    }
    c.finish()
}

/// Rank of `{Ψ_n(z^k) : n + k = s}` in the degree-`s` part of the plane.
///
/// Point mode specializes at seeded random points. A full rank at one
/// rational point already forces full rank over `Q(q, u, v)`, because
/// some maximal minor is then a nonzero rational function.
fn graded_rank(s: u32, v: &Verifier) -> crate::Result<usize> {
    let keys: Vec<(u32, u32)> = (0..=s).map(|l| (l, s - l)).collect();
    let cols = (0..=s).map(|n| keys.iter().map(|&key| psi_plane(n, s - n).coeff(key)).collect()).collect();
    let m = crate::linalg::Matrix::from_columns(cols, keys.len());
    match v.mode {
        Mode::Symbolic => Ok(m.rank()),
        Mode::Point => {
            let mut sampler = PointSampler::new(v.seed);
            let mut best = 0;
            for _ in 0..v.trials {
                if let Ok(r) = m.eval(&sampler.sample()) {
                    best = best.max(r.rank());
                }
            }
            Ok(best)
        }
    }
}

/// `{Ψ_n(z^k) : n + k <= d}` is a basis of the plane truncated at degree `d`.
pub fn psi_basis_check(d: u32, v: &Verifier) -> Report {
    let mut c = v.check("psi-basis", json!({ "max_degree": d }));
    let mut total = 0;
    for s in 0..=d {
        match graded_rank(s, v) {
            Ok(r) => {
                total += r;
                if !c.count(format!("rank in degree {s}"), r, s as usize + 1) {
                    break;
                }
            }
            Err(e) => c.error(format!("degree {s}"), &e),
        }
    }
    c.count("total rank", total, plane_keys(d).len());
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(r: Report) {
        assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
    }

    #[test]
    fn psi_at_k_zero_is_p_n() {
        for n in 0..4 {
            assert_eq!(psi_plane(n, 0), lowest_weight_poly(n));
        }
    }

    #[test]
    fn identities() {
        let v = Verifier::symbolic();
        ok(phi_psi_check(3, 3, &v));
        ok(psi_intertwining_check(3, 3, &v));
        ok(casimir_separation_check(4, &v));
        ok(psi_tx_lowering_check(4, &v));
        ok(psi_basis_check(4, &v));
        ok(psi_basis_check(5, &Verifier::point(7, 3)));
    }
}
