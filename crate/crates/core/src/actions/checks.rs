//! Identity checks for the actions: defining relations, Casimir, the
//! `(t, X)` picture, and the Fischer adjoint formulas.

use serde_json::json;

use super::dagger::{ev, ev_dagger, right_mul, rx_dagger, ry_dagger, symbol_operator};
use super::generators::{
    casimir_eigenvalue, casimir_tensor_tx, contragredient_act, tensor_act, tx_act, Action, Contragredient, Generator,
    Tensor, TxAction, Verma,
};
use super::opmatrix::{one_var_keys, plane_keys, tx_keys, OpMatrix};
use crate::coeff::{qpow, Scalar, WeightExpr};
use crate::plane::{
    phi, phi_inv, qp_mul, x, x_plus_uy, y, Basis, OnePoly, PlaneBasis, Poly, QPlanePoly, TXPoly, ZBasis,
};
use crate::special::{dq_deriv, QDeriv};
use crate::verify::{Check, Report, Verifier};

use Generator::{KInv, E, F, K};

/// `KEK⁻¹ = q²E`, `KFK⁻¹ = q⁻²F`, `[E, F] = (K - K⁻¹)/(q - q⁻¹)`, `KK⁻¹ = 1`
/// on every basis vector in `keys`.
pub fn relations_check<A: Action>(name: &str, action: &A, keys: &[<A::B as Basis>::Key], v: &Verifier) -> Report {
    let mut c = v.check("uq-relations", json!({ "action": name, "basis_size": keys.len() }));
    let qq = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
    for &key in keys {
        let p = Poly::<A::B>::basis(key);
        let at = <A::B as Basis>::label(key);
        let ke = action.act_word(&[K, E, KInv], &p);
        c.poly(format!("KEK^-1 on {at}"), &ke, &action.act(E, &p).scale(&Scalar::q_pow(2)));
        let kf = action.act_word(&[K, F, KInv], &p);
        c.poly(format!("KFK^-1 on {at}"), &kf, &action.act(F, &p).scale(&Scalar::q_pow(-2)));
        let comm = action.act_word(&[E, F], &p).sub(&action.act_word(&[F, E], &p));
        let rhs = action.act(K, &p).sub(&action.act(KInv, &p)).scale(&qq.inv());
        c.poly(format!("[E, F] on {at}"), &comm, &rhs);
        c.poly(format!("KK^-1 on {at}"), &action.act_word(&[K, KInv], &p), &p);
        if c.failed() {
            break;
        }
    }
    c.finish()
}

/// `C g = g C` for every generator `g`.
pub fn casimir_central_check<A: Action>(name: &str, action: &A, keys: &[<A::B as Basis>::Key], v: &Verifier) -> Report {
    let mut c = v.check("casimir-central", json!({ "action": name, "basis_size": keys.len() }));
    'outer: for &key in keys {
        let p = Poly::<A::B>::basis(key);
        for g in Generator::ALL {
            let lhs = action.casimir(&action.act(g, &p));
            let rhs = action.act(g, &action.casimir(&p));
            if !c.poly(format!("C{g} = {g}C on {}", <A::B as Basis>::label(key)), &lhs, &rhs) {
                break 'outer;
            }
        }
    }
    c.finish()
}

/// All four realized actions, truncated at degree `d`.
pub fn relation_suite(d: u32, v: &Verifier) -> Vec<Report> {
    let w = WeightExpr::LAMBDA;
    let (z, xy, tx) = (one_var_keys(d), plane_keys(d), tx_keys(d));
    vec![
        relations_check("verma", &Verma(w), &z, v),
        relations_check("contragredient", &Contragredient(w), &z, v),
        relations_check("tensor", &Tensor, &xy, v),
        relations_check("tx", &TxAction, &tx, v),
        casimir_central_check("tensor", &Tensor, &xy, v),
        verma_casimir_check(d, v),
        tensor_grading_check(d, v),
    ]
}

/// `C z^n = (q^{λ-1} + q^{1-λ}) z^n`.
pub fn verma_casimir_check(d: u32, v: &Verifier) -> Report {
    let w = WeightExpr::LAMBDA;
    let mut c = v.check("verma-casimir", json!({ "max_degree": d }));
    let eig = casimir_eigenvalue(w);
    for n in 0..=d {
        let z = OnePoly::basis(n);
        c.poly(format!("z^{n}"), &Verma(w).casimir(&z), &z.scale(&eig));
    }
    c.finish()
}

/// `Δ(K) x^k y^l = q^{λ+λ'+2(k+l)} x^k y^l` and `Δ(E) = (x + q^λ y)·`.
pub fn tensor_grading_check(d: u32, v: &Verifier) -> Report {
    let mut c = v.check("tensor-grading", json!({ "max_degree": d }));
    for (k, l) in plane_keys(d) {
        let m = QPlanePoly::basis((k, l));
        let eig = qpow(WeightExpr::SUM.shift(2 * (k + l) as i32));
        c.poly(format!("K on x^{k} y^{l}"), &tensor_act(K, &m), &m.scale(&eig));
        c.poly(format!("E on x^{k} y^{l}"), &tensor_act(E, &m), &qp_mul(&x_plus_uy(), &m));
    }
    c.finish()
}

/// The `(t, X)` action equals the plane action conjugated by φ, and the
/// Casimir takes the Θ form there.
pub fn tx_conjugation_check(imax: u32, v: &Verifier) -> Report {
    let mut c = v.check("tx-action", json!({ "max_i": imax }));
    'outer: for (i, j) in tx_keys(imax) {
        let p = TXPoly::basis((i, j));
        for g in Generator::ALL {
            if !c.poly(format!("{g} on t^{i} X^{j}"), &tx_act(g, &p), &phi_inv(&tensor_act(g, &phi(&p)))) {
                break 'outer;
            }
        }
        let generic = phi_inv(&Tensor.casimir(&phi(&p)));
        if !c.poly(format!("Casimir on t^{i} X^{j}"), &casimir_tensor_tx(&p), &generic) {
            break;
        }
    }
    c.finish()
}

/// Truncates `op : span(src) → span(tgt)`, takes the Fischer adjoint and
/// compares it with `claimed` on the target vectors flagged `exact`, i.e.
/// those whose adjoint image cannot involve source vectors past the cut.
#[allow(clippy::too_many_arguments)]
fn compare_adjoint<S: Basis, T: Basis>(
    c: &mut Check,
    what: &str,
    src: &[S::Key],
    tgt: &[T::Key],
    op: impl FnMut(S::Key) -> Poly<T>,
    claimed: impl Fn(&Poly<T>) -> Poly<S>,
    exact: impl Fn(T::Key) -> bool,
) {
    let m = match OpMatrix::from_map::<S, T>(src, tgt, op) {
        Ok(m) => m,
        Err(e) => return c.error(what, &e),
    };
    let adj = m.fischer_adjoint();
    for (j, &t) in tgt.iter().enumerate() {
        if !exact(t) {
            continue;
        }
        if !c.poly(format!("{what} on {}", T::label(t)), &adj.column_poly::<S>(j), &claimed(&Poly::basis(t))) {
            return;
        }
    }
}

/// `D_{q²}† = m(z)`.
pub fn dq2_adjoint_check(d: u32, v: &Verifier) -> Report {
    let mut c = v.check("adjoint-dq2", json!({ "max_degree": d }));
    compare_adjoint::<ZBasis, ZBasis>(
        &mut c,
        "D_{q^2}^dagger",
        &one_var_keys(d + 1),
        &one_var_keys(d + 1),
        |n| dq_deriv(QDeriv::Q2, &OnePoly::basis(n)),
        |p| p.shift(1),
        |n| n <= d,
    );
    compare_adjoint::<ZBasis, ZBasis>(
        &mut c,
        "z^dagger",
        &one_var_keys(d),
        &one_var_keys(d + 1),
        |n| OnePoly::basis(n + 1),
        |p| dq_deriv(QDeriv::Q2, p),
        |_| true,
    );
    c.finish()
}

/// The contragredient action is `π(S(g))†` for the Verma action π.
pub fn contragredient_adjoint_check(d: u32, v: &Verifier) -> Report {
    let w = WeightExpr::LAMBDA;
    let mut c = v.check("adjoint-contragredient", json!({ "max_degree": d }));
    for g in Generator::ALL {
        compare_adjoint::<ZBasis, ZBasis>(
            &mut c,
            &format!("pi(S({g}))^dagger"),
            &one_var_keys(d + 1),
            &one_var_keys(d + 2),
            |n| Verma(w).act_antipode(g, &OnePoly::basis(n)),
            |p| contragredient_act(g, p, w),
            |n| n <= d,
        );
    }
    c.finish()
}

/// `ev†: x^n y^m ↦ q^{λm} z^{n+m}`.
pub fn ev_adjoint_check(d: u32, v: &Verifier) -> Report {
    let mut c = v.check("adjoint-ev", json!({ "max_degree": d }));
    compare_adjoint::<ZBasis, PlaneBasis>(
        &mut c,
        "ev^dagger",
        &one_var_keys(d),
        &plane_keys(d),
        |n| ev(&OnePoly::basis(n)),
        ev_dagger,
        |_| true,
    );
    c.finish()
}

/// The adjoints of the right multiplications by `x` and by `y`.
pub fn rxy_adjoint_check(d: u32, v: &Verifier) -> Report {
    let mut c = v.check("adjoint-rx-ry", json!({ "max_degree": d }));
    let (src, tgt) = (plane_keys(d), plane_keys(d + 1));
    compare_adjoint::<PlaneBasis, PlaneBasis>(
        &mut c,
        "r_x^dagger",
        &src,
        &tgt,
        |k| right_mul(&x(), &QPlanePoly::basis(k)),
        rx_dagger,
        |_| true,
    );
    compare_adjoint::<PlaneBasis, PlaneBasis>(
        &mut c,
        "r_y^dagger",
        &src,
        &tgt,
        |k| right_mul(&y(), &QPlanePoly::basis(k)),
        ry_dagger,
        |_| true,
    );
    c.finish()
}

/// `r_P† = P(r_x†, r_y†)` on the plane truncated at degree `d`.
pub fn symbol_check(name: &str, p: &QPlanePoly, d: u32, v: &Verifier) -> Report {
    let mut c = v.check("adjoint-symbol", json!({ "P": name, "max_degree": d }));
    let top = p.keys().map(|&(k, l)| k + l).max().unwrap_or(0);
    let low = p.keys().map(|&(k, l)| k + l).min().unwrap_or(0);
    compare_adjoint::<PlaneBasis, PlaneBasis>(
        &mut c,
        "r_P^dagger",
        &plane_keys(d),
        &plane_keys(d + top),
        |k| right_mul(p, &QPlanePoly::basis(k)),
        |q| symbol_operator(p, q),
        |(a, b)| a + b <= d + low,
    );
    c.finish()
}

pub fn adjoint_suite(d: u32, v: &Verifier) -> Vec<Report> {
    let sample = QPlanePoly::from_terms([
        ((2, 1), Scalar::one()),
        ((0, 2), qpow(WeightExpr::LAMBDA_PRIME)),
        ((1, 0), Scalar::from_int(-3)),
    ]);
    vec![
        dq2_adjoint_check(d, v),
        contragredient_adjoint_check(d, v),
        ev_adjoint_check(d, v),
        rxy_adjoint_check(d, v),
        symbol_check("x^2 y + v y^2 - 3 x", &sample, d.saturating_sub(3), v),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(reports: &[Report]) {
        for r in reports {
            assert!(r.passed(), "{}", serde_json::to_string(r).unwrap());
        }
    }

    #[test]
    fn relations_hold() {
        all_pass(&relation_suite(4, &Verifier::symbolic()));
    }

    #[test]
    fn tx_picture() {
        all_pass(&[tx_conjugation_check(4, &Verifier::symbolic())]);
    }

    #[test]
    fn adjoints() {
        all_pass(&adjoint_suite(5, &Verifier::symbolic()));
    }

    #[test]
    fn the_labelled_r_x_formula_fails_for_r_y() {
        let mut c = Verifier::symbolic().check("wrong", json!({}));
        compare_adjoint::<PlaneBasis, PlaneBasis>(
            &mut c,
            "r_y^dagger",
            &plane_keys(3),
            &plane_keys(4),
            |k| right_mul(&y(), &QPlanePoly::basis(k)),
            rx_dagger,
            |_| true,
        );
        assert!(c.failed());
    }

    #[test]
    fn poisoned_checks_fail() {
        let v = Verifier::symbolic().poisoned();
        assert!(relation_suite(2, &v).iter().all(|r| !r.passed()));
        assert!(adjoint_suite(4, &v).iter().all(|r| !r.passed()));
        assert!(!tx_conjugation_check(2, &v).passed());
    }
}
