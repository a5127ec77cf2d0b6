//! q-Rankin–Cohen brackets, the Fischer adjoints of the holographic operators.

use serde::Serialize;
use serde_json::{json, Value};

use super::lowest::{level_weight, lowest_weight_coeff, lowest_weight_poly};
use super::psi::{psi_apply, psi_matrix};
use crate::actions::{
    contragredient_act, ev_dagger, fischer_inner, fischer_inner_tensor, plane_keys, symbol_check, symbol_operator,
    Action, Generator, OpMatrix, Tensor,
};
use crate::coeff::{Monomial, Scalar};
use crate::plane::{OnePoly, PlaneBasis, QPlanePoly};
use crate::special::{dq_deriv_pow, QDeriv};
use crate::verify::{Mode, Report, Status, Verifier};

/// One summand `c_k · f^{(k)}(z) · g^{(n-k)}(shift · z)` of the bracket.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BracketTerm {
    pub k: u32,
    pub coefficient: Scalar,
    /// `q^{λ+2k}`, applied to the argument of `g`.
    pub shift: Monomial,
}

pub fn qrc_terms(n: u32) -> Vec<BracketTerm> {
    (0..=n)
        .map(|k| BracketTerm { k, coefficient: lowest_weight_coeff(n, k), shift: Monomial::new(2 * k as i32, 1, 0) })
        .collect()
}

pub fn qrc(n: u32, f: &OnePoly, g: &OnePoly) -> OnePoly {
    let mut out = OnePoly::zero();
    for t in qrc_terms(n) {
        let df = dq_deriv_pow(QDeriv::Q2, f, t.k);
        let dg = dq_deriv_pow(QDeriv::Q2, g, n - t.k).dilate(&Scalar::monomial(t.shift));
        out = out.add(&df.mul(&dg).scale(&t.coefficient));
    }
    out
}

/// The bracket as a linear map on `C[x] ⊗ C[y]`: `x^a y^b ↦ qrc(n, z^a, z^b)`.
pub fn qrc_plane(n: u32, p: &QPlanePoly) -> OnePoly {
    p.map_linear(|(a, b)| qrc(n, &OnePoly::basis(a), &OnePoly::basis(b)))
}

/// Compares the bracket with `Ψ_n†` computed from matrices, with
/// `ev† ∘ r_{P_n}†`, and through the pairing identity.
pub fn qrc_adjoint_check(n: u32, d: u32, v: &Verifier) -> Report {
    let mut c = v.check("qrc-adjoint", json!({ "n": n, "max_degree": d }));
    let adj = match psi_matrix(n, d) {
        Ok(m) => m.fischer_adjoint(),
        Err(e) => {
            c.error("matrix of Psi_n", &e);
            return c.finish();
        }
    };
    let pn = lowest_weight_poly(n);
    for (j, &(a, b)) in plane_keys(d + n).iter().enumerate() {
        let m = QPlanePoly::basis((a, b));
        let bracket = qrc_plane(n, &m);
        if !c.poly(format!("Psi^dagger on x^{a} y^{b}"), &adj.column_poly(j), &bracket)
            || !c.poly(format!("ev^dagger r_P^dagger on x^{a} y^{b}"), &ev_dagger(&symbol_operator(&pn, &m)), &bracket)
        {
            return c.finish();
        }
    }
    for j in 0..=d {
        let image = psi_apply(n, &OnePoly::basis(j));
        for (a, b) in plane_keys(d + n) {
            let m = QPlanePoly::basis((a, b));
            let lhs = fischer_inner_tensor(&image, &m);
            let rhs = fischer_inner(&OnePoly::basis(j), &qrc_plane(n, &m));
            if !c.scalar(format!("pairing z^{j}, x^{a} y^{b}"), &lhs, &rhs) {
                return c.finish();
            }
        }
    }
    c.finish()
}

/// `qrc ∘ Δπ(S(g))† = π*_{λ+λ'+2n}(g) ∘ qrc` on the plane up to degree `d`.
pub fn qrc_intertwining_check(n: u32, d: u32, v: &Verifier) -> Report {
    let mut c = v.check("qrc-intertwining", json!({ "n": n, "max_degree": d }));
    let w = level_weight(n);
    let (src, tgt) = (plane_keys(d + 1), plane_keys(d + 2));
    for g in Generator::ALL {
        let dual = match OpMatrix::from_map::<PlaneBasis, PlaneBasis>(&src, &tgt, |k| {
            Tensor.act_antipode(g, &QPlanePoly::basis(k))
        }) {
            Ok(m) => m.fischer_adjoint(),
            Err(e) => {
                c.error(format!("Delta pi(S({g}))"), &e);
                break;
            }
        };
        // columns of degree <= d only see sources inside the truncation
        for (j, &(a, b)) in tgt.iter().enumerate().filter(|(_, &(a, b))| a + b <= d) {
            let lhs = qrc_plane(n, &dual.column_poly(j));
            let rhs = contragredient_act(g, &qrc_plane(n, &QPlanePoly::basis((a, b))), w);
            if !c.poly(format!("{g} on x^{a} y^{b}"), &lhs, &rhs) {
                return c.finish();
            }
        }
    }
    c.finish()
}

/// `r_{P_n}† = P_n(r_x†, r_y†)`.
pub fn qrc_symbol_check(n: u32, d: u32, v: &Verifier) -> Report {
    symbol_check(&format!("P_{n}"), &lowest_weight_poly(n), d, v)
}

/// `qrc(n, z^a, z^b)` vanishes iff `a + b < n`, and has degree `a + b - n` otherwise.
pub fn qrc_degree_check(max_n: u32, max_deg: u32, v: &Verifier) -> Report {
    let mut c = v.check("qrc-degree", json!({ "max_n": max_n, "max_input_degree": max_deg }));
    for n in 0..=max_n {
        for a in 0..=max_deg {
            for b in 0..=max_deg {
                let r = qrc(n, &OnePoly::basis(a), &OnePoly::basis(b));
                let expect = (a + b).checked_sub(n);
                let ok = match expect {
                    None => r.is_zero(),
                    Some(e) => r.degree() == Some(e) && r.len() == 1,
                };
                if !c.holds(format!("n = {n}, z^{a}, z^{b}"), ok) {
                    return c.finish();
                }
            }
        }
    }
    c.finish()
}

/// Floating-point evaluation of the bracket at `q₀ = e^h`, `q^λ = e^{λh}`,
/// `q^λ' = e^{λ'h}`. Every q-number is computed as `sinh(xh)/sinh(h)`, which
/// stays accurate as `q₀ → 1` where the expanded rational functions cancel.
#[derive(Clone, Copy, Debug)]
pub struct FloatBracket {
    h: f64,
    lambda: f64,
    lambda_prime: f64,
}

impl FloatBracket {
    pub fn new(q0: f64, lambda: f64, lambda_prime: f64) -> Self {
        FloatBracket { h: q0.ln(), lambda, lambda_prime }
    }

    fn qnum(&self, x: f64) -> f64 {
        if self.h == 0.0 {
            return x;
        }
        (x * self.h).sinh() / self.h.sinh()
    }

    fn qpow(&self, x: f64) -> f64 {
        (x * self.h).exp()
    }

    fn poch(&self, x: f64, k: u32) -> f64 {
        (0..k).map(|s| self.qnum(x + s as f64)).product()
    }

    fn fact(&self, k: u32) -> f64 {
        self.poch(1.0, k)
    }

    /// `D_{q²}^k z^a = Π_{s<k} q^{a-s-1} [a-s] · z^{a-k}`.
    fn deriv(&self, a: u32, k: u32) -> f64 {
        if k > a {
            return 0.0;
        }
        (0..k).map(|s| self.qpow((a - s) as f64 - 1.0) * self.qnum((a - s) as f64)).product()
    }

    /// Coefficient of `z^{a+b-n}` in `qrc(n, z^a, z^b)`.
    pub fn coeff(&self, n: u32, a: u32, b: u32) -> f64 {
        let (l, lp) = (self.lambda, self.lambda_prime);
        (0..=n)
            .map(|k| {
                let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
                let binom = self.fact(n) / (self.fact(k) * self.fact(n - k));
                let kf = k as f64;
                let pw = self.qpow(kf * (lp + 2.0 * n as f64 - kf - 1.0));
                let c = self.poch(l, n) * self.poch(lp, n) / (self.poch(l, k) * self.poch(lp, n - k));
                let m = b.saturating_sub(n - k) as f64;
                let dilation = self.qpow((l + 2.0 * kf) * m);
                sgn * binom * pw * c * self.deriv(a, k) * self.deriv(b, n - k) * dilation
            })
            .sum()
    }
}

/// Classical Rankin–Cohen coefficient of `z^{a+b-n}` in `RC_n(z^a, z^b)`,
/// the `q → 1` limit of each summand.
pub fn classical_rc(n: u32, a: u32, b: u32, lam: f64, lamp: f64) -> f64 {
    FloatBracket { h: 0.0, lambda: lam, lambda_prime: lamp }.coeff(n, a, b)
}

/// Parameters of the floating-point classical-limit comparison.
///
/// The bracket deviates from its classical limit at first order in
/// `q₀ - 1`; for `n <= 3` and inputs of degree `<= 4` the worst relative
/// deviation is about `352 (q₀ - 1)`, so the default sits at `1 + 10⁻⁶`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClassicalLimit {
    pub q0: f64,
    pub lambda: f64,
    pub lambda_prime: f64,
    pub max_n: u32,
    pub max_input_degree: u32,
    pub tolerance: f64,
}

impl Default for ClassicalLimit {
    fn default() -> Self {
        ClassicalLimit {
            q0: 1.0 + 1e-6,
            lambda: 2.3,
            lambda_prime: 3.7,
            max_n: 3,
            max_input_degree: 4,
            tolerance: 1e-3,
        }
    }
}

/// Relative error, or absolute error against an exact zero.
fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

/// Floating-point smoke test of the `q → 1` limit.
///
/// The float evaluator is first tied to the exact bracket at a moderate
/// point (`q₀ = 3/2`, where evaluating the exact coefficients is stable),
/// then compared at `q₀` with the classical bracket.
pub fn classical_limit_check(p: &ClassicalLimit, poison: bool) -> Report {
    let anchor = 1.5f64;
    let exact_at = |n, a, b| {
        let e = a + b - n;
        qrc(n, &OnePoly::basis(a), &OnePoly::basis(b)).coeff(e).eval_f64(
            anchor,
            anchor.powf(p.lambda),
            anchor.powf(p.lambda_prime),
        )
    };
    let at_anchor = FloatBracket::new(anchor, p.lambda, p.lambda_prime);
    let near_one = FloatBracket::new(p.q0, p.lambda, p.lambda_prime);
    let mut worst = (0.0f64, Value::Null);
    let mut anchor_err = 0.0f64;
    let mut poison = poison;
    for n in 0..=p.max_n {
        for a in 0..=p.max_input_degree {
            for b in 0..=p.max_input_degree {
                if a + b < n {
                    continue;
                }
                anchor_err = anchor_err.max(rel_err(at_anchor.coeff(n, a, b), exact_at(n, a, b)));
                let mut got = near_one.coeff(n, a, b);
                if std::mem::take(&mut poison) {
                    got += 1.0;
                }
                let want = classical_rc(n, a, b, p.lambda, p.lambda_prime);
                let err = rel_err(got, want);
                if err > worst.0 || worst.1.is_null() {
                    worst = (err, json!({ "n": n, "a": a, "b": b, "q_value": got, "classical": want }));
                }
            }
        }
    }
    let passed = worst.0 <= p.tolerance && anchor_err <= 1e-9;
    Report {
        identity: "classical-limit".into(),
        params: json!({ "limit": p, "max_relative_error": worst.0, "anchor_relative_error": anchor_err }),
        mode: Mode::Point,
        status: if passed { Status::Ok } else { Status::Fail },
        counterexample: (!passed).then_some(worst.1),
    }
}
