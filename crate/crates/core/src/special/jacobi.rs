//! Little q-Jacobi polynomials `j_n^{α,β}(X)` with `α = λ-1`, `β = λ'-1`,
//! and the q-difference operator Θ they diagonalize.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::coeff::{qbinom, qfact, qnum, qpoch, qpow, Scalar, WeightExpr};
use crate::plane::{descending_product, XPoly};
use crate::verify::{Report, Verifier};

/// `α = λ - 1`.
pub const ALPHA: WeightExpr = WeightExpr::new(1, 0, -1);
/// `β = λ' - 1`.
pub const BETA: WeightExpr = WeightExpr::new(0, 1, -1);

/// Alternative finite expansions of `j_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JacobiForm {
    /// Expansion over `Π_{s<n-k}(1 - q^{-2s}X) X^k`, obtained from the Rodrigues formula.
    Rodrigues,
    /// Expansion over `Π_{s=1}^{n-k}(1 - q^{2(β+s)}X) X^k`.
    BetaProduct,
}

fn sign(k: u32) -> Scalar {
    Scalar::from_int(if k % 2 == 0 { 1 } else { -1 })
}

/// The terminating hypergeometric sum
/// `Σ_k [-n]_k [n+α+β+1]_k / [α+1]_k · q^{k(β+1)} X^k / [k]!`.
pub fn little_qjacobi(n: u32) -> XPoly {
    let top = (ALPHA + BETA).shift(n as i32 + 1);
    XPoly::from_terms((0..=n).map(|k| {
        let num = &qpoch(WeightExpr::int(-(n as i32)), k) * &qpoch(top, k);
        let den = &qpoch(ALPHA.shift(1), k) * &qfact(k);
        (k, &(&num / &den) * &qpow(BETA.shift(1).times(k as i32)))
    }))
}

pub fn little_qjacobi_alt(n: u32, form: JacobiForm) -> XPoly {
    let n_i = n as i32;
    let pref = qpoch(BETA.shift(1), n);
    let mut out = XPoly::zero();
    for k in 0..=n {
        let k_i = k as i32;
        // exponent of q in each summand, as a weight
        let (expo, prod) = match form {
            JacobiForm::Rodrigues => ((BETA + ALPHA).shift(1 + k_i).times(k_i), descending_product(n - k)),
            JacobiForm::BetaProduct => (
                (BETA + (-ALPHA)).shift(1 - k_i).times(k_i),
                XPoly::linear_product((1..=n_i - k_i).map(|s| qpow(BETA.shift(s).times(2)))),
            ),
        };
        let den = &qpoch(ALPHA.shift(1), k) * &qpoch(BETA.shift(1), n - k);
        let c = &(&(&qbinom(n as i64, k as i64) * &sign(k)) * &qpow(expo)) / &den;
        out = out.add(&prod.shift(k).scale(&c));
    }
    out.scale(&pref)
}

/// `(f(cX) - f(X)) / X` coefficientwise: `X^m ↦ (c^m - 1) X^{m-1}`.
fn difference_quotient(f: &XPoly, step: i32) -> XPoly {
    let mut out = XPoly::zero();
    for (&m, a) in f.iter() {
        let d = &Scalar::q_pow(step * m as i32) - &Scalar::one();
        if m == 0 {
            // a constant cancels in f(cX) - f(X)
            assert!(d.is_zero(), "difference quotient is not divisible by X");
            continue;
        }
        out.add_term(m - 1, a * &d);
    }
    out
}

/// Θ applied to an X-polynomial.
pub fn theta_apply(f: &XPoly) -> XPoly {
    let up = difference_quotient(f, 2);
    // (f(X) - f(q^{-2}X))/X = -(f(q^{-2}X) - f(X))/X
    let down = difference_quotient(f, -2).scale(&Scalar::from_int(-1));
    let a2 = qpow(ALPHA.times(2));
    let b2 = qpow(BETA.shift(1).times(2));
    let left_factor = XPoly::from_terms([(0, -a2.clone()), (1, &a2 * &b2)]);
    let right_factor = XPoly::from_terms([(0, Scalar::from_int(-1)), (1, Scalar::one())]);
    let inner = left_factor.mul(&up).sub(&right_factor.mul(&down));
    let qq = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
    let c = &qpow(-(ALPHA + BETA).shift(1)) / &(&qq * &qq);
    inner.scale(&c)
}

/// Eigenvalue `[α+β+n+1][n]` of Θ on `j_n`.
pub fn theta_eigenvalue(n: u32) -> Scalar {
    &qnum((ALPHA + BETA).shift(n as i32 + 1)) * &qnum(WeightExpr::int(n as i32))
}

/// The three expansions of `j_n` agree, `deg j_n = n`, and `Θ j_n = [α+β+n+1][n] j_n`.
pub fn jacobi_check(max_n: u32, v: &Verifier) -> Report {
    let mut c = v.check("little-qjacobi", json!({ "max_n": max_n }));
    for n in 0..=max_n {
        let j = little_qjacobi(n);
        c.holds(format!("degree of j_{n}"), j.degree() == Some(n));
        c.poly(format!("rodrigues form, n = {n}"), &little_qjacobi_alt(n, JacobiForm::Rodrigues), &j);
        c.poly(format!("beta-product form, n = {n}"), &little_qjacobi_alt(n, JacobiForm::BetaProduct), &j);
        c.poly(format!("theta j_{n}"), &theta_apply(&j), &j.scale(&theta_eigenvalue(n)));
    }
    c.finish()
}
