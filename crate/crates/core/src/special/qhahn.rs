//! q-Hahn polynomials `Q_k^{(N)}` on the grid `X = q^{-2l}`, with
//! `a = q^{2α}`, `b = q^{2β}`.

use serde::Serialize;
use serde_json::json;

use super::jacobi::{ALPHA, BETA};
use crate::coeff::{qbinom, qpoch, qpow, Scalar, WeightExpr};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::verify::{Report, Verifier};

/// Values `Q_k^{(N)}(q^{-2l})` for `l = 0..=N`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridFunction {
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub values: Vec<Scalar>,
}

impl GridFunction {
    pub fn at(&self, l: u32) -> &Scalar {
        &self.values[l as usize]
    }
}

pub fn param_a() -> Scalar {
    qpow(ALPHA.times(2))
}

pub fn param_b() -> Scalar {
    qpow(BETA.times(2))
}

/// The finite sum defining `Q_k^{(N)}(q^{-2x})`, valid for any integer `x`.
pub fn qhahn_value(k: u32, n: u32, x: i32) -> Scalar {
    let top = (ALPHA + BETA).shift(k as i32 + 1);
    (0..=k)
        .map(|i| {
            let i_i = i as i32;
            let num = &qpoch(top, i) * &qpoch(WeightExpr::int(-x), i);
            let den = &qpoch(ALPHA.shift(1), i) * &qpoch(WeightExpr::int(-(n as i32)), i);
            let pw = qpow(BETA.shift(1 + n as i32 - x).times(i_i));
            let sgn = Scalar::from_int(if i % 2 == 0 { 1 } else { -1 });
            &(&(&qbinom(k as i64, i as i64) * &pw) * &sgn) * &(&num / &den)
        })
        .sum()
}

pub fn qhahn(k: u32, n: u32) -> Result<GridFunction> {
    if k > n {
        return Err(Error::IndexOutOfRange { k: k as i64, n: n as i64 });
    }
    Ok(GridFunction { n, k, values: (0..=n as i32).map(|l| qhahn_value(k, n, l)).collect() })
}

/// `Q_N^{(N)}(q^{-2l}) = (-1)^l q^{l(α+β+N+1)} [β+1]_N / ([α+1]_l [β+1]_{N-l})`.
///
/// Read off by matching the `k = N` connection formula with the
/// Rodrigues-type expansion of `j_N`; the Pochhammer `[α+1]_l` runs to `l`,
/// which is what makes the value at `l = 0` equal to 1.
pub fn qhahn_top_closed_form(n: u32, l: u32) -> Scalar {
    let sgn = Scalar::from_int(if l % 2 == 0 { 1 } else { -1 });
    let pw = qpow((ALPHA + BETA).shift(n as i32 + 1).times(l as i32));
    let num = qpoch(BETA.shift(1), n);
    let den = &qpoch(ALPHA.shift(1), l) * &qpoch(BETA.shift(1), n - l);
    &(&sgn * &pw) * &(&num / &den)
}

/// Coefficients `(B, M, D)` of the difference equation at `X = q^{-2l}`.
fn diffop_coefficients(n: u32, l: i32) -> (Scalar, Scalar, Scalar) {
    let (a, b) = (param_a(), param_b());
    let one = Scalar::one();
    let xinv = Scalar::q_pow(2 * l);
    let aq2 = a.mul_monomial(crate::Monomial::q(2));
    let bb = &(&one - &(&Scalar::q_pow(-2 * n as i32) * &xinv)) * &(&one - &(&aq2 * &xinv));
    let dd = &(&aq2 * &(&one - &xinv)) * &(&b - &(&Scalar::q_pow(-2 * (n as i32 + 1)) * &xinv));
    let mm = &(&(&one + &(&aq2 * &b)) - &bb) - &dd;
    (bb, mm, dd)
}

/// Eigenvalue `q^{-2k} + ab q^{2k+2}` of the difference operator.
pub fn qhahn_eigenvalue(k: u32) -> Scalar {
    let ab = &param_a() * &param_b();
    &Scalar::q_pow(-2 * k as i32) + &ab.mul_monomial(crate::Monomial::q(2 * k as i32 + 2))
}

/// Checks the difference equation on `l = 0..=N`, given values on the
/// extended grid `l = -1..=N+1` (index `l + 1`).
fn diffop_check_values(k: u32, n: u32, ext: &[Scalar], v: &Verifier) -> Report {
    let mut c = v.check("qhahn-difference-equation", json!({ "k": k, "N": n }));
    let eig = qhahn_eigenvalue(k);
    for l in 0..=n as i32 {
        let (bb, mm, dd) = diffop_coefficients(n, l);
        let at = |m: i32| &ext[(m + 1) as usize];
        let lhs = &eig * at(l);
        let rhs = &(&(&bb * at(l + 1)) + &(&mm * at(l))) + &(&dd * at(l - 1));
        if !c.scalar(format!("l = {l}"), &lhs, &rhs) {
            break;
        }
    }
    c.finish()
}

pub fn qhahn_diffop_check(k: u32, n: u32, v: &Verifier) -> Report {
    let ext: Vec<Scalar> = (-1..=n as i32 + 1).map(|l| qhahn_value(k, n, l)).collect();
    diffop_check_values(k, n, &ext, v)
}

/// Grid values at `l = 0..=N` for every `k`, plus the closed form at `k = N`.
pub fn qhahn_values_check(n: u32, v: &Verifier) -> Report {
    let mut c = v.check("qhahn-values", json!({ "N": n }));
    for k in 0..=n {
        match qhahn(k, n) {
            Ok(g) => {
                c.scalar(format!("Q_{k}(1)"), g.at(0), &Scalar::one());
            }
            Err(e) => c.error(format!("k = {k}"), &e),
        }
    }
    for l in 0..=n {
        c.scalar(format!("Q_N at l = {l}"), &qhahn_value(n, n, l as i32), &qhahn_top_closed_form(n, l));
    }
    c.finish()
}

/// Recovered three-term recurrence coefficients of `X Q_k`.
#[derive(Clone, Debug, Serialize)]
pub struct Recurrence {
    pub a: Vec<Scalar>,
    pub n: Vec<Scalar>,
    pub c: Vec<Scalar>,
}

/// Expands `X·Q_k` in the basis `{Q_j}` by exact change of basis on the grid.
pub fn qhahn_recurrence(n: u32) -> Result<(Matrix, Recurrence)> {
    let size = n as usize + 1;
    let grids = (0..=n).map(|k| qhahn(k, n)).collect::<Result<Vec<_>>>()?;
    let basis = Matrix::from_columns(grids.iter().map(|g| g.values.clone()).collect(), size);
    let rhs = Matrix::from_columns(
        grids[..n as usize]
            .iter()
            .map(|g| g.values.iter().enumerate().map(|(l, val)| val * &Scalar::q_pow(-2 * l as i32)).collect())
            .collect(),
        size,
    );
    let coeffs = basis.solve(&rhs)?;
    let pick = |j: i64, k: usize| {
        if (0..size as i64).contains(&j) {
            coeffs.get(j as usize, k).clone()
        } else {
            Scalar::zero()
        }
    };
    let rec = Recurrence {
        a: (0..n as usize).map(|k| pick(k as i64 + 1, k)).collect(),
        n: (0..n as usize).map(|k| pick(k as i64, k)).collect(),
        c: (0..n as usize).map(|k| pick(k as i64 - 1, k)).collect(),
    };
    Ok((coeffs, rec))
}

pub fn qhahn_tridiagonal_check(n: u32, v: &Verifier) -> Report {
    let mut c = v.check("qhahn-tridiagonal", json!({ "N": n }));
    match qhahn_recurrence(n) {
        Ok((coeffs, rec)) => {
            'outer: for k in 0..n as usize {
                for j in 0..=n as usize {
                    let off_band = j + 1 < k || j > k + 1;
                    if off_band
                        && !c.scalar(format!("coefficient of Q_{j} in X·Q_{k}"), coeffs.get(j, k), &Scalar::zero())
                    {
                        break 'outer;
                    }
                }
                c.holds(format!("A_{k} nonzero"), !rec.a[k].is_zero());
            }
            if n > 0 {
                c.scalar("C_0", &rec.c[0], &Scalar::zero());
            }
        }
        Err(e) => c.error("change of basis", &e),
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = qhahn(0, 4).unwrap();
        assert!(g.values.iter().all(Scalar::is_one));
        assert_eq!(qhahn(5, 4), Err(Error::IndexOutOfRange { k: 5, n: 4 }));
        for k in 0..=3 {
            assert!(qhahn(k, 3).unwrap().at(0).is_one());
        }
        let json = serde_json::to_value(qhahn(1, 1).unwrap()).unwrap();
        assert_eq!(json["N"], 1);
        assert_eq!(json["values"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn closed_form_and_difference_equation() {
        let v = Verifier::symbolic();
        for n in 1..=4 {
            let r = qhahn_values_check(n, &v);
            assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
            for k in 0..=n {
                let r = qhahn_diffop_check(k, n, &v);
                assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
            }
        }
    }

    #[test]
    fn perturbed_value_breaks_difference_equation() {
        let v = Verifier::symbolic();
        let (k, n) = (2, 3);
        let ext: Vec<Scalar> = (-1..=n as i32 + 1).map(|l| qhahn_value(k, n, l)).collect();
        for idx in 1..=n as usize + 1 {
            let mut bad = ext.clone();
            bad[idx] = &bad[idx] + &Scalar::one();
            assert!(!diffop_check_values(k, n, &bad, &v).passed(), "perturbing l = {}", idx - 1);
        }
    }

    #[test]
    fn recurrence_is_tridiagonal() {
        let v = Verifier::symbolic();
        for n in 1..=3 {
            let r = qhahn_tridiagonal_check(n, &v);
            assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
        }
    }
}
