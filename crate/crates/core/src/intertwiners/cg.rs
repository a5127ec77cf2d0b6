//! Clebsch–Gordan expansions: the CG basis `(x + q^λ y)^{N-k} P_k` over
//! monomials, and `j_k` over the transported monomial basis.

use serde::Serialize;
use serde_json::json;

use super::psi::psi_plane;
use crate::coeff::{qbinom, qpoch, qpow, Scalar, WeightExpr};
use crate::error::{Error, Result};
use crate::plane::{descending_product, Basis, PlaneBasis, QPlanePoly, XPoly};
use crate::special::{little_qjacobi, qhahn, qhahn_top_closed_form};
use crate::verify::{Report, Verifier};

/// Coefficient of `x^l y^{N-l}` in `(x + q^λ y)^{N-k} P_k`:
/// `[λ]_k q^{-λk} [N l] q^{(λ+l)(N-l)} Q_k(q^{-2l})`.
pub fn cg_coefficient(k: u32, n: u32, l: u32, q_value: &Scalar) -> Scalar {
    let pref = &qpoch(WeightExpr::LAMBDA, k) * &qpow(WeightExpr::LAMBDA.times(-(k as i32)));
    let pw = qpow(WeightExpr::LAMBDA.shift(l as i32).times((n - l) as i32));
    &(&pref * &qbinom(n as i64, l as i64)) * &(&pw * q_value)
}

pub fn cg_check(k: u32, n: u32, v: &Verifier) -> Report {
    let mut c = v.check("clebsch-gordan", json!({ "k": k, "N": n }));
    let grid = match qhahn(k, n) {
        Ok(g) => g,
        Err(e) => {
            c.error("q-Hahn values", &e);
            return c.finish();
        }
    };
    let rhs = QPlanePoly::from_terms((0..=n).map(|l| ((l, n - l), cg_coefficient(k, n, l, grid.at(l)))));
    c.poly("plane picture", &psi_plane(k, n - k), &rhs);

    let mut x_rhs = XPoly::zero();
    for l in 0..=n {
        let coef = &(&qbinom(n as i64, l as i64) * &Scalar::q_pow(-((l * (n - l)) as i32))) * grid.at(l);
        x_rhs = x_rhs.add(&descending_product(n - l).shift(l).scale(&coef));
    }
    c.poly("X picture", &little_qjacobi(k), &x_rhs);

    if k == n {
        for l in 0..=n {
            c.scalar(format!("closed form of Q_N at l = {l}"), grid.at(l), &qhahn_top_closed_form(n, l));
        }
    }
    c.finish()
}

pub fn cg_suite(max_n: u32, v: &Verifier) -> Vec<Report> {
    (1..=max_n).flat_map(|n| (0..=n).map(move |k| (k, n))).map(|(k, n)| cg_check(k, n, v)).collect()
}

/// CG table for fixed `N`: row `k` expands `(x + q^λ y)^{N-k} P_k`,
/// columns run over `x^N, x^{N-1} y, ..., y^N`.
#[derive(Clone, Debug, Serialize)]
pub struct CgTable {
    #[serde(rename = "N")]
    pub n: u32,
    /// Column labels, `x^l y^{N-l}` with `l` descending.
    pub columns: Vec<String>,
    /// The `l` of each column.
    pub column_l: Vec<u32>,
    pub rows: Vec<Vec<Scalar>>,
}

pub fn cg_table(n: u32) -> Result<CgTable> {
    if n == 0 {
        return Err(Error::Domain("the CG table needs N >= 1".into()));
    }
    let column_l: Vec<u32> = (0..=n).rev().collect();
    let columns = column_l.iter().map(|&l| PlaneBasis::render((l, n - l))).collect();
    let rows = (0..=n)
        .map(|k| {
            let grid = qhahn(k, n)?;
            Ok(column_l.iter().map(|&l| cg_coefficient(k, n, l, grid.at(l))).collect())
        })
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    Ok(CgTable { n, columns, column_l, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::qnum;
    use crate::plane::u;

    #[test]
    fn identities_hold() {
        let v = Verifier::symbolic();
        for r in cg_suite(4, &v) {
            assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
        }
        assert!(!cg_check(1, 2, &v.poisoned()).passed());
    }

    #[test]
    fn table_for_n_one() {
        let t = cg_table(1).unwrap();
        assert_eq!(t.rows[0], vec![Scalar::one(), u()]);
        // row 1 is P_1 = [λ] y - q^{λ'} [λ'] x
        let lp = WeightExpr::LAMBDA_PRIME;
        assert_eq!(t.rows[1], vec![-(&qpow(lp) * &qnum(lp)), qnum(WeightExpr::LAMBDA)]);
        assert_eq!(t.columns, vec!["x", "y"]);
        assert!(cg_table(0).is_err());
    }
}
