//! Lowest-weight vectors `P_n` of `V_λ ⊗ V_λ'` and their uniqueness.

use serde::Serialize;
use serde_json::json;

use crate::actions::{plane_keys, tensor_act, Generator, OpMatrix};
use crate::coeff::{qbinom, qpoch, qpow, Scalar, WeightExpr};
use crate::plane::{PlaneBasis, QPlanePoly};
use crate::verify::{Report, Verifier};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowestWeightVector {
    pub n: u32,
    pub poly: QPlanePoly,
}

/// Weight `λ + λ' + 2n` of `P_n`.
pub fn level_weight(n: u32) -> WeightExpr {
    WeightExpr::SUM.shift(2 * n as i32)
}

/// Coefficient of `x^k y^{n-k}` in `P_n`:
/// `[λ]_n [λ']_n [n k] (-1)^k q^{k(λ'+2n-k-1)} / ([λ]_k [λ']_{n-k})`.
pub fn lowest_weight_coeff(n: u32, k: u32) -> Scalar {
    let (l, lp) = (WeightExpr::LAMBDA, WeightExpr::LAMBDA_PRIME);
    let pref = &qpoch(l, n) * &qpoch(lp, n);
    let den = &qpoch(l, k) * &qpoch(lp, n - k);
    let ki = k as i32;
    let pw = qpow(lp.shift(2 * n as i32 - ki - 1).times(ki));
    let sgn = Scalar::from_int(if k % 2 == 0 { 1 } else { -1 });
    &(&(&qbinom(n as i64, k as i64) * &sgn) * &pw) * &(&pref / &den)
}

pub fn lowest_weight_poly(n: u32) -> QPlanePoly {
    QPlanePoly::from_terms((0..=n).map(|k| ((k, n - k), lowest_weight_coeff(n, k))))
}

/// Builds `P_n`, asserting `Δ(F)P_n = 0` and the `Δ(K)` eigenvalue.
pub fn lowest_weight_vector(n: u32) -> LowestWeightVector {
    let poly = lowest_weight_poly(n);
    assert!(tensor_act(Generator::F, &poly).is_zero(), "F does not kill P_{n}");
    assert_eq!(tensor_act(Generator::K, &poly), poly.scale(&qpow(level_weight(n))), "K eigenvalue of P_{n}");
    LowestWeightVector { n, poly }
}

pub fn lowest_weight_check(max_n: u32, v: &Verifier) -> Report {
    let mut c = v.check("lowest-weight", json!({ "max_n": max_n }));
    for n in 0..=max_n {
        let p = lowest_weight_poly(n);
        c.holds(format!("P_{n} nonzero"), !p.is_zero());
        c.poly(format!("F P_{n}"), &tensor_act(Generator::F, &p), &QPlanePoly::zero());
        c.poly(format!("K P_{n}"), &tensor_act(Generator::K, &p), &p.scale(&qpow(level_weight(n))));
    }
    c.finish()
}

/// Dimension of `ker Δ(F) ∩ {Δ(K) = q^{λ+λ'+2n}}` inside the plane of
/// total degree `<= d`.
pub fn lowest_weight_space_dim(n: u32, d: u32) -> crate::Result<usize> {
    let target = qpow(level_weight(n));
    let eigen: Vec<(u32, u32)> = plane_keys(d)
        .into_iter()
        .filter(|&k| tensor_act(Generator::K, &QPlanePoly::basis(k)).coeff(k) == target)
        .collect();
    let f = OpMatrix::from_map::<PlaneBasis, PlaneBasis>(&eigen, &plane_keys(d), |k| {
        tensor_act(Generator::F, &QPlanePoly::basis(k))
    })?;
    Ok(eigen.len() - f.matrix.rank())
}

pub fn uniqueness_check(max_n: u32, d: u32, v: &Verifier) -> Report {
    let mut c = v.check("lowest-weight-uniqueness", json!({ "max_n": max_n, "max_degree": d }));
    for n in 0..=max_n.min(d) {
        match lowest_weight_space_dim(n, d) {
            Ok(dim) => {
                c.count(format!("kernel dimension at level {n}"), dim, 1);
            }
            Err(e) => c.error(format!("level {n}"), &e),
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::qnum;

    #[test]
    fn examples() {
        assert_eq!(lowest_weight_vector(0).poly, QPlanePoly::basis((0, 0)));
        let lp = WeightExpr::LAMBDA_PRIME;
        let expect = QPlanePoly::from_terms([((0, 1), qnum(WeightExpr::LAMBDA)), ((1, 0), -(&qpow(lp) * &qnum(lp)))]);
        assert_eq!(lowest_weight_vector(1).poly, expect);
    }

    #[test]
    fn annihilated_and_unique() {
        let v = Verifier::symbolic();
        assert!(lowest_weight_check(5, &v).passed());
        assert!(uniqueness_check(4, 5, &v).passed());
        assert!(!lowest_weight_check(1, &v.clone().poisoned()).passed());
    }
}
