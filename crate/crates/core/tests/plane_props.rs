use proptest::prelude::*;
use qplane_core::coeff::{qnum, Scalar, WeightExpr};
use qplane_core::plane::{is_homogeneous, phi, phi_inv, qp_mul, t_mul, x_plus_uy, Basis, QPlanePoly, TXPoly, TxBasis};

fn coef() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-4i64..5).prop_map(Scalar::from_int),
        (-3i32..4).prop_map(Scalar::q_pow),
        (-1i32..2, -1i32..2, -2i32..3).prop_map(|(a, b, c)| qnum(WeightExpr::new(a, b, c))),
    ]
}

fn plane_poly(max_deg: u32) -> impl Strategy<Value = QPlanePoly> {
    prop::collection::vec(((0..=max_deg), (0..=max_deg), coef()), 0..4)
        .prop_map(|ts| QPlanePoly::from_terms(ts.into_iter().map(|(k, l, c)| ((k, l), c))))
}

fn tx_poly(max_deg: u32) -> impl Strategy<Value = TXPoly> {
    prop::collection::vec(((0..=max_deg), (0..=max_deg), coef()), 0..4)
        .prop_map(|ts| TXPoly::from_terms(ts.into_iter().filter(|&(i, j, _)| j <= i).map(|(i, j, c)| ((i, j), c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn plane_product_is_associative(a in plane_poly(3), b in plane_poly(3), c in plane_poly(2)) {
        prop_assert_eq!(qp_mul(&qp_mul(&a, &b), &c), qp_mul(&a, &qp_mul(&b, &c)));
    }

    #[test]
    fn plane_product_is_graded(k in 0u32..5, l in 0u32..5, m in 0u32..5, n in 0u32..5) {
        let p = qp_mul(&QPlanePoly::basis((k, l)), &QPlanePoly::basis((m, n)));
        prop_assert!(is_homogeneous(&p, k + l + m + n));
        prop_assert_eq!(p.len(), 1);
    }

    #[test]
    fn phi_turns_t_into_x_plus_uy(p in tx_poly(4)) {
        prop_assert_eq!(phi(&t_mul(&p)), qp_mul(&x_plus_uy(), &phi(&p)));
    }

    #[test]
    fn phi_inverse_round_trips(p in plane_poly(4)) {
        let back = phi_inv(&p);
        prop_assert!(back.keys().all(|&k| TxBasis::is_valid(k)));
        prop_assert_eq!(phi(&back), p);
    }

    #[test]
    fn phi_then_inverse_is_identity(p in tx_poly(4)) {
        prop_assert_eq!(phi_inv(&phi(&p)), p);
    }
}
