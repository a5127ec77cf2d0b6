use proptest::prelude::*;
use qplane_core::actions::{fischer_inner, fischer_inner_tensor, tensor_act, Action, Generator, Tensor};
use qplane_core::coeff::{qnum, Scalar, WeightExpr};
use qplane_core::intertwiners::{psi_apply, qrc, qrc_plane};
use qplane_core::plane::{OnePoly, QPlanePoly};

fn coef() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-4i64..5).prop_map(Scalar::from_int),
        (-2i32..3).prop_map(Scalar::q_pow),
        (-1i32..2, -1i32..2, -2i32..3).prop_map(|(a, b, c)| qnum(WeightExpr::new(a, b, c))),
    ]
}

fn plane_poly(max_deg: u32) -> impl Strategy<Value = QPlanePoly> {
    prop::collection::vec(((0..=max_deg), (0..=max_deg), coef()), 0..3)
        .prop_map(|ts| QPlanePoly::from_terms(ts.into_iter().map(|(k, l, c)| ((k, l), c))))
}

fn one_poly(max_deg: u32) -> impl Strategy<Value = OnePoly> {
    prop::collection::vec(((0..=max_deg), coef()), 0..3).prop_map(OnePoly::from_terms)
}

fn generator() -> impl Strategy<Value = Generator> {
    prop::sample::select(Generator::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn casimir_commutes_with_the_tensor_action(p in plane_poly(2), g in generator()) {
        let lhs = Tensor.casimir(&tensor_act(g, &p));
        let rhs = tensor_act(g, &Tensor.casimir(&p));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_degree_law(n in 0u32..4, a in 0u32..5, b in 0u32..5) {
        let r = qrc(n, &OnePoly::basis(a), &OnePoly::basis(b));
        if a + b < n {
            prop_assert!(r.is_zero());
        } else {
            prop_assert_eq!(r.degree(), Some(a + b - n));
            prop_assert_eq!(r.len(), 1);
        }
    }

    #[test]
    fn bracket_is_the_adjoint_of_psi(n in 0u32..3, f in one_poly(2), p in plane_poly(3)) {
        let lhs = fischer_inner_tensor(&psi_apply(n, &f), &p);
        let rhs = fischer_inner(&f, &qrc_plane(n, &p));
        prop_assert_eq!(lhs, rhs);
    }
}
