use num_rational::BigRational;
use proptest::prelude::*;
use qplane_core::coeff::{qbinom, qfact, qint, qnum, scalar_eval, Point, Scalar, WeightExpr};
use qplane_core::Monomial;

fn atom() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-3i64..4).prop_map(Scalar::from_int),
        (-3i32..4, -2i32..3, -2i32..3).prop_map(|(a, b, c)| Scalar::monomial(Monomial::new(a, b, c))),
        (-2i32..3, -2i32..3, -3i32..4).prop_map(|(a, b, c)| qnum(WeightExpr::new(a, b, c))),
    ]
}

fn scalar() -> impl Strategy<Value = Scalar> {
    atom().prop_recursive(3, 12, 2, |inner| {
        (inner.clone(), inner, 0u8..4).prop_map(|(a, b, op)| match op {
            0 => &a + &b,
            1 => &a - &b,
            2 => &a * &b,
            _ => match b.checked_inv() {
                Some(bi) => &a * &bi,
                None => a,
            },
        })
    })
}

fn points() -> [Point; 2] {
    [Point::from_ints(3, 5, 7), Point::new(ratio(5, 2), ratio(-7, 3), ratio(11, 4))]
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn at(s: &Scalar, p: &Point) -> Option<BigRational> {
    scalar_eval(s, p).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in scalar(), b in scalar()) {
        for p in points() {
            let (Some(ea), Some(eb)) = (at(&a, &p), at(&b, &p)) else { continue };
            prop_assert_eq!(at(&(&a + &b), &p), Some(&ea + &eb));
            prop_assert_eq!(at(&(&a - &b), &p), Some(&ea - &eb));
            prop_assert_eq!(at(&(&a * &b), &p), Some(&ea * &eb));
            if let (Some(bi), false) = (b.checked_inv(), eb == BigRational::from_integer(0.into())) {
                prop_assert_eq!(at(&(&a * &bi), &p), Some(&ea / &eb));
            }
        }
    }

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if let Some(ai) = a.checked_inv() {
            prop_assert!((&a * &ai).is_one() || &a * &ai == Scalar::one());
        }
    }

    #[test]
    fn equality_agrees_with_evaluation(a in scalar(), b in scalar()) {
        if a != b {
            // a nonzero rational function is nonzero at some of a few points
            let ps = [Point::from_ints(2, 3, 5), Point::from_ints(3, 7, 2), Point::from_ints(5, 2, 11)];
            let d = &a - &b;
            prop_assert!(ps.iter().any(|p| at(&d, p).is_none_or(|x| x != BigRational::from_integer(0.into()))));
        }
    }

    #[test]
    fn qnum_is_odd(a in -3i32..4, b in -3i32..4, c in -6i32..7) {
        let w = WeightExpr::new(a, b, c);
        prop_assert_eq!(qnum(-w), -qnum(w));
    }

    #[test]
    fn qbinom_times_factorials(n in 0u32..12, k in 0u32..12) {
        prop_assume!(k <= n);
        let lhs = &(&qbinom(n as i64, k as i64) * &qfact(k)) * &qfact(n - k);
        prop_assert_eq!(lhs, qfact(n));
    }

    #[test]
    fn qnum_addition_rule(m in -6i32..7, n in -6i32..7) {
        // [m+n] = q^n [m] + q^-m [n]
        let rhs = &(&Scalar::q_pow(n) * &qint(m)) + &(&Scalar::q_pow(-m) * &qint(n));
        prop_assert_eq!(qint(m + n), rhs);
    }
}
