//! q-numbers, q-Pochhammer symbols, q-factorials and q-binomials.

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::scalar::Scalar;
use super::weight::WeightExpr;

/// `[w] = (q^w - q^-w) / (q - q^-1)`.
pub fn qnum(w: WeightExpr) -> Scalar {
    if w == WeightExpr::default() {
        return Scalar::zero();
    }
    // q^w - q^-w = q^-w (q^2w - 1) and q - q^-1 = q^-1 (q^2 - 1)
    let m = w.q_power();
    let unit = LaurentPoly::monomial(m.inv() * Monomial::q(1));
    let top = &LaurentPoly::monomial(m.pow(2)) - &LaurentPoly::one();
    let bottom = &LaurentPoly::monomial(Monomial::q(2)) - &LaurentPoly::one();
    Scalar::from_factored(unit, &[(top, 1), (bottom, -1)])
}

/// `[n]` for an integer `n`.
pub fn qint(n: i32) -> Scalar {
    qnum(WeightExpr::int(n))
}

/// `[w]_n = [w][w+1]…[w+n-1]`; the empty product is 1.
pub fn qpoch(w: WeightExpr, n: u32) -> Scalar {
    (0..n as i32).map(|s| qnum(w.shift(s))).product()
}

/// `[n]! = [1]_n`.
pub fn qfact(n: u32) -> Scalar {
    qpoch(WeightExpr::int(1), n)
}

/// Symmetric q-binomial; zero outside `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64) -> Scalar {
    if n < 0 || k < 0 || k > n {
        return Scalar::zero();
    }
    let (n, k) = (n as u32, k as u32);
    &qfact(n) / &(&qfact(k) * &qfact(n - k))
}

/// `q^w` as a scalar.
pub fn qpow(w: WeightExpr) -> Scalar {
    Scalar::monomial(w.q_power())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qnum_examples() {
        assert!(qnum(WeightExpr::int(0)).is_zero());
        assert_eq!(qint(2), &Scalar::q_pow(1) + &Scalar::q_pow(-1));
        assert_eq!(qint(1), Scalar::one());
        assert_eq!(qint(-3), -qint(3));
        // [λ] = (u - u^-1)/(q - q^-1)
        let u = Scalar::monomial(Monomial::new(0, 1, 0));
        let expect = &(&u - &u.inv()) / &(&Scalar::q_pow(1) - &Scalar::q_pow(-1));
        assert_eq!(qnum(WeightExpr::LAMBDA), expect);
    }

    #[test]
    fn qpoch_and_factorials() {
        let w = WeightExpr::new(1, 0, 0);
        assert!(qpoch(w, 0).is_one());
        assert_eq!(qpoch(w, 2), &qnum(w) * &qnum(w.shift(1)));
        for n in 0..7 {
            assert_eq!(qpoch(WeightExpr::int(1), n), qfact(n));
        }
    }

    #[test]
    fn qbinom_examples() {
        assert!(qbinom(6, 0).is_one());
        assert_eq!(qbinom(2, 1), &Scalar::q_pow(1) + &Scalar::q_pow(-1));
        assert_eq!(qbinom(5, 2), qbinom(5, 3));
        assert!(qbinom(3, -1).is_zero());
        assert!(qbinom(3, 4).is_zero());
    }

    #[test]
    fn integer_qbinomials_are_laurent_polynomials() {
        for n in 0..9 {
            for k in 0..=n {
                let b = qbinom(n, k);
                assert!(b.denominator().is_one(), "qbinom({n},{k}) = {b}");
            }
        }
    }
}
