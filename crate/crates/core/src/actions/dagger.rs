//! Closed-form Fischer adjoints of evaluation and right multiplications.

use crate::coeff::{qint, qpow, Scalar, WeightExpr};
use crate::plane::{qp_pow_linear, u, OnePoly, QPlanePoly};

/// `ev: z^n ↦ (x + q^λ y)^n`.
pub fn ev(p: &OnePoly) -> QPlanePoly {
    p.map_linear(|n| qp_pow_linear(&u(), n))
}

/// `ev†: x^n y^m ↦ q^{λm} z^{n+m}`, i.e. `P ⊗ Q ↦ P(z) Q(q^λ z)`.
pub fn ev_dagger(p: &QPlanePoly) -> OnePoly {
    p.map_linear(|(n, m)| OnePoly::term(n + m, qpow(WeightExpr::LAMBDA.times(m as i32))))
}

/// `r_x†: x^n y^m ↦ q^{2m+n-1} [n] x^{n-1} y^m`.
pub fn rx_dagger(p: &QPlanePoly) -> QPlanePoly {
    p.map_linear(|(n, m)| match n {
        0 => QPlanePoly::zero(),
        _ => QPlanePoly::term((n - 1, m), &Scalar::q_pow((2 * m + n) as i32 - 1) * &qint(n as i32)),
    })
}

/// `r_y†: x^n y^m ↦ q^{m-1} [m] x^n y^{m-1}`.
pub fn ry_dagger(p: &QPlanePoly) -> QPlanePoly {
    p.map_linear(|(n, m)| match m {
        0 => QPlanePoly::zero(),
        _ => QPlanePoly::term((n, m - 1), &Scalar::q_pow(m as i32 - 1) * &qint(m as i32)),
    })
}

/// Right multiplication `r_P(Q) = Q·P` in the quantum plane.
pub fn right_mul(p: &QPlanePoly, q: &QPlanePoly) -> QPlanePoly {
    crate::plane::qp_mul(q, p)
}

/// `P(r_x†, r_y†)`: the monomial `x^k y^l` becomes `(r_x†)^k ∘ (r_y†)^l`.
pub fn symbol_operator(p: &QPlanePoly, q: &QPlanePoly) -> QPlanePoly {
    let mut out = QPlanePoly::zero();
    for (&(k, l), c) in p.iter() {
        let mut w = q.clone();
        for _ in 0..l {
            w = ry_dagger(&w);
        }
        for _ in 0..k {
            w = rx_dagger(&w);
        }
        out = out.add(&w.scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::{monomial, x, y};

    #[test]
    fn examples() {
        assert_eq!(ev(&OnePoly::var()), crate::plane::x_plus_uy());
        assert_eq!(ev_dagger(&y()), OnePoly::term(1, qpow(WeightExpr::LAMBDA)));
        assert_eq!(rx_dagger(&x()), monomial(0, 0));
        assert!(rx_dagger(&y()).is_zero());
        assert_eq!(ry_dagger(&monomial(1, 2)), monomial(1, 1).scale(&(&Scalar::q_pow(1) * &qint(2))));
        // r_x then r_y: x^k y^l is Q·x^k·y^l
        assert_eq!(right_mul(&x(), &y()), monomial(1, 1).scale(&Scalar::q_pow(2)));
    }

    #[test]
    fn symbol_of_a_monomial_composes_adjoints() {
        let p = monomial(2, 1);
        let q = monomial(3, 2);
        assert_eq!(symbol_operator(&p, &q), rx_dagger(&rx_dagger(&ry_dagger(&q))));
    }
}
