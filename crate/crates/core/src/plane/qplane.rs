//! Normal-ordered arithmetic in the quantum plane `yx = q² xy`.

use crate::coeff::{qbinom, Monomial, Scalar};

use super::poly::QPlanePoly;

pub fn x() -> QPlanePoly {
    QPlanePoly::basis((1, 0))
}

pub fn y() -> QPlanePoly {
    QPlanePoly::basis((0, 1))
}

pub fn monomial(k: u32, l: u32) -> QPlanePoly {
    QPlanePoly::basis((k, l))
}

/// `u = q^λ` as a scalar.
pub fn u() -> Scalar {
    Scalar::monomial(Monomial::new(0, 1, 0))
}

/// `v = q^λ'` as a scalar.
pub fn v() -> Scalar {
    Scalar::monomial(Monomial::new(0, 0, 1))
}

/// Normal-ordered product: `x^a y^b · x^c y^d = q^{2bc} x^{a+c} y^{b+d}`.
pub fn qp_mul(p: &QPlanePoly, r: &QPlanePoly) -> QPlanePoly {
    let mut out = QPlanePoly::zero();
    for (&(a, b), c1) in p.iter() {
        for (&(c, d), c2) in r.iter() {
            let swap = Monomial::q(2 * (b * c) as i32);
            out.add_term((a + c, b + d), (c1 * c2).mul_monomial(swap));
        }
    }
    out
}

/// `(x + c·y)^n = Σ_k [n k] q^{k(n-k)} c^{n-k} x^k y^{n-k}`.
pub fn qp_pow_linear(c: &Scalar, n: u32) -> QPlanePoly {
    let n_i = n as i64;
    QPlanePoly::from_terms((0..=n).map(|k| {
        let ki = k as i64;
        let coef = (&qbinom(n_i, ki) * &c.pow((n - k) as i32)).mul_monomial(Monomial::q((ki * (n_i - ki)) as i32));
        ((k, n - k), coef)
    }))
}

/// `x + q^λ y`, the image of `z` under evaluation; `Δ(E)` is left multiplication by it.
pub fn x_plus_uy() -> QPlanePoly {
    qp_pow_linear(&u(), 1)
}

/// Iterated [`qp_mul`].
pub fn qp_pow(p: &QPlanePoly, n: u32) -> QPlanePoly {
    let mut acc = monomial(0, 0);
    for _ in 0..n {
        acc = qp_mul(&acc, p);
    }
    acc
}

/// True when every term has total degree `d`.
pub fn is_homogeneous(p: &QPlanePoly, d: u32) -> bool {
    p.keys().all(|&(k, l)| k + l == d)
}
