//! The linear isomorphism `φ : C[t, tX] → C_q[x, y]` and its inverse.

use crate::coeff::{Monomial, Scalar};

use super::poly::{QPlanePoly, TXPoly, XPoly};
use super::qplane::{monomial, qp_mul, qp_pow_linear, u};

/// `φ(t^{n+m} X^m) = (x + q^λ y)^n x^m`, extended linearly.
pub fn phi(p: &TXPoly) -> QPlanePoly {
    p.map_linear(|(i, j)| phi_basis(i, j))
}

pub fn phi_basis(i: u32, j: u32) -> QPlanePoly {
    debug_assert!(j <= i);
    qp_mul(&qp_pow_linear(&u(), i - j), &monomial(j, 0))
}

/// `Π_{s=0}^{p-1} (1 - q^{-2s} X)`.
pub fn descending_product(p: u32) -> XPoly {
    XPoly::linear_product((0..p as i32).map(|s| Scalar::q_pow(-2 * s)))
}

/// `φ^{-1}(x^k y^p) = q^{-p(λ+2k)} t^{k+p} Π_{s<p}(1 - q^{-2s}X) X^k`.
pub fn phi_inv_basis(k: u32, p: u32) -> TXPoly {
    let pref = Monomial::new(-2 * (p * k) as i32, -(p as i32), 0);
    let prod = descending_product(p);
    TXPoly::from_terms(prod.iter().map(|(&j, c)| ((k + p, j + k), c.mul_monomial(pref))))
}

pub fn phi_inv(p: &QPlanePoly) -> TXPoly {
    p.map_linear(|(k, l)| phi_inv_basis(k, l))
}

/// Multiplication by `t`.
pub fn t_mul(p: &TXPoly) -> TXPoly {
    TXPoly::from_terms(p.iter().map(|(&(i, j), c)| ((i + 1, j), c.clone())))
}

/// Embeds `t^s · f(X)`; requires `deg f <= s`.
pub fn t_times_x(s: u32, f: &XPoly) -> TXPoly {
    TXPoly::from_terms(f.iter().map(|(&j, c)| ((s, j), c.clone())))
}

/// The X-part of a polynomial homogeneous in `t` of degree `s`.
pub fn x_part(p: &TXPoly, s: u32) -> Option<XPoly> {
    if p.keys().any(|&(i, _)| i != s) {
        return None;
    }
    Some(XPoly::from_terms(p.iter().map(|(&(_, j), c)| (j, c.clone()))))
}

/// `φ⁻¹ ∘ φ = id` and `φ ∘ φ⁻¹ = id` on every monomial of degree `<= d`.
pub fn phi_bijection_check(d: u32, v: &crate::verify::Verifier) -> crate::verify::Report {
    let mut c = v.check("phi-bijection", serde_json::json!({ "max_degree": d }));
    'outer: for s in 0..=d {
        for k in 0..=s {
            let m = monomial(k, s - k);
            let back = phi_inv(&m);
            let t = TXPoly::basis((s, k));
            if !c.poly(format!("x^{k} y^{}", s - k), &phi(&back), &m)
                || !c.poly(format!("t^{s} X^{k}"), &phi_inv(&phi(&t)), &t)
                || !c.holds(format!("phi^-1(x^{k} y^{}) in C[t, tX]", s - k), back.keys().all(|&(i, j)| j <= i))
            {
                break 'outer;
            }
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::qplane::{x_plus_uy, y};

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&TXPoly::basis((0, 0))), monomial(0, 0));
        assert_eq!(phi(&TXPoly::basis((1, 0))), x_plus_uy());
        // t^2 X = t·(tX) ↦ (x + u y) x = x^2 + u q^2 x y
        let expect = QPlanePoly::from_terms([((2, 0), Scalar::one()), ((1, 1), u().mul_monomial(Monomial::q(2)))]);
        assert_eq!(phi(&TXPoly::basis((2, 1))), expect);
    }

    #[test]
    fn phi_inv_examples() {
        assert_eq!(phi_inv(&monomial(1, 0)), TXPoly::basis((1, 1)));
        let uinv = u().inv();
        let expect = TXPoly::from_terms([((1, 0), uinv.clone()), ((1, 1), -uinv)]);
        assert_eq!(phi_inv(&y()), expect);
    }

    #[test]
    fn bijection_on_low_degrees() {
        for d in 0..=5u32 {
            for k in 0..=d {
                let m = monomial(k, d - k);
                assert_eq!(phi(&phi_inv(&m)), m);
                let t = TXPoly::basis((d, k));
                assert_eq!(phi_inv(&phi(&t)), t);
            }
        }
    }
}
