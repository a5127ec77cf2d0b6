use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

/// A Laurent monomial `q^e_q u^e_u v^e_v`, where `u` stands for `q^λ` and
/// `v` for `q^λ'`.
///
/// The derived ordering is lexicographic on `(e_q, e_u, e_v)`; it is the
/// monomial order used for every canonical form in this crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub e_q: i32,
    pub e_u: i32,
    pub e_v: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e_q: 0, e_u: 0, e_v: 0 };

    pub const fn new(e_q: i32, e_u: i32, e_v: i32) -> Self {
        Monomial { e_q, e_u, e_v }
    }

    pub const fn q(e: i32) -> Self {
        Monomial::new(e, 0, 0)
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    pub fn pow(self, n: i32) -> Self {
        Monomial::new(self.e_q * n, self.e_u * n, self.e_v * n)
    }

    pub fn exps(&self) -> [i32; 3] {
        [self.e_q, self.e_u, self.e_v]
    }

    pub fn from_exps(e: [i32; 3]) -> Self {
        Monomial::new(e[0], e[1], e[2])
    }

    /// Componentwise minimum.
    pub fn meet(self, other: Self) -> Self {
        Monomial::new(self.e_q.min(other.e_q), self.e_u.min(other.e_u), self.e_v.min(other.e_v))
    }

    /// Componentwise maximum.
    pub fn join(self, other: Self) -> Self {
        Monomial::new(self.e_q.max(other.e_q), self.e_u.max(other.e_u), self.e_v.max(other.e_v))
    }

    /// True when every exponent of `self` is at least the matching one of `other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.e_q >= other.e_q && self.e_u >= other.e_u && self.e_v >= other.e_v
    }

    pub fn div(self, other: Self) -> Self {
        self * other.inv()
    }

    pub fn inv(self) -> Self {
        -self
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.e_q + rhs.e_q, self.e_u + rhs.e_u, self.e_v + rhs.e_v)
    }
}

/// Negation of the exponent vector, i.e. the multiplicative inverse.
impl Neg for Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial::new(-self.e_q, -self.e_u, -self.e_v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in [("q", self.e_q), ("u", self.e_u), ("v", self.e_v)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else if e < 0 {
                write!(f, "{name}^({e})")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_on_q_then_u_then_v() {
        assert!(Monomial::new(1, -5, -5) > Monomial::new(0, 9, 9));
        assert!(Monomial::new(0, 1, -5) > Monomial::new(0, 0, 9));
        assert!(Monomial::new(0, 0, 1) > Monomial::ONE);
    }

    #[test]
    fn inverse_and_product() {
        let m = Monomial::new(2, -1, 3);
        assert!((m * m.inv()).is_one());
        assert_eq!(m.pow(2), Monomial::new(4, -2, 6));
        assert_eq!(m.to_string(), "q^2*u^(-1)*v^3");
    }
}
