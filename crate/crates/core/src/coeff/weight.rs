use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

/// Affine weight `a·λ + b·λ' + c` with integer coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightExpr {
    pub a: i32,
    pub b: i32,
    pub c: i32,
}

impl WeightExpr {
    pub const fn new(a: i32, b: i32, c: i32) -> Self {
        WeightExpr { a, b, c }
    }

    pub const fn int(c: i32) -> Self {
        WeightExpr::new(0, 0, c)
    }

    /// λ
    pub const LAMBDA: WeightExpr = WeightExpr::new(1, 0, 0);
    /// λ'
    pub const LAMBDA_PRIME: WeightExpr = WeightExpr::new(0, 1, 0);
    /// λ + λ'
    pub const SUM: WeightExpr = WeightExpr::new(1, 1, 0);

    pub fn is_integer(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn shift(self, c: i32) -> Self {
        WeightExpr::new(self.a, self.b, self.c + c)
    }

    pub fn times(self, n: i32) -> Self {
        WeightExpr::new(self.a * n, self.b * n, self.c * n)
    }

    /// The monomial `q^w = u^a v^b q^c`.
    pub fn q_power(self) -> Monomial {
        Monomial::new(self.c, self.a, self.b)
    }
}

impl Add for WeightExpr {
    type Output = WeightExpr;
    fn add(self, o: WeightExpr) -> WeightExpr {
        WeightExpr::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Neg for WeightExpr {
    type Output = WeightExpr;
    fn neg(self) -> WeightExpr {
        WeightExpr::new(-self.a, -self.b, -self.c)
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, name) in [(self.a, "λ"), (self.b, "λ'")] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                -1 => parts.push(format!("-{name}")),
                _ => parts.push(format!("{k}{name}")),
            }
        }
        if self.c != 0 || parts.is_empty() {
            parts.push(self.c.to_string());
        }
        write!(f, "{}", parts.join("+").replace("+-", "-"))
    }
}
