//! The generator actions of `U_q(sl_2)` on each realization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::{qnum, qpow, Scalar, WeightExpr};
use crate::plane::{Basis, OnePoly, PlaneBasis, Poly, QPlanePoly, TXPoly, TxBasis, XPoly, ZBasis};
use crate::special::theta_apply;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    K,
    KInv,
    E,
    F,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::K, Generator::KInv, Generator::E, Generator::F];
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Generator::K => "K",
            Generator::KInv => "K^-1",
            Generator::E => "E",
            Generator::F => "F",
        };
        f.write_str(s)
    }
}

/// A representation of `U_q(sl_2)` on some polynomial space.
pub trait Action {
    type B: Basis;

    fn act(&self, g: Generator, p: &Poly<Self::B>) -> Poly<Self::B>;

    /// A word applied right to left: `word = [g1, g2]` means `g1·g2·p`.
    fn act_word(&self, word: &[Generator], p: &Poly<Self::B>) -> Poly<Self::B> {
        word.iter().rev().fold(p.clone(), |acc, &g| self.act(g, &acc))
    }

    /// The image of `S(g)` (antipode): `S(K) = K⁻¹`, `S(E) = -K⁻¹E`, `S(F) = -FK`.
    fn act_antipode(&self, g: Generator, p: &Poly<Self::B>) -> Poly<Self::B> {
        let minus = Scalar::from_int(-1);
        match g {
            Generator::K => self.act(Generator::KInv, p),
            Generator::KInv => self.act(Generator::K, p),
            Generator::E => self.act_word(&[Generator::KInv, Generator::E], p).scale(&minus),
            Generator::F => self.act_word(&[Generator::F, Generator::K], p).scale(&minus),
        }
    }

    /// `C = (q - q⁻¹)² FE + qK + q⁻¹K⁻¹`.
    fn casimir(&self, p: &Poly<Self::B>) -> Poly<Self::B> {
        let qq = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
        let fe = self.act_word(&[Generator::F, Generator::E], p).scale(&(&qq * &qq));
        let k = self.act(Generator::K, p).scale(&Scalar::q_pow(1));
        let kinv = self.act(Generator::KInv, p).scale(&Scalar::q_pow(-1));
        fe.add(&k).add(&kinv)
    }
}

/// Lowest-weight Verma module of weight `w` on `C[z]`.
#[derive(Clone, Copy, Debug)]
pub struct Verma(pub WeightExpr);

pub fn verma_act(g: Generator, p: &OnePoly, w: WeightExpr) -> OnePoly {
    p.map_linear(|n| {
        let ni = n as i32;
        match g {
            Generator::K => OnePoly::term(n, qpow(w.shift(2 * ni))),
            Generator::KInv => OnePoly::term(n, qpow(-w.shift(2 * ni))),
            Generator::E => OnePoly::basis(n + 1),
            Generator::F if n == 0 => OnePoly::zero(),
            Generator::F => OnePoly::term(n - 1, -(&qnum(w.shift(ni - 1)) * &qnum(WeightExpr::int(ni)))),
        }
    })
}

impl Action for Verma {
    type B = ZBasis;
    fn act(&self, g: Generator, p: &OnePoly) -> OnePoly {
        verma_act(g, p, self.0)
    }
}

/// `q^{w-1} + q^{1-w}`, the Casimir eigenvalue on the Verma module of weight `w`.
pub fn casimir_eigenvalue(w: WeightExpr) -> Scalar {
    &qpow(w.shift(-1)) + &qpow(-w.shift(-1))
}

/// Contragredient module of `V_w` on `C[z]`, identified through the Fischer product.
#[derive(Clone, Copy, Debug)]
pub struct Contragredient(pub WeightExpr);

pub fn contragredient_act(g: Generator, p: &OnePoly, w: WeightExpr) -> OnePoly {
    p.map_linear(|n| {
        let ni = n as i32;
        match g {
            Generator::K => OnePoly::term(n, qpow(-w.shift(2 * ni))),
            Generator::KInv => OnePoly::term(n, qpow(w.shift(2 * ni))),
            Generator::E if n == 0 => OnePoly::zero(),
            Generator::E => OnePoly::term(n - 1, -(&qnum(WeightExpr::int(ni)) * &qpow(-w.shift(ni + 1)))),
            Generator::F => OnePoly::term(n + 1, &qnum(w.shift(ni)) * &qpow(w.shift(ni + 2))),
        }
    })
}

impl Action for Contragredient {
    type B = ZBasis;
    fn act(&self, g: Generator, p: &OnePoly) -> OnePoly {
        contragredient_act(g, p, self.0)
    }
}

/// `V_λ ⊗ V_λ'` on the quantum plane, through the coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct Tensor;

pub fn tensor_act(g: Generator, p: &QPlanePoly) -> QPlanePoly {
    p.map_linear(|(k, l)| {
        let (ki, li) = (k as i32, l as i32);
        let weight = WeightExpr::SUM.shift(2 * (ki + li));
        match g {
            Generator::K => QPlanePoly::term((k, l), qpow(weight)),
            Generator::KInv => QPlanePoly::term((k, l), qpow(-weight)),
            Generator::E => QPlanePoly::from_terms([
                ((k + 1, l), Scalar::one()),
                ((k, l + 1), qpow(WeightExpr::LAMBDA.shift(2 * ki))),
            ]),
            Generator::F => {
                let mut out = QPlanePoly::zero();
                if k > 0 {
                    let c = &(&qnum(WeightExpr::LAMBDA.shift(ki - 1)) * &qnum(WeightExpr::int(ki)))
                        * &qpow(-WeightExpr::LAMBDA_PRIME.shift(2 * li));
                    out.add_term((k - 1, l), -c);
                }
                if l > 0 {
                    let c = &qnum(WeightExpr::LAMBDA_PRIME.shift(li - 1)) * &qnum(WeightExpr::int(li));
                    out.add_term((k, l - 1), -c);
                }
                out
            }
        }
    })
}

impl Action for Tensor {
    type B = PlaneBasis;
    fn act(&self, g: Generator, p: &QPlanePoly) -> QPlanePoly {
        tensor_act(g, p)
    }
}

/// `V_λ ⊗ V_λ'` on `C[t, tX]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct TxAction;

/// Splits `P` into its `t^i` slices `f_i(X)`.
fn t_slices(p: &TXPoly) -> Vec<(u32, XPoly)> {
    let mut out: Vec<(u32, XPoly)> = Vec::new();
    for (&(i, j), c) in p.iter() {
        match out.last_mut() {
            Some((last, f)) if *last == i => f.add_term(j, c.clone()),
            _ => out.push((i, XPoly::term(j, c.clone()))),
        }
    }
    out
}

pub fn tx_act(g: Generator, p: &TXPoly) -> TXPoly {
    match g {
        Generator::K | Generator::KInv => {
            let sign = if g == Generator::K { 1 } else { -1 };
            TXPoly::from_terms(
                p.iter().map(|(&(i, j), c)| ((i, j), c * &qpow(WeightExpr::SUM.shift(2 * i as i32).times(sign)))),
            )
        }
        Generator::E => crate::plane::t_mul(p),
        Generator::F => {
            // t^i f(X) ↦ t^{i-1} (Θ f - [λ+λ'+i-1][i] f)
            let mut out = TXPoly::zero();
            for (i, f) in t_slices(p) {
                let ii = i as i32;
                let diag = &qnum(WeightExpr::SUM.shift(ii - 1)) * &qnum(WeightExpr::int(ii));
                let g = theta_apply(&f).sub(&f.scale(&diag));
                if i == 0 {
                    assert!(g.is_zero(), "F does not kill the t-free part");
                    continue;
                }
                for (&j, c) in g.iter() {
                    out.add_term((i - 1, j), c.clone());
                }
            }
            out
        }
    }
}

impl Action for TxAction {
    type B = TxBasis;
    fn act(&self, g: Generator, p: &TXPoly) -> TXPoly {
        tx_act(g, p)
    }
}

/// `Δ(C) = (q - q⁻¹)² Θ_X + q^{λ+λ'-1} + q^{1-λ-λ'}` on `C[t, tX]`.
pub fn casimir_tensor_tx(p: &TXPoly) -> TXPoly {
    let qq = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
    let qq2 = &qq * &qq;
    let shift = casimir_eigenvalue(WeightExpr::SUM);
    let mut out = p.scale(&shift);
    for (i, f) in t_slices(p) {
        for (&j, c) in theta_apply(&f).iter() {
            out.add_term((i, j), c * &qq2);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::{phi, phi_inv, qp_mul, x_plus_uy};

    #[test]
    fn verma_examples() {
        let l = WeightExpr::LAMBDA;
        assert!(verma_act(Generator::F, &OnePoly::one(), l).is_zero());
        assert_eq!(verma_act(Generator::F, &OnePoly::var(), l), OnePoly::constant(-qnum(l)));
        for n in 0..6 {
            let z = OnePoly::basis(n);
            assert_eq!(Verma(l).casimir(&z), z.scale(&casimir_eigenvalue(l)));
        }
    }

    #[test]
    fn contragredient_examples() {
        let l = WeightExpr::LAMBDA;
        assert!(contragredient_act(Generator::E, &OnePoly::one(), l).is_zero());
        let f1 = contragredient_act(Generator::F, &OnePoly::one(), l);
        assert_eq!(f1, OnePoly::term(1, &qnum(l) * &qpow(l.shift(2))));
    }

    #[test]
    fn tensor_examples() {
        assert!(tensor_act(Generator::F, &QPlanePoly::basis((0, 0))).is_zero());
        for (k, l) in [(0, 0), (2, 1), (1, 3)] {
            let m = QPlanePoly::basis((k, l));
            assert_eq!(tensor_act(Generator::E, &m), qp_mul(&x_plus_uy(), &m));
        }
    }

    #[test]
    fn tx_matches_conjugated_tensor_action() {
        for i in 0..4 {
            for j in 0..=i {
                let p = TXPoly::basis((i, j));
                for g in Generator::ALL {
                    assert_eq!(tx_act(g, &p), phi_inv(&tensor_act(g, &phi(&p))), "{g} on t^{i} X^{j}");
                }
                assert_eq!(casimir_tensor_tx(&p), TxAction.casimir(&p));
            }
        }
    }
}
