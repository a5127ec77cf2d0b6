use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::hash::Hash;
use std::marker::PhantomData;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::coeff::{scalar_latex, Scalar};

/// Label of a basis monomial in any of the polynomial spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BasisLabel {
    /// `z^n` in the one-variable Verma realization.
    Z(u32),
    /// `X^j` in the little q-Jacobi variable.
    X(u32),
    /// `x^k y^l` in the quantum plane.
    XY(u32, u32),
    /// `t^i X^j` in `C[t, tX]`.
    TX(u32, u32),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisLabel::Z(n) => write!(f, "z^{n}"),
            BasisLabel::X(n) => write!(f, "X^{n}"),
            BasisLabel::XY(k, l) => write!(f, "x^{k} y^{l}"),
            BasisLabel::TX(i, j) => write!(f, "t^{i} X^{j}"),
        }
    }
}

impl BasisLabel {
    /// Total degree in the underlying variables (for `t^i X^j` this is `i`).
    pub fn degree(&self) -> u32 {
        match *self {
            BasisLabel::Z(n) | BasisLabel::X(n) => n,
            BasisLabel::XY(k, l) => k + l,
            BasisLabel::TX(i, _) => i,
        }
    }
}

/// Describes one family of monomials: key type, validity and rendering.
pub trait Basis: Clone + Debug + Default + Send + Sync + 'static {
    type Key: Copy + Ord + Hash + Debug + Send + Sync;

    fn label(key: Self::Key) -> BasisLabel;
    fn from_label(label: BasisLabel) -> Option<Self::Key>;
    fn is_valid(_key: Self::Key) -> bool {
        true
    }
    fn render(key: Self::Key) -> String;
    fn render_latex(key: Self::Key) -> String;
    fn key_json(key: Self::Key) -> Vec<u32>;
}

fn pow_str(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn pow_tex(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{{{e}}}"),
    }
}

macro_rules! univariate_basis {
    ($name:ident, $var:literal, $variant:ident) => {
        #[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
        pub struct $name;

        impl Basis for $name {
            type Key = u32;
            fn label(key: u32) -> BasisLabel {
                BasisLabel::$variant(key)
            }
            fn from_label(label: BasisLabel) -> Option<u32> {
                match label {
                    BasisLabel::$variant(n) => Some(n),
                    _ => None,
                }
            }
            fn render(key: u32) -> String {
                pow_str($var, key)
            }
            fn render_latex(key: u32) -> String {
                pow_tex($var, key)
            }
            fn key_json(key: u32) -> Vec<u32> {
                vec![key]
            }
        }
    };
}

univariate_basis!(ZBasis, "z", Z);
univariate_basis!(XBasis, "X", X);

/// Normal-ordered quantum-plane monomials `x^k y^l`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PlaneBasis;

impl Basis for PlaneBasis {
    type Key = (u32, u32);
    fn label((k, l): (u32, u32)) -> BasisLabel {
        BasisLabel::XY(k, l)
    }
    fn from_label(label: BasisLabel) -> Option<(u32, u32)> {
        match label {
            BasisLabel::XY(k, l) => Some((k, l)),
            _ => None,
        }
    }
    fn render((k, l): (u32, u32)) -> String {
        [pow_str("x", k), pow_str("y", l)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*")
    }
    fn render_latex((k, l): (u32, u32)) -> String {
        format!("{}{}", pow_tex("x", k), pow_tex("y", l))
    }
    fn key_json((k, l): (u32, u32)) -> Vec<u32> {
        vec![k, l]
    }
}

/// Monomials `t^i X^j` of `C[t, tX]`, i.e. with `j <= i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TxBasis;

impl Basis for TxBasis {
    type Key = (u32, u32);
    fn label((i, j): (u32, u32)) -> BasisLabel {
        BasisLabel::TX(i, j)
    }
    fn from_label(label: BasisLabel) -> Option<(u32, u32)> {
        match label {
            BasisLabel::TX(i, j) => Some((i, j)),
            _ => None,
        }
    }
    fn is_valid((i, j): (u32, u32)) -> bool {
        j <= i
    }
    fn render((i, j): (u32, u32)) -> String {
        [pow_str("t", i), pow_str("X", j)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*")
    }
    fn render_latex((i, j): (u32, u32)) -> String {
        format!("{}{}", pow_tex("t", i), pow_tex("X", j))
    }
    fn key_json((i, j): (u32, u32)) -> Vec<u32> {
        vec![i, j]
    }
}

/// Finite linear combination of basis monomials with [`Scalar`] coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal iff
/// they have the same support and equal coefficients.
#[derive(Clone, Debug, Default)]
pub struct Poly<B: Basis> {
    terms: BTreeMap<B::Key, Scalar>,
    _basis: PhantomData<B>,
}

pub type OnePoly = Poly<ZBasis>;
pub type XPoly = Poly<XBasis>;
pub type QPlanePoly = Poly<PlaneBasis>;
pub type TXPoly = Poly<TxBasis>;

impl<B: Basis> Poly<B> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new(), _basis: PhantomData }
    }

    pub fn term(key: B::Key, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(key, c);
        p
    }

    pub fn basis(key: B::Key) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (B::Key, Scalar)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Adds `c · key`.
    ///
    /// # Panics
    /// If `key` is not a valid monomial of this space.
    pub fn add_term(&mut self, key: B::Key, c: Scalar) {
        assert!(B::is_valid(key), "monomial {key:?} is outside the space");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn coeff(&self, key: B::Key) -> Scalar {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B::Key, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B::Key> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(), _basis: PhantomData }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    /// Applies a linear map given on basis monomials.
    pub fn map_linear<C: Basis, F: FnMut(B::Key) -> Poly<C>>(&self, mut f: F) -> Poly<C> {
        let mut out = Poly::<C>::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in f(*k).terms {
                out.add_term(k2, c * &c2);
            }
        }
        out
    }

    /// Fallible variant of [`Poly::map_linear`].
    pub fn try_map_linear<C: Basis, E, F: FnMut(B::Key) -> Result<Poly<C>, E>>(&self, mut f: F) -> Result<Poly<C>, E> {
        let mut out = Poly::<C>::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in f(*k)?.terms {
                out.add_term(k2, c * &c2);
            }
        }
        Ok(out)
    }

    /// Expansion over basis labels, in ascending key order.
    pub fn labeled_terms(&self) -> Vec<(BasisLabel, Scalar)> {
        self.terms.iter().map(|(k, c)| (B::label(*k), c.clone())).collect()
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mono = B::render_latex(*k);
                let coef = scalar_latex(c);
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("\\left({coef}\\right)"),
                    (false, true) => mono,
                    (false, false) => format!("\\left({coef}\\right){mono}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<B: Basis> PartialEq for Poly<B> {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self.terms.iter().zip(other.terms.iter()).all(|((k1, c1), (k2, c2))| k1 == k2 && c1 == c2)
    }
}

impl<B: Basis> fmt::Display for Poly<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mono = B::render(*k);
                if mono.is_empty() && c.as_rational().is_some() {
                    c.to_string()
                } else if mono.is_empty() {
                    format!("({c})")
                } else if c.is_one() {
                    mono
                } else if (-c).is_one() {
                    format!("-{mono}")
                } else if c.denominator().is_one() && c.numerator().len() == 1 {
                    format!("{c}*{mono}")
                } else {
                    format!("({c})*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// JSON: a list of `[key..., Scalar]` entries.
impl<B: Basis> Serialize for Poly<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Cell<'a> {
            Index(u32),
            Coeff(&'a Scalar),
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            let mut row: Vec<Cell<'_>> = B::key_json(*k).into_iter().map(Cell::Index).collect();
            row.push(Cell::Coeff(c));
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<B: Basis<Key = u32>> Poly<B> {
    /// The variable itself.
    pub fn var() -> Self {
        Self::basis(1)
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(0, c)
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Commutative product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    pub fn shift(&self, by: u32) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k + by, c.clone())))
    }

    /// `P(c·var)` for a scalar `c`: the degree-`m` coefficient gets `c^m`.
    pub fn dilate(&self, c: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * &c.pow(*k as i32))))
    }

    /// Reinterprets the coefficients in another one-variable basis.
    pub fn rename<C: Basis<Key = u32>>(&self) -> Poly<C> {
        Poly::<C>::from_terms(self.terms.iter().map(|(k, c)| (*k, c.clone())))
    }

    /// `Π_{s ∈ range} (1 - c_s·var)` expanded.
    pub fn linear_product<I: IntoIterator<Item = Scalar>>(roots: I) -> Self {
        let mut acc = Self::one();
        for c in roots {
            let lin = Self::from_terms([(0, Scalar::one()), (1, -c)]);
            acc = acc.mul(&lin);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = OnePoly::basis(3);
        p.add_term(3, Scalar::from_int(-1));
        assert!(p.is_zero());
        assert_eq!(p, OnePoly::zero());
    }

    #[test]
    #[should_panic(expected = "outside the space")]
    fn tx_rejects_j_above_i() {
        TXPoly::basis((1, 2));
    }

    #[test]
    fn json_layout() {
        let p = QPlanePoly::term((1, 2), Scalar::from_int(3));
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v[0][0], 1);
        assert_eq!(v[0][1], 2);
        assert!(v[0][2]["num"].is_array());
    }
}
