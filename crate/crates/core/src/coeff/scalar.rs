use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use crate::error::Error;

/// A primitive non-unit polynomial used as a factor of a [`Scalar`].
///
/// Always stored in the normal form produced by
/// [`LaurentPoly::primitive_split`], so proportional polynomials are the
/// same factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor(Arc<LaurentPoly>);

impl Factor {
    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    /// Splits `p` into a unit part and (unless `p` is a unit) a factor.
    fn split(p: &LaurentPoly) -> (LaurentPoly, Option<Factor>) {
        let (c, m, prim) = p.primitive_split().expect("factor of zero");
        let unit = LaurentPoly::term(m, c);
        if prim.is_one() {
            (unit, None)
        } else {
            (unit, Some(Factor(Arc::new(prim))))
        }
    }
}

/// Exact element of `Q(q, u, v)`.
///
/// The value is `poly · Π f^e` over the stored factors. Negative exponents
/// play the role of the denominator; positive exponents keep products of
/// q-numbers unexpanded until a sum forces it. Monomials and rational
/// constants are units of the Laurent ring and always live in `poly`.
///
/// Equality is decided exactly by testing the difference for zero.
#[derive(Clone, Debug, Default)]
pub struct Scalar {
    poly: LaurentPoly,
    factors: Vec<(Factor, i32)>,
}

fn merge_exponents(a: &[(Factor, i32)], b: &[(Factor, i32)], sign: i32) -> Vec<(Factor, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0.clone(), sign * b[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let e = a[i].1 + sign * b[j].1;
                if e != 0 {
                    out.push((a[i].0.clone(), e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn insert_exponent(factors: &mut Vec<(Factor, i32)>, f: Factor, e: i32) {
    if e == 0 {
        return;
    }
    match factors.binary_search_by(|(g, _)| g.cmp(&f)) {
        Ok(idx) => {
            factors[idx].1 += e;
            if factors[idx].1 == 0 {
                factors.remove(idx);
            }
        }
        Err(idx) => factors.insert(idx, (f, e)),
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(poly: LaurentPoly) -> Self {
        Scalar { poly, factors: Vec::new() }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Monomial::q(e))
    }

    /// Builds `num / den`; `None` when `den` is zero.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(&Self::from_poly(num) / &Self::from_poly(den))
    }

    /// Builds `unit · Π p^e`, splitting every `p` into unit part and factor.
    pub fn from_factored(unit: LaurentPoly, parts: &[(LaurentPoly, i32)]) -> Self {
        let mut s = Scalar::from_poly(unit);
        if s.is_zero() {
            return s;
        }
        for (p, e) in parts {
            assert!(!p.is_zero(), "zero factor");
            s.absorb(p, *e);
        }
        s.reduce_pairs()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty() && self.poly.is_one()
    }

    /// The unexpanded polynomial part.
    pub fn poly_part(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn factors(&self) -> &[(Factor, i32)] {
        &self.factors
    }

    /// Number of stored terms, a rough size measure used for pivoting.
    pub fn weight(&self) -> usize {
        self.poly.len() + self.factors.iter().map(|(f, e)| f.poly().len() * e.unsigned_abs() as usize).sum::<usize>()
    }

    /// Expanded numerator (polynomial part times positive factors).
    pub fn numerator(&self) -> LaurentPoly {
        let mut acc = self.poly.clone();
        for (f, e) in &self.factors {
            if *e > 0 {
                acc = &acc * &f.poly().pow(*e as u32);
            }
        }
        acc
    }

    /// Expanded denominator: product of the negative-exponent factors.
    ///
    /// Has a positive leading coefficient under the lexicographic
    /// `(e_q, e_u, e_v)` order.
    pub fn denominator(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (f, e) in &self.factors {
            if *e < 0 {
                acc = &acc * &f.poly().pow(e.unsigned_abs());
            }
        }
        acc
    }

    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut factors: Vec<(Factor, i32)> = self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect();
        let (unit, f) = Factor::split(&self.poly);
        if let Some(f) = f {
            insert_exponent(&mut factors, f, -1);
        }
        let (m, c) = unit.as_unit().expect("unit");
        let poly = LaurentPoly::term(m.inv(), c.recip());
        Some(Scalar { poly, factors }.reduce_pairs())
    }

    pub fn inv(&self) -> Self {
        self.checked_inv().expect("division by the zero scalar")
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Scalar { poly: self.poly.mul_monomial(m), factors: self.factors.clone() }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let c = BigRational::from_integer(BigInt::from(n));
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { poly: self.poly.scale(&c), factors: self.factors.clone() }
    }

    /// Divides the polynomial part by negative-exponent factors where possible.
    fn cancel_poly(mut self) -> Self {
        if self.poly.is_zero() {
            self.factors.clear();
            return self;
        }
        if self.poly.as_unit().is_some() {
            return self;
        }
        let mut idx = 0;
        while idx < self.factors.len() {
            if self.factors[idx].1 < 0 {
                while self.factors[idx].1 < 0 {
                    match self.poly.exact_div(self.factors[idx].0.poly()) {
                        Some(q) => {
                            self.poly = q;
                            self.factors[idx].1 += 1;
                        }
                        None => break,
                    }
                }
                if self.poly.as_unit().is_some() {
                    break;
                }
            }
            idx += 1;
        }
        self.factors.retain(|(_, e)| *e != 0);
        self
    }

    /// Cancels positive factors against negative ones when one divides the other.
    fn reduce_pairs(mut self) -> Self {
        loop {
            let mut changed = false;
            'outer: for i in 0..self.factors.len() {
                for j in 0..self.factors.len() {
                    let (ei, ej) = (self.factors[i].1, self.factors[j].1);
                    if i == j || ei <= 0 || ej >= 0 {
                        continue;
                    }
                    let (pos, neg) = (self.factors[i].0.clone(), self.factors[j].0.clone());
                    // pos = neg · h
                    if let Some(h) = divide_factor(&pos, &neg) {
                        self.factors[i].1 = 0;
                        self.factors[j].1 += ei;
                        self.absorb(&h, ei);
                        changed = true;
                        break 'outer;
                    }
                    // neg = pos · h
                    if let Some(h) = divide_factor(&neg, &pos) {
                        self.factors[j].1 = 0;
                        self.factors[i].1 += ej;
                        self.absorb(&h, ej);
                        changed = true;
                        break 'outer;
                    }
                }
            }
            self.factors.retain(|(_, e)| *e != 0);
            if !changed {
                return self;
            }
        }
    }

    /// Multiplies in `h^e` for a polynomial `h`.
    fn absorb(&mut self, h: &LaurentPoly, e: i32) {
        let (unit, f) = Factor::split(h);
        let (m, c) = unit.as_unit().expect("unit");
        let cu = if e < 0 { c.recip() } else { c.clone() };
        let cu = num_traits::pow(cu, e.unsigned_abs() as usize);
        self.poly = self.poly.scale(&cu).mul_monomial(m.pow(e));
        if let Some(f) = f {
            insert_exponent(&mut self.factors, f, e);
        }
    }

    fn expand_excess(factors: &[(Factor, i32)], common: &[(Factor, i32)]) -> LaurentPoly {
        // factors ≥ common exponentwise, absent ones count as 0; returns Π f^(e - e_common)
        let mut acc = LaurentPoly::one();
        let mut mul = |f: &Factor, d: i32| {
            if d > 0 {
                acc = &acc * &f.poly().pow(d as u32);
            }
        };
        let (mut i, mut j) = (0, 0);
        while i < factors.len() || j < common.len() {
            match (factors.get(i), common.get(j)) {
                (Some(a), Some(c)) if a.0 == c.0 => {
                    mul(&a.0, a.1 - c.1);
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(c)) if a.0 < c.0 => {
                    mul(&a.0, a.1);
                    i += 1;
                }
                (Some(a), None) => {
                    mul(&a.0, a.1);
                    i += 1;
                }
                (_, Some(c)) => {
                    mul(&c.0, -c.1);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        acc
    }

    fn add_impl(&self, other: &Scalar, negate: bool) -> Scalar {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        // common part: exponentwise minimum, absent factors count as 0
        let mut common = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            let (f, e) = match ord {
                Ordering::Less => {
                    i += 1;
                    (a[i - 1].0.clone(), a[i - 1].1.min(0))
                }
                Ordering::Greater => {
                    j += 1;
                    (b[j - 1].0.clone(), b[j - 1].1.min(0))
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (a[i - 1].0.clone(), a[i - 1].1.min(b[j - 1].1))
                }
            };
            if e != 0 {
                common.push((f, e));
            }
        }
        let pa = &self.poly * &Self::expand_excess(a, &common);
        let pb = &other.poly * &Self::expand_excess(b, &common);
        let poly = if negate { &pa - &pb } else { &pa + &pb };
        Scalar { poly, factors: common }.cancel_poly()
    }

    /// Exact value at a point; fails when a denominator factor vanishes.
    pub fn eval(&self, q: &BigRational, u: &BigRational, v: &BigRational) -> Result<BigRational, Error> {
        if q.is_zero() || u.is_zero() || v.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        let mut acc = self.poly.eval(q, u, v);
        for (f, e) in &self.factors {
            let val = f.poly().eval(q, u, v);
            if val.is_zero() {
                if *e < 0 {
                    return Err(Error::DenominatorVanishes);
                }
                acc = BigRational::zero();
                continue;
            }
            acc *= num_traits::pow(if *e < 0 { val.recip() } else { val }, e.unsigned_abs() as usize);
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, q: f64, u: f64, v: f64) -> f64 {
        let mut acc = self.poly.eval_f64(q, u, v);
        for (f, e) in &self.factors {
            acc *= f.poly().eval_f64(q, u, v).powi(*e);
        }
        acc
    }

    /// Rational constant value, when the scalar is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if !self.factors.is_empty() {
            let num = self.numerator();
            let den = self.denominator();
            let q = num.exact_div(&den)?;
            return match q.as_unit() {
                Some((m, c)) if m.is_one() => Some(c.clone()),
                _ => None,
            };
        }
        match self.poly.as_unit() {
            Some((m, c)) if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }
}

/// `a / b` for factors, when exact and the cheap degree test allows it.
fn divide_factor(a: &Factor, b: &Factor) -> Option<LaurentPoly> {
    let (pa, pb) = (a.poly(), b.poly());
    if pa.len() < 2 || pb.len() > pa.len() * 4 {
        return None;
    }
    if !pa.high_corner().dominates(&pb.high_corner()) {
        return None;
    }
    pa.exact_div(pb)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.factors == other.factors {
            return self.poly == other.poly;
        }
        (self - other).is_zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Monomial> for Scalar {
    fn from(m: Monomial) -> Self {
        Scalar::monomial(m)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_impl(rhs, false)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.add_impl(rhs, true)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if rhs.factors.is_empty() && rhs.poly.as_unit().is_some() {
            return Scalar { poly: &self.poly * &rhs.poly, factors: self.factors.clone() };
        }
        if self.factors.is_empty() && self.poly.as_unit().is_some() {
            return Scalar { poly: &self.poly * &rhs.poly, factors: rhs.factors.clone() };
        }
        let poly = &self.poly * &rhs.poly;
        let factors = merge_exponents(&self.factors, &rhs.factors, 1);
        let mixed_signs = factors.iter().any(|(_, e)| *e > 0) && factors.iter().any(|(_, e)| *e < 0);
        let s = Scalar { poly, factors }.cancel_poly();
        if mixed_signs {
            s.reduce_pairs()
        } else {
            s
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { poly: -&self.poly, factors: self.factors.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        let den = self.denominator();
        let wrap = |p: &LaurentPoly| if p.len() > 1 { format!("({p})") } else { p.to_string() };
        if den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "{}/{}", wrap(&num), wrap(&den))
        }
    }
}

/// LaTeX rendering of a Scalar as `\frac{num}{den}`.
pub fn latex(s: &Scalar) -> String {
    fn poly_tex(p: &LaurentPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in p.terms().iter().rev().enumerate() {
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = String::new();
            for (name, e) in [("q", m.e_q), ("u", m.e_u), ("v", m.e_v)] {
                match e {
                    0 => {}
                    1 => mono.push_str(name),
                    _ => mono.push_str(&format!("{name}^{{{e}}}")),
                }
            }
            let coef = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("\\tfrac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            if mono.is_empty() {
                out.push_str(&coef);
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&coef);
                out.push_str(&mono);
            }
        }
        out
    }
    let den = s.denominator();
    if den.is_one() {
        poly_tex(&s.numerator())
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_tex(&s.numerator()), poly_tex(&den))
    }
}

type JsonTerm = (i32, i32, i32, String);

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    num: Vec<JsonTerm>,
    den: Vec<JsonTerm>,
}

fn poly_to_json(p: &LaurentPoly) -> Vec<JsonTerm> {
    p.terms().iter().map(|(m, c)| (m.e_q, m.e_u, m.e_v, c.to_string())).collect()
}

fn poly_from_json(terms: &[JsonTerm]) -> Result<LaurentPoly, String> {
    let mut out = Vec::with_capacity(terms.len());
    for (a, b, c, s) in terms {
        let r: BigRational = s.parse().map_err(|e| format!("bad rational {s:?}: {e:?}"))?;
        out.push((Monomial::new(*a, *b, *c), r));
    }
    Ok(LaurentPoly::from_terms(out))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarJson { num: poly_to_json(&self.numerator()), den: poly_to_json(&self.denominator()) }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ScalarJson::deserialize(deserializer)?;
        let num = poly_from_json(&raw.num).map_err(D::Error::custom)?;
        let den = poly_from_json(&raw.den).map_err(D::Error::custom)?;
        Scalar::from_fraction(num, den).ok_or_else(|| D::Error::custom("zero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    fn u() -> Scalar {
        Scalar::monomial(Monomial::new(0, 1, 0))
    }

    #[test]
    fn zero_and_one() {
        assert!(Scalar::zero().is_zero());
        assert!(Scalar::one().is_one());
        assert_eq!(&Scalar::one() - &Scalar::one(), Scalar::zero());
    }

    #[test]
    fn fraction_cancels() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = &(&q() * &q()) - &Scalar::one();
        let den = &q() - &Scalar::one();
        let r = &num / &den;
        assert_eq!(r, &q() + &Scalar::one());
        assert!(r.factors().is_empty(), "{r:?}");
    }

    #[test]
    fn inverse_roundtrip() {
        let a = &(&u() * &q()) - &Scalar::from_int(3);
        let b = &a.inv() * &a;
        assert!(b.is_one(), "{b:?}");
    }

    #[test]
    fn positive_factor_divided_by_negative_factor() {
        // (q^4 - 1) / (q^2 - 1) through factor cancellation
        let q2m1 = &q().pow(2) - &Scalar::one();
        let q4m1 = &q().pow(4) - &Scalar::one();
        let x = &q4m1.inv().inv() * &q2m1.inv();
        assert_eq!(x, &q().pow(2) + &Scalar::one());
    }

    #[test]
    fn json_shape() {
        let s = &Scalar::one() / &(&q() - &q().inv());
        let j = serde_json::to_value(&s).unwrap();
        assert!(j["num"].is_array() && j["den"].is_array());
        let back: Scalar = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn denominator_has_positive_leading_coefficient() {
        let s = &Scalar::one() / &(&Scalar::one() - &q());
        let den = s.denominator();
        assert!(den.leading().unwrap().1 > BigRational::zero());
        assert_eq!(&Scalar::from_poly(s.numerator()) / &Scalar::from_poly(den), s);
    }
}
