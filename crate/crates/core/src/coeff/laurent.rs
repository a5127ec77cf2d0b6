use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;

/// Sparse Laurent polynomial in `(q, u, v)` with rational coefficients.
///
/// Terms are kept sorted by ascending [`Monomial`] order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        LaurentPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Single-term polynomial, i.e. a unit of the Laurent ring.
    pub fn as_unit(&self) -> Option<(Monomial, &BigRational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c)),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.last()
    }

    /// Componentwise minimum exponent over the support.
    pub fn low_corner(&self) -> Monomial {
        self.terms.iter().map(|(m, _)| *m).reduce(Monomial::meet).unwrap_or_default()
    }

    /// Componentwise maximum exponent over the support.
    pub fn high_corner(&self) -> Monomial {
        self.terms.iter().map(|(m, _)| *m).reduce(Monomial::join).unwrap_or_default()
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(t, c)| (*t * m, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(t, d)| (*t, d * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Splits `self = c · m · p` where `p` has integer coefficients with
    /// unit content, a positive leading coefficient, and no monomial factor.
    ///
    /// Returns `None` for the zero polynomial.
    pub fn primitive_split(&self) -> Option<(BigRational, Monomial, LaurentPoly)> {
        let (_, lead) = self.leading()?;
        let shift = self.low_corner();
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        let prim = LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.div(shift), c * &inv)).collect() };
        Some((content, shift, prim))
    }

    /// Exact division in the Laurent ring. Returns `None` when `divisor`
    /// does not divide `self`.
    ///
    /// Both operands are shifted to honest polynomials without monomial
    /// factors; divisibility there is equivalent to divisibility in the
    /// Laurent ring, and lexicographic leading-term division decides it.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_shift = divisor.low_corner();
        let d = divisor.mul_monomial(d_shift.inv());
        let r_shift = self.low_corner();
        let r0 = self.mul_monomial(r_shift.inv());

        // cheap rejection: every degree of the divisor must fit in the dividend
        if !r0.high_corner().dominates(&d.high_corner()) {
            return None;
        }
        if let Some((m, c)) = d.as_unit() {
            let inv = c.recip();
            return Some(self.scale(&inv).mul_monomial(m.inv() * d_shift.inv()));
        }

        let (d_lm, d_lc) = d.leading().cloned().expect("nonzero divisor");
        let d_lc_inv = d_lc.recip();
        let mut rem: BTreeMap<Monomial, BigRational> = r0.terms.into_iter().collect();
        let mut quot: Vec<(Monomial, BigRational)> = Vec::new();
        while let Some((lm, lc)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if !lm.dominates(&d_lm) {
                return None;
            }
            let qm = lm.div(d_lm);
            let qc = &lc * &d_lc_inv;
            for (m, c) in &d.terms {
                let key = *m * qm;
                let sub = c * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= sub;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -sub);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        let q = LaurentPoly { terms: quot };
        Some(q.mul_monomial(r_shift * d_shift.inv()))
    }

    pub fn eval(&self, q: &BigRational, u: &BigRational, v: &BigRational) -> BigRational {
        let mut pows = PowCache::new([q.clone(), u.clone(), v.clone()]);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += c * pows.monomial(m);
        }
        acc
    }

    pub fn eval_f64(&self, q: f64, u: f64, v: f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let c = rational_to_f64(c);
                c * q.powi(m.e_q) * u.powi(m.e_u) * v.powi(m.e_v)
            })
            .sum()
    }
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or_else(|| {
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Memoized integer powers of the three evaluation values.
struct PowCache {
    base: [BigRational; 3],
    cache: [HashMap<i32, BigRational>; 3],
}

impl PowCache {
    fn new(base: [BigRational; 3]) -> Self {
        PowCache { base, cache: Default::default() }
    }

    fn pow(&mut self, var: usize, e: i32) -> BigRational {
        if e == 0 {
            return BigRational::one();
        }
        let base = &self.base[var];
        self.cache[var]
            .entry(e)
            .or_insert_with(|| {
                let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
                if e < 0 {
                    p.recip()
                } else {
                    p
                }
            })
            .clone()
    }

    fn monomial(&mut self, m: &Monomial) -> BigRational {
        self.pow(0, m.e_q) * self.pow(1, m.e_u) * self.pow(2, m.e_v)
    }
}

fn merge(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
        let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else if take_b {
            let (m, c) = &b.terms[j];
            out.push((*m, if negate_b { -c } else { c.clone() }));
            j += 1;
        } else {
            let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
            if !c.is_zero() {
                out.push((a.terms[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    LaurentPoly { terms: out }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, true)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = self.as_unit() {
            return rhs.scale(c).mul_monomial(m);
        }
        if let Some((m, c)) = rhs.as_unit() {
            return self.scale(c).mul_monomial(m);
        }
        let mut acc: HashMap<Monomial, BigRational> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let p = ca * cb;
                acc.entry(*ma * *mb).and_modify(|c| *c += &p).or_insert(p);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        LaurentPoly { terms }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
