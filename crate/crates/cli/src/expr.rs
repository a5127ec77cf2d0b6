//! Polynomial input expressions.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := atom ("^" exponent)?
//! atom    := integer | letter | "(" sum ")"
//! ```
//!
//! Letters are `x, y` (quantum plane), `z`, `t, X`, and the coefficients
//! `q, u, v`. Evaluation normal-orders `x, y` with `yx = q² xy`, and
//! rejects `t, X` combinations outside `C[t, tX]`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use qplane_core::plane::{qp_mul, OnePoly, QPlanePoly, TXPoly};
use qplane_core::{Monomial, Scalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
}

type Result<T> = std::result::Result<T, ExprError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    T,
    BigX,
    Q,
    U,
    V,
}

impl Var {
    pub const ALL: [Var; 8] = [Var::X, Var::Y, Var::Z, Var::T, Var::BigX, Var::Q, Var::U, Var::V];

    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
            Var::T => 't',
            Var::BigX => 'X',
            Var::Q => 'q',
            Var::U => 'u',
            Var::V => 'v',
        }
    }

    fn from_symbol(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.symbol() == c)
    }

    fn family(self) -> Option<Family> {
        match self {
            Var::X | Var::Y => Some(Family::Plane),
            Var::Z => Some(Family::Z),
            Var::T | Var::BigX => Some(Family::Tx),
            Var::Q | Var::U | Var::V => None,
        }
    }

    fn coefficient(self) -> Option<Scalar> {
        let m = match self {
            Var::Q => Monomial::new(1, 0, 0),
            Var::U => Monomial::new(0, 1, 0),
            Var::V => Monomial::new(0, 0, 1),
            _ => return None,
        };
        Some(Scalar::monomial(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(v) => {
                out.insert(*v);
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

struct Shown<'a>(&'a Expr, u8);

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => write!(f, "{}", v.symbol()),
            Expr::Neg(a) => write!(f, "-{}", Shown(a, 3)),
            Expr::Add(a, b) => write!(f, "{} + {}", Shown(a, 1), Shown(b, 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", Shown(a, 1), Shown(b, 2)),
            Expr::Mul(a, b) => write!(f, "{}*{}", Shown(a, 2), Shown(b, 3)),
            Expr::Div(a, b) => write!(f, "{}/{}", Shown(a, 2), Shown(b, 3)),
            Expr::Pow(a, e) if *e < 0 => write!(f, "{}^({e})", Shown(a, 5)),
            Expr::Pow(a, e) => write!(f, "{}^{e}", Shown(a, 5)),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(ExprError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits"))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        loop {
            if self.eat(b'+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
            } else if self.eat(b'-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let n = self.digits()?;
        if paren && !self.eat(b')') {
            return self.err("expected ')' after exponent");
        }
        let n: i32 = match i32::try_from(n) {
            Ok(n) if n <= 1 << 16 => n,
            _ => return self.err("exponent too large"),
        };
        Ok(if neg { -n } else { n })
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            return Ok(Expr::Pow(Box::new(base), self.exponent()?));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.digits()?)),
            Some(c) => match Var::from_symbol(c as char) {
                Some(v) => {
                    self.pos += 1;
                    Ok(Expr::Var(v))
                }
                None => self.err(format!("unexpected character {:?}", c as char)),
            },
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    if !src.is_ascii() {
        let pos = src.char_indices().find(|(_, c)| !c.is_ascii()).map_or(0, |(i, _)| i);
        return Err(ExprError::Parse { pos, msg: "non-ASCII input".into() });
    }
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let e = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Which polynomial space an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Z,
    Plane,
    Tx,
}

/// An evaluated expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Z(OnePoly),
    Plane(QPlanePoly),
    Tx(TXPoly),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Z(p) => write!(f, "{p}"),
            Value::Plane(p) => write!(f, "{p}"),
            Value::Tx(p) => write!(f, "{p}"),
        }
    }
}

impl Value {
    pub fn into_plane(self) -> Result<QPlanePoly> {
        match self {
            Value::Scalar(c) => Ok(QPlanePoly::term((0, 0), c)),
            Value::Plane(p) => Ok(p),
            _ => Err(ExprError::Domain("expected a polynomial in x, y".into())),
        }
    }

    pub fn into_tx(self) -> Result<TXPoly> {
        match self {
            Value::Scalar(c) => Ok(TXPoly::term((0, 0), c)),
            Value::Tx(p) => Ok(p),
            _ => Err(ExprError::Domain("expected a polynomial in t, X".into())),
        }
    }
}

/// The operations evaluation needs from a coefficient ring or polynomial space.
trait Ring: Clone {
    fn constant(c: Scalar) -> Self;
    fn var(v: Var) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn as_constant(&self) -> Option<Scalar>;
}

impl Ring for Scalar {
    fn constant(c: Scalar) -> Self {
        c
    }
    fn var(v: Var) -> Self {
        v.coefficient().expect("only coefficient letters reach the scalar ring")
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn as_constant(&self) -> Option<Scalar> {
        Some(self.clone())
    }
}

impl Ring for OnePoly {
    fn constant(c: Scalar) -> Self {
        OnePoly::constant(c)
    }
    fn var(v: Var) -> Self {
        v.coefficient().map_or_else(OnePoly::var, OnePoly::constant)
    }
    fn add(&self, o: &Self) -> Self {
        OnePoly::add(self, o)
    }
    fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }
    fn mul(&self, o: &Self) -> Self {
        OnePoly::mul(self, o)
    }
    fn as_constant(&self) -> Option<Scalar> {
        self.keys().all(|&k| k == 0).then(|| self.coeff(0))
    }
}

impl Ring for QPlanePoly {
    fn constant(c: Scalar) -> Self {
        QPlanePoly::term((0, 0), c)
    }
    fn var(v: Var) -> Self {
        match v {
            Var::X => QPlanePoly::basis((1, 0)),
            Var::Y => QPlanePoly::basis((0, 1)),
            _ => Self::constant(v.coefficient().expect("plane letters are x, y")),
        }
    }
    fn add(&self, o: &Self) -> Self {
        QPlanePoly::add(self, o)
    }
    fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }
    fn mul(&self, o: &Self) -> Self {
        qp_mul(self, o)
    }
    fn as_constant(&self) -> Option<Scalar> {
        self.keys().all(|&k| k == (0, 0)).then(|| self.coeff((0, 0)))
    }
}

/// Commutative polynomials in `t, X` before the `C[t, tX]` membership test.
#[derive(Clone, Debug, Default)]
struct FreeTx(BTreeMap<(u32, u32), Scalar>);

impl FreeTx {
    fn push(&mut self, key: (u32, u32), c: Scalar) {
        let slot = self.0.entry(key).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.0.remove(&key);
        }
    }
}

impl Ring for FreeTx {
    fn constant(c: Scalar) -> Self {
        let mut out = FreeTx::default();
        out.push((0, 0), c);
        out
    }
    fn var(v: Var) -> Self {
        match v {
            Var::T => FreeTx(BTreeMap::from([((1, 0), Scalar::one())])),
            Var::BigX => FreeTx(BTreeMap::from([((0, 1), Scalar::one())])),
            _ => Self::constant(v.coefficient().expect("tx letters are t, X")),
        }
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.0 {
            out.push(*k, c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        FreeTx(self.0.iter().map(|(k, c)| (*k, -c)).collect())
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = FreeTx::default();
        for ((i, j), c) in &self.0 {
            for ((k, l), d) in &o.0 {
                out.push((i + k, j + l), c * d);
            }
        }
        out
    }
    fn as_constant(&self) -> Option<Scalar> {
        self.0.keys().all(|&k| k == (0, 0)).then(|| self.0.get(&(0, 0)).cloned().unwrap_or_default())
    }
}

fn rational(n: &BigInt) -> Scalar {
    Scalar::from_rational(BigRational::from_integer(n.clone()))
}

fn eval_in<R: Ring>(e: &Expr) -> Result<R> {
    Ok(match e {
        Expr::Int(n) => R::constant(rational(n)),
        Expr::Var(v) => R::var(*v),
        Expr::Neg(a) => eval_in::<R>(a)?.neg(),
        Expr::Add(a, b) => eval_in::<R>(a)?.add(&eval_in(b)?),
        Expr::Sub(a, b) => eval_in::<R>(a)?.add(&eval_in::<R>(b)?.neg()),
        Expr::Mul(a, b) => eval_in::<R>(a)?.mul(&eval_in(b)?),
        Expr::Div(a, b) => {
            let d = eval_in::<R>(b)?;
            match d.as_constant() {
                Some(c) if !c.is_zero() => eval_in::<R>(a)?.mul(&R::constant(c.inv())),
                Some(_) => return Err(ExprError::Domain(format!("division by zero in {e}"))),
                None => return Err(ExprError::Domain(format!("divisor {b} is not a constant"))),
            }
        }
        Expr::Pow(a, k) => {
            let base = eval_in::<R>(a)?;
            if *k >= 0 {
                (0..*k).fold(R::constant(Scalar::one()), |acc, _| acc.mul(&base))
            } else {
                match base.as_constant() {
                    Some(c) if !c.is_zero() => R::constant(c.pow(*k)),
                    Some(_) => return Err(ExprError::Domain(format!("negative power of zero in {e}"))),
                    None => return Err(ExprError::Domain(format!("negative power of a non-constant in {e}"))),
                }
            }
        }
    })
}

fn family(e: &Expr) -> Result<Option<Family>> {
    let fams: BTreeSet<Family> = e.vars().into_iter().filter_map(Var::family).collect();
    match fams.len() {
        0 => Ok(None),
        1 => Ok(fams.into_iter().next()),
        _ => Err(ExprError::Domain(format!("{e} mixes variables from different polynomial spaces"))),
    }
}

pub fn evaluate(e: &Expr) -> Result<Value> {
    Ok(match family(e)? {
        None => Value::Scalar(eval_in::<Scalar>(e)?),
        Some(Family::Z) => Value::Z(eval_in(e)?),
        Some(Family::Plane) => Value::Plane(eval_in(e)?),
        Some(Family::Tx) => {
            let free = eval_in::<FreeTx>(e)?;
            if let Some(&(i, j)) = free.0.keys().find(|&&(i, j)| j > i) {
                return Err(ExprError::Domain(format!("t^{i} X^{j} is not in C[t, tX]")));
            }
            Value::Tx(TXPoly::from_terms(free.0))
        }
    })
}

/// Parses and evaluates in one step.
pub fn parse_value(src: &str) -> Result<Value> {
    evaluate(&parse(src)?)
}

/// A polynomial in one variable, read with its single polynomial letter
/// (any of `x, y, z, t, X`) renamed to `z`.
pub fn parse_univariate(src: &str) -> Result<OnePoly> {
    let e = parse(src)?;
    let letters: Vec<Var> = e.vars().into_iter().filter(|v| v.coefficient().is_none()).collect();
    if letters.len() > 1 {
        return Err(ExprError::Domain(format!("{e} uses more than one variable")));
    }
    eval_in::<OnePoly>(&rename_to_z(&e))
}

fn rename_to_z(e: &Expr) -> Expr {
    let b = |a: &Expr| Box::new(rename_to_z(a));
    match e {
        Expr::Var(v) if v.coefficient().is_none() => Expr::Var(Var::Z),
        Expr::Int(_) | Expr::Var(_) => e.clone(),
        Expr::Neg(a) => Expr::Neg(b(a)),
        Expr::Pow(a, k) => Expr::Pow(b(a), *k),
        Expr::Add(l, r) => Expr::Add(b(l), b(r)),
        Expr::Sub(l, r) => Expr::Sub(b(l), b(r)),
        Expr::Mul(l, r) => Expr::Mul(b(l), b(r)),
        Expr::Div(l, r) => Expr::Div(b(l), b(r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use qplane_core::plane::{monomial, phi_inv, x_plus_uy};

    fn plane(src: &str) -> QPlanePoly {
        parse_value(src).unwrap().into_plane().unwrap()
    }

    #[test]
    fn normal_orders_the_plane() {
        // y x = q^2 x y
        let yx = plane("y*x");
        assert_eq!(yx, monomial(1, 1).scale(&Scalar::q_pow(2)));
        assert_eq!(plane("x + u*y"), x_plus_uy());
        assert_eq!(plane("(y*x - q^2*x*y)^3"), QPlanePoly::zero());
    }

    #[test]
    fn tx_domain() {
        assert!(matches!(parse_value("X"), Err(ExprError::Domain(_))));
        assert!(matches!(parse_value("t^2*X^3"), Err(ExprError::Domain(_))));
        let tx = parse_value("t*X - t").unwrap().into_tx().unwrap();
        assert_eq!(tx, TXPoly::from_terms([((1, 1), Scalar::one()), ((1, 0), Scalar::from_int(-1))]));
        // X^j needs at least t^j
        assert!(parse_value("t^3*X^2").is_ok());
        assert_eq!(phi_inv(&plane("x + y")).len(), 2);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("x +"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse("x y"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse("(x"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse("w"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse("λ"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_value("x*z"), Err(ExprError::Domain(_))));
        assert!(matches!(parse_value("x/y"), Err(ExprError::Domain(_))));
        assert!(matches!(parse_value("x^(-1)"), Err(ExprError::Domain(_))));
        assert!(matches!(parse_value("1/(q - q)"), Err(ExprError::Domain(_))));
    }

    #[test]
    fn constants_and_rationals() {
        let c = parse_value("3/4*q^(-2) - u/(q + 1)").unwrap();
        let want = &(&Scalar::from_int(3) / &Scalar::from_int(4)) * &Scalar::q_pow(-2);
        let u = Scalar::monomial(Monomial::new(0, 1, 0));
        let want = &want - &(&u / &(&Scalar::q_pow(1) + &Scalar::one()));
        assert_eq!(c, Value::Scalar(want));
    }

    #[test]
    fn univariate_renames() {
        let f = parse_univariate("x^2 + u").unwrap();
        assert_eq!(f, OnePoly::from_terms([(2, Scalar::one()), (0, Scalar::monomial(Monomial::new(0, 1, 0)))]));
        assert!(parse_univariate("x*y").is_err());
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0u32..20).prop_map(|n| Expr::Int(n.into())),
            proptest::sample::select(Var::ALL.to_vec()).prop_map(Expr::Var),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
                (inner, -3i32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
            ]
        })
    }

    fn arb_plane_src() -> impl Strategy<Value = String> {
        let atom = prop_oneof![Just("x"), Just("y"), Just("q"), Just("u"), Just("v"), Just("2"), Just("1/3")];
        proptest::collection::vec((atom.clone(), atom, 0u32..3, proptest::bool::ANY), 1..5).prop_map(|terms| {
            terms
                .into_iter()
                .map(|(a, b, k, neg)| format!("{}{a}^{k}*{b}", if neg { "-" } else { "" }))
                .collect::<Vec<_>>()
                .join(" + ")
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn syntax_round_trip(e in arb_expr()) {
            let printed = e.to_string();
            prop_assert_eq!(parse(&printed).unwrap(), e, "printed as {}", printed);
        }

        #[test]
        fn value_round_trip(src in arb_plane_src()) {
            // a constant prints without letters and reads back as a scalar
            let p = parse_value(&src).unwrap().into_plane().unwrap();
            let printed = p.to_string();
            prop_assert_eq!(parse_value(&printed).unwrap().into_plane().unwrap(), p, "printed as {}", printed);
        }
    }
}
