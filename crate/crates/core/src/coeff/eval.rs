//! Specialization of scalars at rational points.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::scalar::Scalar;
use crate::error::Error;

/// Values substituted for `(q, u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub q: BigRational,
    pub u: BigRational,
    pub v: BigRational,
}

impl Point {
    pub fn new(q: BigRational, u: BigRational, v: BigRational) -> Self {
        Point { q, u, v }
    }

    pub fn from_ints(q: i64, u: i64, v: i64) -> Self {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        Point::new(r(q), r(u), r(v))
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.q.to_string(), self.u.to_string(), self.v.to_string()].serialize(s)
    }
}

pub fn scalar_eval(s: &Scalar, p: &Point) -> Result<BigRational, Error> {
    s.eval(&p.q, &p.u, &p.v)
}

/// Deterministic sampler of generic rational points: numerators and
/// denominators are drawn from `2..=97`.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn coordinate(&mut self) -> BigRational {
        loop {
            let n: i64 = self.rng.gen_range(2..=97);
            let d: i64 = self.rng.gen_range(2..=97);
            if n != d {
                return BigRational::new(n.into(), d.into());
            }
        }
    }

    pub fn sample(&mut self) -> Point {
        Point::new(self.coordinate(), self.coordinate(), self.coordinate())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{qint, qnum, WeightExpr};

    #[test]
    fn eval_examples() {
        let p = Point::from_ints(2, 3, 5);
        assert_eq!(scalar_eval(&qint(2), &p).unwrap(), BigRational::new(5.into(), 2.into()));
        assert_eq!(scalar_eval(&qnum(WeightExpr::LAMBDA), &p).unwrap(), BigRational::new(16.into(), 9.into()));
        let pole = Scalar::one() / (Scalar::q_pow(1) - Scalar::q_pow(-1));
        assert_eq!(scalar_eval(&pole, &Point::from_ints(1, 3, 5)), Err(Error::DenominatorVanishes));
    }

    #[test]
    fn sampler_is_deterministic_and_in_range() {
        let mut a = PointSampler::new(7);
        let mut b = PointSampler::new(7);
        for _ in 0..20 {
            let p = a.sample();
            assert_eq!(p, b.sample());
            for c in [&p.q, &p.u, &p.v] {
                assert!(*c.numer() >= 1.into() && *c.denom() >= 1.into());
                assert_ne!(*c, BigRational::from_integer(1.into()));
            }
        }
    }
}
