//! Identity checking with self-describing reports.
//!
//! A [`Check`] collects comparisons of exact objects. In symbolic mode two
//! scalars agree when their difference is the zero rational function. In
//! point mode both sides are specialized at `trials` seeded random points
//! and compared as rationals; a point where some denominator vanishes is
//! redrawn up to ten times.

use std::fmt::Display;

use serde::Serialize;
use serde_json::{json, Value};

use crate::coeff::{scalar_eval, Point, PointSampler, Scalar};
use crate::error::Error;
use crate::linalg::Matrix;
use crate::plane::{Basis, Poly};

const REDRAWS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Point,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub identity: String,
    pub params: Value,
    pub mode: Mode,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Ok
    }
}

/// Session-wide verification settings.
#[derive(Clone, Debug)]
pub struct Verifier {
    pub mode: Mode,
    pub seed: u64,
    pub trials: usize,
    /// Corrupts the first compared coefficient of every check.
    pub poison: bool,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier { mode: Mode::Symbolic, seed: 0, trials: 3, poison: false }
    }
}

impl Verifier {
    pub fn symbolic() -> Self {
        Self::default()
    }

    pub fn point(seed: u64, trials: usize) -> Self {
        Verifier { mode: Mode::Point, seed, trials: trials.max(3), poison: false }
    }

    pub fn poisoned(mut self) -> Self {
        self.poison = true;
        self
    }

    pub fn check(&self, identity: &str, params: Value) -> Check {
        let mut sampler = PointSampler::new(self.seed);
        let points = match self.mode {
            Mode::Symbolic => Vec::new(),
            Mode::Point => (0..self.trials).map(|_| sampler.sample()).collect(),
        };
        Check {
            identity: identity.to_string(),
            params,
            mode: self.mode,
            armed: self.poison,
            points,
            sampler,
            failure: None,
            compared: 0,
        }
    }
}

/// An in-progress identity check. Comparisons stop at the first failure.
pub struct Check {
    identity: String,
    params: Value,
    mode: Mode,
    armed: bool,
    points: Vec<Point>,
    sampler: PointSampler,
    failure: Option<Value>,
    compared: usize,
}

impl Check {
    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    /// Number of scalar comparisons performed so far.
    pub fn compared(&self) -> usize {
        self.compared
    }

    fn take_poison(&mut self) -> bool {
        std::mem::take(&mut self.armed)
    }

    /// Records a failure with an arbitrary serialized witness.
    pub fn fail(&mut self, label: impl Display, detail: Value) {
        if self.failure.is_none() {
            self.failure = Some(json!({ "at": label.to_string(), "detail": detail }));
        }
    }

    /// Turns an error raised while building the objects into a failure.
    pub fn error(&mut self, label: impl Display, err: &Error) {
        self.fail(label, json!({ "error": err.to_string() }));
    }

    pub fn scalar(&mut self, label: impl Display, lhs: &Scalar, rhs: &Scalar) -> bool {
        if self.failed() {
            return false;
        }
        self.compared += 1;
        let poisoned;
        let lhs = if self.take_poison() {
            poisoned = lhs + &Scalar::one();
            &poisoned
        } else {
            lhs
        };
        let outcome = match self.mode {
            Mode::Symbolic => (lhs == rhs).then_some(()).ok_or(None),
            Mode::Point => self.compare_at_points(lhs, rhs),
        };
        match outcome {
            Ok(()) => true,
            Err(point) => {
                let mut detail = json!({ "lhs": lhs, "rhs": rhs });
                if let Some(p) = point {
                    detail["point"] = p;
                }
                self.fail(label, detail);
                false
            }
        }
    }

    fn compare_at_points(&mut self, lhs: &Scalar, rhs: &Scalar) -> Result<(), Option<Value>> {
        for t in 0..self.points.len() {
            let mut settled = false;
            for _ in 0..=REDRAWS {
                let p = &self.points[t];
                match (scalar_eval(lhs, p), scalar_eval(rhs, p)) {
                    (Ok(a), Ok(b)) => {
                        if a != b {
                            return Err(Some(json!({ "q_u_v": p, "lhs": a.to_string(), "rhs": b.to_string() })));
                        }
                        settled = true;
                        break;
                    }
                    _ => self.points[t] = self.sampler.sample(),
                }
            }
            if !settled {
                return Err(Some(json!({ "error": "no generic point found" })));
            }
        }
        Ok(())
    }

    /// Coefficientwise comparison over the union of supports.
    pub fn poly<B: Basis>(&mut self, label: impl Display, lhs: &Poly<B>, rhs: &Poly<B>) -> bool {
        let mut keys: Vec<B::Key> = lhs.keys().chain(rhs.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        if keys.is_empty() {
            // two zero polynomials still count as one comparison
            return self.scalar(&label, &Scalar::zero(), &Scalar::zero());
        }
        for key in keys {
            if !self.scalar(format!("{label}, coefficient of {}", B::label(key)), &lhs.coeff(key), &rhs.coeff(key)) {
                return false;
            }
        }
        true
    }

    pub fn matrix(&mut self, label: impl Display, lhs: &Matrix, rhs: &Matrix) -> bool {
        if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
            self.fail(label, json!({ "shape": [[lhs.rows(), lhs.cols()], [rhs.rows(), rhs.cols()]] }));
            return false;
        }
        for i in 0..lhs.rows() {
            for j in 0..lhs.cols() {
                if !self.scalar(format!("{label}, entry ({i}, {j})"), lhs.get(i, j), rhs.get(i, j)) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact comparison of integer invariants such as ranks.
    pub fn count(&mut self, label: impl Display, lhs: usize, rhs: usize) -> bool {
        if self.failed() {
            return false;
        }
        self.compared += 1;
        let lhs = if self.take_poison() { lhs + 1 } else { lhs };
        if lhs != rhs {
            self.fail(label, json!({ "lhs": lhs, "rhs": rhs }));
            return false;
        }
        true
    }

    pub fn holds(&mut self, label: impl Display, cond: bool) -> bool {
        self.count(label, usize::from(cond), 1)
    }

    pub fn finish(self) -> Report {
        let status = if self.failure.is_some() { Status::Fail } else { Status::Ok };
        Report { identity: self.identity, params: self.params, mode: self.mode, status, counterexample: self.failure }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{qint, qnum, WeightExpr};

    #[test]
    fn symbolic_and_point_modes_agree_on_true_identities() {
        let lhs = &qnum(WeightExpr::LAMBDA) * &qint(2);
        let rhs = &qnum(WeightExpr::new(1, 0, 1)) + &qnum(WeightExpr::new(1, 0, -1));
        for v in [Verifier::symbolic(), Verifier::point(11, 4)] {
            let mut c = v.check("q-number product", json!({}));
            assert!(c.scalar("only", &lhs, &rhs));
            let r = c.finish();
            assert!(r.passed());
            assert!(r.counterexample.is_none());
        }
    }

    #[test]
    fn false_identity_yields_counterexample() {
        for v in [Verifier::symbolic(), Verifier::point(3, 3)] {
            let mut c = v.check("wrong", json!({ "n": 1 }));
            c.scalar("x", &qint(2), &qint(3));
            let r = c.finish();
            assert_eq!(r.status, Status::Fail);
            let text = serde_json::to_string(&r).unwrap();
            assert!(text.contains("\"counterexample\""));
            assert!(text.contains("\"status\":\"fail\""));
        }
    }

    #[test]
    fn poison_breaks_the_first_comparison_only() {
        let v = Verifier::symbolic().poisoned();
        let mut c = v.check("poisoned", json!({}));
        assert!(!c.scalar("a", &qint(2), &qint(2)));
        assert!(!c.finish().passed());
        let mut c = v.check("poisoned count", json!({}));
        assert!(!c.count("rank", 3, 3));
    }

    #[test]
    fn point_mode_redraws_at_poles() {
        // 1/(u - 2) has a pole at u = 2 but the identity is still true
        let u = Scalar::monomial(crate::Monomial::new(0, 1, 0));
        let s = (&u - &Scalar::from_int(2)).inv();
        let mut c = Verifier::point(5, 5).check("pole", json!({}));
        assert!(c.scalar("s", &s, &s.clone()));
    }
}
