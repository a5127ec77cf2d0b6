//! Dense matrices over [`Scalar`] and exact Gaussian elimination.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::coeff::{scalar_eval, Point, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<Scalar>) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(cols: Vec<Vec<Scalar>>, rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, e) in col.into_iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// True when all off-diagonal entries vanish.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data.iter().enumerate().map(move |(idx, s)| (idx / self.cols, idx % self.cols, s))
    }

    /// Exact rank by fraction-field Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(self.cols).len()
    }

    /// Row-reduces the first `ncols` columns in place; returns pivot columns.
    fn eliminate(&mut self, ncols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == self.rows {
                break;
            }
            // sparsest nonzero pivot keeps intermediate expressions small
            let best = (r..self.rows).filter(|&i| !self.get(i, c).is_zero()).min_by_key(|&i| self.get(i, c).weight());
            let Some(p) = best else { continue };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&f * self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solves `self · X = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != self.cols || rhs.rows != self.rows {
            return Err(Error::Dimension("solve needs a square system".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, n + rhs.cols);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, n + j, rhs.get(i, j).clone());
            }
        }
        let piv = aug.eliminate(n);
        if piv.len() < n {
            return Err(Error::SingularBasis);
        }
        let mut out = Self::zeros(n, rhs.cols);
        for i in 0..n {
            for j in 0..rhs.cols {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.solve(&Self::identity(self.rows))
    }

    /// Entrywise specialization at a rational point.
    pub fn eval(&self, p: &Point) -> Result<RationalMatrix> {
        let data = self.data.iter().map(|s| scalar_eval(s, p)).collect::<Result<Vec<_>>>()?;
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, data })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A matrix specialized at a rational point.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    /// Rank over `Q`. This is a lower bound for the rank over `Q(q,u,v)`.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else { continue };
            for j in 0..cols {
                a.swap(r * cols + j, p * cols + j);
            }
            let inv = a[r * cols + c].recip();
            for j in c..cols {
                a[r * cols + j] = &a[r * cols + j] * &inv;
            }
            for i in 0..rows {
                if i != r && !a[i * cols + c].is_zero() {
                    let f = a[i * cols + c].clone();
                    for j in c..cols {
                        let sub = &f * &a[r * cols + j];
                        a[i * cols + j] -= sub;
                    }
                }
            }
            r += 1;
            if r == rows {
                break;
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{qint, qnum, WeightExpr};

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_and_solve_over_rationals() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(4)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.solve(&Matrix::identity(2)), Err(Error::SingularBasis));
        let m = Matrix::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn symbolic_inverse() {
        let l = qnum(WeightExpr::LAMBDA);
        let m = Matrix::from_rows(vec![vec![l.clone(), qint(2)], vec![Scalar::q_pow(3), &l * &l]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn rank_at_point_bounds_generic_rank() {
        // [λ] - [λ] specializes to zero everywhere; [λ] vanishes at u = 1
        let l = qnum(WeightExpr::LAMBDA);
        let m = Matrix::from_rows(vec![vec![l.clone(), s(0)], vec![s(0), s(1)]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.eval(&Point::from_ints(2, 1, 3)).unwrap().rank(), 1);
        assert_eq!(m.eval(&Point::from_ints(2, 5, 3)).unwrap().rank(), 2);
    }
}
