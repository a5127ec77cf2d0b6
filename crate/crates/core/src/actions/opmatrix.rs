//! Finite truncations of operators, Fischer Gram matrices and adjoints.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coeff::{qfact, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::plane::{Basis, BasisLabel, OnePoly, Poly, QPlanePoly};

/// `⟨z^n, z^n⟩ = q^{n(n-1)/2} [n]!`.
pub fn fischer_norm(n: u32) -> Scalar {
    let e = (n * n.saturating_sub(1) / 2) as i32;
    qfact(n).mul_monomial(crate::Monomial::q(e))
}

pub fn fischer_inner(p: &OnePoly, r: &OnePoly) -> Scalar {
    p.iter().map(|(&n, c)| &(c * &r.coeff(n)) * &fischer_norm(n)).sum()
}

pub fn fischer_inner_tensor(p: &QPlanePoly, r: &QPlanePoly) -> Scalar {
    p.iter().map(|(&(a, b), c)| &(c * &r.coeff((a, b))) * &(&fischer_norm(a) * &fischer_norm(b))).sum()
}

/// Gram diagonal of a monomial basis under the Fischer product(s).
pub fn fischer_gram(labels: &[BasisLabel]) -> Vec<Scalar> {
    labels
        .iter()
        .map(|l| match *l {
            BasisLabel::Z(n) | BasisLabel::X(n) => fischer_norm(n),
            BasisLabel::XY(a, b) => &fischer_norm(a) * &fischer_norm(b),
            BasisLabel::TX(..) => panic!("no Fischer product on C[t, tX]"),
        })
        .collect()
}

/// `z^0 .. z^d`.
pub fn one_var_keys(d: u32) -> Vec<u32> {
    (0..=d).collect()
}

/// `x^k y^l` with `k + l <= d`, graded by total degree.
pub fn plane_keys(d: u32) -> Vec<(u32, u32)> {
    (0..=d).flat_map(|s| (0..=s).map(move |k| (k, s - k))).collect()
}

/// `t^i X^j` with `j <= i <= d`.
pub fn tx_keys(d: u32) -> Vec<(u32, u32)> {
    (0..=d).flat_map(|i| (0..=i).map(move |j| (i, j))).collect()
}

/// Matrix of a linear map between two spans of basis monomials.
/// Column `j` holds the image of `cols[j]` expanded over `rows`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpMatrix {
    pub rows: Vec<BasisLabel>,
    pub cols: Vec<BasisLabel>,
    pub matrix: Matrix,
}

impl OpMatrix {
    /// Truncation of `f` to `source → target`; fails if an image leaves `target`.
    pub fn from_map<S: Basis, T: Basis>(
        source: &[S::Key],
        target: &[T::Key],
        mut f: impl FnMut(S::Key) -> Poly<T>,
    ) -> Result<OpMatrix> {
        let rows: Vec<BasisLabel> = target.iter().map(|&k| T::label(k)).collect();
        let cols: Vec<BasisLabel> = source.iter().map(|&k| S::label(k)).collect();
        let mut matrix = Matrix::zeros(rows.len(), cols.len());
        for (j, &s) in source.iter().enumerate() {
            let image = f(s);
            for (&key, c) in image.iter() {
                let Some(i) = target.iter().position(|&t| t == key) else {
                    return Err(Error::TruncationLeak {
                        source_label: S::label(s).to_string(),
                        target_label: T::label(key).to_string(),
                    });
                };
                matrix.set(i, j, c.clone());
            }
        }
        Ok(OpMatrix { rows, cols, matrix })
    }

    /// Adjoint for diagonal Gram matrices on rows and columns:
    /// `M†[j][i] = M[i][j] · G_rows[i] / G_cols[j]`.
    pub fn adjoint(&self, gram_rows: &[Scalar], gram_cols: &[Scalar]) -> OpMatrix {
        assert_eq!(gram_rows.len(), self.rows.len(), "row Gram size");
        assert_eq!(gram_cols.len(), self.cols.len(), "column Gram size");
        let mut m = Matrix::zeros(self.cols.len(), self.rows.len());
        for (i, j, c) in self.matrix.entries() {
            if !c.is_zero() {
                m.set(j, i, &(c * &gram_rows[i]) / &gram_cols[j]);
            }
        }
        OpMatrix { rows: self.cols.clone(), cols: self.rows.clone(), matrix: m }
    }

    /// Adjoint with respect to the Fischer products on both sides.
    pub fn fischer_adjoint(&self) -> OpMatrix {
        self.adjoint(&fischer_gram(&self.rows), &fischer_gram(&self.cols))
    }

    /// Keeps only the listed columns, in the given order.
    pub fn restrict_cols(&self, keep: &[BasisLabel]) -> Result<OpMatrix> {
        let idx = keep
            .iter()
            .map(|l| self.cols.iter().position(|c| c == l).ok_or_else(|| Error::Dimension(format!("no column {l}"))))
            .collect::<Result<Vec<_>>>()?;
        let cols = idx.iter().map(|&j| self.matrix.column(j)).collect();
        Ok(OpMatrix {
            rows: self.rows.clone(),
            cols: keep.to_vec(),
            matrix: Matrix::from_columns(cols, self.rows.len()),
        })
    }

    /// Column `j` read back as a polynomial in the row basis.
    pub fn column_poly<B: Basis>(&self, j: usize) -> Poly<B> {
        Poly::from_terms(self.rows.iter().enumerate().map(|(i, l)| {
            let key = B::from_label(*l).expect("row label of another basis");
            (key, self.matrix.get(i, j).clone())
        }))
    }

    /// Composition `self ∘ other`; the row labels of `other` must match our columns.
    pub fn compose(&self, other: &OpMatrix) -> Result<OpMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension("composition of mismatched bases".into()));
        }
        Ok(OpMatrix { rows: self.rows.clone(), cols: other.cols.clone(), matrix: self.matrix.mul(&other.matrix)? })
    }
}

impl Serialize for OpMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<&[Scalar]> = (0..self.matrix.rows()).map(|i| self.matrix.row(i)).collect();
        let labels = |v: &[BasisLabel]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let mut st = serializer.serialize_struct("OpMatrix", 3)?;
        st.serialize_field("rows", &labels(&self.rows))?;
        st.serialize_field("cols", &labels(&self.cols))?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::qint;
    use crate::plane::ZBasis;

    #[test]
    fn fischer_examples() {
        assert!(fischer_inner(&OnePoly::one(), &OnePoly::one()).is_one());
        assert!(fischer_inner(&OnePoly::var(), &OnePoly::var()).is_one());
        assert_eq!(fischer_norm(2), &Scalar::q_pow(1) * &qint(2));
        let xy = QPlanePoly::basis((1, 1));
        assert!(fischer_inner_tensor(&xy, &xy).is_one());
        let x2y = QPlanePoly::basis((2, 1));
        assert_eq!(fischer_inner_tensor(&x2y, &x2y), &Scalar::q_pow(1) * &qint(2));
    }

    #[test]
    fn leak_is_reported() {
        let keys = one_var_keys(3);
        let err = OpMatrix::from_map::<ZBasis, ZBasis>(&keys, &keys, |n| OnePoly::basis(n + 1)).unwrap_err();
        assert!(matches!(err, Error::TruncationLeak { .. }));
    }

    #[test]
    fn adjoint_is_an_involution() {
        let src = one_var_keys(4);
        let tgt = one_var_keys(5);
        let m = OpMatrix::from_map::<ZBasis, ZBasis>(&src, &tgt, |n| {
            OnePoly::from_terms([(n + 1, qint(n as i32 + 2)), (n, Scalar::q_pow(n as i32))])
        })
        .unwrap();
        assert_eq!(m.fischer_adjoint().fischer_adjoint(), m);
    }
}
