//! Row-major dense square matrices with the norms used by the error bounds.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{IndexSet, RealVector};

/// A square matrix of finite `f64` entries, stored row-major.
///
/// Construction validates squareness and finiteness. Two matrix norms appear
/// throughout the crate and are deliberately kept distinct:
///
/// - [`norm_entrymax`](DenseMatrix::norm_entrymax): `max_ij |a_ij|`, the
///   largest entry in magnitude. Cheap, but **not** submultiplicative and not
///   an operator norm.
/// - [`norm_inf_induced`](DenseMatrix::norm_inf_induced): `max_i Σ_j |a_ij|`,
///   the operator norm induced by `‖·‖∞`. This is the norm for which the
///   error-bound inequalities are provable, and the default everywhere.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::DenseMatrix;
///
/// let a = DenseMatrix::from_rows(&[&[4.0, 1.0, 2.0], &[3.0, 5.0, -1.0], &[-1.0, -2.0, 7.0]]).unwrap();
/// assert_eq!(a.norm_entrymax(), 7.0);
/// assert_eq!(a.norm_inf_induced(), 10.0); // row 3: |-1| + |-2| + |7|
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    /// Row-major entries; `data[i * n + j]` is the `(i, j)` entry.
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row slices. All rows must have length equal to
    /// the number of rows; entries must be finite.
    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NonSquare {
                    rows: n,
                    bad_row: i,
                    bad_len: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(n, data)
    }

    /// Builds a matrix from a row-major entry buffer of length `n * n`.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: data.len(),
            });
        }
        for (k, &x) in data.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite {
                    position: alloc::format!("({},{})", k / n + 1, k % n + 1),
                });
            }
        }
        Ok(DenseMatrix { n, data })
    }

    /// Builds a matrix from nested row vectors (convenient for file parsing).
    pub fn from_nested(rows: &[Vec<f64>]) -> Result<Self> {
        let borrowed: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        Self::from_rows(&borrowed)
    }

    /// The identity matrix of order `n`.
    pub fn identity(n: usize) -> Result<Self> {
        let mut m = DenseMatrix::from_row_major(n, vec![0.0; n * n])?;
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        Ok(m)
    }

    /// The diagonal matrix with the given diagonal entries.
    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        let mut m = DenseMatrix::from_row_major(n, vec![0.0; n.max(1) * n.max(1)])?;
        for (i, &d) in diag.iter().enumerate() {
            if !d.is_finite() {
                return Err(Error::NonFinite {
                    position: alloc::format!("({0},{0})", i + 1),
                });
            }
            m.data[i * n + i] = d;
        }
        Ok(m)
    }

    /// Matrix order `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The `(i, j)` entry (0-based).
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Row `i` as a slice (0-based; row-major storage makes this free).
    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// The diagonal as a vector of length `n`.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// Row-major entries, length `n * n`.
    pub fn as_row_major(&self) -> &[f64] {
        &self.data
    }

    /// Largest entry in magnitude: `max_ij |a_ij|`. Not an operator norm.
    pub fn norm_entrymax(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, &x| acc.max(x.abs()))
    }

    /// Operator norm induced by `‖·‖∞`: the largest absolute row sum
    /// `max_i Σ_j |a_ij|`. Satisfies `‖Ax‖∞ ≤ ‖A‖ · ‖x‖∞`.
    pub fn norm_inf_induced(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// The principal submatrix `A[μ, μ]` selecting the rows and columns in
    /// `mu`, in their stored (increasing) order.
    ///
    /// The index set carries its own ambient dimension, which must match.
    pub fn principal_submatrix(&self, mu: &IndexSet) -> Result<DenseMatrix> {
        if mu.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: mu.ambient_dim(),
            });
        }
        let k = mu.len();
        let mut data = Vec::with_capacity(k * k);
        for &i in mu.indices() {
            for &j in mu.indices() {
                data.push(self.get(i, j));
            }
        }
        DenseMatrix::from_row_major(k, data)
    }

    /// Matrix–vector product `A x` for a plain slice, length-checked.
    pub fn mul_slice(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    /// Matrix–vector product `A v`.
    pub fn mul_vector(&self, v: &RealVector) -> Result<RealVector> {
        RealVector::new(self.mul_slice(v.as_slice())?)
    }

    /// Matrix product `self · other` (orders must match).
    pub fn mul_matrix(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += aik * other.get(k, j);
                }
            }
        }
        DenseMatrix::from_row_major(n, data)
    }

    /// The transpose.
    pub fn transpose(&self) -> DenseMatrix {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.get(i, j);
            }
        }
        DenseMatrix { n, data }
    }

    /// Entrywise difference `self − other`.
    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        DenseMatrix::from_row_major(
            self.n,
            self.data
                .iter()
                .zip(other.data.iter())
                .map(|(&a, &b)| a - b)
                .collect(),
        )
    }

    /// Whether every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.get(i, j) != 0.0 {
                    return false;
                }
            }
        }
        true
    }

    /// Rows as nested vectors (convenient for serialization).
    pub fn to_nested(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Mutates the `(i, j)` entry; the new value must be finite.
    pub(crate) fn set(&mut self, i: usize, j: usize, value: f64) {
        debug_assert!(value.is_finite());
        self.data[i * self.n + j] = value;
    }
}

impl core::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> DenseMatrix {
        DenseMatrix::from_rows(&[&[4.0, 1.0, 2.0], &[3.0, 5.0, -1.0], &[-1.0, -2.0, 7.0]])
            .unwrap()
    }

    #[test]
    fn construction_validates_shape() {
        assert_eq!(
            DenseMatrix::from_rows(&[]).unwrap_err(),
            Error::EmptyDimension
        );
        assert!(matches!(
            DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0]]).unwrap_err(),
            Error::NonSquare {
                rows: 2,
                bad_row: 1,
                bad_len: 1
            }
        ));
        assert!(matches!(
            DenseMatrix::from_rows(&[&[f64::NAN]]).unwrap_err(),
            Error::NonFinite { .. }
        ));
    }

    #[test]
    fn entrymax_norm_of_worked_example_is_seven() {
        assert_eq!(worked_example().norm_entrymax(), 7.0);
    }

    #[test]
    fn induced_norm_of_worked_example_is_ten() {
        // Absolute row sums are 7, 9, 10.
        assert_eq!(worked_example().norm_inf_induced(), 10.0);
    }

    #[test]
    fn norm_chain_on_worked_example() {
        let a = worked_example();
        let m = a.norm_entrymax();
        let ind = a.norm_inf_induced();
        assert!(m <= ind && ind <= a.n() as f64 * m);
    }

    #[test]
    fn principal_submatrix_preserves_order() {
        let a = worked_example();
        let mu = IndexSet::new(3, alloc::vec![0, 2]).unwrap();
        let sub = a.principal_submatrix(&mu).unwrap();
        assert_eq!(sub.as_row_major(), &[4.0, 2.0, -1.0, 7.0]);
    }

    #[test]
    fn principal_submatrix_checks_ambient_dimension() {
        let a = worked_example();
        let mu = IndexSet::new(2, alloc::vec![0]).unwrap();
        assert!(matches!(
            a.principal_submatrix(&mu).unwrap_err(),
            Error::DimensionMismatch { .. }
        ));
    }

    #[test]
    fn matvec_matches_hand_computation() {
        let a = worked_example();
        let z = RealVector::from_slice(&[1.0, 0.0, -1.0]).unwrap();
        let az = a.mul_vector(&z).unwrap();
        assert_eq!(az.as_slice(), &[2.0, 4.0, -8.0]);
    }

    #[test]
    fn transpose_and_product() {
        let g = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        let gt = g.transpose();
        assert_eq!(gt.as_row_major(), &[1.0, 3.0, 2.0, 4.0]);
        let gtg = gt.mul_matrix(&g).unwrap();
        // GᵀG = [[10, 14], [14, 20]]
        assert_eq!(gtg.as_row_major(), &[10.0, 14.0, 14.0, 20.0]);
    }

    #[test]
    fn diagonal_detection_is_exact() {
        let d = DenseMatrix::from_diagonal(&[2.0, 1.0]).unwrap();
        assert!(d.is_diagonal());
        let mut nearly = d.clone();
        nearly.set(0, 1, 1e-300);
        assert!(!nearly.is_diagonal());
    }
}
