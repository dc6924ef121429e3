//! Gaussian elimination with partial pivoting: solves, determinants, inverses.
//!
//! One factorization kernel backs all three entry points. Pivots are compared
//! against a *relative* threshold — `pivot_eps` times the largest absolute
//! entry the column had in the original matrix — so a uniformly rescaled
//! matrix receives the same singular/nonsingular verdict.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, RealVector};

/// LU factorization with row pivoting, kept private to this module.
struct LuFactors {
    n: usize,
    /// Packed L (below diagonal, unit diagonal implicit) and U (on and above).
    lu: Vec<f64>,
    /// Row permutation: factored row `i` came from original row `perm[i]`.
    perm: Vec<usize>,
    /// Sign of the permutation, `+1.0` or `−1.0`.
    sign: f64,
    /// Set when a pivot fell below its relative threshold; elimination stops
    /// at that column.
    singular: bool,
}

/// Factors `a`, stopping early if a pivot falls below the relative threshold.
fn lu_factor(a: &DenseMatrix, tol: &Tolerances) -> LuFactors {
    let n = a.n();
    let mut lu: Vec<f64> = a.as_row_major().to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;

    // Largest absolute entry of each original column, the scale against which
    // pivots are judged.
    let mut col_scale = vec![0.0f64; n];
    for i in 0..n {
        for j in 0..n {
            col_scale[j] = col_scale[j].max(a.get(i, j).abs());
        }
    }

    for k in 0..n {
        // Partial pivoting: bring the largest remaining entry of column k to
        // the diagonal.
        let mut p = k;
        let mut best = lu[k * n + k].abs();
        for i in (k + 1)..n {
            let cand = lu[i * n + k].abs();
            if cand > best {
                best = cand;
                p = i;
            }
        }
        if p != k {
            for j in 0..n {
                lu.swap(k * n + j, p * n + j);
            }
            perm.swap(k, p);
            sign = -sign;
        }
        let pivot = lu[k * n + k];
        if pivot.abs() <= tol.pivot_eps * col_scale[k] {
            return LuFactors {
                n,
                lu,
                perm,
                sign,
                singular: true,
            };
        }
        for i in (k + 1)..n {
            let m = lu[i * n + k] / pivot;
            lu[i * n + k] = m;
            if m != 0.0 {
                for j in (k + 1)..n {
                    lu[i * n + j] -= m * lu[k * n + j];
                }
            }
        }
    }
    LuFactors {
        n,
        lu,
        perm,
        sign,
        singular: false,
    }
}

impl LuFactors {
    /// Solves `Ax = b` given the factors; `b` is an unpermuted right-hand side.
    fn solve(&self, b: &[f64]) -> Vec<f64> {
        debug_assert!(!self.singular);
        let n = self.n;
        // Forward substitution on the permuted right-hand side.
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            let mut s = x[i];
            for j in 0..i {
                s -= self.lu[i * n + j] * x[j];
            }
            x[i] = s;
        }
        // Back substitution.
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in (i + 1)..n {
                s -= self.lu[i * n + j] * x[j];
            }
            x[i] = s / self.lu[i * n + i];
        }
        x
    }

    /// Product of pivots times the permutation sign.
    fn det(&self) -> f64 {
        if self.singular {
            return 0.0;
        }
        let mut d = self.sign;
        for k in 0..self.n {
            d *= self.lu[k * self.n + k];
        }
        d
    }
}

/// Solves the linear system `Ax = b` by partially pivoted elimination.
///
/// # Errors
///
/// [`Error::SingularMatrix`] if a pivot falls below `pivot_eps` relative to
/// the largest original entry of its column, or if the computed solution
/// fails the residual acceptance check `‖Ax − b‖∞ ≤ tol_solve · (1 + ‖b‖∞)`.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::linalg::solve_linear;
/// use lcp_certify_core::{DenseMatrix, RealVector, Tolerances};
///
/// let a = DenseMatrix::from_rows(&[&[2.0, 0.0], &[0.0, 4.0]]).unwrap();
/// let b = RealVector::from_slice(&[2.0, 8.0]).unwrap();
/// let x = solve_linear(&a, &b, &Tolerances::default()).unwrap();
/// assert_eq!(x.as_slice(), &[1.0, 2.0]);
/// ```
pub fn solve_linear(a: &DenseMatrix, b: &RealVector, tol: &Tolerances) -> Result<RealVector> {
    if b.len() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            got: b.len(),
        });
    }
    let f = lu_factor(a, tol);
    if f.singular {
        return Err(Error::SingularMatrix);
    }
    let x = f.solve(b.as_slice());
    // Residual acceptance check: catastrophically ill-conditioned systems are
    // reported as singular rather than silently returning garbage.
    let ax = a.mul_slice(&x)?;
    let mut resid = 0.0f64;
    for i in 0..a.n() {
        resid = resid.max((ax[i] - b[i]).abs());
    }
    if !resid.is_finite() || resid > tol.tol_solve * (1.0 + b.norm_inf()) {
        return Err(Error::SingularMatrix);
    }
    RealVector::new(x)
}

/// Determinant by partially pivoted elimination.
///
/// Returns exactly `0.0` when a pivot falls below its relative threshold;
/// this makes the sign of the returned value meaningful for minor tests.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::linalg::determinant;
/// use lcp_certify_core::{DenseMatrix, Tolerances};
///
/// let a = DenseMatrix::from_rows(&[&[4.0, 1.0], &[3.0, 5.0]]).unwrap();
/// assert_eq!(determinant(&a, &Tolerances::default()), 17.0);
/// ```
pub fn determinant(a: &DenseMatrix, tol: &Tolerances) -> f64 {
    lu_factor(a, tol).det()
}

/// Inverse by column-wise solves against the identity.
///
/// # Errors
///
/// [`Error::SingularMatrix`] if factorization meets a sub-threshold pivot or
/// the computed inverse fails the acceptance check
/// `max_ij |(A·X − I)_ij| ≤ tol_inv`.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::linalg::invert;
/// use lcp_certify_core::{DenseMatrix, Tolerances};
///
/// let a = DenseMatrix::from_rows(&[&[4.0, 1.0], &[3.0, 5.0]]).unwrap();
/// let inv = invert(&a, &Tolerances::default()).unwrap();
/// // 17 · A⁻¹ = [[5, −1], [−3, 4]]
/// assert!((17.0 * inv.get(0, 0) - 5.0).abs() < 1e-12);
/// assert!((17.0 * inv.get(0, 1) + 1.0).abs() < 1e-12);
/// assert!((17.0 * inv.get(1, 0) + 3.0).abs() < 1e-12);
/// assert!((17.0 * inv.get(1, 1) - 4.0).abs() < 1e-12);
/// ```
pub fn invert(a: &DenseMatrix, tol: &Tolerances) -> Result<DenseMatrix> {
    let n = a.n();
    let f = lu_factor(a, tol);
    if f.singular {
        return Err(Error::SingularMatrix);
    }
    let mut inv = vec![0.0f64; n * n];
    let mut e = vec![0.0f64; n];
    for j in 0..n {
        e[j] = 1.0;
        let col = f.solve(&e);
        e[j] = 0.0;
        for i in 0..n {
            inv[i * n + j] = col[i];
        }
    }
    let x = DenseMatrix::from_row_major(n, inv)?;
    // Acceptance check against the identity.
    let prod = a.mul_matrix(&x)?;
    let id = DenseMatrix::identity(n)?;
    let err = prod.sub(&id)?.norm_entrymax();
    if !err.is_finite() || err > tol.tol_inv {
        return Err(Error::SingularMatrix);
    }
    Ok(x)
}
