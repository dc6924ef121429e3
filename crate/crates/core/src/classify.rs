//! Matrix class tests: P-matrix, diagonal, H-matrix with positive diagonal.
//!
//! The P-matrix test is definitional — every one of the `2^n − 1` principal
//! minors is computed and required to be positive — because the error-bound
//! machinery leans on the *definition*, and a certified pipeline should not
//! substitute a cheaper sufficient condition where the definition is the
//! contract. The exponential cost is acceptable at the supported orders.

use alloc::vec::Vec;

use crate::config::{Tolerances, P_TEST_MAX_DIM};
use crate::error::{Error, Result};
use crate::linalg::{determinant, solve_linear, DenseMatrix, IndexSet, RealVector};

/// Outcome of running every classification test on one matrix.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MatrixClassification {
    /// Every principal minor is positive (up to the relative minor threshold).
    pub is_p: bool,
    /// Every off-diagonal entry is exactly zero.
    pub is_diagonal: bool,
    /// The comparison matrix is a nonsingular M-matrix and the diagonal is
    /// positive (an "H-matrix with positive diagonal", written H⁺ below).
    pub is_h_positive_diag: bool,
    /// When `is_p` is false: a principal index set whose minor is not
    /// positive (1-based in display/serialized form).
    pub witness: Option<IndexSet>,
    /// When `is_h_positive_diag` is true: the positive vector `ξ` solving
    /// `Ā ξ = (1, …, 1)ᵀ` against the comparison matrix `Ā`.
    pub comparison_vector: Option<RealVector>,
}

/// Tests whether every principal minor of `a` is positive.
///
/// Subsets are enumerated as bitmasks in increasing order, so the reported
/// witness is the first failing subset in that canonical order. A minor
/// counts as positive only if it exceeds `minor_eps` times the product of the
/// selected rows' largest absolute entries — a monotone scale proxy that
/// keeps the verdict invariant under uniform rescaling.
///
/// Returns `(true, None)` or `(false, Some(witness))`.
///
/// # Errors
///
/// [`Error::DimensionExceeded`] for orders above
/// [`P_TEST_MAX_DIM`](crate::config::P_TEST_MAX_DIM); the test walks all
/// `2^n − 1` principal submatrices.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::classify::is_p_matrix;
/// use lcp_certify_core::{DenseMatrix, Tolerances};
///
/// let a = DenseMatrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
/// let (ok, witness) = is_p_matrix(&a, &Tolerances::default()).unwrap();
/// assert!(!ok);
/// assert_eq!(witness.unwrap().to_string(), "{1}"); // a₁₁ = 0 is not positive
/// ```
pub fn is_p_matrix(a: &DenseMatrix, tol: &Tolerances) -> Result<(bool, Option<IndexSet>)> {
    let n = a.n();
    if n > P_TEST_MAX_DIM {
        return Err(Error::DimensionExceeded {
            limit: P_TEST_MAX_DIM,
            got: n,
        });
    }
    // Largest absolute entry per row: the scale basis for minor thresholds.
    let row_scale: Vec<f64> = (0..n)
        .map(|i| a.row(i).iter().fold(0.0f64, |m, &x| m.max(x.abs())))
        .collect();

    for mask in 1u64..(1u64 << n) {
        let mu = IndexSet::from_bitmask(n, mask)?;
        let sub = a.principal_submatrix(&mu)?;
        let minor = determinant(&sub, tol);
        let scale: f64 = mu.indices().iter().map(|&i| row_scale[i]).product();
        if minor <= tol.minor_eps * scale {
            return Ok((false, Some(mu)));
        }
    }
    Ok((true, None))
}

/// The comparison matrix `Ā`: `ā_ii = |a_ii|`, `ā_ij = −|a_ij|` for `i ≠ j`.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::classify::comparison_matrix;
/// use lcp_certify_core::DenseMatrix;
///
/// let a = DenseMatrix::from_rows(&[&[4.0, -1.0], &[2.0, -3.0]]).unwrap();
/// let c = comparison_matrix(&a);
/// assert_eq!(c.as_row_major(), &[4.0, -1.0, -2.0, 3.0]);
/// ```
pub fn comparison_matrix(a: &DenseMatrix) -> DenseMatrix {
    let n = a.n();
    let data: Vec<f64> = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            if i == j {
                a.get(i, j).abs()
            } else {
                -a.get(i, j).abs()
            }
        })
        .collect();
    DenseMatrix::from_row_major(n, data).expect("comparison matrix inherits a valid shape")
}

/// Tests whether `a` is an H-matrix with positive diagonal.
///
/// The test solves `Ā ξ = e` with `e = (1, …, 1)ᵀ` against the comparison
/// matrix: `a` qualifies exactly when the diagonal is positive, the solve
/// succeeds, and `ξ > 0` componentwise (then `Ā` is a nonsingular M-matrix).
/// A singular or indefinite comparison matrix yields `(false, None)` rather
/// than an error — "not in the class" is an answer, not a failure.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::classify::is_h_matrix_positive_diag;
/// use lcp_certify_core::{DenseMatrix, Tolerances};
///
/// let a = DenseMatrix::from_rows(&[&[2.0, -1.0], &[0.0, 1.0]]).unwrap();
/// let (ok, xi) = is_h_matrix_positive_diag(&a, &Tolerances::default());
/// assert!(ok);
/// assert_eq!(xi.unwrap().as_slice(), &[1.0, 1.0]); // Āξ = e at ξ = (1, 1)
/// ```
pub fn is_h_matrix_positive_diag(
    a: &DenseMatrix,
    tol: &Tolerances,
) -> (bool, Option<RealVector>) {
    let n = a.n();
    for i in 0..n {
        if a.get(i, i) <= 0.0 {
            return (false, None);
        }
    }
    let comparison = comparison_matrix(a);
    let e = RealVector::ones(n).expect("n ≥ 1");
    match solve_linear(&comparison, &e, tol) {
        Ok(xi) if xi.iter().all(|x| x > 0.0) => (true, Some(xi)),
        _ => (false, None),
    }
}

/// Runs every classification test and bundles the results.
///
/// # Errors
///
/// Propagates [`Error::DimensionExceeded`] from the P-matrix test.
pub fn classify_matrix(a: &DenseMatrix, tol: &Tolerances) -> Result<MatrixClassification> {
    let (is_p, witness) = is_p_matrix(a, tol)?;
    let (is_h, comparison_vector) = is_h_matrix_positive_diag(a, tol);
    Ok(MatrixClassification {
        is_p,
        is_diagonal: a.is_diagonal(),
        is_h_positive_diag: is_h,
        witness,
        comparison_vector,
    })
}
