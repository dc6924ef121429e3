//! Error type shared by every fallible operation in the crate.

use alloc::string::String;

use crate::linalg::IndexSet;

/// All failure modes surfaced by this crate.
///
/// Variants are split between *input* problems (dimension mismatches, non-finite
/// entries, out-of-range parameters), *structural* problems (the matrix does not
/// belong to the class a bound requires), and *numerical* problems (singular
/// systems, eigenvalue iteration failure). Callers that map errors to process
/// exit codes can treat `NotPMatrix` and `NoSolution` specially; everything else
/// is an ordinary usage or input error.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A matrix or vector was constructed with zero rows/entries.
    #[error("dimension must be at least 1")]
    EmptyDimension,

    /// A matrix constructor received rows of unequal length, or a row count
    /// that does not match the declared order.
    #[error("matrix is not square: {rows} rows but row {bad_row} has {bad_len} entries")]
    NonSquare {
        /// Number of rows supplied.
        rows: usize,
        /// Index (0-based) of the offending row.
        bad_row: usize,
        /// Length of the offending row.
        bad_len: usize,
    },

    /// An entry was NaN or infinite.
    #[error("non-finite entry at position {position}")]
    NonFinite {
        /// Human-readable location of the bad entry, e.g. `"(2,1)"` or `"3"`.
        position: String,
    },

    /// Two operands have incompatible dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch {
        /// Dimension required by the receiving operand.
        expected: usize,
        /// Dimension actually supplied.
        got: usize,
    },

    /// An index set used to select a principal submatrix was empty.
    #[error("index set must be nonempty")]
    EmptyIndexSet,

    /// An index set contained an index outside `0..n` or a repeated /
    /// out-of-order index.
    #[error("invalid index set: index {index} out of range or out of order for dimension {n}")]
    InvalidIndexSet {
        /// The offending index (0-based).
        index: usize,
        /// Ambient dimension.
        n: usize,
    },

    /// The input dimension exceeds the documented cap for the operation.
    #[error("dimension {got} exceeds the supported maximum {limit} for this operation")]
    DimensionExceeded {
        /// Documented cap.
        limit: usize,
        /// Dimension supplied.
        got: usize,
    },

    /// Gaussian elimination met a pivot below the relative threshold.
    #[error("matrix is singular to working precision")]
    SingularMatrix,

    /// The eigenvalue iteration did not converge within its iteration budget.
    #[error("eigenvalue iteration failed to converge")]
    EigenNonConvergence,

    /// The matrix is not a P-matrix; carries a principal index set whose minor
    /// is non-positive (1-based in display form).
    #[error("matrix is not a P-matrix: principal minor for {witness} is not positive")]
    NotPMatrix {
        /// A violating principal index set.
        witness: IndexSet,
    },

    /// The matrix is not an H-matrix with positive diagonal, so the
    /// comparison-matrix bound does not apply.
    #[error("matrix is not an H-matrix with positive diagonal")]
    NotHMatrix,

    /// The t-recursion needs at least one nonzero off-diagonal entry.
    #[error("matrix is diagonal: the recursion bound is undefined (use the exact diagonal value)")]
    DiagonalMatrix,

    /// The recursion weight must lie strictly between 0 and 1.
    #[error("lambda = {lambda} is outside the open interval (0, 1)")]
    LambdaOutOfRange {
        /// Value supplied.
        lambda: f64,
    },

    /// The spectral lower-bound scaffold σ(A) came out non-positive, which
    /// cannot happen for a P-matrix; the input violates the precondition.
    #[error("sigma = {sigma} is not positive; input is not a P-matrix")]
    SigmaNotPositive {
        /// Computed value.
        sigma: f64,
    },

    /// A grid spacing, probe vector, or similar strictly-positive parameter
    /// was zero or negative.
    #[error("parameter {name} must be strictly positive, got {value}")]
    NonPositiveParameter {
        /// Parameter name as it appears in the API.
        name: &'static str,
        /// Value supplied.
        value: f64,
    },

    /// A certified bound was asked to divide by a β bound that is not
    /// strictly positive.
    #[error("beta bound {value} is not strictly positive; no certificate can be formed")]
    NonPositiveBetaBound {
        /// Value supplied.
        value: f64,
    },

    /// Exhaustive enumeration accepted no complementary basis.
    #[error("no complementary basis yields a feasible solution")]
    NoSolution,
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
