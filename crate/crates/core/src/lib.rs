//! Certified error bounds for linear complementarity problems with P-matrices.
//!
//! Given a square matrix `A` and a vector `q`, the linear complementarity problem
//! LCP(A, q) asks for `z ≥ 0` with `w = Az + q ≥ 0` and `zᵀw = 0`. When `A` is a
//! P-matrix (every principal minor positive) the solution `z*` exists and is unique,
//! and the distance from any trial point `d` to `z*` can be bracketed by computable
//! quantities built from the natural residual `r(d) = ‖min(d, Ad + q)‖∞` and the
//! constant
//!
//! ```text
//! β(A) = min { max_i z_i (Az)_i : ‖z‖∞ = 1 },
//! ```
//!
//! which is finite and positive exactly for P-matrices. β(A) is not directly
//! computable, so this crate produces a certified enclosure `[lo, hi] ∋ β(A)` and
//! substitutes the conservative end of the enclosure into every bound, widening but
//! never invalidating the bracket.
//!
//! The crate is organised by concern:
//!
//! - [`linalg`] — dense vectors/matrices, norms, the plus function, principal
//!   submatrices, pivoted solves and determinants, and real eigenvalues of small
//!   matrices.
//! - [`classify`] — P-matrix, diagonal, and H-matrix-with-positive-diagonal tests,
//!   plus the comparison matrix.
//! - [`beta`] — lower and upper bounds on β(A) (σ upper bound, t-recursion,
//!   H-matrix bound, Lipschitz-certified face grid) aggregated into a
//!   [`beta::BetaEnclosure`].
//! - [`lcp`] — residuals, the exhaustive complementary-basis reference solver,
//!   solution verification, solution-norm brackets, and absolute/relative error
//!   certificates.
//! - [`gen`] — seeded, bitwise-reproducible random instance families for property
//!   tests and validation runs.
//! - [`validate`] — batch drivers that exercise the certificate and enclosure
//!   guarantees over seeded instance sweeps and tally the outcomes.
//!
//! All tolerances live in one record, [`config::Tolerances`], so that every
//! certificate can state the exact conditions under which it was computed.
//!
//! The crate is `no_std` (with `alloc`); enable the `parallel` feature to scan
//! enclosure grids with rayon, and `serde` to serialize result types.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod beta;
pub mod classify;
pub mod config;
pub mod error;
pub mod gen;
pub mod lcp;
pub mod linalg;
pub mod validate;

pub use beta::{beta_enclosure, BetaConfig, BetaEnclosure};
pub use classify::MatrixClassification;
pub use config::Tolerances;
pub use error::Error;
pub use gen::{Family, GenSpec};
pub use lcp::{BoundCertificate, LcpInstance, LcpSolution, NormMode};
pub use linalg::{DenseMatrix, IndexSet, RealVector};
