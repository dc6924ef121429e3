//! Dense linear algebra primitives sized for certification work.
//!
//! Everything here is written for small, dense, well-scaled matrices (orders
//! in the tens, not thousands): row-major storage, partial-pivoted
//! elimination, and an implicit-double-shift QR iteration for eigenvalues.
//! The priorities are determinism, explicit tolerances, and checkable
//! postconditions — not asymptotic throughput.

mod eigen;
mod index_set;
mod matrix;
mod solve;
mod vector;

pub use eigen::real_eigenvalues;
pub(crate) use eigen::{eigenvalue_pairs, spectrum_is_real};
pub use index_set::IndexSet;
pub use matrix::DenseMatrix;
pub use solve::{determinant, invert, solve_linear};
pub use vector::RealVector;
