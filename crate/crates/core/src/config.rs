//! Central numeric configuration: tolerances, dimension caps, and defaults.
//!
//! Every tolerance used anywhere in the crate lives in [`Tolerances`] so that a
//! certificate or report can snapshot the exact conditions it was computed
//! under. Functions take `&Tolerances` rather than reading globals; tests and
//! the command-line front end use [`Tolerances::default`].

/// Largest matrix order accepted by the eigenvalue routines.
///
/// The Hessenberg + implicit-double-shift QR iteration is dense and cubic; the
/// cap keeps it in territory where the iteration budget below is generous.
pub const EIG_MAX_DIM: usize = 12;

/// Largest matrix order accepted by the definitional P-matrix test, which
/// examines all `2^n − 1` principal minors.
pub const P_TEST_MAX_DIM: usize = 20;

/// Largest matrix order accepted by the exhaustive complementary-basis solver,
/// which tries all `2^n` candidate supports.
pub const ENUM_MAX_DIM: usize = 16;

/// Largest matrix order accepted by the face-grid enclosure, which samples
/// `n·(m+1)^(n−1)` points for `m` steps per axis.
pub const GRID_MAX_DIM: usize = 4;

/// Default weight for the recursion lower bound when the caller does not
/// choose one. The recursion is valid for any weight in (0, 1); 0.5 balances
/// the first term `min(σ, λ·h)` against the contraction factor `(1 − λ)²`.
pub const DEFAULT_LAMBDA: f64 = 0.5;

/// Weights scanned by the optional sweep mode of the recursion bound.
pub const LAMBDA_SWEEP: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

/// Default grid spacing for the face-grid enclosure. Three-dimensional faces
/// are cheap to sweep finely; four-dimensional ones are not, so the default
/// coarsens with dimension to keep run time in interactive range.
pub fn default_grid_spacing(n: usize) -> f64 {
    if n <= 3 {
        0.01
    } else {
        0.05
    }
}

/// All numeric thresholds used by the crate, in one serializable record.
///
/// Each field documents both its role and the rationale for its default. The
/// defaults are deliberate: loose enough that honest floating-point noise
/// (roughly `1e−16 · scale` per operation) never trips them on well-scaled
/// input, tight enough that genuine structural failures do.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tolerances {
    /// Relative pivot threshold for Gaussian elimination. A pivot whose
    /// magnitude is at most `pivot_eps` times the largest absolute entry of
    /// the original column is treated as zero (the matrix is reported
    /// singular, or the minor is reported as 0). Relative, so row scaling
    /// does not change the verdict.
    pub pivot_eps: f64,

    /// Acceptance threshold for linear solves: the computed `x` must satisfy
    /// `‖Ax − b‖∞ ≤ tol_solve · (1 + ‖b‖∞)`.
    pub tol_solve: f64,

    /// Acceptance threshold for matrix inversion: the computed `X` must
    /// satisfy `max_ij |(AX − I)_ij| ≤ tol_inv`.
    pub tol_inv: f64,

    /// Classification threshold for eigenvalues: a computed eigenvalue with
    /// `|imaginary part| ≤ tol_imag · (1 + spectral scale)` counts as real.
    /// Scaled so that conjugate pairs produced by rounding on genuinely real
    /// spectra are absorbed, while honest complex pairs are not.
    pub tol_imag: f64,

    /// Relative threshold for principal minors in the P-matrix test: the
    /// minor must exceed `minor_eps` times the product of the selected rows'
    /// largest absolute entries (a crude but monotone scale for the minor's
    /// own magnitude).
    pub minor_eps: f64,

    /// Absolute feasibility slack for LCP candidates: components of `z` and
    /// `w = Az + q` may be as low as `−tol_feas` and still count as
    /// nonnegative. Absolute, because the solver works on instances whose
    /// entries are within a few orders of magnitude of 1.
    pub tol_feas: f64,

    /// Absolute complementarity slack: products `z_i · w_i` up to `tol_comp`
    /// in magnitude count as complementary.
    pub tol_comp: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            pivot_eps: 1e-12,
            tol_solve: 1e-9,
            tol_inv: 1e-9,
            tol_imag: 1e-9,
            minor_eps: 1e-10,
            tol_feas: 1e-9,
            tol_comp: 1e-9,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_positive_and_small() {
        let t = Tolerances::default();
        for v in [
            t.pivot_eps,
            t.tol_solve,
            t.tol_inv,
            t.tol_imag,
            t.minor_eps,
            t.tol_feas,
            t.tol_comp,
        ] {
            assert!(v > 0.0 && v < 1e-6, "tolerance {v} out of expected range");
        }
    }

    #[test]
    fn grid_spacing_coarsens_with_dimension() {
        assert_eq!(default_grid_spacing(1), 0.01);
        assert_eq!(default_grid_spacing(3), 0.01);
        assert_eq!(default_grid_spacing(4), 0.05);
    }
}
