//! Certified enclosures of the P-matrix constant β.
//!
//! For a P-matrix `A`, the constant
//!
//! ```text
//! β(A) = min { max_i z_i (Az)_i : ‖z‖∞ = 1 }
//! ```
//!
//! is strictly positive and controls how strongly the natural residual of an
//! LCP bounds the distance to the solution. β is defined by a nonconvex
//! minimization and is not directly computable, so this module assembles a
//! certified interval `[lo, hi]` containing it from four ingredients:
//!
//! - **σ upper bound** ([`sigma`]): the minimum, over principal submatrices
//!   whose spectrum is entirely real, of their smallest eigenvalue. For each
//!   such submatrix `A[μ,μ]` with floor `γ`, the matrix `A − γI` has a
//!   singular principal submatrix and hence is not a P-matrix, which forces
//!   `β(A) ≤ γ`. Submatrices with complex eigenvalues contribute no such
//!   certificate and are skipped.
//! - **t-recursion lower bound** ([`t_recursion_lower_bound`]): a quadratic
//!   recursion driven by σ and the largest off-diagonal magnitude; its final
//!   term is a (rapidly shrinking but certified) lower bound for β.
//! - **H-matrix lower bound** ([`h_matrix_lower_bound`]): for H-matrices with
//!   positive diagonal, a bound built from the solution of `Ā ξ = e` against
//!   the comparison matrix.
//! - **Face-grid enclosure** ([`beta_grid_enclosure`]): β is the minimum of
//!   `f(z) = max_i z_i (Az)_i` over the unit-cube surface; `f` is even, so it
//!   suffices to sample the `n` faces `{z_k = +1}` on a regular grid. The
//!   sampled minimum is an upper bound, and subtracting the Lipschitz slack
//!   `L·δ/2` (with `L = 2‖A‖∞`) certifies a lower bound.
//!
//! [`beta_enclosure`] combines everything applicable and returns the tightest
//! certified interval, tagged with the source of each endpoint. For diagonal
//! matrices β equals the smallest diagonal entry, and the enclosure collapses
//! to that exact point.

use alloc::vec;
use alloc::vec::Vec;

use crate::classify::{comparison_matrix, is_h_matrix_positive_diag, is_p_matrix};
use crate::config::{
    default_grid_spacing, Tolerances, DEFAULT_LAMBDA, EIG_MAX_DIM, GRID_MAX_DIM, LAMBDA_SWEEP,
};
use crate::error::{Error, Result};
use crate::linalg::{eigenvalue_pairs, solve_linear, spectrum_is_real, DenseMatrix, IndexSet,
    RealVector};

/// Hard budget on total grid evaluations, to keep refusals explicit instead
/// of letting a tiny spacing quietly run for hours.
const GRID_MAX_POINTS: u128 = 200_000_000;

/// Where the lower endpoint of a [`BetaEnclosure`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum LowerBoundSource {
    /// Final term of the quadratic recursion.
    TRecursion,
    /// Comparison-matrix bound for H-matrices with positive diagonal.
    HMatrix,
    /// Smallest diagonal entry of a diagonal matrix (exact).
    DiagonalExact,
    /// Grid sample minimum minus the Lipschitz covering slack.
    GridLipschitz,
}

/// Where the upper endpoint of a [`BetaEnclosure`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum UpperBoundSource {
    /// Spectral floor over all-real-spectrum principal submatrices.
    Sigma,
    /// Minimum of the objective over sampled face-grid points.
    GridSample,
    /// Smallest diagonal entry of a diagonal matrix (exact).
    DiagonalExact,
}

/// A certified interval `lo ≤ β(A) ≤ hi` with endpoint provenance.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BetaEnclosure {
    /// Certified lower bound, strictly positive.
    pub lo: f64,
    /// Certified upper bound.
    pub hi: f64,
    /// Which bound supplied `lo`.
    pub lo_source: LowerBoundSource,
    /// Which bound supplied `hi`.
    pub hi_source: UpperBoundSource,
    /// Actual grid spacing used, when a grid was swept.
    pub grid_spacing: Option<f64>,
    /// Lipschitz constant `2‖A‖∞` used for the grid slack, when swept.
    pub lipschitz_const: Option<f64>,
}

/// The full audit trail of the recursion lower bound.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TRecursionTrace {
    /// Weight used, in (0, 1).
    pub lambda: f64,
    /// Largest off-diagonal magnitude `m = max_{i≠j} |a_ij|`.
    pub m: f64,
    /// Scale `h = m² / σ(A)`.
    pub h: f64,
    /// The σ value the recursion was seeded with.
    pub sigma: f64,
    /// Terms `t_1, …, t_n`; the final term is the certified lower bound.
    pub t: Vec<f64>,
}

/// Denominator convention for [`h_matrix_lower_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum HBoundMode {
    /// `(min e)(min ξ) / (min ξ)²` — the transcribed form. On some inputs
    /// (e.g. `diag(2, 1)`) it exceeds β and is therefore *not* a valid lower
    /// bound; it is provided for side-by-side comparison only.
    AsWritten,
    /// `(min e)(min ξ) / (max ξ)²` — the conservative form used everywhere a
    /// certified lower bound is required.
    MaxDenominator,
}

/// Result of a face-grid sweep.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GridBound {
    /// Minimum of the objective over all sampled face points. An upper bound
    /// for β because every sample point lies on the unit sphere.
    pub sample_min: f64,
    /// `sample_min − L·δ/2` (for orders ≥ 2): a certified lower bound, since
    /// every surface point is within δ/2 of a sample in the face metric.
    pub lo: f64,
    /// The spacing actually used: the requested spacing rounded down to
    /// `2/m` with `m = ⌈2/requested⌉`, so that −1, 0, +1 are grid points.
    pub spacing: f64,
    /// Lipschitz constant `L = 2‖A‖∞` (induced norm) on the unit cube.
    pub lipschitz: f64,
}

/// Options for [`beta_enclosure`].
#[derive(Debug, Clone, PartialEq)]
pub struct BetaConfig {
    /// Numeric thresholds used by all subordinate computations.
    pub tolerances: Tolerances,
    /// Recursion weight; ignored when `sweep_lambda` is set.
    pub lambda: f64,
    /// Try nine weights 0.1, …, 0.9 and keep the best final term.
    pub sweep_lambda: bool,
    /// Grid spacing override; `None` uses the per-dimension default
    /// ([`default_grid_spacing`]).
    pub grid_spacing: Option<f64>,
}

impl Default for BetaConfig {
    fn default() -> Self {
        BetaConfig {
            tolerances: Tolerances::default(),
            lambda: DEFAULT_LAMBDA,
            sweep_lambda: false,
            grid_spacing: None,
        }
    }
}

/// The objective `f(z) = max_i z_i (Az)_i` whose minimum over `‖z‖∞ = 1`
/// defines β.
///
/// `f` is even and 2-homogeneous: `f(−z) = f(z)` exactly (floating-point
/// rounding commutes with global sign flips) and `f(tz) = t²·f(z)` in exact
/// arithmetic.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if `z` has the wrong length.
pub fn beta_objective(a: &DenseMatrix, z: &[f64]) -> Result<f64> {
    if z.len() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            got: z.len(),
        });
    }
    Ok(objective_unchecked(a, z))
}

#[inline]
fn objective_unchecked(a: &DenseMatrix, z: &[f64]) -> f64 {
    let n = a.n();
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let row = a.row(i);
        let mut dot = 0.0;
        for j in 0..n {
            dot += row[j] * z[j];
        }
        let v = z[i] * dot;
        if v > best {
            best = v;
        }
    }
    best
}

/// Spectral floors of every principal submatrix: for each index set `μ`,
/// `Some(min eigenvalue of A[μ,μ])` when that submatrix's spectrum is
/// entirely real, `None` otherwise.
///
/// Subsets are enumerated as bitmasks in increasing order. This is the
/// audit-trail version of [`sigma`].
///
/// # Errors
///
/// [`Error::DimensionExceeded`] above [`EIG_MAX_DIM`], and any eigenvalue
/// iteration failure.
pub fn sigma_components(
    a: &DenseMatrix,
    tol: &Tolerances,
) -> Result<Vec<(IndexSet, Option<f64>)>> {
    let n = a.n();
    if n > EIG_MAX_DIM {
        return Err(Error::DimensionExceeded {
            limit: EIG_MAX_DIM,
            got: n,
        });
    }
    let mut out = Vec::with_capacity((1usize << n) - 1);
    for mask in 1u64..(1u64 << n) {
        let mu = IndexSet::from_bitmask(n, mask)?;
        let sub = a.principal_submatrix(&mu)?;
        let pairs = eigenvalue_pairs(&sub, tol)?;
        let floor = if spectrum_is_real(&pairs, tol) {
            Some(
                pairs
                    .iter()
                    .map(|&(re, _)| re)
                    .fold(f64::INFINITY, f64::min),
            )
        } else {
            None
        };
        out.push((mu, floor));
    }
    Ok(out)
}

/// The spectral upper bound σ(A) for β(A): the minimum, over principal
/// submatrices whose spectrum is entirely real, of their smallest eigenvalue.
///
/// Every contributing submatrix `A[μ,μ]` with floor `γ` makes
/// `det(A[μ,μ] − γI) = 0`, so `A − γI` is not a P-matrix and `β(A) ≤ γ`.
/// Submatrices with complex eigenvalues are skipped — a complex eigenvalue
/// pins no real shift — and singletons always contribute, so σ is always
/// defined.
///
/// # Errors
///
/// [`Error::DimensionExceeded`] above [`EIG_MAX_DIM`], plus eigenvalue
/// iteration failures. The precondition that `A` is a P-matrix is *not*
/// checked here; [`beta_enclosure`] checks it once at the gate.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::beta::sigma;
/// use lcp_certify_core::{DenseMatrix, Tolerances};
///
/// let a = DenseMatrix::from_rows(&[&[4.0, 1.0, 2.0], &[3.0, 5.0, -1.0], &[-1.0, -2.0, 7.0]]).unwrap();
/// let s = sigma(&a, &Tolerances::default()).unwrap();
/// assert!((s - 2.69722436).abs() < 1e-8); // (9 − √13)/2 from the {1,2} block
/// ```
pub fn sigma(a: &DenseMatrix, tol: &Tolerances) -> Result<f64> {
    let comps = sigma_components(a, tol)?;
    let best = comps
        .iter()
        .filter_map(|(_, floor)| *floor)
        .fold(f64::INFINITY, f64::min);
    debug_assert!(best.is_finite(), "singleton spectra are always real");
    Ok(best)
}

/// The quadratic recursion lower bound for β(A).
///
/// With `m = max_{i≠j} |a_ij|`, `h = m²/σ(A)`, and weight `λ ∈ (0, 1)`:
///
/// ```text
/// t_1 = min(σ(A), λh),    t_{i+1} = (1−λ)² t_i² / h,
/// ```
///
/// and `t_n ≤ β(A)`. The terms collapse quadratically, so this bound is
/// usually many orders of magnitude below the grid bound — its value is that
/// it needs no sweep and certifies positivity on its own.
///
/// # Errors
///
/// - [`Error::DiagonalMatrix`] when `m = 0` (use the exact diagonal value).
/// - [`Error::LambdaOutOfRange`] unless `0 < λ < 1`.
/// - [`Error::SigmaNotPositive`] when σ ≤ 0 (the input was not a P-matrix).
/// - Propagates σ's dimension cap.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::beta::t_recursion_lower_bound;
/// use lcp_certify_core::{DenseMatrix, Tolerances};
///
/// let a = DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
/// let trace = t_recursion_lower_bound(&a, 0.5, &Tolerances::default()).unwrap();
/// assert_eq!(trace.t, vec![0.5, 0.0625]); // σ = 1, m = 1, h = 1
/// ```
pub fn t_recursion_lower_bound(
    a: &DenseMatrix,
    lambda: f64,
    tol: &Tolerances,
) -> Result<TRecursionTrace> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::LambdaOutOfRange { lambda });
    }
    let n = a.n();
    let mut m = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m = m.max(a.get(i, j).abs());
            }
        }
    }
    if m == 0.0 {
        return Err(Error::DiagonalMatrix);
    }
    let sig = sigma(a, tol)?;
    if sig <= 0.0 {
        return Err(Error::SigmaNotPositive { sigma: sig });
    }
    let h = m * m / sig;
    let mut t = Vec::with_capacity(n);
    let mut cur = sig.min(lambda * h);
    t.push(cur);
    let contraction = (1.0 - lambda) * (1.0 - lambda);
    for _ in 1..n {
        cur = contraction * cur * cur / h;
        t.push(cur);
    }
    Ok(TRecursionTrace {
        lambda,
        m,
        h,
        sigma: sig,
        t,
    })
}

/// The comparison-matrix lower bound for β(A), valid for H-matrices with
/// positive diagonal.
///
/// Solves `Ā ξ = e` against the comparison matrix `Ā` for a caller-chosen
/// positive probe `e` (the canonical probe is all-ones) and returns
/// `(min e)(min ξ) / D²` with `D` chosen by `mode` — see [`HBoundMode`] for
/// why only [`HBoundMode::MaxDenominator`] yields a certified lower bound.
///
/// # Errors
///
/// - [`Error::NonPositiveParameter`] if any `e_i ≤ 0`.
/// - [`Error::NotHMatrix`] if the diagonal is not positive, the comparison
///   matrix is singular, or `ξ` is not positive.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::beta::{h_matrix_lower_bound, HBoundMode};
/// use lcp_certify_core::{DenseMatrix, RealVector, Tolerances};
///
/// let a = DenseMatrix::from_diagonal(&[2.0, 1.0]).unwrap();
/// let e = RealVector::ones(2).unwrap();
/// let tol = Tolerances::default();
/// // β(diag(2,1)) = 1: the transcribed form overshoots, the conservative one doesn't.
/// assert_eq!(h_matrix_lower_bound(&a, &e, HBoundMode::AsWritten, &tol).unwrap(), 2.0);
/// assert_eq!(h_matrix_lower_bound(&a, &e, HBoundMode::MaxDenominator, &tol).unwrap(), 0.5);
/// ```
pub fn h_matrix_lower_bound(
    a: &DenseMatrix,
    e: &RealVector,
    mode: HBoundMode,
    tol: &Tolerances,
) -> Result<f64> {
    if e.len() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            got: e.len(),
        });
    }
    for x in e.iter() {
        if x <= 0.0 {
            return Err(Error::NonPositiveParameter {
                name: "e",
                value: x,
            });
        }
    }
    for i in 0..a.n() {
        if a.get(i, i) <= 0.0 {
            return Err(Error::NotHMatrix);
        }
    }
    let comparison = comparison_matrix(a);
    let xi = solve_linear(&comparison, e, tol).map_err(|_| Error::NotHMatrix)?;
    if !xi.iter().all(|x| x > 0.0) {
        return Err(Error::NotHMatrix);
    }
    let min_e = e.iter().fold(f64::INFINITY, f64::min);
    let min_xi = xi.iter().fold(f64::INFINITY, f64::min);
    let max_xi = xi.iter().fold(f64::NEG_INFINITY, f64::max);
    let denom = match mode {
        HBoundMode::AsWritten => min_xi * min_xi,
        HBoundMode::MaxDenominator => max_xi * max_xi,
    };
    Ok(min_e * min_xi / denom)
}

/// Grid coordinate `−1 + i·(2/m)` computed as `(2i − m)/m` so that the
/// endpoints ±1 and (for even `m`) the midpoint 0 are exact.
#[inline]
fn grid_coord(i: usize, m: usize) -> f64 {
    (2.0 * i as f64 - m as f64) / m as f64
}

/// Minimum of the objective over one work unit: face `{z_k = +1}` with the
/// first free axis pinned to grid index `i0` and all remaining free axes
/// swept exhaustively.
fn scan_unit(a: &DenseMatrix, k: usize, i0: usize, m: usize) -> f64 {
    let n = a.n();
    let mut z = vec![0.0f64; n];
    z[k] = 1.0;
    let free: Vec<usize> = (0..n).filter(|&j| j != k).collect();
    if free.is_empty() {
        return objective_unchecked(a, &z);
    }
    z[free[0]] = grid_coord(i0, m);
    let rest = &free[1..];
    let mut idx = vec![0usize; rest.len()];
    let mut best = f64::INFINITY;
    'points: loop {
        for (pos, &axis) in rest.iter().enumerate() {
            z[axis] = grid_coord(idx[pos], m);
        }
        let f = objective_unchecked(a, &z);
        if f < best {
            best = f;
        }
        let mut pos = 0;
        loop {
            if pos == rest.len() {
                break 'points;
            }
            idx[pos] += 1;
            if idx[pos] <= m {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
    best
}

/// Samples the objective on the `n` faces `{z_k = +1}` of the unit cube and
/// certifies an enclosure of β from the samples.
///
/// Since `f` is even, the sampled faces cover the whole sphere up to sign,
/// so `sample_min ≥ β`. Every surface point is within `δ/2` of a sample in
/// the free coordinates, and `f` is Lipschitz on the cube with constant
/// `L = 2‖A‖∞`, so `β ≥ sample_min − L·δ/2 = lo` (for order 1 the two-point
/// sphere is sampled exactly and `lo = sample_min`).
///
/// The requested spacing is rounded to `2/m`, `m = ⌈2/spacing⌉`, so the
/// sample set always includes the corners.
///
/// # Errors
///
/// - [`Error::DimensionExceeded`] above [`GRID_MAX_DIM`].
/// - [`Error::NonPositiveParameter`] for a non-positive or non-finite
///   spacing, or one so small the sweep would exceed the evaluation budget.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::beta::beta_grid_enclosure;
/// use lcp_certify_core::{DenseMatrix, Tolerances};
///
/// let a = DenseMatrix::identity(2).unwrap();
/// let g = beta_grid_enclosure(&a, 0.01, &Tolerances::default()).unwrap();
/// assert_eq!(g.sample_min, 1.0);           // f ≡ 1 on the faces
/// assert!((g.lo - 0.99).abs() < 1e-12);    // 1 − L·δ/2 with L = 2
/// ```
pub fn beta_grid_enclosure(
    a: &DenseMatrix,
    spacing: f64,
    _tol: &Tolerances,
) -> Result<GridBound> {
    let n = a.n();
    if n > GRID_MAX_DIM {
        return Err(Error::DimensionExceeded {
            limit: GRID_MAX_DIM,
            got: n,
        });
    }
    if !(spacing > 0.0) || !spacing.is_finite() {
        return Err(Error::NonPositiveParameter {
            name: "spacing",
            value: spacing,
        });
    }
    let m = (libm::ceil(2.0 / spacing) as usize).max(1);
    let points = (n as u128) * ((m as u128) + 1).pow(n as u32 - 1);
    if points > GRID_MAX_POINTS {
        return Err(Error::NonPositiveParameter {
            name: "spacing (grid would exceed the evaluation budget)",
            value: spacing,
        });
    }
    let refined = 2.0 / m as f64;
    let lipschitz = 2.0 * a.norm_inf_induced();

    let units: Vec<(usize, usize)> = if n == 1 {
        vec![(0, 0)]
    } else {
        (0..n)
            .flat_map(|k| (0..=m).map(move |i0| (k, i0)))
            .collect()
    };

    #[cfg(feature = "parallel")]
    let sample_min = {
        use rayon::prelude::*;
        units
            .par_iter()
            .map(|&(k, i0)| scan_unit(a, k, i0, m))
            .reduce(|| f64::INFINITY, f64::min)
    };
    #[cfg(not(feature = "parallel"))]
    let sample_min = units
        .iter()
        .map(|&(k, i0)| scan_unit(a, k, i0, m))
        .fold(f64::INFINITY, f64::min);

    let lo = if n == 1 {
        // The sphere {±1} is sampled exactly (f is even), no covering slack.
        sample_min
    } else {
        sample_min - lipschitz * refined / 2.0
    };
    Ok(GridBound {
        sample_min,
        lo,
        spacing: refined,
        lipschitz,
    })
}

/// Everything [`beta_enclosure`] computed along the way, for reporting.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BetaAnalysis {
    /// The combined certified interval.
    pub enclosure: BetaEnclosure,
    /// σ(A), when the spectral path ran (not run for diagonal matrices).
    pub sigma: Option<f64>,
    /// Recursion audit trail, when the recursion ran.
    pub t_trace: Option<TRecursionTrace>,
    /// Conservative H-matrix bound, when the matrix qualified.
    pub h_bound: Option<f64>,
    /// Grid sweep results, when the order permitted a sweep.
    pub grid: Option<GridBound>,
}

/// Computes the tightest certified enclosure of β(A) from every applicable
/// bound, with the full audit trail.
///
/// Diagonal matrices short-circuit to the exact point `min_i a_ii`. Otherwise
/// the lower endpoint is the best of {recursion, H-matrix (conservative
/// mode), grid − slack} and the upper endpoint the best of {σ, grid sample
/// minimum}. `0 < lo ≤ hi` is asserted — a violation would mean one of the
/// bound proofs is wrong, which is a bug, not an input condition.
///
/// # Errors
///
/// - [`Error::NotPMatrix`] (with witness) if `A` fails the definitional test.
/// - Dimension caps of the subordinate computations ([`EIG_MAX_DIM`] for the
///   spectral path on non-diagonal input).
pub fn beta_analysis(a: &DenseMatrix, cfg: &BetaConfig) -> Result<BetaAnalysis> {
    let tol = &cfg.tolerances;
    let n = a.n();

    if a.is_diagonal() {
        // Exact path: β of a positive diagonal matrix is its smallest entry.
        let mut min_diag = f64::INFINITY;
        for i in 0..n {
            let d = a.get(i, i);
            if d <= 0.0 {
                return Err(Error::NotPMatrix {
                    witness: IndexSet::new(n, vec![i])?,
                });
            }
            min_diag = min_diag.min(d);
        }
        return Ok(BetaAnalysis {
            enclosure: BetaEnclosure {
                lo: min_diag,
                hi: min_diag,
                lo_source: LowerBoundSource::DiagonalExact,
                hi_source: UpperBoundSource::DiagonalExact,
                grid_spacing: None,
                lipschitz_const: None,
            },
            sigma: None,
            t_trace: None,
            h_bound: None,
            grid: None,
        });
    }

    let (isp, witness) = is_p_matrix(a, tol)?;
    if !isp {
        return Err(Error::NotPMatrix {
            witness: witness.expect("a failing P-test always carries a witness"),
        });
    }

    // Recursion bound (always applicable for non-diagonal P-matrices).
    let t_trace = if cfg.sweep_lambda {
        let mut best: Option<TRecursionTrace> = None;
        for &lam in LAMBDA_SWEEP.iter() {
            let trace = t_recursion_lower_bound(a, lam, tol)?;
            let cur = *trace.t.last().expect("trace has n ≥ 1 terms");
            if best
                .as_ref()
                .map(|b| cur > *b.t.last().expect("trace has n ≥ 1 terms"))
                .unwrap_or(true)
            {
                best = Some(trace);
            }
        }
        best.expect("sweep evaluated at least one weight")
    } else {
        t_recursion_lower_bound(a, cfg.lambda, tol)?
    };
    let sig = t_trace.sigma;

    let mut lo = *t_trace.t.last().expect("trace has n ≥ 1 terms");
    let mut lo_source = LowerBoundSource::TRecursion;
    let mut hi = sig;
    let mut hi_source = UpperBoundSource::Sigma;

    // Conservative H-matrix bound, when the class test passes.
    let h_bound = match is_h_matrix_positive_diag(a, tol) {
        (true, Some(_)) => {
            let e = RealVector::ones(n)?;
            let v = h_matrix_lower_bound(a, &e, HBoundMode::MaxDenominator, tol)?;
            if v > lo {
                lo = v;
                lo_source = LowerBoundSource::HMatrix;
            }
            Some(v)
        }
        _ => None,
    };

    // Grid sweep, when the order permits.
    let grid = if n <= GRID_MAX_DIM {
        let spacing = cfg.grid_spacing.unwrap_or_else(|| default_grid_spacing(n));
        let g = beta_grid_enclosure(a, spacing, tol)?;
        if g.lo > lo {
            lo = g.lo;
            lo_source = LowerBoundSource::GridLipschitz;
        }
        if g.sample_min < hi {
            hi = g.sample_min;
            hi_source = UpperBoundSource::GridSample;
        }
        Some(g)
    } else {
        None
    };

    assert!(
        lo > 0.0 && lo <= hi,
        "enclosure ordering violated: lo = {lo}, hi = {hi} — a bound proof is broken"
    );

    Ok(BetaAnalysis {
        enclosure: BetaEnclosure {
            lo,
            hi,
            lo_source,
            hi_source,
            grid_spacing: grid.as_ref().map(|g| g.spacing),
            lipschitz_const: grid.as_ref().map(|g| g.lipschitz),
        },
        sigma: Some(sig),
        t_trace: Some(t_trace),
        h_bound,
        grid,
    })
}

/// The combined certified enclosure of β(A); see [`beta_analysis`] for the
/// version that also returns the audit trail.
pub fn beta_enclosure(a: &DenseMatrix, cfg: &BetaConfig) -> Result<BetaEnclosure> {
    beta_analysis(a, cfg).map(|r| r.enclosure)
}
