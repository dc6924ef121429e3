//! Linear complementarity instances, residuals, the exhaustive reference
//! solver, and certified error-bound certificates.
//!
//! The solver here is deliberately brute force: it tries every candidate
//! support set `α ⊆ {1, …, n}`, solves `A[α,α] z_α = −q_α`, and accepts the
//! first support whose solution is feasible. That is `O(2^n)` and completely
//! transparent — the right shape for a ground-truth oracle that certificates
//! are judged against, and for nothing else.

use alloc::vec;
use alloc::vec::Vec;

use crate::beta::BetaEnclosure;
use crate::classify::is_p_matrix;
use crate::config::{Tolerances, ENUM_MAX_DIM};
use crate::error::{Error, Result};
use crate::linalg::{solve_linear, DenseMatrix, IndexSet, RealVector};

/// An LCP instance: find `z ≥ 0` with `w = Az + q ≥ 0` and `zᵀw = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LcpInstance {
    /// The matrix `A`.
    pub a: DenseMatrix,
    /// The offset vector `q`, same dimension as `A`.
    pub q: RealVector,
}

impl LcpInstance {
    /// Bundles a matrix and offset, checking dimensions.
    pub fn new(a: DenseMatrix, q: RealVector) -> Result<Self> {
        if q.len() != a.n() {
            return Err(Error::DimensionMismatch {
                expected: a.n(),
                got: q.len(),
            });
        }
        Ok(LcpInstance { a, q })
    }

    /// Instance dimension.
    pub fn n(&self) -> usize {
        self.a.n()
    }
}

/// A solution produced by the enumeration solver.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LcpSolution {
    /// The solution vector `z`.
    pub z: RealVector,
    /// The slack vector `w = Az + q`.
    pub w: RealVector,
    /// The support set the solver accepted (`None` when `z = 0` solved the
    /// instance, i.e. the empty support).
    pub basis: Option<IndexSet>,
    /// Indices with `z_i > 0` (`None` when no entry is positive).
    pub active: Option<IndexSet>,
    /// Largest complementarity product `max_i z_i·w_i` (0 for order-0 edge
    /// cases; tiny positive values are solver roundoff).
    pub comp_gap: f64,
}

/// One constraint violated by a candidate solution.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case", tag = "kind"))]
pub enum Violation {
    /// `z_i < −tol_feas`.
    NegativeZ {
        /// 1-based component index.
        index: usize,
        /// The offending value.
        value: f64,
    },
    /// `w_i < −tol_feas`.
    NegativeW {
        /// 1-based component index.
        index: usize,
        /// The offending value.
        value: f64,
    },
    /// `|z_i · w_i| > tol_comp`.
    Complementarity {
        /// 1-based component index.
        index: usize,
        /// The offending product.
        product: f64,
    },
}

/// Which matrix norm enters the certificate coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum NormMode {
    /// Largest entry magnitude `max_ij |a_ij|`. Cheaper and smaller, but not
    /// an operator norm: bounds computed with it can fail. Retained for
    /// side-by-side comparison; failures are findings, not errors.
    Entrymax,
    /// Operator norm `max_i Σ_j |a_ij|` induced by `‖·‖∞` — the norm for
    /// which the bound inequalities are provable. The default.
    #[default]
    Induced,
}

impl NormMode {
    /// The norm value for `a` under this mode.
    pub fn of(self, a: &DenseMatrix) -> f64 {
        match self {
            NormMode::Entrymax => a.norm_entrymax(),
            NormMode::Induced => a.norm_inf_induced(),
        }
    }

    /// Stable identifier (`entrymax` / `induced`).
    pub fn as_str(self) -> &'static str {
        match self {
            NormMode::Entrymax => "entrymax",
            NormMode::Induced => "induced",
        }
    }
}

impl core::str::FromStr for NormMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "entrymax" => Ok(NormMode::Entrymax),
            "induced" => Ok(NormMode::Induced),
            _ => Err(Error::NonFinite {
                position: alloc::format!("unknown norm mode '{s}'"),
            }),
        }
    }
}

impl core::fmt::Display for NormMode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A certified bracket on the distance from a trial point `d` to the unique
/// solution `z*`.
///
/// All bounds substitute the *conservative* end of the β enclosures: upper
/// bounds divide by certified lower bounds, never by point estimates, so a
/// true β only makes the stated interval wider than necessary, never wrong.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundCertificate {
    /// The trial point the certificate is about.
    pub d: RealVector,
    /// Natural residual `r(d) = ‖min(d, Ad + q)‖∞`.
    pub residual: f64,
    /// Which matrix norm entered the coefficients.
    pub norm_used: NormMode,
    /// The norm value `N = ‖A‖` under `norm_used`.
    pub matrix_norm: f64,
    /// Certified lower bound for β(A) used in upper bounds.
    pub beta_lo: f64,
    /// Certified upper bound for β(A) (reported for context).
    pub beta_hi: f64,
    /// Certified lower bound for β(A⁻¹) used in the relative upper bound.
    pub beta_inv_lo: f64,
    /// Absolute-error lower bound `r / (1 + N) ≤ ‖z* − d‖∞`.
    pub abs_lo: f64,
    /// Absolute-error upper bound `‖z* − d‖∞ ≤ (1 + N)·r / β_lo`.
    pub abs_hi: f64,
    /// `‖(−q)₊‖∞`, the scale of the relative bounds.
    pub q_plus_norm: f64,
    /// Relative-error lower bound, present iff `‖(−q)₊‖∞ > 0`.
    pub rel_lo: Option<f64>,
    /// Relative-error upper bound, present iff `‖(−q)₊‖∞ > 0`.
    pub rel_hi: Option<f64>,
    /// Certified lower bound for `‖z*‖∞`.
    pub sol_norm_lo: f64,
    /// Certified upper bound for `‖z*‖∞`.
    pub sol_norm_hi: f64,
}

/// The natural residual `r(d) = ‖min(d, Ad + q)‖∞`.
///
/// `r(d) = 0` exactly when `d` solves the instance: the componentwise
/// minimum is zero iff both `d` and `Ad + q` are nonnegative with a zero
/// factor in every component. Algebraically `min(d, w) = d − (d − w)₊`, which
/// is how the plus function enters; the direct min form is evaluated here
/// because it avoids an intermediate rounding.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::lcp::{residual, LcpInstance};
/// use lcp_certify_core::{DenseMatrix, RealVector};
///
/// let inst = LcpInstance::new(
///     DenseMatrix::identity(2).unwrap(),
///     RealVector::from_slice(&[-1.0, -2.0]).unwrap(),
/// ).unwrap();
/// let z = RealVector::from_slice(&[1.0, 2.0]).unwrap();
/// assert_eq!(residual(&inst, &z).unwrap(), 0.0);
/// ```
pub fn residual(inst: &LcpInstance, d: &RealVector) -> Result<f64> {
    if d.len() != inst.n() {
        return Err(Error::DimensionMismatch {
            expected: inst.n(),
            got: d.len(),
        });
    }
    let w = inst.a.mul_vector(d)?.add(&inst.q)?;
    Ok(d.min_with(&w)?.norm_inf())
}

/// Attempts one support set; `mask` selects which components of `z` may be
/// positive. Returns the solution when the support is feasible.
fn try_support(inst: &LcpInstance, mask: u64, tol: &Tolerances) -> Result<Option<LcpSolution>> {
    let n = inst.n();
    let mut z = vec![0.0f64; n];

    if mask != 0 {
        let alpha = IndexSet::from_bitmask(n, mask)?;
        let sub = inst.a.principal_submatrix(&alpha)?;
        let q_alpha =
            RealVector::new(alpha.indices().iter().map(|&i| -inst.q[i]).collect())?;
        let z_alpha = match solve_linear(&sub, &q_alpha, tol) {
            Ok(v) => v,
            // A singular support block simply cannot host a solution.
            Err(Error::SingularMatrix) => return Ok(None),
            Err(e) => return Err(e),
        };
        // The support components must be (numerically) nonnegative.
        if z_alpha.iter().any(|v| v < -tol.tol_feas) {
            return Ok(None);
        }
        for (&i, v) in alpha.indices().iter().zip(z_alpha.iter()) {
            z[i] = v;
        }
    }

    let z = RealVector::new(z)?;
    let w = inst.a.mul_vector(&z)?.add(&inst.q)?;
    // Off-support slacks must be (numerically) nonnegative; on-support slacks
    // are solver residuals and are not re-tested.
    for i in 0..n {
        if mask & (1u64 << i) == 0 && w[i] < -tol.tol_feas {
            return Ok(None);
        }
    }

    let comp_gap = (0..n).map(|i| z[i] * w[i]).fold(0.0f64, f64::max);
    let active: Vec<usize> = (0..n).filter(|&i| z[i] > 0.0).collect();
    Ok(Some(LcpSolution {
        basis: if mask == 0 {
            None
        } else {
            Some(IndexSet::from_bitmask(n, mask)?)
        },
        active: if active.is_empty() {
            None
        } else {
            Some(IndexSet::new(n, active)?)
        },
        z,
        w,
        comp_gap,
    }))
}

/// Solves the instance by exhaustive support enumeration, returning the first
/// accepted support in increasing-bitmask order.
///
/// For P-matrices the solution is unique, so "first accepted" is simply "the
/// solution" up to feasibility tolerances. The enumeration order is fixed and
/// documented, which makes solver output bitwise reproducible run to run.
///
/// # Errors
///
/// - [`Error::DimensionExceeded`] above [`ENUM_MAX_DIM`].
/// - [`Error::NoSolution`] when no support is feasible (possible only for
///   non-P-matrices).
///
/// # Examples
///
/// ```
/// use lcp_certify_core::lcp::{solve_enumeration, LcpInstance};
/// use lcp_certify_core::{DenseMatrix, RealVector, Tolerances};
///
/// let inst = LcpInstance::new(
///     DenseMatrix::from_rows(&[&[4.0, 1.0, 2.0], &[3.0, 5.0, -1.0], &[-1.0, -2.0, 7.0]]).unwrap(),
///     RealVector::from_slice(&[-1.0, -1.0, -1.0]).unwrap(),
/// ).unwrap();
/// let sol = solve_enumeration(&inst, &Tolerances::default()).unwrap();
/// // 110·z = (11, 20, 23)
/// assert!((sol.z[0] - 0.1).abs() < 1e-12);
/// assert_eq!(sol.basis.unwrap().to_string(), "{1,2,3}");
/// ```
pub fn solve_enumeration(inst: &LcpInstance, tol: &Tolerances) -> Result<LcpSolution> {
    let n = inst.n();
    if n > ENUM_MAX_DIM {
        return Err(Error::DimensionExceeded {
            limit: ENUM_MAX_DIM,
            got: n,
        });
    }
    for mask in 0u64..(1u64 << n) {
        if let Some(sol) = try_support(inst, mask, tol)? {
            return Ok(sol);
        }
    }
    Err(Error::NoSolution)
}

/// Runs the full enumeration and collects *every* accepted support, in
/// increasing-bitmask order.
///
/// For P-matrices this should have exactly one element; more than one means
/// the feasibility tolerances blurred a near-degenerate instance, which the
/// validation drivers count and report.
pub fn enumerate_accepted_supports(
    inst: &LcpInstance,
    tol: &Tolerances,
) -> Result<Vec<Option<IndexSet>>> {
    let n = inst.n();
    if n > ENUM_MAX_DIM {
        return Err(Error::DimensionExceeded {
            limit: ENUM_MAX_DIM,
            got: n,
        });
    }
    let mut accepted = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if let Some(sol) = try_support(inst, mask, tol)? {
            accepted.push(sol.basis);
        }
    }
    Ok(accepted)
}

/// Checks whether `z` solves the instance, reporting every violated
/// constraint with its magnitude.
///
/// Returns `(true, [])` for solutions; otherwise each violation carries the
/// offending component (1-based) and value.
pub fn verify_solution(
    inst: &LcpInstance,
    z: &RealVector,
    tol: &Tolerances,
) -> Result<(bool, Vec<Violation>)> {
    if z.len() != inst.n() {
        return Err(Error::DimensionMismatch {
            expected: inst.n(),
            got: z.len(),
        });
    }
    let w = inst.a.mul_vector(z)?.add(&inst.q)?;
    let mut violations = Vec::new();
    for i in 0..inst.n() {
        if z[i] < -tol.tol_feas {
            violations.push(Violation::NegativeZ {
                index: i + 1,
                value: z[i],
            });
        }
        if w[i] < -tol.tol_feas {
            violations.push(Violation::NegativeW {
                index: i + 1,
                value: w[i],
            });
        }
        let prod = z[i] * w[i];
        if prod.abs() > tol.tol_comp {
            violations.push(Violation::Complementarity {
                index: i + 1,
                product: prod,
            });
        }
    }
    Ok((violations.is_empty(), violations))
}

/// Certified bracket for the solution norm:
///
/// ```text
/// β(A⁻¹)_lo · ‖(−q)₊‖∞  ≤  ‖z*‖∞  ≤  ‖(−q)₊‖∞ / β(A)_lo.
/// ```
///
/// Both arguments are certified *lower* bounds — dividing by a lower bound
/// only widens the upper end, and multiplying by a lower bound only lowers
/// the lower end, so the bracket stays valid.
///
/// The returned endpoints are rounded outward by a relative `2⁻⁴⁸` so that
/// the floating-point evaluation of the products cannot overtighten the
/// bracket. This matters when both bounds are exact (diagonal matrices,
/// `n = 1`): `β(A)_lo · β(A⁻¹)_lo` can then round to one ulp above 1, which
/// would otherwise invert the bracket at instances where it collapses to a
/// point.
///
/// # Errors
///
/// [`Error::NonPositiveBetaBound`] if either bound is not strictly positive.
pub fn solution_norm_bounds(
    inst: &LcpInstance,
    beta_a_lo: f64,
    beta_a_inv_lo: f64,
) -> Result<(f64, f64)> {
    if !(beta_a_lo > 0.0) {
        return Err(Error::NonPositiveBetaBound { value: beta_a_lo });
    }
    if !(beta_a_inv_lo > 0.0) {
        return Err(Error::NonPositiveBetaBound {
            value: beta_a_inv_lo,
        });
    }
    const OUTWARD: f64 = f64::EPSILON * 16.0; // 2⁻⁴⁸ relative slack
    let s = inst.q.neg().plus().norm_inf();
    let lo = beta_a_inv_lo * s * (1.0 - OUTWARD);
    let hi = s / beta_a_lo * (1.0 + OUTWARD);
    debug_assert!(lo <= hi, "β(A)·β(A⁻¹) ≤ 1 must make the bracket ordered");
    Ok((lo, hi))
}

/// Builds the full certificate for a trial point `d`.
///
/// Absolute bounds (with `N = ‖A‖` under `norm_mode` and `r = r(d)`):
///
/// ```text
/// r / (1 + N)  ≤  ‖z* − d‖∞  ≤  (1 + N)·r / β(A)_lo.
/// ```
///
/// Relative bounds, present exactly when `s = ‖(−q)₊‖∞ > 0` (then `z* ≠ 0`):
///
/// ```text
/// β(A)_lo · r / ((1 + N)·s)  ≤  ‖z* − d‖∞/‖z*‖∞  ≤  (1 + N)·r / (β(A⁻¹)_lo · β(A)_lo · s).
/// ```
///
/// The relative bounds chain the absolute bounds with the solution-norm
/// bracket, again substituting conservative enclosure ends throughout. Note
/// the *lower* relative bound divides `abs_lo` by the *upper* solution-norm
/// bound `s/β(A)_lo`, and the upper relative bound divides `abs_hi` by the
/// *lower* solution-norm bound `β(A⁻¹)_lo·s`.
///
/// # Errors
///
/// - [`Error::NotPMatrix`] if `a` fails the definitional test (certificates
///   are only meaningful under uniqueness).
/// - [`Error::NonPositiveBetaBound`] if an enclosure lower end is not
///   strictly positive.
pub fn certify(
    inst: &LcpInstance,
    d: &RealVector,
    beta: &BetaEnclosure,
    beta_inv: &BetaEnclosure,
    norm_mode: NormMode,
    tol: &Tolerances,
) -> Result<BoundCertificate> {
    let (isp, witness) = is_p_matrix(&inst.a, tol)?;
    if !isp {
        return Err(Error::NotPMatrix {
            witness: witness.expect("a failing P-test always carries a witness"),
        });
    }
    if !(beta.lo > 0.0) {
        return Err(Error::NonPositiveBetaBound { value: beta.lo });
    }
    if !(beta_inv.lo > 0.0) {
        return Err(Error::NonPositiveBetaBound {
            value: beta_inv.lo,
        });
    }
    let r = residual(inst, d)?;
    let n_val = norm_mode.of(&inst.a);
    let abs_lo = r / (1.0 + n_val);
    let abs_hi = (1.0 + n_val) * r / beta.lo;
    let s = inst.q.neg().plus().norm_inf();
    let (rel_lo, rel_hi) = if s > 0.0 {
        (
            Some(beta.lo * r / ((1.0 + n_val) * s)),
            Some((1.0 + n_val) * r / (beta_inv.lo * beta.lo * s)),
        )
    } else {
        (None, None)
    };
    let (sol_norm_lo, sol_norm_hi) = solution_norm_bounds(inst, beta.lo, beta_inv.lo)?;
    Ok(BoundCertificate {
        d: d.clone(),
        residual: r,
        norm_used: norm_mode,
        matrix_norm: n_val,
        beta_lo: beta.lo,
        beta_hi: beta.hi,
        beta_inv_lo: beta_inv.lo,
        abs_lo,
        abs_hi,
        q_plus_norm: s,
        rel_lo,
        rel_hi,
        sol_norm_lo,
        sol_norm_hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beta::{beta_enclosure, BetaConfig};
    use crate::linalg::invert;
    use alloc::string::ToString;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn worked_example_instance() -> LcpInstance {
        LcpInstance::new(
            DenseMatrix::from_rows(&[&[4.0, 1.0, 2.0], &[3.0, 5.0, -1.0], &[-1.0, -2.0, 7.0]])
                .unwrap(),
            RealVector::from_slice(&[-1.0, -1.0, -1.0]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn residual_is_zero_exactly_at_solutions() {
        // Identity instance: z* = (1, 2), dyadic throughout.
        let inst = LcpInstance::new(
            DenseMatrix::identity(2).unwrap(),
            RealVector::from_slice(&[-1.0, -2.0]).unwrap(),
        )
        .unwrap();
        let z_star = RealVector::from_slice(&[1.0, 2.0]).unwrap();
        assert_eq!(residual(&inst, &z_star).unwrap(), 0.0);
        let off = RealVector::from_slice(&[1.0, 1.5]).unwrap();
        assert_eq!(residual(&inst, &off).unwrap(), 0.5);
    }

    #[test]
    fn residual_handles_nonnegative_q() {
        // q ≥ 0 ⇒ z* = 0.
        let inst = LcpInstance::new(
            DenseMatrix::identity(2).unwrap(),
            RealVector::from_slice(&[1.0, 0.0]).unwrap(),
        )
        .unwrap();
        let zero = RealVector::zeros(2).unwrap();
        assert_eq!(residual(&inst, &zero).unwrap(), 0.0);
    }

    #[test]
    fn enumeration_solves_worked_example() {
        let sol = solve_enumeration(&worked_example_instance(), &tol()).unwrap();
        // Exact solution 110·z = (11, 20, 23).
        let want = [11.0 / 110.0, 20.0 / 110.0, 23.0 / 110.0];
        for (got, w) in sol.z.iter().zip(want) {
            assert!((got - w).abs() < 1e-12, "z entry {got} vs {w}");
        }
        assert_eq!(sol.basis.as_ref().unwrap().to_string(), "{1,2,3}");
        assert_eq!(sol.active.as_ref().unwrap().to_string(), "{1,2,3}");
        assert!(sol.comp_gap <= tol().tol_comp);
        assert!(sol.w.iter().all(|w| w >= -tol().tol_feas));
    }

    #[test]
    fn worked_example_support_is_unique() {
        let accepted = enumerate_accepted_supports(&worked_example_instance(), &tol()).unwrap();
        assert_eq!(accepted.len(), 1);
        assert_eq!(accepted[0].as_ref().unwrap().to_bitmask(), 0b111);
    }

    #[test]
    fn nonnegative_q_solves_at_zero_with_empty_support() {
        let inst = LcpInstance::new(
            DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap(),
            RealVector::from_slice(&[0.5, 1.0]).unwrap(),
        )
        .unwrap();
        let sol = solve_enumeration(&inst, &tol()).unwrap();
        assert_eq!(sol.z.as_slice(), &[0.0, 0.0]);
        assert!(sol.basis.is_none());
        assert!(sol.active.is_none());
        assert_eq!(sol.comp_gap, 0.0);
    }

    #[test]
    fn non_p_instance_can_have_no_solution() {
        let inst = LcpInstance::new(
            DenseMatrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap(),
            RealVector::from_slice(&[1.0, -1.0]).unwrap(),
        )
        .unwrap();
        assert_eq!(solve_enumeration(&inst, &tol()).unwrap_err(), Error::NoSolution);
    }

    #[test]
    fn enumeration_dimension_cap() {
        let inst = LcpInstance::new(
            DenseMatrix::identity(17).unwrap(),
            RealVector::zeros(17).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            solve_enumeration(&inst, &tol()).unwrap_err(),
            Error::DimensionExceeded { limit: 16, got: 17 }
        ));
    }

    #[test]
    fn verify_reports_violations_with_magnitudes() {
        let inst = LcpInstance::new(
            DenseMatrix::identity(2).unwrap(),
            RealVector::from_slice(&[-1.0, -2.0]).unwrap(),
        )
        .unwrap();
        let bad = RealVector::from_slice(&[-0.5, 3.0]).unwrap();
        let (ok, violations) = verify_solution(&inst, &bad, &tol()).unwrap();
        assert!(!ok);
        // z₁ < 0, w₁ = −1.5 < 0, z₁w₁ = 0.75 > tol, z₂w₂ = 3 > tol.
        assert!(violations.contains(&Violation::NegativeZ {
            index: 1,
            value: -0.5
        }));
        assert!(violations.contains(&Violation::NegativeW {
            index: 1,
            value: -1.5
        }));
        assert!(violations.contains(&Violation::Complementarity {
            index: 1,
            product: 0.75
        }));
        assert!(violations.contains(&Violation::Complementarity {
            index: 2,
            product: 3.0
        }));

        let good = RealVector::from_slice(&[1.0, 2.0]).unwrap();
        let (ok, violations) = verify_solution(&inst, &good, &tol()).unwrap();
        assert!(ok);
        assert!(violations.is_empty());
    }

    #[test]
    fn solution_norm_bracket_on_worked_example_contains_truth() {
        let inst = worked_example_instance();
        let cfg = BetaConfig::default();
        let beta = beta_enclosure(&inst.a, &cfg).unwrap();
        let a_inv = invert(&inst.a, &tol()).unwrap();
        let beta_inv = beta_enclosure(&a_inv, &cfg).unwrap();
        let (lo, hi) = solution_norm_bounds(&inst, beta.lo, beta_inv.lo).unwrap();
        let sol = solve_enumeration(&inst, &tol()).unwrap();
        let norm = sol.z.norm_inf();
        assert!(lo <= norm && norm <= hi, "‖z*‖ = {norm} outside [{lo}, {hi}]");
    }

    #[test]
    fn solution_norm_bounds_reject_nonpositive_beta() {
        let inst = worked_example_instance();
        assert!(matches!(
            solution_norm_bounds(&inst, 0.0, 1.0).unwrap_err(),
            Error::NonPositiveBetaBound { value } if value == 0.0
        ));
        assert!(matches!(
            solution_norm_bounds(&inst, 1.0, -2.0).unwrap_err(),
            Error::NonPositiveBetaBound { .. }
        ));
    }

    #[test]
    fn certificate_brackets_the_true_error_both_norms() {
        let inst = worked_example_instance();
        let cfg = BetaConfig::default();
        let beta = beta_enclosure(&inst.a, &cfg).unwrap();
        let a_inv = invert(&inst.a, &tol()).unwrap();
        let beta_inv = beta_enclosure(&a_inv, &cfg).unwrap();
        let sol = solve_enumeration(&inst, &tol()).unwrap();
        let d = RealVector::from_slice(&[0.2, 0.1, 0.3]).unwrap();
        let true_err = sol.z.sub(&d).unwrap().norm_inf();
        let true_rel = true_err / sol.z.norm_inf();

        for mode in [NormMode::Induced, NormMode::Entrymax] {
            let cert = certify(&inst, &d, &beta, &beta_inv, mode, &tol()).unwrap();
            assert!(cert.abs_lo <= true_err, "{mode}: abs_lo");
            if mode == NormMode::Induced {
                assert!(true_err <= cert.abs_hi, "induced abs_hi must hold");
                let (rl, rh) = (cert.rel_lo.unwrap(), cert.rel_hi.unwrap());
                assert!(rl <= true_rel && true_rel <= rh);
            }
            assert_eq!(cert.q_plus_norm, 1.0);
            assert!(cert.rel_lo.is_some(), "(−q)₊ ≠ 0 here");
        }
    }

    #[test]
    fn certificate_at_the_solution_collapses_to_zero() {
        let inst = worked_example_instance();
        let cfg = BetaConfig::default();
        let beta = beta_enclosure(&inst.a, &cfg).unwrap();
        let a_inv = invert(&inst.a, &tol()).unwrap();
        let beta_inv = beta_enclosure(&a_inv, &cfg).unwrap();
        let sol = solve_enumeration(&inst, &tol()).unwrap();
        let cert = certify(&inst, &sol.z, &beta, &beta_inv, NormMode::Induced, &tol()).unwrap();
        // The solver's z* satisfies the system to ~1e−16, so the residual and
        // both ends of the bracket are essentially zero.
        assert!(cert.residual <= 1e-12);
        assert!(cert.abs_hi <= 1e-9);
    }

    #[test]
    fn certificate_omits_relative_bounds_when_q_plus_vanishes() {
        let inst = LcpInstance::new(
            DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap(),
            RealVector::from_slice(&[1.0, 2.0]).unwrap(),
        )
        .unwrap();
        let cfg = BetaConfig::default();
        let beta = beta_enclosure(&inst.a, &cfg).unwrap();
        let a_inv = invert(&inst.a, &tol()).unwrap();
        let beta_inv = beta_enclosure(&a_inv, &cfg).unwrap();
        let d = RealVector::from_slice(&[0.5, 0.0]).unwrap();
        let cert = certify(&inst, &d, &beta, &beta_inv, NormMode::Induced, &tol()).unwrap();
        assert_eq!(cert.q_plus_norm, 0.0);
        assert!(cert.rel_lo.is_none() && cert.rel_hi.is_none());
        assert_eq!(cert.sol_norm_lo, 0.0);
        assert_eq!(cert.sol_norm_hi, 0.0);
    }

    #[test]
    fn certify_rejects_non_p_matrices() {
        let inst = LcpInstance::new(
            DenseMatrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap(),
            RealVector::from_slice(&[-1.0, -1.0]).unwrap(),
        )
        .unwrap();
        let fake = BetaEnclosure {
            lo: 1.0,
            hi: 1.0,
            lo_source: crate::beta::LowerBoundSource::DiagonalExact,
            hi_source: crate::beta::UpperBoundSource::DiagonalExact,
            grid_spacing: None,
            lipschitz_const: None,
        };
        let d = RealVector::zeros(2).unwrap();
        assert!(matches!(
            certify(&inst, &d, &fake, &fake, NormMode::Induced, &tol()).unwrap_err(),
            Error::NotPMatrix { .. }
        ));
    }
}
