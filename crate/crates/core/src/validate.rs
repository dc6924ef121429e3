//! Batch validation drivers: regenerate seeded instances, recompute every
//! certified claim, and tally which held.
//!
//! These drivers exist so that "the bounds hold" is a measured statement, not
//! an asserted one. Each run sweeps `count` instances identified by
//! `(family, n, seed)` — fully reproducible — and checks, per instance:
//!
//! - the absolute and relative error brackets contain the true error of the
//!   trial point against the enumeration solver's solution, in both norm
//!   modes (induced-mode failures are failures; entrymax-mode failures are
//!   expected on some instances and recorded as findings);
//! - the solution-norm bracket contains `‖z*‖∞`;
//! - exactly one support set is accepted by the exhaustive solver;
//! - the two β enclosures are internally consistent
//!   (`β(A)_lo · β(A⁻¹)_lo ≤ 1`).
//!
//! Companion drivers check β-enclosure soundness against fine grids and the
//! exactness of the diagonal fast path.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::beta::{
    beta_analysis, beta_grid_enclosure, h_matrix_lower_bound, sigma, t_recursion_lower_bound,
    BetaConfig, HBoundMode,
};
use crate::classify::is_h_matrix_positive_diag;
use crate::config::{Tolerances, DEFAULT_LAMBDA, GRID_MAX_DIM};
use crate::error::{Error, Result};
use crate::gen::{gen_instance, gen_matrix, Family, GenSpec};
use crate::lcp::{certify, enumerate_accepted_supports, solve_enumeration, NormMode};
use crate::linalg::{invert, RealVector};

/// Families cycled when a sweep does not pin one.
const FAMILY_CYCLE: [Family; 3] = [Family::DiagDominant, Family::SymmetricPd, Family::Diagonal];

/// One observation worth surfacing from a sweep: either a genuine failure or
/// an expected-mode deviation (entrymax bounds breaking, for instance).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SweepFinding {
    /// Position in the sweep.
    pub index: usize,
    /// Instance family.
    pub family: Family,
    /// Instance dimension.
    pub n: usize,
    /// Seed that regenerates the instance.
    pub seed: u64,
    /// Which check produced the finding (stable identifier).
    pub check: String,
    /// Human-readable magnitudes.
    pub detail: String,
}

/// Configuration for [`run_certificate_validation`].
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationConfig {
    /// Number of instances to sweep.
    pub count: usize,
    /// Dimensions cycle `1, …, max_n, 1, …`.
    pub max_n: usize,
    /// Pin one family, or `None` to cycle dominant/symmetric/diagonal.
    pub family: Option<Family>,
    /// Seed of instance `i` is `base_seed + i`.
    pub base_seed: u64,
    /// Range for `q` entries.
    pub q_range: (f64, f64),
    /// Range for `d` entries.
    pub d_range: (f64, f64),
    /// Enclosure options used for both β(A) and β(A⁻¹).
    pub beta: BetaConfig,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        ValidationConfig {
            count: 200,
            max_n: 5,
            family: None,
            base_seed: 0,
            q_range: (-2.0, 2.0),
            d_range: (-2.0, 2.0),
            beta: BetaConfig::default(),
        }
    }
}

impl ValidationConfig {
    /// The generation spec for sweep position `i`.
    pub fn spec_for(&self, i: usize) -> GenSpec {
        let family = self
            .family
            .unwrap_or(FAMILY_CYCLE[i % FAMILY_CYCLE.len()]);
        let mut spec = GenSpec::new(1 + (i % self.max_n), family, self.base_seed + i as u64);
        spec.q_range = self.q_range;
        spec.d_range = self.d_range;
        spec
    }
}

/// Outcome tallies of a certificate sweep.
#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CertificateTally {
    /// Instances requested.
    pub instances: usize,
    /// Instances fully evaluated (generated, solved, certified).
    pub evaluated: usize,
    /// Instances that errored before evaluation completed.
    pub errors: usize,
    /// Absolute bracket contained the true error — induced norm.
    pub abs_pass_induced: usize,
    /// Absolute bracket contained the true error — entrymax norm.
    pub abs_pass_entrymax: usize,
    /// Instances where `‖(−q)₊‖∞ > 0`, i.e. relative bounds exist.
    pub rel_checked: usize,
    /// Relative bracket contained the true relative error — induced norm.
    pub rel_pass_induced: usize,
    /// Relative bracket contained the true relative error — entrymax norm.
    pub rel_pass_entrymax: usize,
    /// Solution-norm bracket contained `‖z*‖∞`.
    pub norm_bracket_pass: usize,
    /// Exactly one support set accepted by exhaustive enumeration.
    pub unique_support_pass: usize,
    /// Enclosure-consistency violations (`β(A)_lo·β(A⁻¹)_lo > 1`, or a
    /// non-positive lower end).
    pub ordering_violations: usize,
    /// Everything worth a second look, including non-fatal entrymax breaks.
    pub findings: Vec<SweepFinding>,
}

impl CertificateTally {
    /// Count of failed checks in the induced (certified) mode; the sweep is
    /// clean iff this is zero. Entrymax deviations are deliberately excluded.
    pub fn induced_failures(&self) -> usize {
        self.errors
            + (self.evaluated - self.abs_pass_induced)
            + (self.rel_checked - self.rel_pass_induced)
            + (self.evaluated - self.norm_bracket_pass)
            + (self.evaluated - self.unique_support_pass)
            + self.ordering_violations
    }
}

/// Sweeps `count` seeded instances and tallies every certificate claim.
///
/// Individual instance errors are recorded as findings and counted in
/// `errors`; the sweep itself only fails on nonsensical configuration.
pub fn run_certificate_validation(cfg: &ValidationConfig) -> Result<CertificateTally> {
    if cfg.count > 0 && cfg.max_n == 0 {
        return Err(Error::EmptyDimension);
    }
    let tol = cfg.beta.tolerances;
    let mut tally = CertificateTally {
        instances: cfg.count,
        ..CertificateTally::default()
    };

    for i in 0..cfg.count {
        let spec = cfg.spec_for(i);
        let finding = |check: &str, detail: String| SweepFinding {
            index: i,
            family: spec.family,
            n: spec.effective_n(),
            seed: spec.seed,
            check: String::from(check),
            detail,
        };

        // Generate, solve, enclose; any error here aborts only this instance.
        let step: Result<_> = (|| {
            let (inst, d) = gen_instance(&spec)?;
            let sol = solve_enumeration(&inst, &tol)?;
            let accepted = enumerate_accepted_supports(&inst, &tol)?;
            let beta_a = beta_analysis(&inst.a, &cfg.beta)?;
            let a_inv = invert(&inst.a, &tol)?;
            let beta_inv = beta_analysis(&a_inv, &cfg.beta)?;
            let cert_ind = certify(
                &inst,
                &d,
                &beta_a.enclosure,
                &beta_inv.enclosure,
                NormMode::Induced,
                &tol,
            )?;
            let cert_em = certify(
                &inst,
                &d,
                &beta_a.enclosure,
                &beta_inv.enclosure,
                NormMode::Entrymax,
                &tol,
            )?;
            Ok((inst, d, sol, accepted, beta_a, beta_inv, cert_ind, cert_em))
        })();
        let (_inst, d, sol, accepted, beta_a, beta_inv, cert_ind, cert_em) = match step {
            Ok(v) => v,
            Err(e) => {
                tally.errors += 1;
                tally.findings.push(finding("evaluation", format!("{e}")));
                continue;
            }
        };
        tally.evaluated += 1;

        let true_err = sol.z.sub(&d).expect("dimensions agree").norm_inf();

        // Absolute bracket, both modes.
        if cert_ind.abs_lo <= true_err && true_err <= cert_ind.abs_hi {
            tally.abs_pass_induced += 1;
        } else {
            tally.findings.push(finding(
                "abs_induced",
                format!(
                    "true error {true_err} outside [{}, {}]",
                    cert_ind.abs_lo, cert_ind.abs_hi
                ),
            ));
        }
        if cert_em.abs_lo <= true_err && true_err <= cert_em.abs_hi {
            tally.abs_pass_entrymax += 1;
        } else {
            tally.findings.push(finding(
                "abs_entrymax",
                format!(
                    "true error {true_err} outside [{}, {}] (expected failure mode)",
                    cert_em.abs_lo, cert_em.abs_hi
                ),
            ));
        }

        // Relative bracket, when defined.
        if cert_ind.q_plus_norm > 0.0 {
            tally.rel_checked += 1;
            let sol_norm = sol.z.norm_inf();
            let true_rel = true_err / sol_norm;
            let in_ind = cert_ind.rel_lo.is_some_and(|lo| lo <= true_rel)
                && cert_ind.rel_hi.is_some_and(|hi| true_rel <= hi);
            if in_ind {
                tally.rel_pass_induced += 1;
            } else {
                tally.findings.push(finding(
                    "rel_induced",
                    format!(
                        "true relative error {true_rel} outside [{:?}, {:?}]",
                        cert_ind.rel_lo, cert_ind.rel_hi
                    ),
                ));
            }
            let in_em = cert_em.rel_lo.is_some_and(|lo| lo <= true_rel)
                && cert_em.rel_hi.is_some_and(|hi| true_rel <= hi);
            if in_em {
                tally.rel_pass_entrymax += 1;
            } else {
                tally.findings.push(finding(
                    "rel_entrymax",
                    format!(
                        "true relative error {true_rel} outside [{:?}, {:?}] (expected failure mode)",
                        cert_em.rel_lo, cert_em.rel_hi
                    ),
                ));
            }
        }

        // Solution-norm bracket.
        let sol_norm = sol.z.norm_inf();
        if cert_ind.sol_norm_lo <= sol_norm && sol_norm <= cert_ind.sol_norm_hi {
            tally.norm_bracket_pass += 1;
        } else {
            tally.findings.push(finding(
                "solution_norm",
                format!(
                    "‖z*‖ = {sol_norm} outside [{}, {}]",
                    cert_ind.sol_norm_lo, cert_ind.sol_norm_hi
                ),
            ));
        }

        // Support uniqueness.
        if accepted.len() == 1 {
            tally.unique_support_pass += 1;
        } else {
            tally.findings.push(finding(
                "unique_support",
                format!("{} supports accepted", accepted.len()),
            ));
        }

        // Enclosure consistency: both lower ends positive and compatible with
        // β(A)·β(A⁻¹) ≤ 1.
        let lo_a = beta_a.enclosure.lo;
        let lo_inv = beta_inv.enclosure.lo;
        if !(lo_a > 0.0 && lo_inv > 0.0 && lo_a * lo_inv <= 1.0 + 1e-12) {
            tally.ordering_violations += 1;
            tally.findings.push(finding(
                "enclosure_consistency",
                format!("β(A)_lo = {lo_a}, β(A⁻¹)_lo = {lo_inv}"),
            ));
        }
    }
    Ok(tally)
}

/// Configuration for [`run_beta_soundness`].
#[derive(Debug, Clone, PartialEq)]
pub struct SoundnessConfig {
    /// Number of matrices to sweep.
    pub count: usize,
    /// Dimensions cycle `1, …, max_n` (all must be within the grid cap).
    pub max_n: usize,
    /// Pin one family, or `None` to cycle.
    pub family: Option<Family>,
    /// Seed of matrix `i` is `base_seed + i`.
    pub base_seed: u64,
    /// Grid spacing for the reference sweep.
    pub delta: f64,
    /// Recursion weight.
    pub lambda: f64,
    /// Numeric thresholds.
    pub tolerances: Tolerances,
}

impl Default for SoundnessConfig {
    fn default() -> Self {
        SoundnessConfig {
            count: 100,
            max_n: 3,
            family: None,
            base_seed: 0,
            delta: 0.005,
            lambda: DEFAULT_LAMBDA,
            tolerances: Tolerances::default(),
        }
    }
}

/// Outcome tallies of a β-soundness sweep.
#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SoundnessTally {
    /// Matrices requested.
    pub instances: usize,
    /// Matrices fully evaluated.
    pub evaluated: usize,
    /// Matrices that errored.
    pub errors: usize,
    /// Combined enclosure lower end ≤ grid sample minimum.
    pub lo_le_sample: usize,
    /// Non-diagonal matrices (where the recursion applies).
    pub t_checked: usize,
    /// Recursion final term ≤ grid sample minimum.
    pub t_le_sample: usize,
    /// Matrices qualifying as H with positive diagonal.
    pub h_checked: usize,
    /// Conservative H bound ≤ grid sample minimum, up to a few-ulp relative
    /// slack. (On 1×1 and diagonal-like matrices the bound is exactly tight —
    /// both sides equal β — and the two independent floating-point
    /// evaluations can disagree by 1 ulp; genuine formula errors are many
    /// orders of magnitude larger.)
    pub h_le_sample: usize,
    /// Combined enclosure lower end ≤ σ + 1e−8. (The sampled minimum itself
    /// may legitimately exceed σ by up to the Lipschitz slack — both are
    /// upper bounds on β with no ordering between them — so the sound check
    /// is on the lower end.)
    pub sigma_ge_lo: usize,
    /// Diagonal matrices seen.
    pub diag_checked: usize,
    /// Diagonal enclosures that were exact points at the smallest entry.
    pub diag_exact: usize,
    /// Failures and anomalies.
    pub findings: Vec<SweepFinding>,
}

impl SoundnessTally {
    /// True iff every applicable check passed on every evaluated matrix.
    pub fn all_pass(&self) -> bool {
        self.errors == 0
            && self.lo_le_sample == self.evaluated
            && self.t_le_sample == self.t_checked
            && self.h_le_sample == self.h_checked
            && self.sigma_ge_lo == self.evaluated
            && self.diag_exact == self.diag_checked
    }
}

/// Sweeps seeded P-matrices and checks every β bound against a fine grid:
/// lower bounds must not exceed the sampled minimum, and the combined
/// enclosure lower end must not exceed σ (+1e−8 slack for roundoff).
pub fn run_beta_soundness(cfg: &SoundnessConfig) -> Result<SoundnessTally> {
    if cfg.count > 0 && (cfg.max_n == 0 || cfg.max_n > GRID_MAX_DIM) {
        return Err(Error::DimensionExceeded {
            limit: GRID_MAX_DIM,
            got: cfg.max_n,
        });
    }
    let tol = cfg.tolerances;
    let beta_cfg = BetaConfig {
        tolerances: tol,
        lambda: cfg.lambda,
        sweep_lambda: false,
        grid_spacing: Some(cfg.delta),
    };
    let mut tally = SoundnessTally {
        instances: cfg.count,
        ..SoundnessTally::default()
    };

    for i in 0..cfg.count {
        let family = cfg
            .family
            .unwrap_or(FAMILY_CYCLE[i % FAMILY_CYCLE.len()]);
        let spec = GenSpec::new(1 + (i % cfg.max_n), family, cfg.base_seed + i as u64);
        let finding = |check: &str, detail: String| SweepFinding {
            index: i,
            family: spec.family,
            n: spec.effective_n(),
            seed: spec.seed,
            check: String::from(check),
            detail,
        };

        let step: Result<_> = (|| {
            let a = gen_matrix(&spec)?;
            let analysis = beta_analysis(&a, &beta_cfg)?;
            let grid = beta_grid_enclosure(&a, cfg.delta, &tol)?;
            let sig = sigma(&a, &tol)?;
            Ok((a, analysis, grid, sig))
        })();
        let (a, analysis, grid, sig) = match step {
            Ok(v) => v,
            Err(e) => {
                tally.errors += 1;
                tally.findings.push(finding("evaluation", format!("{e}")));
                continue;
            }
        };
        tally.evaluated += 1;

        if analysis.enclosure.lo <= grid.sample_min {
            tally.lo_le_sample += 1;
        } else {
            tally.findings.push(finding(
                "lo_le_sample",
                format!("lo {} > sample {}", analysis.enclosure.lo, grid.sample_min),
            ));
        }

        if !a.is_diagonal() {
            tally.t_checked += 1;
            match t_recursion_lower_bound(&a, cfg.lambda, &tol) {
                Ok(trace) => {
                    let t_n = *trace.t.last().expect("n ≥ 1 terms");
                    if t_n <= grid.sample_min {
                        tally.t_le_sample += 1;
                    } else {
                        tally.findings.push(finding(
                            "t_le_sample",
                            format!("t_n {} > sample {}", t_n, grid.sample_min),
                        ));
                    }
                }
                Err(e) => tally.findings.push(finding("t_recursion", format!("{e}"))),
            }
        }

        if let (true, Some(_)) = is_h_matrix_positive_diag(&a, &tol) {
            tally.h_checked += 1;
            let e = RealVector::ones(a.n())?;
            match h_matrix_lower_bound(&a, &e, HBoundMode::MaxDenominator, &tol) {
                Ok(hb) => {
                    // Few-ulp roundoff slack only: the bound is exactly tight
                    // on 1×1 / diagonal-like cases, where fl(ξ/ξ²) may land
                    // 1 ulp above the exactly-evaluated sample.
                    let slack = grid.sample_min.abs() * (f64::EPSILON * 8.0);
                    if hb <= grid.sample_min + slack {
                        tally.h_le_sample += 1;
                    } else {
                        tally.findings.push(finding(
                            "h_le_sample",
                            format!("h bound {} > sample {}", hb, grid.sample_min),
                        ));
                    }
                }
                Err(e) => tally.findings.push(finding("h_bound", format!("{e}"))),
            }
        }

        if analysis.enclosure.lo <= sig + 1e-8 {
            tally.sigma_ge_lo += 1;
        } else {
            tally.findings.push(finding(
                "sigma_ge_lo",
                format!("enclosure lo {} > σ {}", analysis.enclosure.lo, sig),
            ));
        }

        if a.is_diagonal() {
            tally.diag_checked += 1;
            let min_diag = a
                .diagonal()
                .into_iter()
                .fold(f64::INFINITY, f64::min);
            if analysis.enclosure.lo == min_diag && analysis.enclosure.hi == min_diag {
                tally.diag_exact += 1;
            } else {
                tally.findings.push(finding(
                    "diag_exact",
                    format!(
                        "enclosure [{}, {}] vs exact {}",
                        analysis.enclosure.lo, analysis.enclosure.hi, min_diag
                    ),
                ));
            }
        }
    }
    Ok(tally)
}

/// Configuration for [`run_diagonal_exactness`].
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalExactnessConfig {
    /// Number of diagonal matrices to sweep.
    pub count: usize,
    /// Dimensions cycle `1, …, max_n` (grid checks run only where the order
    /// permits a grid).
    pub max_n: usize,
    /// Seed of matrix `i` is `base_seed + i`.
    pub base_seed: u64,
    /// Grid spacing for the containment check.
    pub delta: f64,
    /// Numeric thresholds.
    pub tolerances: Tolerances,
}

impl Default for DiagonalExactnessConfig {
    fn default() -> Self {
        DiagonalExactnessConfig {
            count: 50,
            max_n: 6,
            base_seed: 0,
            delta: 0.01,
            tolerances: Tolerances::default(),
        }
    }
}

/// Outcome tallies of a diagonal-exactness sweep.
#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DiagonalTally {
    /// Matrices requested.
    pub instances: usize,
    /// Matrices whose enclosure was the exact point `min_i a_ii`.
    pub exact_point: usize,
    /// Matrices small enough for the grid containment check.
    pub grid_checked: usize,
    /// Grid intervals `[lo, sample_min]` that contained the exact value.
    pub grid_contains: usize,
    /// Failures.
    pub findings: Vec<SweepFinding>,
}

impl DiagonalTally {
    /// True iff every check passed.
    pub fn all_pass(&self) -> bool {
        self.exact_point == self.instances && self.grid_contains == self.grid_checked
    }
}

/// Sweeps seeded positive-diagonal matrices: the enclosure must be the exact
/// point `min_i a_ii`, and (where the order permits a grid) the grid interval
/// must contain that point.
pub fn run_diagonal_exactness(cfg: &DiagonalExactnessConfig) -> Result<DiagonalTally> {
    if cfg.count > 0 && cfg.max_n == 0 {
        return Err(Error::EmptyDimension);
    }
    let tol = cfg.tolerances;
    let beta_cfg = BetaConfig {
        tolerances: tol,
        ..BetaConfig::default()
    };
    let mut tally = DiagonalTally {
        instances: cfg.count,
        ..DiagonalTally::default()
    };
    for i in 0..cfg.count {
        let spec = GenSpec::new(1 + (i % cfg.max_n), Family::Diagonal, cfg.base_seed + i as u64);
        let a = gen_matrix(&spec)?;
        let min_diag = a.diagonal().into_iter().fold(f64::INFINITY, f64::min);
        let enc = beta_analysis(&a, &beta_cfg)?.enclosure;
        if enc.lo == min_diag && enc.hi == min_diag {
            tally.exact_point += 1;
        } else {
            tally.findings.push(SweepFinding {
                index: i,
                family: Family::Diagonal,
                n: spec.effective_n(),
                seed: spec.seed,
                check: String::from("exact_point"),
                detail: format!("enclosure [{}, {}] vs exact {}", enc.lo, enc.hi, min_diag),
            });
        }
        if a.n() <= GRID_MAX_DIM {
            tally.grid_checked += 1;
            let grid = beta_grid_enclosure(&a, cfg.delta, &tol)?;
            if grid.lo <= min_diag && min_diag <= grid.sample_min {
                tally.grid_contains += 1;
            } else {
                tally.findings.push(SweepFinding {
                    index: i,
                    family: Family::Diagonal,
                    n: spec.effective_n(),
                    seed: spec.seed,
                    check: String::from("grid_contains"),
                    detail: format!(
                        "grid [{}, {}] vs exact {}",
                        grid.lo, grid.sample_min, min_diag
                    ),
                });
            }
        }
    }
    Ok(tally)
}
