//! Report assembly and rendering.
//!
//! Every command produces one [`Report`]: a machine-readable structure whose
//! JSON field names are stable, plus a human rendering. Each report carries
//! the full tolerance/configuration snapshot, so any number in it can be
//! reproduced from the report alone.

use crate::reference::ReferenceRow;
use lcp_certify_core::beta::{BetaAnalysis, LowerBoundSource, UpperBoundSource};
use lcp_certify_core::classify::MatrixClassification;
use lcp_certify_core::lcp::{BoundCertificate, LcpSolution};
use lcp_certify_core::validate::CertificateTally;
use lcp_certify_core::{RealVector, Tolerances};
use serde::Serialize;
use std::fmt::Write as _;

/// Full configuration under which the report's numbers were computed.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigSnapshot {
    /// Numeric thresholds in force.
    pub tolerances: Tolerances,
    /// Norm mode for certificates ("entrymax" or "induced").
    pub norm: String,
    /// Grid spacing, when a grid was requested or defaulted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    /// Recursion weight λ.
    pub lambda: f64,
    /// Base seed (generation commands).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Instance count (validation).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    /// Instance family (generation commands).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    /// Dimension ceiling (validation cycles 1..=n).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Significant digits in the human rendering.
    pub precision: usize,
}

/// The complete result of one command invocation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// Which subcommand ran.
    pub command: String,
    /// Input path, when the command reads a file.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    /// Configuration snapshot.
    pub config: ConfigSnapshot,
    /// Matrix classification flags.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<MatrixClassification>,
    /// β analysis of the input matrix.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<BetaAnalysis>,
    /// β analysis of the inverse (certification needs both).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_inverse: Option<BetaAnalysis>,
    /// Error certificate for the trial point.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<BoundCertificate>,
    /// Enumeration solver output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<LcpSolution>,
    /// Batch validation tallies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<CertificateTally>,
    /// Worked-example comparison rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<Vec<ReferenceRow>>,
    /// Notes the reader should not miss (discrepancies, caveats, failures).
    pub findings: Vec<String>,
}

impl Report {
    /// A report skeleton with no sections.
    pub fn new(command: &str, input: Option<String>, config: ConfigSnapshot) -> Self {
        Report {
            command: command.to_owned(),
            input,
            config,
            classification: None,
            beta: None,
            beta_inverse: None,
            certificate: None,
            solution: None,
            validation: None,
            reference: None,
            findings: Vec::new(),
        }
    }

    /// Machine form: stable field names, full-precision numbers.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human form, numbers at `config.precision` significant digits.
    pub fn render_human(&self) -> String {
        let p = self.config.precision;
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(input) = &self.input {
            let _ = writeln!(out, "input:   {input}");
        }

        if let Some(c) = &self.classification {
            let _ = writeln!(out, "\nclassification");
            let _ = writeln!(out, "  P-matrix:                {}", yes_no(c.is_p));
            let _ = writeln!(out, "  diagonal:                {}", yes_no(c.is_diagonal));
            let _ = writeln!(
                out,
                "  H-matrix, positive diag: {}",
                yes_no(c.is_h_positive_diag)
            );
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "  non-P witness:           {w}");
            }
            if let Some(xi) = &c.comparison_vector {
                let _ = writeln!(out, "  comparison solve ξ:      {}", fmt_vec(xi, p));
            }
        }

        if let Some(b) = &self.beta {
            render_beta(&mut out, "beta enclosure", b, p);
        }
        if let Some(b) = &self.beta_inverse {
            render_beta(&mut out, "beta enclosure of the inverse", b, p);
        }

        if let Some(c) = &self.certificate {
            let _ = writeln!(out, "\ncertificate (norm mode: {})", c.norm_used.as_str());
            let _ = writeln!(out, "  trial point d:     {}", fmt_vec(&c.d, p));
            let _ = writeln!(out, "  residual r(d):     {}", fmt_sig(c.residual, p));
            let _ = writeln!(out, "  matrix norm N:     {}", fmt_sig(c.matrix_norm, p));
            let _ = writeln!(
                out,
                "  beta(A) in:        [{}, {}]",
                fmt_sig(c.beta_lo, p),
                fmt_sig(c.beta_hi, p)
            );
            let _ = writeln!(out, "  beta(A⁻¹) ≥        {}", fmt_sig(c.beta_inv_lo, p));
            let _ = writeln!(
                out,
                "  absolute error in: [{}, {}]",
                fmt_sig(c.abs_lo, p),
                fmt_sig(c.abs_hi, p)
            );
            match (c.rel_lo, c.rel_hi) {
                (Some(lo), Some(hi)) => {
                    let _ = writeln!(
                        out,
                        "  relative error in: [{}, {}]",
                        fmt_sig(lo, p),
                        fmt_sig(hi, p)
                    );
                }
                _ => {
                    let _ = writeln!(
                        out,
                        "  relative error:    undefined, ‖(−q)₊‖∞ = 0 (solution is z* = 0)"
                    );
                }
            }
            let _ = writeln!(
                out,
                "  ‖z*‖∞ in:          [{}, {}]",
                fmt_sig(c.sol_norm_lo, p),
                fmt_sig(c.sol_norm_hi, p)
            );
        }

        if let Some(s) = &self.solution {
            let _ = writeln!(out, "\nsolution (exhaustive complementary-basis search)");
            let _ = writeln!(out, "  z:        {}", fmt_vec(&s.z, p));
            let _ = writeln!(out, "  w = Az+q: {}", fmt_vec(&s.w, p));
            match &s.basis {
                Some(b) => {
                    let _ = writeln!(out, "  basis:    {b}");
                }
                None => {
                    let _ = writeln!(out, "  basis:    ∅ (z = 0)");
                }
            }
            match &s.active {
                Some(a) => {
                    let _ = writeln!(out, "  active:   {a}");
                }
                None => {
                    let _ = writeln!(out, "  active:   ∅");
                }
            }
            let _ = writeln!(out, "  comp gap: {}", fmt_sig(s.comp_gap, p));
        }

        if let Some(v) = &self.validation {
            let _ = writeln!(out, "\nvalidation sweep");
            let _ = writeln!(out, "  instances:             {}", v.instances);
            let _ = writeln!(out, "  evaluated:             {}", v.evaluated);
            let _ = writeln!(out, "  errors:                {}", v.errors);
            let _ = writeln!(
                out,
                "  absolute inclusion:    {}/{} induced, {}/{} entrymax",
                v.abs_pass_induced, v.evaluated, v.abs_pass_entrymax, v.evaluated
            );
            let _ = writeln!(
                out,
                "  relative inclusion:    {}/{} induced, {}/{} entrymax",
                v.rel_pass_induced, v.rel_checked, v.rel_pass_entrymax, v.rel_checked
            );
            let _ = writeln!(
                out,
                "  solution-norm bracket: {}/{}",
                v.norm_bracket_pass, v.evaluated
            );
            let _ = writeln!(
                out,
                "  unique support:        {}/{}",
                v.unique_support_pass, v.evaluated
            );
            let _ = writeln!(out, "  ordering violations:   {}", v.ordering_violations);
            let _ = writeln!(
                out,
                "  verdict:               {}",
                if v.induced_failures() == 0 {
                    "clean (all induced-mode checks passed)"
                } else {
                    "FAILURES in induced mode"
                }
            );
            for f in v.findings.iter().take(10) {
                let _ = writeln!(
                    out,
                    "  note [{} n={} seed={}]: {}: {}",
                    f.family.as_str(),
                    f.n,
                    f.seed,
                    f.check,
                    f.detail
                );
            }
            if v.findings.len() > 10 {
                let _ = writeln!(out, "  … {} more notes (see --json)", v.findings.len() - 10);
            }
        }

        if let Some(rows) = &self.reference {
            let _ = writeln!(out, "\nworked example, recorded vs recomputed");
            let _ = writeln!(
                out,
                "  {:<14} {:>16} {:>16} {:>10}  status",
                "quantity", "recorded", "recomputed", "|diff|"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "  {:<14} {:>16} {:>16} {:>10}  {}",
                    r.name,
                    fmt_sig(r.recorded, p),
                    fmt_sig(r.recomputed, p),
                    fmt_sig(r.abs_diff, 3),
                    if r.within_tolerance { "ok" } else { "MISMATCH" }
                );
            }
        }

        if !self.findings.is_empty() {
            let _ = writeln!(out, "\nfindings");
            for f in &self.findings {
                let _ = writeln!(out, "  - {f}");
            }
        }

        let t = &self.config.tolerances;
        let _ = writeln!(
            out,
            "\nconfig: norm={} lambda={} delta={} pivot_eps={:e} tol_solve={:e} tol_inv={:e} \
             tol_imag={:e} minor_eps={:e} tol_feas={:e} tol_comp={:e}",
            self.config.norm,
            self.config.lambda,
            self.config
                .delta
                .map(|d| format!("{d}"))
                .unwrap_or_else(|| "auto".into()),
            t.pivot_eps,
            t.tol_solve,
            t.tol_inv,
            t.tol_imag,
            t.minor_eps,
            t.tol_feas,
            t.tol_comp
        );
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_beta(out: &mut String, title: &str, b: &BetaAnalysis, p: usize) {
    let _ = writeln!(out, "\n{title}");
    let _ = writeln!(
        out,
        "  beta in [{}, {}]  (lower: {}, upper: {})",
        fmt_sig(b.enclosure.lo, p),
        fmt_sig(b.enclosure.hi, p),
        lower_source_name(b.enclosure.lo_source),
        upper_source_name(b.enclosure.hi_source)
    );
    if let Some(s) = b.sigma {
        let _ = writeln!(out, "  sigma (shift upper bound): {}", fmt_sig(s, p));
    }
    if let Some(t) = &b.t_trace {
        let terms: Vec<String> = t.t.iter().map(|x| fmt_sig(*x, p)).collect();
        let _ = writeln!(
            out,
            "  recursion: lambda={} m={} h={} t=[{}]",
            fmt_sig(t.lambda, p),
            fmt_sig(t.m, p),
            fmt_sig(t.h, p),
            terms.join(", ")
        );
    }
    if let Some(h) = b.h_bound {
        let _ = writeln!(out, "  H-matrix conservative bound: {}", fmt_sig(h, p));
    }
    if let Some(g) = &b.grid {
        let _ = writeln!(
            out,
            "  grid: spacing={} lipschitz={} sample_min={} lo={}",
            fmt_sig(g.spacing, p),
            fmt_sig(g.lipschitz, p),
            fmt_sig(g.sample_min, p),
            fmt_sig(g.lo, p)
        );
    }
}

fn lower_source_name(s: LowerBoundSource) -> &'static str {
    match s {
        LowerBoundSource::TRecursion => "t_recursion",
        LowerBoundSource::HMatrix => "h_matrix",
        LowerBoundSource::DiagonalExact => "diagonal_exact",
        LowerBoundSource::GridLipschitz => "grid_lipschitz",
    }
}

fn upper_source_name(s: UpperBoundSource) -> &'static str {
    match s {
        UpperBoundSource::Sigma => "sigma",
        UpperBoundSource::GridSample => "grid_sample",
        UpperBoundSource::DiagonalExact => "diagonal_exact",
    }
}

/// Formats with `p` significant digits: plain decimal in a comfortable
/// magnitude window, scientific outside it, trailing zeros trimmed.
pub fn fmt_sig(x: f64, p: usize) -> String {
    let p = p.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if mag >= p as i32 + 3 || mag < -4 {
        format!("{:.*e}", p - 1, x)
    } else {
        let decimals = (p as i32 - 1 - mag).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        }
    }
}

/// Vector rendering at `p` significant digits: `(1, -0.5, 3)`.
pub fn fmt_vec(v: &RealVector, p: usize) -> String {
    let body: Vec<String> = v.iter().map(|x| fmt_sig(x, p)).collect();
    format!("({})", body.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting_matches_the_recorded_precision() {
        assert_eq!(fmt_sig(2.6972243622680054, 9), "2.69722436");
        assert_eq!(fmt_sig(0.0032585582273807, 9), "0.00325855823");
        assert_eq!(fmt_sig(7.0, 9), "7");
        assert_eq!(fmt_sig(0.125, 9), "0.125");
        assert_eq!(fmt_sig(-1.66838179, 9), "-1.66838179");
        assert_eq!(fmt_sig(0.0, 9), "0");
    }

    #[test]
    fn extreme_magnitudes_fall_back_to_scientific() {
        assert_eq!(fmt_sig(1.5e-61, 3), "1.50e-61");
        assert_eq!(fmt_sig(2.5e14, 4), "2.500e14");
        assert_eq!(fmt_sig(1e-5, 3), "1.00e-5");
    }

    #[test]
    fn precision_one_is_usable() {
        assert_eq!(fmt_sig(2.69, 1), "3");
        assert_eq!(fmt_sig(0.125, 1), "0.1");
    }

    #[test]
    fn vectors_render_parenthesized() {
        let v = RealVector::from_slice(&[1.0, -0.5]).unwrap();
        assert_eq!(fmt_vec(&v, 9), "(1, -0.5)");
    }
}
