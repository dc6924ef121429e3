//! Command-line front end: parse instance files, run the classification /
//! β-enclosure / certification / solving / validation pipelines, and emit
//! human-readable or JSON reports.
//!
//! Exit codes are stable: `0` success, `1` I/O, parse, or usage error, `2`
//! classification failure (input is not a P-matrix), `3` solver or
//! validation failure.

pub mod formats;
pub mod reference;
pub mod report;

use clap::{Parser, Subcommand};
use lcp_certify_core::beta::{beta_analysis, BetaConfig};
use lcp_certify_core::classify::classify_matrix;
use lcp_certify_core::gen::Family;
use lcp_certify_core::lcp::{certify, solve_enumeration};
use lcp_certify_core::linalg::invert;
use lcp_certify_core::validate::{run_certificate_validation, ValidationConfig};
use lcp_certify_core::{Error as CoreError, NormMode, Tolerances};
use report::{ConfigSnapshot, Report};
use std::path::PathBuf;

/// Certified error bounds for linear complementarity problems with
/// P-matrices.
#[derive(Debug, Parser)]
#[command(name = "lcp-certify", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Instance file (JSON or plain text; see the README for both grammars).
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Emit the machine-readable JSON report instead of the human rendering.
    #[arg(long, global = true)]
    pub json: bool,

    /// Matrix norm for certificates: the certified chain uses `induced`;
    /// `entrymax` mirrors the recorded coefficients and may fail inclusion.
    #[arg(long, global = true, default_value = "induced", value_parser = parse_norm)]
    pub norm: NormMode,

    /// Grid spacing δ for the sampled β bound (default: dimension-dependent).
    #[arg(long, global = true, value_name = "REAL", allow_negative_numbers = true)]
    pub delta: Option<f64>,

    /// Recursion weight λ ∈ (0, 1).
    #[arg(
        long,
        global = true,
        default_value_t = 0.5,
        value_name = "REAL",
        allow_negative_numbers = true
    )]
    pub lambda: f64,

    /// Base seed for generated instances (validate).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Number of generated instances (validate).
    #[arg(long, global = true, default_value_t = 200)]
    pub count: usize,

    /// Instance family: diag_dominant | symmetric_pd | diagonal |
    /// paper_example (validate; default cycles the first three).
    #[arg(long, global = true, value_parser = parse_family)]
    pub family: Option<Family>,

    /// Largest generated dimension; validate cycles dimensions 1..=n.
    #[arg(long, global = true, default_value_t = 5)]
    pub n: usize,

    /// Significant digits in the human rendering (JSON is full precision).
    #[arg(long, global = true, default_value_t = 9)]
    pub precision: usize,
}

/// The available pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Classify the input matrix: P-matrix, diagonal, H-matrix flags.
    Classify,
    /// Compute a certified enclosure of β(A) with per-bound sources.
    Beta,
    /// Certify absolute/relative error bounds for the trial point `d`.
    Certify,
    /// Solve the problem exactly by exhaustive complementary-basis search.
    Solve,
    /// Sweep seeded random instances and tally every certified claim.
    Validate,
    /// Recompute the recorded worked example and flag discrepancies.
    ReproduceExample,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Beta => "beta",
            Command::Certify => "certify",
            Command::Solve => "solve",
            Command::Validate => "validate",
            Command::ReproduceExample => "reproduce-example",
        }
    }
}

fn parse_norm(s: &str) -> Result<NormMode, String> {
    s.parse()
        .map_err(|_| format!("expected 'entrymax' or 'induced', got {s:?}"))
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| {
        format!(
            "expected one of diag_dominant, symmetric_pd, diagonal, paper_example; got {s:?}"
        )
    })
}

/// Anything that stops a command, tagged with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad invocation: missing required pieces, out-of-range flags.
    #[error("{0}")]
    Usage(String),
    /// Unreadable input file.
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    /// Malformed instance file.
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: formats::ParseError,
    },
    /// The enumeration solver accepted no complementary basis.
    #[error("no complementary basis was accepted; the matrix is likely not a P-matrix (run `classify`)")]
    NoSolution,
    /// Any library-level failure.
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    /// The documented exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Parse { .. } => 1,
            CliError::NoSolution => 3,
            CliError::Core(CoreError::NotPMatrix { .. }) => 2,
            CliError::Core(CoreError::NoSolution) => 3,
            CliError::Core(_) => 1,
        }
    }
}

/// A finished command: the report plus the exit code to return.
#[derive(Debug)]
pub struct CommandOutcome {
    pub report: Report,
    pub exit_code: i32,
}

/// Entry point: parse `std::env::args`, honor `LCP_CERTIFY_THREADS`, run,
/// print, and return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests are successes; everything else is usage.
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    init_threads();
    match execute(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", outcome.report.to_json());
            } else {
                print!("{}", outcome.report.render_human());
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            e.exit_code()
        }
    }
}

/// Applies `LCP_CERTIFY_THREADS` (0 or unset = automatic) to the global
/// worker pool before any parallel work runs.
fn init_threads() {
    if let Ok(v) = std::env::var("LCP_CERTIFY_THREADS") {
        if let Ok(k) = v.trim().parse::<usize>() {
            if k > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    }
}

/// Runs one parsed invocation and assembles its report.
pub fn execute(cli: &Cli) -> Result<CommandOutcome, CliError> {
    if cli.precision == 0 || cli.precision > 17 {
        return Err(CliError::Usage(format!(
            "--precision must be between 1 and 17, got {}",
            cli.precision
        )));
    }
    if let Some(d) = cli.delta {
        if !(d.is_finite() && d > 0.0) {
            return Err(CliError::Usage(format!(
                "--delta must be a positive real, got {d}"
            )));
        }
    }
    match cli.command {
        Command::Classify => cmd_classify(cli),
        Command::Beta => cmd_beta(cli),
        Command::Certify => cmd_certify(cli),
        Command::Solve => cmd_solve(cli),
        Command::Validate => cmd_validate(cli),
        Command::ReproduceExample => cmd_reproduce_example(cli),
    }
}

fn snapshot(cli: &Cli) -> ConfigSnapshot {
    ConfigSnapshot {
        tolerances: Tolerances::default(),
        norm: cli.norm.as_str().to_owned(),
        delta: cli.delta,
        lambda: cli.lambda,
        seed: None,
        count: None,
        family: None,
        n: None,
        precision: cli.precision,
    }
}

fn beta_config(cli: &Cli) -> BetaConfig {
    BetaConfig {
        tolerances: Tolerances::default(),
        lambda: cli.lambda,
        sweep_lambda: false,
        grid_spacing: cli.delta,
    }
}

/// Reads and parses `--input`, which `which` commands require.
fn load_input(cli: &Cli) -> Result<(formats::InstanceFile, String), CliError> {
    let Some(path) = &cli.input else {
        return Err(CliError::Usage(format!(
            "`{}` requires --input FILE",
            cli.command.name()
        )));
    };
    let path_str = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path_str.clone(),
        source,
    })?;
    let file = formats::InstanceFile::parse_str(&text).map_err(|source| CliError::Parse {
        path: path_str.clone(),
        source,
    })?;
    Ok((file, path_str))
}

fn cmd_classify(cli: &Cli) -> Result<CommandOutcome, CliError> {
    let (file, path) = load_input(cli)?;
    let a = file.to_matrix()?;
    let classification = classify_matrix(&a, &Tolerances::default())?;
    let mut report = Report::new("classify", Some(path), snapshot(cli));
    let exit_code = if classification.is_p {
        0
    } else {
        if let Some(w) = &classification.witness {
            report
                .findings
                .push(format!("not a P-matrix: principal minor {w} is not positive"));
        }
        2
    };
    report.classification = Some(classification);
    Ok(CommandOutcome { report, exit_code })
}

/// Classification that must come back P, or the command stops with exit 2.
fn require_p(
    a: &lcp_certify_core::DenseMatrix,
) -> Result<lcp_certify_core::MatrixClassification, CliError> {
    let classification = classify_matrix(a, &Tolerances::default())?;
    if !classification.is_p {
        let witness = classification
            .witness
            .clone()
            .expect("non-P classification always carries a witness");
        return Err(CoreError::NotPMatrix { witness }.into());
    }
    Ok(classification)
}

fn cmd_beta(cli: &Cli) -> Result<CommandOutcome, CliError> {
    let (file, path) = load_input(cli)?;
    let a = file.to_matrix()?;
    let classification = require_p(&a)?;
    let analysis = beta_analysis(&a, &beta_config(cli))?;
    let mut report = Report::new("beta", Some(path), snapshot(cli));
    report.classification = Some(classification);
    report.beta = Some(analysis);
    Ok(CommandOutcome {
        report,
        exit_code: 0,
    })
}

fn cmd_certify(cli: &Cli) -> Result<CommandOutcome, CliError> {
    let (file, path) = load_input(cli)?;
    let Some(inst) = file.to_instance()? else {
        return Err(CliError::Usage(
            "`certify` requires a q vector in the instance file".into(),
        ));
    };
    let Some(d) = file.to_trial_point()? else {
        return Err(CliError::Usage(
            "`certify` requires a d vector (the trial point) in the instance file".into(),
        ));
    };
    let classification = require_p(&inst.a)?;
    let tol = Tolerances::default();
    let cfg = beta_config(cli);
    let beta_a = beta_analysis(&inst.a, &cfg)?;
    let a_inv = invert(&inst.a, &tol)?;
    let beta_inv = beta_analysis(&a_inv, &cfg)?;
    let certificate = certify(
        &inst,
        &d,
        &beta_a.enclosure,
        &beta_inv.enclosure,
        cli.norm,
        &tol,
    )?;
    let mut report = Report::new("certify", Some(path), snapshot(cli));
    if certificate.rel_lo.is_none() {
        report.findings.push(
            "relative bounds are undefined: ‖(−q)₊‖∞ = 0, so the unique solution is z* = 0"
                .into(),
        );
    }
    report.classification = Some(classification);
    report.beta = Some(beta_a);
    report.beta_inverse = Some(beta_inv);
    report.certificate = Some(certificate);
    Ok(CommandOutcome {
        report,
        exit_code: 0,
    })
}

fn cmd_solve(cli: &Cli) -> Result<CommandOutcome, CliError> {
    let (file, path) = load_input(cli)?;
    let Some(inst) = file.to_instance()? else {
        return Err(CliError::Usage(
            "`solve` requires a q vector in the instance file".into(),
        ));
    };
    let solution = match solve_enumeration(&inst, &Tolerances::default()) {
        Ok(s) => s,
        Err(CoreError::NoSolution) => return Err(CliError::NoSolution),
        Err(e) => return Err(e.into()),
    };
    let mut report = Report::new("solve", Some(path), snapshot(cli));
    report.solution = Some(solution);
    Ok(CommandOutcome {
        report,
        exit_code: 0,
    })
}

fn cmd_validate(cli: &Cli) -> Result<CommandOutcome, CliError> {
    let vcfg = ValidationConfig {
        count: cli.count,
        max_n: cli.n,
        family: cli.family,
        base_seed: cli.seed,
        beta: beta_config(cli),
        ..ValidationConfig::default()
    };
    let tally = run_certificate_validation(&vcfg)?;
    let mut config = snapshot(cli);
    config.seed = Some(cli.seed);
    config.count = Some(cli.count);
    config.n = Some(cli.n);
    config.family = cli.family.map(|f| f.as_str().to_owned());
    let mut report = Report::new("validate", None, config);
    let exit_code = if tally.induced_failures() == 0 { 0 } else { 3 };
    if exit_code != 0 {
        report.findings.push(format!(
            "{} induced-mode check(s) failed; see the validation section",
            tally.induced_failures()
        ));
    }
    report.validation = Some(tally);
    Ok(CommandOutcome { report, exit_code })
}

fn cmd_reproduce_example(cli: &Cli) -> Result<CommandOutcome, CliError> {
    let (rows, findings) = reference::worked_example_rows(&Tolerances::default())?;
    let mut report = Report::new("reproduce-example", None, snapshot(cli));
    report.reference = Some(rows);
    report.findings = findings;
    Ok(CommandOutcome {
        report,
        exit_code: 0,
    })
}
