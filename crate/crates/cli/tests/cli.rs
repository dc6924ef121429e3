//! End-to-end tests of the installed binary: exit codes, output formats, and
//! parse diagnostics, exactly as a user would hit them.

use std::io::Write as _;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lcp-certify"))
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn classify_p_matrix_exits_zero() {
    let out = run(&["classify", "--input", &fixture("worked_example.json")]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("P-matrix:                yes"), "{text}");
    assert!(text.contains("H-matrix, positive diag: yes"), "{text}");
}

#[test]
fn classify_non_p_exits_two_with_witness() {
    let out = run(&["classify", "--input", &fixture("non_p.txt")]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("P-matrix:                no"), "{text}");
    assert!(text.contains("witness"), "{text}");
    assert!(text.contains("{1}"), "{text}");
}

#[test]
fn beta_on_non_p_exits_two() {
    let out = run(&["beta", "--input", &fixture("non_p.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("P-matrix"), "{}", stderr(&out));
}

#[test]
fn solve_without_accepted_basis_exits_three() {
    let out = run(&["solve", "--input", &fixture("non_p.txt")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("no complementary basis"), "{}", stderr(&out));
}

#[test]
fn truncated_file_exits_one_with_context() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3\n1 0 0\n0 1 0").unwrap();
    let out = run(&["classify", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("2 of 3 matrix rows"), "{}", stderr(&out));
}

#[test]
fn missing_file_exits_one() {
    let out = run(&["classify", "--input", "/nonexistent/no.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot read"), "{}", stderr(&out));
}

#[test]
fn certify_without_trial_point_is_a_usage_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "2\n2 1\n1 2\n-4 -5").unwrap();
    let out = run(&["certify", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("requires a d vector"), "{}", stderr(&out));
}

#[test]
fn unknown_argument_exits_one() {
    let out = run(&["classify", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn json_reports_parse_and_carry_the_schema() {
    let out = run(&["classify", "--input", &fixture("worked_example.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "classify");
    assert_eq!(v["classification"]["is_p"], true);
    assert_eq!(v["config"]["tolerances"]["pivot_eps"], 1e-12);

    let out = run(&["beta", "--input", &fixture("worked_example.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let enc = &v["beta"]["enclosure"];
    assert!(enc["lo"].as_f64().unwrap() <= enc["hi"].as_f64().unwrap());
    assert!(enc["lo_source"].is_string() && enc["hi_source"].is_string());
    assert_eq!(v["beta"]["t_trace"]["lambda"], 0.5);

    let out = run(&["certify", "--input", &fixture("worked_example.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let c = &v["certificate"];
    assert_eq!(c["norm_used"], "induced");
    assert_eq!(c["residual"], 1.0);
    assert!(c["abs_lo"].as_f64().unwrap() <= c["abs_hi"].as_f64().unwrap());

    let out = run(&["solve", "--input", &fixture("worked_example.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let z0 = v["solution"]["z"][0].as_f64().unwrap();
    assert!((z0 - 0.1).abs() < 1e-12, "z0 = {z0}");

    let out = run(&["reproduce-example", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["reference"].as_array().unwrap();
    assert_eq!(rows.len(), 15);
    let disc = rows.iter().find(|r| r["name"] == "gamma{1,3}").unwrap();
    assert_eq!(disc["within_tolerance"], false);
}

#[test]
fn both_file_formats_agree() {
    let json = run(&["classify", "--input", &fixture("worked_example.json"), "--json"]);
    let text = run(&["classify", "--input", &fixture("worked_example.txt"), "--json"]);
    let vj: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let vt: serde_json::Value = serde_json::from_str(&stdout(&text)).unwrap();
    assert_eq!(vj["classification"], vt["classification"]);
}

#[test]
fn residual_at_zero_trial_point_is_the_plus_norm_of_minus_q() {
    // d = 0 in the fixture, so the residual must equal ‖(−q)₊‖∞ = 1.
    let out = run(&["certify", "--input", &fixture("worked_example.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("residual r(d):     1\n"), "{}", stdout(&out));
}

#[test]
fn validate_zero_count_exits_zero() {
    let out = run(&["validate", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("instances:             0"), "{}", stdout(&out));
}

#[test]
fn validate_small_sweep_reports_clean() {
    let out = run(&["validate", "--count", "12", "--n", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["validation"]["evaluated"], 12);
    assert_eq!(v["validation"]["abs_pass_induced"], 12);
}

#[test]
fn thread_cap_env_var_is_accepted() {
    let out = bin()
        .env("LCP_CERTIFY_THREADS", "1")
        .args(["beta", "--input", &fixture("worked_example.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn precision_flag_controls_the_human_rendering() {
    let out = run(&[
        "beta",
        "--input",
        &fixture("worked_example.json"),
        "--precision",
        "4",
    ]);
    let text = stdout(&out);
    assert!(text.contains("2.697\n") || text.contains("2.697 "), "{text}");
    assert!(!text.contains("2.69722436"), "{text}");
}
