use std::path::PathBuf;
use std::process::{Command, Output};

use aluffi_cli::acceptance::{run_acceptance_suite, run_with, SuiteInputs};
use aluffi_cli::{parse_input, run, Command as Job, Report};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aluffi"))
}

fn job(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("jobs").join(name)
}

fn machine(args: &[&str]) -> (Output, Value) {
    let out = bin().args(args).args(["--format", "machine"]).output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out, v)
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("aluffi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn gb_of_two_linear_forms() {
    let (out, v) = machine(&["gb", job("gb-linear.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut basis: Vec<String> =
        v["results"]["basis"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect();
    basis.sort();
    assert_eq!(basis, ["x", "y"]);
}

#[test]
fn fixture_three_nodes() {
    let (out, v) = machine(&["fixtures", "run", "three-nodes"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["results"]["verdict"], "LinearType");
    assert!(v["provenance"].as_str().unwrap().contains("rational quartics classification, case (a)"));
    assert_eq!(v["results"]["linear_type_by_presentation"], true);
    assert_eq!(v["results"]["analytic_spread"], 3);
}

#[test]
fn torsion_on_four_points() {
    let (out, v) = machine(&["aluffi", "torsion", job("four-points.txt").to_str().unwrap(), "--bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let pieces = v["results"]["pieces"].as_array().unwrap();
    let t2 = pieces.iter().find(|p| p["t"] == 2).unwrap();
    assert_eq!(t2["zero"], false);
    assert!(!t2["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_2() {
    let bad = write_tmp("bad.txt", "ring: x,y\ncurve: x^^2\n");
    let out = bin().args(["curve", "cert", bad.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 10"), "{}", err);

    let out = bin().args(["curve", "cert", job("gb-linear.txt").to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["gb", "/nonexistent/job.txt"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["aluffi", "torsion", job("four-points.txt").to_str().unwrap(), "--bound", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn work_limit_exit_3_with_partial_report() {
    let (out, v) = machine(&["family", "analyze", job("family-a.txt").to_str().unwrap(), "--work-limit", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(v["status"], "partial");
    assert!(v["notes"][0].as_str().unwrap().contains("3 pair reductions"));
}

#[test]
fn machine_output_is_deterministic() {
    let args = ["family", "analyze", job("family-a.txt").to_str().unwrap().to_string().leak(), "--seed", "5"];
    let a = bin().args(args).args(["--format", "machine"]).output().unwrap();
    let b = bin().args(args).args(["--format", "machine"]).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 5);
    assert!(v.get("timing_ms").is_none());
    let back: Report = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(serde_json::to_string_pretty(&back).unwrap().trim(), String::from_utf8_lossy(&a.stdout).trim());
}

#[test]
fn fixtures_run_all_in_name_order() {
    let (out, v) = machine(&["fixtures", "run", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let names: Vec<String> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["inputs"]["fixture"].as_str().unwrap().to_string())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(v.as_array().unwrap().iter().all(|r| r["provenance"].is_string()));
}

#[test]
fn family_file_becomes_family_job() {
    let text = std::fs::read_to_string(job("family-a.txt")).unwrap();
    let spec = parse_input(&text).unwrap();
    assert_eq!(spec.command, Job::FamilyAnalyze);
    let report = run(&spec).unwrap();
    assert_eq!(report.results["generic_verdict"], "LinearType");
    assert_eq!(report.results["consistent"], true);
}

#[test]
fn member_at_zero_is_linear_type() {
    let (out, v) = machine(&["family", "member", job("quintic-member.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["results"]["member"]["verdict"], "LinearType");
}

#[test]
fn verify_components_three_nodes() {
    let (out, v) = machine(&["aluffi", "verify-components", job("comp.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let cands = v["results"]["candidates"].as_array().unwrap();
    assert_eq!(cands.len(), 4);
    assert!(cands.iter().all(|c| c["contains_aluffi_ideal"] == true && c["dimension"]["dim"] == 3));
    assert_eq!(v["results"]["covered"], true);
    // The relative Rees component is missing from the list.
    assert_eq!(v["results"]["exhausts"], false);
}

#[test]
fn only_filter_selects_torsion_criteria() {
    let ids: Vec<u32> = run_acceptance_suite(Some("vv")).iter().map(|o| o.id).collect();
    assert_eq!(ids, [1, 7]);
    let ids: Vec<u32> = run_acceptance_suite(Some("2,9")).iter().map(|o| o.id).collect();
    assert_eq!(ids, [2, 9]);
}

#[test]
fn injected_sign_error_fails_only_its_criterion() {
    let mut inputs = SuiteInputs::default();
    inputs.four_points_j = inputs.four_points_j.replacen("x^2 - x*z", "x^2 + x*z", 1);
    let outcomes = run_with(Some("1,2,7"), &inputs);
    assert!(!outcomes[0].passed);
    assert!(outcomes[1].passed && outcomes[2].passed);
}

#[test]
fn acceptance_exit_code_reflects_failures() {
    let out = bin().args(["acceptance", "--only", "vv"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("criterion")).count(), 2);
    let out = bin().args(["acceptance", "--only", "catalog"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn alpha_flag_overrides_the_member_line() {
    let file = job("quintic-member.txt");
    let (out, v) = machine(&["family", "member", file.to_str().unwrap(), "--alpha", "-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["results"]["member"]["verdict"], "NotLinearType");
    assert_eq!(v["inputs"]["member"], "-2");
    let out = bin().args(["family", "member", file.to_str().unwrap(), "--alpha", "u"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn default_bound_is_four() {
    let (out, v) = machine(&["aluffi", "torsion", job("four-points.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let ts: Vec<u64> = v["results"]["pieces"].as_array().unwrap().iter().map(|p| p["t"].as_u64().unwrap()).collect();
    assert_eq!(ts, [2, 3, 4]);
}
