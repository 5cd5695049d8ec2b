use std::path::Path;
use std::process::{Command, Output};

fn toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn graver_of_a_curve() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.mat", "1 3\n3 4 5\n");
    let out = toric(&["graver", &a]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let header: Vec<usize> = text.lines().next().unwrap().split_whitespace().map(|x| x.parse().unwrap()).collect();
    assert_eq!(header[1], 3);
    assert_eq!(text.lines().count(), header[0] + 1);
    // (1, -2, 1) is primitive and in the kernel of (3 4 5)
    assert!(text.lines().any(|l| l == "1 -2 1" || l == "-1 2 -1"));
    let fiber = toric(&["fiber", &a, "--deg", "10"]);
    assert!(fiber.status.success());
    assert!(String::from_utf8(fiber.stdout).unwrap().starts_with("2 3\n"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.mat", "1 4\n1 5 20 24\n");
    let one = toric(&["--threads", "1", "markov", &a]);
    let many = toric(&["--threads", "4", "markov", &a]);
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn markov_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.mat", "1 3\n3 4 5\n");
    let out = dir.path().join("m.mat");
    let status = toric(&["markov", &a, "-o", out.to_str().unwrap()]).status;
    assert!(status.success());
    assert!(std::fs::read_to_string(out).unwrap().starts_with("3 3\n"));
}

#[test]
fn verify_reports_json_and_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("v.json");
    let status = toric(&["verify", "--claim", "lemma1", "--n", "4", "--json", json.to_str().unwrap()]).status;
    assert_eq!(status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["pass"], true);
    assert!(v["wall_time_secs"].is_number());
}

#[test]
fn failed_claim_exits_one() {
    assert_eq!(toric(&["verify", "--claim", "remark6"]).status.code(), Some(1));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "z.mat", "1 3\n0 1 2\n");
    assert_eq!(toric(&["graver", &zero]).status.code(), Some(2));
    let ragged = write(dir.path(), "r.mat", "1 3\n1 2\n");
    assert_eq!(toric(&["graver", &ragged]).status.code(), Some(2));
    assert_eq!(toric(&["graver", "/nonexistent/a.mat"]).status.code(), Some(2));
    assert_eq!(toric(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn complexity_json() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.mat", "1 4\n1 5 20 24\n");
    let out = toric(&["complexity", &a, "--rmax", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["per_r"][0]["basis_size"], 46);
    assert_eq!(v["per_r"][0]["max_type"], 2);
}
