// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::Command;

use chainmix::cli::run;
use chainmix::io::CodeFile;
use chainmix::MixedCode;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
        .display()
        .to_string()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("chainmix").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chainmix-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn standard_form_prints_type_permutation_and_rows() {
    let (code, out, _) = invoke(&["standard-form", &fixture("ex2.code")]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "type (4,3; 1 | 3, 0)");
    assert_eq!(lines[1], "permutation 0 1 2 3 | 0 1 2");
    assert_eq!(lines[2], "1 0 3 6 | 0 0 0");
    assert_eq!(lines.len(), 6);
    let (_, same, _) = invoke(&["standard-form", "--input", &fixture("ex2.code")]);
    assert_eq!(same, out);
}

#[test]
fn parity_check_of_printed_standard_form() {
    let (code, out, _) = invoke(&["parity-check", &fixture("ex2-standard.code")]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 1 0 0 | 1 2 0\n5 0 1 0 | 1 3 3\n6 0 0 1 | 0 0 0\n");
}

#[test]
fn lcp_check_and_strict_exit_codes() {
    let (code, out, _) = invoke(&["lcp", "check", &fixture("zero.code"), &fixture("ambient.code")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("verdict ok"));
    let args = ["lcp", "check", &fixture("ex2.code"), &fixture("ex2.code")];
    let (code, out, _) = invoke(&args);
    assert_eq!(code, 0);
    assert!(out.starts_with("verdict nonsquare_stack"));
    let mut strict = vec!["--strict"];
    strict.extend(args);
    assert_eq!(invoke(&strict).0, 1);
}

#[test]
fn security_of_trivial_pair() {
    let (code, out, _) = invoke(&["lcp", "security", &fixture("ambient.code"), &fixture("zero.code")]);
    assert_eq!(code, 0);
    assert_eq!(out, "security 1\n");
    let (_, out, _) = invoke(&["--strict", "lcp", "security", &fixture("ex2.code"), &fixture("ex2.code")]);
    assert_eq!(out, "not an LCP pair\n");
}

#[test]
fn input_errors_exit_with_two() {
    let (code, _, err) = invoke(&["type", "/nonexistent/file.code"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/file.code"));
    let bad = scratch("bad.code", "p = 2\ns = 3\nr = 2\nalpha = 1\nbeta = 1\nrows = [[1, 2, 3]]\n");
    let (code, _, err) = invoke(&["dual", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("row 1"), "{err}");
    let (code, _, _) = invoke(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn structured_dual_round_trips() {
    let (code, out, _) = invoke(&["--format", "structured", "dual", &fixture("ex2.code")]);
    assert_eq!(code, 0);
    let dual = CodeFile::parse(&out, "stdout").unwrap().code;
    let original = CodeFile::load(fixture("ex2.code").as_ref()).unwrap().code;
    assert!(dual.dual().same_code(&original).unwrap());
    assert!(out.contains("type = \"(4,3; 3 | 0, 0)\""));
}

#[test]
fn search_output_is_reproducible() {
    let args = ["--format", "structured", "--budget", "80", "--seed", "17", "lcp", "search", "--p", "3", "--s", "2", "--r", "1", "--alpha", "2", "--beta", "1"];
    let (code, first, _) = invoke(&args);
    assert_eq!(code, 0);
    let (_, second, _) = invoke(&args);
    assert_eq!(first, second);
    assert!(first.contains("[[pair]]"));
    let parsed: toml::Table = first.parse().unwrap();
    assert_eq!(parsed["seed"].as_integer(), Some(17));
}

#[test]
fn enumerate_and_min_distance() {
    let (code, out, _) = invoke(&["enumerate", &fixture("ex2.code")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 512);
    let (_, out, _) = invoke(&["min-distance", &fixture("zero.code")]);
    assert_eq!(out, "min-distance undefined (zero code)\n");
    let (code, _, err) = invoke(&["--budget", "16", "enumerate", &fixture("ex2.code")]);
    assert_eq!(code, 2);
    assert!(err.contains("budget"));
}

#[test]
fn group_commands() {
    let (code, out, _) = invoke(&["group", "ideal", &fixture("z4c2-z2c3.code")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("type (2,3; 1 | 2)"));
    let (code, _, err) = invoke(&["group", "ideal", &fixture("ex2.code")]);
    assert_eq!(code, 2);
    assert!(err.contains("[groups]"));

    let groups = "\n[groups]\nH = [2]\nK = [3]\n";
    let head = "p = 2\ns = 2\nr = 1\nalpha = 2\nbeta = 3\n";
    let c = scratch("even.code", &format!("{head}rows = [[0, 0, 1, 1, 0], [0, 0, 0, 1, 1]]{groups}"));
    let d = scratch("rep.code", &format!("{head}rows = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 1, 1]]{groups}"));
    let (code, out, _) = invoke(&["group", "check-equivalence", c.to_str().unwrap(), d.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out, "witness 0 1 | 0 1 2\n");
}

#[test]
fn type_reports_structure() {
    let (_, out, _) = invoke(&["type", &fixture("ex2.code")]);
    assert!(out.contains("weakly_free true"));
    assert!(out.contains("dimension 9"));
}

#[test]
fn verify_reports_no_failures() {
    let (code, out, _) = invoke(&["--strict", "verify", "--instances", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.contains(" 0 failures")));
}

#[test]
fn binary_runs_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_chainmix");
    let out = Command::new(bin).args(["type", &fixture("ex2.code")]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("type (4,3; 1 | 3, 0)"));
    let out = Command::new(bin).args(["--strict", "lcp", "check", &fixture("ex2.code"), &fixture("zero.code")]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).args(["type", "missing.code"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fixtures_agree_with_library() {
    let c = CodeFile::load(fixture("ambient.code").as_ref()).unwrap().code;
    assert!(c.same_code(&MixedCode::whole(c.ambient())).unwrap());
}
