use std::io::Write;
use std::process::{Command, Stdio};

use extremal_core::cli::{run, EXIT_FAILED, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

const PENTAGON: &str = "n: 5\nfacets: 0 1, 1 2, 2 3, 3 4, 0 4\n";
const TWO_EDGES: &str = "facets: 0 1, 2 3\n";

fn call(args: &[&str], input: &str) -> (String, String, i32) {
    let mut argv = vec!["extremal"];
    argv.extend_from_slice(args);
    let out = run(argv, &mut input.as_bytes());
    (out.stdout, out.stderr, out.code)
}

fn binary(args: &[&str], input: &str) -> (String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn pentagon_betti_diagram() {
    let (out, _, code) = call(&["betti"], PENTAGON);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "total: 1 5 5 1\n    0: 1 . . .\n    1: . 5 5 .\n    2: . . . 1\n"
    );
}

#[test]
fn pentagon_betti_json() {
    let (out, _, code) = call(&["betti", "--json"], PENTAGON);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["diagram"]["totals"], serde_json::json!([1, 5, 5, 1]));
    assert_eq!(v["convention"], "quotient");
}

#[test]
fn pentagon_dual_and_extremal() {
    let (out, _, _) = call(&["dual"], PENTAGON);
    assert_eq!(
        out.trim(),
        "x0*x1*x2, x1*x2*x3, x0*x1*x4, x0*x3*x4, x2*x3*x4"
    );
    let (out, _, code) = call(&["extremal"], PENTAGON);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("corners: (3,2):1\n"), "{out}");
}

#[test]
fn all_checks_pass_on_the_pentagon() {
    let (out, _, code) = call(&["check", "all"], PENTAGON);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().all(|l| l.contains(" PASS ")), "{out}");
}

#[test]
fn failing_check_exits_with_one() {
    let (out, _, code) = call(&["check", "cm"], TWO_EDGES);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.starts_with("CM ") && out.contains(" FAIL "), "{out}");
    let (out, _, code) = call(&["check", "cm", "--json"], TWO_EDGES);
    assert_eq!(code, EXIT_FAILED);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn input_errors_exit_with_two() {
    let (_, err, code) = call(&["betti"], "n: 2\nfacets: 0 5\n");
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 2"), "{err}");
    let (_, _, code) = call(&["check", "nonsense"], PENTAGON);
    assert_eq!(code, EXIT_INPUT);
    let (_, _, code) = call(&["dual"], "gens: x0^2*x1\n");
    assert_eq!(code, EXIT_INPUT);
    let (_, _, code) = call(&["frobnicate"], PENTAGON);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn polarize_flag_accepts_powers() {
    let (out, _, code) = call(&["betti", "--polarize"], "gens: x0*x1, x0^2\n");
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("total: 1 2 1\n"), "{out}");
}

#[test]
fn gin_command() {
    let (out, _, code) = call(&["gin"], "gens: x0^2, x1^2\n");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "x0^2, x0*x1, x1^3");
    let (out, _, code) = call(
        &["check", "gin-corners", "--seed", "9"],
        "gens: x0^2, x1^2\n",
    );
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn binary_matches_in_process_runner() {
    for (args, input) in [
        (vec!["betti"], PENTAGON),
        (vec!["extremal", "--json"], PENTAGON),
        (vec!["check", "cm"], TWO_EDGES),
        (vec!["betti"], "n: 2\nfacets: 0 5\n"),
    ] {
        let (out, _, code) = call(&args, input);
        assert_eq!(binary(&args, input), (out, code));
    }
}

#[test]
fn reads_input_files() {
    let dir = std::env::temp_dir().join(format!("extremal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pentagon.txt");
    std::fs::write(&path, PENTAGON).unwrap();
    let (out, code) = binary(&["betti", path.to_str().unwrap()], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("total: 1 5 5 1"));
    let (_, code) = binary(&["betti", dir.join("missing.txt").to_str().unwrap()], "");
    assert_eq!(code, EXIT_INPUT);
    std::fs::remove_dir_all(&dir).unwrap();
}
