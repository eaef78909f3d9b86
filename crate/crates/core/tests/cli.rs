//! End-to-end tests of the `subcubic-tsp` binary: exit codes, file formats,
//! and the gen -> solve -> check round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subcubic-tsp"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn write_file(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).expect("temp files are writable");
    path
}

#[test]
fn gen_solve_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let out = run(&["gen", "petersen", "--out", graph.to_str().unwrap()]);
    assert!(out.status.success());

    let solved = run(&["solve", graph.to_str().unwrap()]);
    assert!(solved.status.success());
    let text = stdout(&solved);
    assert!(text.contains("n=10 n2=0"));
    assert!(text.contains("walk_len=11"));
    assert!(text.contains("bound=11"));
    assert!(text.contains("bound_exact=23/2"));

    let solution = write_file(&dir, "sol.txt", &text);
    let checked = run(&[
        "check",
        graph.to_str().unwrap(),
        solution.to_str().unwrap(),
    ]);
    assert!(checked.status.success());
    assert!(stdout(&checked).starts_with("ok walk_len=11"));
}

#[test]
fn solve_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    assert!(run(&["gen", "random", "24", "--seed", "7", "--out", graph.to_str().unwrap()])
        .status
        .success());
    let a = run(&["solve", graph.to_str().unwrap()]);
    let b = run(&["solve", graph.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_families_solve_within_bounds() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        vec!["gen", "k4"],
        vec!["gen", "diamond"],
        vec!["gen", "prism"],
        vec!["gen", "cube"],
        vec!["gen", "cycle", "9"],
        vec!["gen", "theta", "3"],
        vec!["gen", "k23", "0"],
        vec!["gen", "k23", "4", "--seed", "3"],
        vec!["gen", "random", "14", "--seed", "2"],
    ] {
        let graph = dir.path().join("g.txt");
        let mut args = spec.clone();
        args.extend(["--out", graph.to_str().unwrap()]);
        assert!(run(&args).status.success(), "{spec:?}");
        let solved = run(&["solve", graph.to_str().unwrap()]);
        assert!(solved.status.success(), "{spec:?}");
    }
}

#[test]
fn oracle_reports_exact_values() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k4.txt");
    assert!(run(&["gen", "k4", "--out", graph.to_str().unwrap()]).status.success());
    let out = run(&["oracle", graph.to_str().unwrap(), "--edge", "0", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("exc=2\n"));
    assert!(text.contains("exc_with=0 exc_without=2 delta=-1 delta_hat=1"));

    let theta = dir.path().join("theta2.txt");
    assert!(run(&["gen", "theta", "2", "--out", theta.to_str().unwrap()]).status.success());
    let out = run(&["oracle", theta.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("exc=4\n"));

    let missing = run(&["oracle", graph.to_str().unwrap(), "--edge", "0", "9"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();

    // 2: unreadable and malformed inputs.
    assert_eq!(run(&["solve", "/nonexistent/graph.txt"]).status.code(), Some(2));
    let bad = write_file(&dir, "bad.txt", "3 2\n0 1\n");
    assert_eq!(run(&["solve", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["gen", "nosuchfamily"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "cycle"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "k4", "3"]).status.code(), Some(2));

    // 3: well-formed but outside the solver domain, for solve and oracle alike.
    let path = write_file(&dir, "path.txt", "3 2\n0 1\n1 2\n");
    assert_eq!(run(&["solve", path.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["oracle", path.to_str().unwrap()]).status.code(), Some(3));

    // 4: oracle refuses oversized graphs unless forced.
    let big = dir.path().join("big.txt");
    assert!(run(&["gen", "cycle", "20", "--out", big.to_str().unwrap()])
        .status
        .success());
    assert_eq!(run(&["oracle", big.to_str().unwrap()]).status.code(), Some(4));
    assert!(run(&["oracle", big.to_str().unwrap(), "--force"]).status.success());

    // 5: a tampered walk fails verification.
    let graph = dir.path().join("c6.txt");
    assert!(run(&["gen", "cycle", "6", "--out", graph.to_str().unwrap()])
        .status
        .success());
    let solved = run(&["solve", graph.to_str().unwrap()]);
    assert!(solved.status.success());
    let tampered = stdout(&solved).replace("0 1 2 3 4 5 0", "0 1 2 3 4 0");
    let solution = write_file(&dir, "sol.txt", &tampered);
    assert_eq!(
        run(&["check", graph.to_str().unwrap(), solution.to_str().unwrap()])
            .status
            .code(),
        Some(5)
    );
}

#[test]
fn oracle_limit_env_variable_applies() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c12.txt");
    assert!(run(&["gen", "cycle", "12", "--out", graph.to_str().unwrap()])
        .status
        .success());
    let out = bin()
        .args(["oracle", graph.to_str().unwrap()])
        .env("ORACLE_LIMIT", "8")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(4));
}
