use std::path::PathBuf;
use std::process::Command;

use bnsets::cli::{run, CommandOutcome};
use bnsets::dioph::{build_d, evaluate_d, parse_sexpr, witness_to_solution};
use bnsets::IntTuple;
use num_traits::Zero;
use tempfile::TempDir;

fn cli(args: &[&str]) -> CommandOutcome {
    let mut argv = vec!["bnsets"];
    argv.extend_from_slice(args);
    run(argv)
}

fn file(dir: &TempDir, name: &str, body: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn paper_verify_theorem1() {
    let out = cli(&["paper", "--which", "t1", "--verify"]);
    assert_eq!(out.exit_code, 0, "{}", out.stdout);
    let triples: Vec<&str> = out.stdout.lines().filter(|l| l.starts_with('[')).collect();
    assert_eq!(triples.len(), 16);
    assert_eq!(triples[2], "[8, 12, 2]");
    assert!(out.stdout.contains("b: 200526827\na: 667378345\n"));
    assert!(out.stdout.contains("fixture: match"));
}

#[test]
fn paper_verify_all() {
    for which in ["t2", "b13", "b15"] {
        let out = cli(&["paper", "--which", which, "--verify"]);
        assert_eq!(out.exit_code, 0, "{which}: {}", out.stdout);
    }
    let out = cli(&["paper", "--which", "t2"]);
    assert_eq!(out.stdout, "328 330 108240 11715897600 264 266 70224 4931410176 286 288 82368 6784487424 250 16 4 2 1\n");
}

#[test]
fn crt_block_and_errors() {
    let out = cli(&["crt", "5"]);
    assert_eq!(out.exit_code, 0);
    assert!(out.stdout.contains("b: 3\na: 8\n"));
    let out = cli(&["crt", "-3"]);
    assert_eq!(out.exit_code, 0);
    assert!(out.stdout.contains("b: 2\na: -5\n"));
    assert_eq!(cli(&["crt", "0"]).exit_code, 2);
    let bad = cli(&["crt", "x1"]);
    assert_eq!(bad.exit_code, 2);
    assert_eq!(bad.stderr.lines().count(), 1);
}

#[test]
fn member_finds_witness() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "t.txt", "2\n");
    let out = cli(&["member", &f, "--domain", "Z", "--bound", "0"]);
    assert_eq!(out.exit_code, 1);
    assert!(out.stdout.contains("not a proof"));
    assert!(out.stdout.contains("counterexamples: 1\n0\n"));
}

#[test]
fn member_without_witness_and_threads() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "t.txt", "# forced chain\n2 1\n");
    let one = cli(&["member", &f, "--domain", "Z", "--bound", "10"]);
    assert_eq!(one.exit_code, 0);
    let four = cli(&["member", &f, "--domain", "Z", "--bound", "10", "--threads", "4"]);
    assert_eq!(one, four);
    let g = file(&dir, "g.txt", "3 2");
    let a = cli(&["member", &g, "--domain", "N", "--bound", "4"]);
    let b = cli(&["member", &g, "--domain", "N", "--bound", "4", "--threads", "3"]);
    assert_eq!(a, b);
    assert_eq!(a.exit_code, 1);
}

#[test]
fn member_rejects_out_of_domain() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "t.txt", "0 1");
    let out = cli(&["member", &f, "--domain", "N1", "--bound", "3"]);
    assert_eq!(out.exit_code, 2);
    assert!(out.stderr.contains("outside domain"));
    assert_eq!(cli(&["member", &f, "--domain", "Q", "--bound", "3"]).exit_code, 2);
}

#[test]
fn extract_and_satisfies() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "t.txt", "2 1\n");
    let out = cli(&["extract", &t]);
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.stdout, "# arity 2\nU 2\nA 2 2 1\nM 1 2 1\nM 2 2 2\n");
    let rel = file(&dir, "r.txt", &out.stdout);

    let paper = cli(&["extract", &t, "--paper-style"]);
    assert!(paper.stdout.contains("[2, 2, 1]\n"));

    assert_eq!(cli(&["satisfies", &t, &rel]).exit_code, 0);
    let y = file(&dir, "y.txt", "3 1");
    let neg = cli(&["satisfies", &y, &rel]);
    assert_eq!(neg.exit_code, 1);
    assert_eq!(neg.stdout, "false\nviolated: A 2 2 1\n");

    let bad = file(&dir, "bad.txt", "U 7\n");
    assert_eq!(cli(&["satisfies", &t, &bad]).exit_code, 2);
}

#[test]
fn emit_d_formats() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "t.txt", "2");
    let out = cli(&["emit-d", &t, "--format", "sexpr"]);
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.stdout, "(^ (- (* a (- 2 y1)) (* (- (* 2 b) 1) (- (* 3 b) 1))) 2)\n");
    let expr = parse_sexpr(&out.stdout).unwrap();
    let model = witness_to_solution(&IntTuple::from_i64s(&[2]), &IntTuple::from_i64s(&[0])).unwrap();
    assert!(expr.eval(&model).unwrap().is_zero());
    assert!(evaluate_d(&build_d(&IntTuple::from_i64s(&[2])), &model).unwrap().is_zero());

    let smt = cli(&["emit-d", &t, "--format", "smt2"]);
    assert_eq!(smt.exit_code, 0);
    assert!(smt.stdout.contains("(set-logic QF_NIA)"));
    assert!(smt.stdout.ends_with("(check-sat)\n"));
}

#[test]
fn search_eq_output() {
    let out = cli(&["search-eq", "--name", "sq1", "--bound", "20"]);
    assert_eq!(out.exit_code, 0);
    let rows: Vec<&str> = out.stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, vec!["10 13 14", "13 10 14"]);
    let threaded = cli(&["search-eq", "--name", "sq1", "--bound", "20", "--threads", "4"]);
    assert_eq!(out, threaded);
    assert_eq!(cli(&["search-eq", "--name", "sq1", "--bound", "1"]).exit_code, 2);
    assert_eq!(cli(&["search-eq", "--name", "q9", "--bound", "5"]).exit_code, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cli(&[]).exit_code, 2);
    assert_eq!(cli(&["frobnicate"]).exit_code, 2);
    assert_eq!(cli(&["extract", "/nonexistent/tuple.txt"]).exit_code, 2);
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "t.txt", "1 two 3");
    let out = cli(&["extract", &t]);
    assert_eq!(out.exit_code, 2);
    assert!(out.stderr.contains("two"));
    let empty = file(&dir, "e.txt", "# nothing\n");
    assert_eq!(cli(&["extract", &empty]).exit_code, 2);
    assert_eq!(cli(&["--help"]).exit_code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_bnsets");
    let ok = Command::new(bin).args(["crt", "5"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("a: 8"));

    let dir = TempDir::new().unwrap();
    let f = file(&dir, "t.txt", "2");
    let neg = Command::new(bin)
        .args(["member", &f, "--domain", "Z", "--bound", "0"])
        .output()
        .unwrap();
    assert_eq!(neg.status.code(), Some(1));

    let usage = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&usage.stderr).lines().count(), 1);
}
