use std::process::{Command, Output};

use serde_json::Value;

use subres::wire::{read_bench_csv, Algorithm};

fn subres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = subres(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let v = json(&["compute", "--m", "2", "--n", "2", "--d", "1", "--alpha", "0", "--beta", "1", "--field", "q"]);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "-2"]));
    assert_eq!(v["case"], "generic");
    assert_eq!(v["basis"], "monomial");
    assert!(v["ops"]["mul"].as_u64().is_some());

    let v = json(&["compute", "--m", "3", "--n", "3", "--d", "2", "--alpha", "2", "--beta", "1", "--field", "fp:3"]);
    assert_eq!(v["case"], "boundary");
    assert_eq!(v["coeffs"], serde_json::json!(["1"]));

    let v = json(&["compute", "--m", "5", "--n", "4", "--d", "1", "--alpha", "1", "--beta", "0", "--field", "fp:5"]);
    assert_eq!(v["case"], "vanishing");
    assert_eq!(v["coeffs"], serde_json::json!(["0", "0"]));
}

#[test]
fn compute_bernstein_and_cofactors() {
    let v = json(&[
        "compute", "--m", "2", "--n", "2", "--d", "1", "--alpha", "0", "--beta", "1", "--field", "q",
        "--basis", "bernstein", "--cofactors",
    ]);
    assert_eq!(v["basis"], "bernstein");
    assert_eq!(v["coeffs"], serde_json::json!(["1", "1"]));
    assert_eq!(v["prefactor"], "-1");
    assert_eq!(v["cofactors"]["f"]["coeffs"], serde_json::json!(["-1"]));
    assert_eq!(v["cofactors"]["g"]["field"], "q");
}

#[test]
fn negative_and_rational_roots_parse() {
    let v = json(&["compute", "--m", "3", "--n", "2", "--d", "1", "--alpha", "-1/2", "--beta", "3", "--field", "q"]);
    assert_eq!(v["alpha"], "-1/2");
}

#[test]
fn exit_codes() {
    let out = subres(&["compute", "--m", "7", "--n", "4", "--d", "1", "--alpha", "1", "--beta", "0", "--field", "fp:5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max(m, n)"));

    assert_eq!(subres(&["compute", "--m", "2"]).status.code(), Some(2));
    assert_eq!(subres(&["frobnicate"]).status.code(), Some(2));
    let bad_field = ["compute", "--m", "2", "--n", "2", "--d", "1", "--alpha", "0", "--beta", "1", "--field", "fp:9"];
    assert_eq!(subres(&bad_field).status.code(), Some(2));
    let bad_d = ["compute", "--m", "2", "--n", "2", "--d", "2", "--alpha", "0", "--beta", "1", "--field", "q"];
    assert_eq!(subres(&bad_d).status.code(), Some(2));
    assert_eq!(subres(&["--help"]).status.code(), Some(0));
}

#[test]
fn psres_examples() {
    let v = json(&["psres", "--m", "3", "--n", "3", "--alpha", "1", "--beta", "0", "--field", "q"]);
    assert_eq!(v["psres"], serde_json::json!(["1", "6", "3"]));
    let v = json(&["psres", "--m", "2", "--n", "2", "--alpha", "1", "--beta", "1", "--field", "q"]);
    assert_eq!(v["psres"], serde_json::json!(["0", "0"]));
    let v = json(&["psres", "--m", "1", "--n", "5", "--alpha", "2", "--beta", "0", "--field", "q"]);
    assert_eq!(v["psres"], serde_json::json!(["32"]));
    let out = subres(&["psres", "--m", "4", "--n", "4", "--alpha", "1", "--beta", "0", "--field", "fp:7"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_suites_pass_and_are_reproducible() {
    let out = subres(&["verify", "--max-degree", "6", "--suite", "oracle", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().starts_with("PASS "), "{text}");
    assert_eq!(stdout(&subres(&["verify", "--max-degree", "6", "--suite", "oracle", "--seed", "7"])), text);

    assert_eq!(subres(&["verify", "--max-degree", "4", "--suite", "pade"]).status.code(), Some(0));
    let out = subres(&["verify", "--max-degree", "6", "--suite", "all", "--primes", "11,13"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    for suite in ["oracle", "jacobi", "pade", "bernstein"] {
        assert!(stdout(&out).contains(&format!("{suite}: PASS")));
    }
}

#[test]
fn bench_rows() {
    let out = subres(&["bench", "--sizes", "64,128", "--field", "fp:10007", "--algorithms", "fast"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = read_bench_csv(out.stdout.as_slice()).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[1].m, rows[1].n, rows[1].d), (128, 128, 64));
    assert!(2 * rows[1].muls <= 5 * rows[0].muls + 2 * 200);

    let out = subres(&["bench", "--sizes", "8", "--algorithms", "fast,oracle", "--field", "fp:101"]);
    let rows = read_bench_csv(out.stdout.as_slice()).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1].algorithm, Algorithm::Oracle);
    assert!(rows[0].total_ops() < rows[1].total_ops());

    let path = std::env::temp_dir().join(format!("subres-bench-{}.csv", std::process::id()));
    let out = subres(&[
        "bench", "--sizes", "16,100", "--algorithms", "psres_all,oracle", "--field", "fp:10007",
        "--csv", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = read_bench_csv(std::fs::File::open(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    // n = 100 skips the oracle at the default cutoff.
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].algorithm, Algorithm::PsresAll);

    assert_eq!(subres(&["bench", "--sizes", "x"]).status.code(), Some(2));
}
