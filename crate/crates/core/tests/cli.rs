use std::process::Command;

use parity_bias::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use parity_bias::counting::cache::{ENV_VAR, FILE_NAME, HEADER};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("parity-bias").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_parity-bias"));
    c.env_remove(ENV_VAR);
    c
}

#[test]
fn count_rows() {
    let (code, out, _) = call(&["count", "--class", "Q", "--n-max", "8"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,class,odd_heavy,even_heavy,balanced,total");
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[9], "8,Q,2,5,0,7");

    let (code, out, _) = call(&["count", "--class", "P", "--n-max", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().nth(1), Some("0,P,0,0,1,1"));

    let (code, out, _) = call(&["count", "--class", "P", "--n-max", "10", "--method", "both"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 12);
}

#[test]
fn count_large_values_are_exact() {
    let (code, out, _) = call(&["count", "--class", "P", "--n-max", "420"]);
    assert_eq!(code, EXIT_OK);
    let last = out.lines().last().unwrap();
    let total = last.rsplit(',').next().unwrap();
    assert!(total.parse::<u128>().unwrap() > u128::from(u64::MAX), "{last}");
    assert!(out.lines().nth(401).unwrap().ends_with(",6727090051741041926"));
}

#[test]
fn count_with_forbidden_set() {
    let (code, out, _) = call(&["count", "--class", "P{1,2}", "--n-max", "12"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().last(), Some("12,\"P{1,2}\",5,4,0,9"));
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["count", "--class", "X", "--n-max", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["count", "--class", "P", "--n-max", "61", "--method", "enum"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "theorem", "T9"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "theorem", "T1", "--n-range", "5"]).0, EXIT_USAGE);
    assert_eq!(call(&["--jobs", "0", "count", "--class", "P", "--n-max", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["explore", "problem2", "--k", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["explore", "problem2", "--k", "3", "--horizon", "49"]).0, EXIT_USAGE);
    let (code, _, err) = call(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn large_enumeration_needs_opt_in() {
    let (code, _, err) = call(&["verify", "theorem", "T1", "--n-range", "1..61", "--method", "both"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--allow-large-enum"));
    let (code, _, _) = call(&["verify", "theorem", "T2", "--n-range", "55..62", "--method", "both", "--allow-large-enum"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn verify_theorems() {
    let (code, out, _) = call(&["verify", "theorem", "T3", "--n-range", "8..120"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 114);
    assert_eq!(out.lines().nth(1), Some("T3,8,true,2,5,-3"));
    for t in ["T1", "T2", "T4", "T5"] {
        assert_eq!(call(&["verify", "theorem", t]).0, EXIT_OK, "{t}");
    }
    let (code, out, _) = call(&["verify", "theorem", "T2", "--n-range", "1..=25", "--method", "both"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("T2-obs,7,false"));
}

#[test]
fn verify_lemmas() {
    let (code, out, _) = call(&["verify", "lemma", "L1", "--n-range", "14..2000"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1 + 994);
    assert_eq!(out.lines().nth(1), Some("L1,14,true,6,5,1"));
    let (code, out, _) = call(&["verify", "lemma", "L2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().all(|l| !l.contains(",false,")));
    let (code, out, _) = call(&["verify", "lemma", "L1", "--n-range", "10..15"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("L1,10,skip,,,"));
    let (_, out, _) = call(&["verify", "lemma", "LB", "--n-range", "3..8"]);
    assert!(out.contains("LB,6,skip,,,"));
    assert!(out.contains("LB.lower,7,true,24,12,12"));
    assert!(!out.contains(",11,"));
    let (code, out, _) = call(&["verify", "lemma", "LB", "--n-range", "20..30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("LB.quad-obs,25,false"));
    assert!(out.contains("LB.quad,26,true"));
}

#[test]
fn verify_maps_reports_collisions() {
    let (code, out, err) = call(&["verify", "maps", "T1", "--n-range", "1..13"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(out.lines().count(), 14);
    let (code, out, err) = call(&["verify", "maps", "T1", "--n-range", "14..14"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.lines().nth(1).unwrap().starts_with("T1,14,"));
    assert!(err.contains("(5,2,2,2,1,1,1)"), "{err}");
    let (code, _, _) = call(&["verify", "maps", "T4", "--n-range", "24..30"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn verify_formulas_fails_on_eq8() {
    let (code, out, err) = call(&["verify", "formulas", "--n-range", "8..9"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("CARD1,8,true,2,2,0"));
    assert!(out.contains("C4/eq8,9,false,3,1,2"));
    assert!(err.contains("C4/eq8"), "{err}");
    let (code, _, _) = call(&["verify", "formulas", "--n-range", "4..8"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn explore_never_fails() {
    let (code, out, _) = call(&["explore", "problem1", "--m-range", "1..40"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 81);
    assert!(out.contains("PROB1.odd,9,false,1,1,0"));
    let (code, out, _) = call(&["explore", "problem2", "--k", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "k,set,horizon,candidate,tail_holds,status\n3,{3},300,4,true,\"candidate, horizon-limited\"\n");
    let (code, out, _) = call(&["explore", "problem2", "--k", "4", "--with-one", "--horizon", "60", "--trail"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 61);
    assert!(out.lines().nth(1).unwrap().starts_with("\"PROB2{1,4}-obs\",1,"));
}

#[test]
fn json_output() {
    let (code, out, _) = call(&["--format", "json", "count", "--class", "D", "--n-max", "3"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[3]["balanced"], "1");
    assert_eq!(v[3]["class"], "D");
    let (_, out, _) = call(&["verify", "theorem", "T1", "--n-range", "2..2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["claim"], "T1");
    assert_eq!(v[0]["holds"], "true");
    assert_eq!(v[0]["margin"], "0");
    let (_, out, _) = call(&["--format", "json", "verify", "formulas", "--n-range", "8..8"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.as_array().unwrap().iter().any(|r| r["holds"] == "skip" && r["lhs"] == ""));
}

#[test]
fn cache_directory_flag() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, cold, _) = call(&["--cache-dir", d, "count", "--class", "DQ", "--n-max", "50"]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(dir.path().join(FILE_NAME)).unwrap();
    assert_eq!(text.lines().next(), Some(HEADER));
    let (_, warm, _) = call(&["--cache-dir", d, "count", "--class", "DQ", "--n-max", "50"]);
    assert_eq!(cold, warm);
}

#[test]
fn cache_environment_variable() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env(ENV_VAR, dir.path())
        .args(["count", "--class", "Pm3", "--n-max", "30"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join(FILE_NAME).exists());
    let plain = bin().args(["count", "--class", "Pm3", "--n-max", "30"]).output().unwrap();
    assert_eq!(out.stdout, plain.stdout);
}

#[test]
fn binary_exit_codes() {
    let ok = bin().args(["verify", "theorem", "T3", "--n-range", "8..40"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let fail = bin().args(["verify", "maps", "T1", "--n-range", "14..14"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(EXIT_FAIL));
    let usage = bin().args(["count"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
    let help = bin().arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(EXIT_OK));
}

#[test]
fn output_is_independent_of_jobs() {
    let cases: [&[&str]; 4] = [
        &["verify", "theorem", "T2", "--n-range", "1..50", "--method", "both"],
        &["verify", "maps", "T3", "--n-range", "1..24"],
        &["verify", "formulas", "--n-range", "1..25"],
        &["count", "--class", "D", "--n-max", "40", "--method", "both"],
    ];
    for args in cases {
        let one = bin().arg("--jobs").arg("1").args(args).output().unwrap();
        let many = bin().arg("--jobs").arg("8").args(args).output().unwrap();
        assert_eq!(one.stdout, many.stdout, "{args:?}");
        assert_eq!(one.status.code(), many.status.code());
    }
}
