use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn braidinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidinv")).args(args).env_remove("BRAID_TRUNC_ORDER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = braidinv(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn trefoil_invariants() {
    let o = braidinv(&["invariants", "1 1 1", "--fiedler", "--q", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("fiedler: 3\n"), "{s}");
    assert!(s.contains("q0: -2 + x^2\n"), "{s}");
    assert!(s.contains("q1: 6 + 3x^2\n"), "{s}");

    let v = json(&["--json", "invariants", "1 1 1", "--fiedler", "--q", "0,1"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["fiedler"], serde_json::json!({"0": 3}));
    assert_eq!(v["writhe"], 3);
    assert_eq!(v["is_knot"], true);
    assert_eq!(v["q"]["1"], serde_json::json!({"0": 6, "2": 3}));
}

#[test]
fn non_knot_exits_3_and_names_cycle_type() {
    let o = braidinv(&["invariants", "n=4; 1", "--fiedler"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[2, 1, 1]"));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(braidinv(&["invariants", "1 q"]).status.code(), Some(2));
    assert_eq!(braidinv(&["invariants", "n=2; 2"]).status.code(), Some(2));
    assert_eq!(braidinv(&["invariants", "0"]).status.code(), Some(2));
}

#[test]
fn example2_beta1_fiedler() {
    let v = json(&["--json", "invariants", "n=5; 3 2 1 -4 2 1 3 4"]);
    let exps: Vec<i64> = v["fiedler"].as_object().unwrap().keys().map(|k| k.parse().unwrap()).collect();
    assert!(exps.contains(&-3) && exps.contains(&-1), "{v}");
}

#[test]
fn example1_exchange() {
    let v = json(&["--json", "exchange", "3 2 1", "3 2 2 2 1", "--q", "1,2"]);
    assert_eq!(v["fiedler_diff"], serde_json::json!({}));
    assert_eq!(v["q_diff"]["1"], serde_json::json!({}));
    assert_eq!(v["q_diff"]["2"], serde_json::json!({"1": 64, "3": -16}));
    assert_eq!(v["l"], 3);
    assert_eq!(v["m1"], 3);
}

#[test]
fn example2_exchange_verdict() {
    let v = json(&["--json", "exchange", "3 2 1", "2 1 3"]);
    assert_eq!(v["fiedler_diff"], serde_json::json!({"-3": -1, "-1": 1, "1": 1, "3": -1}));
    assert_eq!(v["verdict"], "distinguished: not conjugate");
    assert_eq!(v["m1"], 4);
    assert_eq!(v["m2"], 2);
}

#[test]
fn example3_exchange_windings() {
    for i in 1..6usize {
        let fam = json(&["--json", "family", "ex3", "--n", "6", "--i", &i.to_string()]);
        let (x, y) = (fam["X"].as_str().unwrap(), fam["Y"].as_str().unwrap());
        let v = json(&["--json", "exchange", x, y, "--n", "6"]);
        assert_eq!(v["m1"], i + 1);
        assert_eq!(v["m2"], 7 - i);
    }
}

#[test]
fn families() {
    let s = stdout(&braidinv(&["family", "ex1", "--k", "1"]));
    assert!(s.contains("beta1: n=5; 3 2 1 -4 3 2 2 2 1 4\n"), "{s}");
    let v = json(&["--json", "family", "ex2"]);
    assert_eq!(v["Y"], "2 1 3");
    let v = json(&["--json", "family", "ex3", "--n", "4", "--i", "2"]);
    assert_eq!(v["Y"], "3 2 -3");
    assert_eq!(braidinv(&["family", "ex3", "--n", "5", "--i", "2"]).status.code(), Some(3));
}

#[test]
fn morton_replay() {
    let v = json(&["--json", "morton-replay"]);
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 15);
    assert_eq!(steps.last().unwrap()["word"], serde_json::json!({"n": 1, "letters": []}));
    let o = braidinv(&["morton-replay", "--skip", "3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step 3"));
}

#[test]
fn scan_is_deterministic() {
    let args = ["scan", "--n", "4", "--samples", "100", "--seed", "7"];
    let (a, b) = (braidinv(&args), braidinv(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<Value> = stdout(&a).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.last().unwrap()["summary"], true);
    assert!(lines.iter().all(|l| l["schema"] == 1));
}

#[test]
fn scan_with_no_samples_prints_summary_only() {
    let s = stdout(&braidinv(&["scan", "--samples", "0"]));
    assert_eq!(s.lines().count(), 1);
    assert!(s.contains("\"summary\":true"));
}

#[test]
fn scan_include_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# Example 1, j = 1 and 2").unwrap();
    writeln!(f, "3 2 1 | 3 2 2 2 1").unwrap();
    writeln!(f, "3 2 1 | 3 2 2 2 2 2 1").unwrap();
    let path = f.path().to_str().unwrap();
    let s = stdout(&braidinv(&["scan", "--samples", "0", "--include-file", path]));
    let lines: Vec<Value> = s.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    for r in &lines[..2] {
        assert_eq!(r["source"], "include");
        assert_eq!(r["agree"], true);
        assert_eq!(r["fiedler_diff_zero"], true);
    }
}

#[test]
fn truncation_env_var_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_braidinv"))
        .args(["invariants", "1 1 1", "--q", "1"])
        .env("BRAID_TRUNC_ORDER", "5")
        .output()
        .unwrap();
    assert!(stdout(&out).contains("q1: 6 + 3x^2"));
}
