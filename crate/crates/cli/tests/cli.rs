use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgr-exc"))
        .args(args)
        .env_remove("LGR_EXC_JOBS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (value, out.status.code().expect("exit code"))
}

#[test]
fn bbw_lgr_single_cell() {
    let (v, code) = json(&["bbw", "--space", "lgr", "--n", "5", "--weight", "0,0,-2,-4,-4"]);
    assert_eq!(code, 0);
    assert_eq!(v["degree"], 5);
    assert_eq!(v["weight"], "0,0,0,0,0");
    assert_eq!(v["dim"], 1);
}

#[test]
fn bbw_vanishing_and_other_spaces() {
    let (v, _) = json(&["bbw", "--space", "lgr", "--n", "2", "--weight", "0,-1"]);
    assert!(v["degree"].is_null());
    assert_eq!(v["dim"], 0);
    let (v, _) = json(&["bbw", "--space", "gr", "--n", "2", "--weight", "-2", "--mu", "0"]);
    assert_eq!(v["degree"], 1);
    let (v, _) = json(&["bbw", "--space", "igr", "--n", "3", "--w", "1", "--weight", "1"]);
    assert_eq!(v["degree"], 0);
    assert_eq!(v["dim"], 6);
}

#[test]
fn staircase_certificate() {
    let (v, code) = json(&["staircase", "--n", "5", "--lambda", "3,3,1", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["claim"], "staircase-exactness");
    assert_eq!(v["status"], "NECESSARY-CONDITION PASS");
    for key in ["claim", "parameters", "status", "witnesses", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn staircase_terms() {
    let (v, code) = json(&["staircase", "--n", "5", "--lambda", "3,3,1"]);
    assert_eq!(code, 0);
    let mults: Vec<u64> = v["terms"].as_array().unwrap().iter().map(|t| t["multiplicity"].as_u64().unwrap()).collect();
    assert_eq!(mults, [1, 132, 110, 44, 1]);
}

#[test]
fn verify_lefschetz_suite() {
    let (v, code) = json(&["verify", "--suite", "lefschetz510"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "PASS");
    let cells: Vec<&Value> = v["witnesses"].as_array().unwrap().iter().filter(|w| w.get("cohomology").is_some()).collect();
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["t"], 2);
}

#[test]
fn verify_is_independent_of_jobs() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = ["verify", "--suite", "lemmas", "--suite", "kp-chi", "--n", "3", "--format", "json"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let four = run(&[&args[..], &["--jobs", "4"]].concat());
    let a: Value = serde_json::from_slice(&one.stdout).unwrap();
    let b: Value = serde_json::from_slice(&four.stdout).unwrap();
    assert_eq!(strip(a), strip(b));
}

#[test]
fn chi_and_kclass() {
    let (v, _) = json(&["chi", "--n", "5", "--a", "2,2@2", "--b", "2,2"]);
    assert_eq!(v["chi"], "-1");
    let (v, _) = json(&["kclass", "--n", "3", "--lambda", "1,1,1"]);
    assert_eq!(v["class"], serde_json::json!({ "1,1,1": 1 }));
    let (v, _) = json(&["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"]);
    assert_eq!(v["coefficient"], 2);
}

#[test]
fn enumerate_kp() {
    let (v, code) = json(&["enumerate", "kp", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["objects"].as_array().unwrap().len(), 16);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bbw", "--space", "lgr", "--n", "2", "--weight", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["bbw", "--space", "lgr", "--n", "2", "--weight", "0,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["kclass", "--n", "2", "--lambda", "2,2"]).status.code(), Some(2));
    assert_eq!(run(&["lr", "--lambda", "1", "--mu", "1", "--bogus"]).status.code(), Some(2));
}

#[test]
fn out_file_receives_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = run(&["verify", "--suite", "kp-count", "--n", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["claim"], "kp-count");
    assert_eq!(v["status"], "PASS");
}
