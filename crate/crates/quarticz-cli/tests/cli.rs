use std::process::{Command, Output};

use serde_json::Value;

fn quarticz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quarticz")).args(args).env_clear().output().expect("binary runs")
}

fn reports(out: &Output) -> Vec<Value> {
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(v["schema_version"], 1);
    v["reports"].as_array().unwrap().clone()
}

#[test]
fn counts_echo_fermat_at_three() {
    let out = quarticz(&["verify", "counts", "--primes", "3,5"]);
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["status"], "pass");
    assert_eq!(r[0]["details"]["fermat_at_3"], 16);
    assert!(r[0]["anchor"].as_str().unwrap().contains("point counts"));
}

#[test]
fn orbits_report() {
    let out = quarticz(&["verify", "orbits"]);
    assert_eq!(out.status.code(), Some(0));
    let d = &reports(&out)[0]["details"];
    assert_eq!((d["orbits"].as_u64(), d["fz_orbit_size"].as_u64()), (Some(3), Some(15)));
}

#[test]
fn fermat_is_measured() {
    let out = quarticz(&["verify", "fermat"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &reports(&out)[0];
    assert_eq!(r["status"], "measured");
    assert_eq!(r["details"]["trace_at_3"], 0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "counts", "--primes", "4"][..],
        &["verify", "counts", "--primes", "2"],
        &["verify", "counts", "--primes", "67"],
        &["verify", "counts", "--tol", "-1"],
        &["verify", "counts", "--order", "5"],
        &["verify", "bogus"],
        &["verify"],
    ] {
        assert_eq!(quarticz(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn env_overrides_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_quarticz"))
        .args(["verify", "fermat"])
        .env_clear()
        .env("QUARTICZ_PRIMES", "5,13")
        .output()
        .unwrap();
    let rows = reports(&out)[0]["details"]["rows"].as_array().unwrap().iter().map(|r| r["p"].as_u64().unwrap()).collect::<Vec<_>>();
    assert_eq!(rows, [5, 13]);
}

#[test]
fn suite_flag_and_out_file() {
    let path = std::env::temp_dir().join(format!("quarticz-cli-test-{}.json", std::process::id()));
    let out = quarticz(&["verify", "--suite", "g-triple,hecke", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    let suites: Vec<_> = v["reports"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap().to_string()).collect();
    assert_eq!(suites, ["g-triple", "hecke"]);
}

fn strip_runtime(mut v: Value) -> Value {
    for r in v["reports"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("runtime_s");
    }
    v
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "theta-table", "fz-phi", "spin", "lefschetz"];
    let a: Value = serde_json::from_slice(&quarticz(&args).stdout).unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_quarticz")).args(args).env_clear().env("RAYON_NUM_THREADS", "1").output().unwrap();
    let b: Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(strip_runtime(a), strip_runtime(b));
}

#[test]
fn ez_fails_on_two_generators() {
    let out = quarticz(&["verify", "ez"]);
    assert_eq!(out.status.code(), Some(1));
    let d = &reports(&out)[0]["details"];
    assert_eq!(d["gamma_z_failures"], serde_json::json!(["e1e4", "e1e6"]));
    assert_eq!(d["gamma48_passed"], true);
    assert_eq!(d["phi_passed"], true);
}
