//! End-to-end runs of the `lorentzian` binary against the bundled data files.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lorentzian")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn euler_from_fixture_rays() {
    let out = run(&["euler", "--matroid", &path("elliptic11.json"), "--rays", &path("t11_rays.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "euler");
    assert_eq!(r["result"]["chi"], 11);
    // Fixture rays are verified but not proven complete.
    assert_eq!(r["inputs_complete"], false);
}

#[test]
fn euler_enumerates_when_no_rays_are_given() {
    let r = report(&run(&["euler", "--matroid", &path("u24.json")]));
    assert_eq!(r["result"]["chi"], 1);
    assert_eq!(r["result"]["rays"], 3);
    assert_eq!(r["inputs_complete"], true);
}

#[test]
fn assert_flag_reports_a_failed_check() {
    let out = run(&["check-lorentzian", "--poly", &path("squarepairs.json"), "--assert"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["result"]["lorentzian"], false);
    assert!(!r["result"]["certificate"].is_null(), "a failing check carries a witness");
}

#[test]
fn lorentzian_input_passes_the_assert() {
    let out = run(&["check-lorentzian", "--poly", &path("u24_generating.json"), "--assert"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn tutte_rank_of_u24() {
    let r = report(&run(&["tutte-rank", "--matroid", &path("u24.json")]));
    assert_eq!(r["result"]["tutte_rank"], 5);
    assert_eq!(r["result"]["reduced_dim"], 2);
}

#[test]
fn resource_caps_exit_with_three() {
    let out = run(&["--cone-budget", "10", "dressian-rays", "--matroid", &path("elliptic11.json")]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["--max-dim", "1", "euler", "--matroid", &path("u24.json")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bad_input_exits_with_two() {
    let out = run(&["check-null", "--values", "1,2,x", "--q", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["tutte-rank", "--matroid", &path("missing.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn null_checks_follow_q() {
    let at = |q: &str| report(&run(&["check-null", "--values", "1,1,3", "--q", q]))["result"]["null"].clone();
    assert_eq!(at("1"), false);
    assert_eq!(at("inf"), true);
}

#[test]
fn betsy_interval_from_the_cli() {
    let r = report(&run(&["betsy"]));
    let hi = r["result"]["upper"].as_f64().unwrap();
    let lo = r["result"]["lower"].as_f64().unwrap();
    assert!((hi - 2.0).abs() < 0.01 && (lo + 2.0).abs() < 0.01, "[{lo}, {hi}]");
}

#[test]
fn report_can_go_to_a_file() {
    let dir = std::env::temp_dir().join(format!("lorentzian-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("faces.json");
    let out = run(&["faces", "--matroid", &path("u24.json"), "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(r["result"]["f_vector"], serde_json::json!([6, 12, 8, 1]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ball_coordinates_of_the_generating_polynomial() {
    let r = report(&run(&["ball-coords", "--poly", &path("u24_generating.json")]));
    let norm = r["result"]["norm"].as_f64().unwrap();
    assert!(norm.abs() < 1e-9, "the generating polynomial sits at the centre, norm {norm}");
}
