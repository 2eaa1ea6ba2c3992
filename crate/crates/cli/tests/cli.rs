//! End-to-end tests through the compiled binary: flag surfaces, JSON
//! output, file round-trips, and the exit-code contract
//! (0 ok, 1 verification failure, 2 usage error, 3 cap refusal).

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn tinum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tinum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("tinum-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn scalar_commands() {
    let v = json_of(&tinum(&["qbinom", "-n", "4", "-k", "2", "-q", "2"]));
    assert_eq!(v["value"], "35");

    let v = json_of(&tinum(&["derangement", "-n", "5"]));
    assert_eq!(v["value"], "44");

    let v = json_of(&tinum(&[
        "star-value",
        "-n",
        "6",
        "-k",
        "3",
        "-t",
        "2",
        "-q",
        "2",
    ]));
    assert_eq!(v["value"], "465");

    let v = json_of(&tinum(&["t0-value", "-n", "4", "--a0", "1", "--a1", "0"]));
    assert_eq!(v["value"], "72");

    let v = json_of(&tinum(&[
        "corollary",
        "--which",
        "2-star",
        "-n",
        "4",
        "-q",
        "2",
    ]));
    assert_eq!(v["value"], "56");
    let v = json_of(&tinum(&["corollary", "--which", "stabilizer", "-n", "5"]));
    assert_eq!(v["value"], "1152");
}

#[test]
fn bound_commands() {
    let v = json_of(&tinum(&["bound", "--theorem", "1.5", "-n", "4", "-M", "6"]));
    assert_eq!(v["value"], "72");
    assert_eq!(v["valid"], true);

    let v = json_of(&tinum(&[
        "bound",
        "--theorem",
        "grassmann-refined",
        "-n",
        "6",
        "-k",
        "3",
        "-q",
        "2",
        "-M",
        "15",
    ]));
    assert_eq!(v["value"], "465");

    let v = json_of(&tinum(&[
        "bound",
        "--theorem",
        "lp-dual",
        "-n",
        "4",
        "-k",
        "2",
        "-q",
        "2",
        "-M",
        "7",
    ]));
    assert_eq!(v["value"], "0");
}

#[test]
fn eigenvalue_and_spectrum() {
    let v = json_of(&tinum(&[
        "eigenvalue",
        "-n",
        "5",
        "--rho",
        "4,1",
        "--gen",
        "fewer:1",
    ]));
    assert_eq!(v["value"], "-11");

    let v = json_of(&tinum(&["spectrum", "-n", "5", "--gen", "fewer:1"]));
    assert_eq!(v["eigenvalues"]["5"], "44");
    assert_eq!(v["eigenvalues"]["4,1"], "-11");
}

#[test]
fn tables_command() {
    let v = json_of(&tinum(&["tables", "--scheme", "grassmann 4 2 2"]));
    assert_eq!(v["v"], "35");
    assert_eq!(v["valencies"], serde_json::json!(["1", "18", "16"]));
    for p0j in v["P"][0].as_array().unwrap() {
        assert_eq!(p0j, "1");
    }

    let v = json_of(&tinum(&["tables", "--scheme", "conjugacy 3"]));
    assert_eq!(v["multiplicities"], serde_json::json!(["1", "4", "1"]));
}

#[test]
fn construct_search_round_trip() {
    let star_file = tmp_path("star.family");
    let v = json_of(&tinum(&[
        "construct",
        "--kind",
        "t-star",
        "--ground",
        "grassmann 4 2 2",
        "-t",
        "1",
        "--out",
        star_file.to_str().unwrap(),
    ]));
    assert_eq!(v["closed_form"], "56");
    assert_eq!(v["direct"], "56");
    assert_eq!(v["M"], 7);

    let v = json_of(&tinum(&[
        "eval",
        "--family-file",
        star_file.to_str().unwrap(),
    ]));
    assert_eq!(v["total_intersection"], "56");

    // the written family seeds a local search over the same ground
    let v = json_of(&tinum(&[
        "search",
        "--ground",
        "grassmann 4 2 2",
        "--size",
        "7",
        "--mode",
        "local",
        "--family-file",
        star_file.to_str().unwrap(),
    ]));
    assert_eq!(v["mi"], "56");
    assert_eq!(v["exhaustive"], false);

    let v = json_of(&tinum(&[
        "dual-dist",
        "--family-file",
        star_file.to_str().unwrap(),
    ]));
    assert_eq!(v["b"], serde_json::json!(["1", "4", "0"]));

    std::fs::remove_file(star_file).ok();
}

#[test]
fn coset_constructions_and_checks() {
    let coset_file = tmp_path("coset.family");
    let v = json_of(&tinum(&[
        "construct",
        "--kind",
        "coset",
        "--ground",
        "symmetric 4",
        "--pins",
        "1:1",
        "--out",
        coset_file.to_str().unwrap(),
    ]));
    assert_eq!(v["M"], 6);
    assert_eq!(v["direct"], "72");

    let v = json_of(&tinum(&[
        "check",
        "--which",
        "b1",
        "--family-file",
        coset_file.to_str().unwrap(),
    ]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["total_intersection"], "72");

    let v = json_of(&tinum(&[
        "check",
        "--which",
        "spectral",
        "--family-file",
        coset_file.to_str().unwrap(),
    ]));
    assert_eq!(v["pass"], true);

    let v = json_of(&tinum(&[
        "projection",
        "--family-file",
        coset_file.to_str().unwrap(),
    ]));
    assert_eq!(v["norm_f2_sq"], "0");

    std::fs::remove_file(coset_file).ok();
}

#[test]
fn block_construction_with_padding_has_no_closed_form() {
    let f = tmp_path("t0.family");
    let v = json_of(&tinum(&[
        "construct",
        "--kind",
        "t0",
        "--ground",
        "symmetric 4",
        "--size",
        "7",
        "--out",
        f.to_str().unwrap(),
    ]));
    assert_eq!(v["M"], 7);
    assert!(v["closed_form"].is_null());

    let v = json_of(&tinum(&[
        "construct",
        "--kind",
        "t0",
        "--ground",
        "symmetric 4",
        "--size",
        "8",
        "--out",
        f.to_str().unwrap(),
        "--indices",
    ]));
    assert_eq!(v["closed_form"], "100");
    assert_eq!(v["direct"], "100");
    std::fs::remove_file(f).ok();
}

#[test]
fn exhaustive_search_json() {
    let v = json_of(&tinum(&[
        "search",
        "--ground",
        "symmetric 3",
        "--size",
        "2",
        "--collect-optima",
    ]));
    assert_eq!(v["mi"], "8");
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["optima_count"], "9");
    // a pair agreeing in one position is a full 1-coset when (n-1)! = 2
    assert_eq!(v["tags"]["is_union_of_1_cosets"], true);
    assert_eq!(v["tags"]["coset_count"], 1);
    assert_eq!(v["optima"].as_array().unwrap().len(), 9);
}

#[test]
fn identity_checks_pass() {
    let out = tinum(&["check", "--which", "series-sum", "-n", "12"]);
    let v = json_of(&out);
    assert_eq!(v["pass"], true);

    let out = tinum(&["check", "--which", "eigenvalue-sums"]);
    assert!(out.status.success());

    let out = tinum(&[
        "check",
        "--which",
        "dimension-bound",
        "-n",
        "5",
        "--gen",
        "fewer:1",
    ]);
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_identities_suite_exits_zero() {
    let out = tinum(&["verify", "--suite", "identities"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["checks"].as_array().unwrap().len() >= 8);
}

#[test]
fn csv_format() {
    let out = tinum(&["--format", "csv", "qbinom", "-n", "4", "-k", "2", "-q", "2"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("value,35"));
}

#[test]
fn verify_csv_rows() {
    let out = tinum(&["verify", "--suite", "bounds", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("name,params,expected,actual,pass"));
    assert!(text.contains("c09.grassmann-dominance"));
    assert!(!text.contains(",false"));
}

#[test]
fn exit_code_contract() {
    // usage error: clap rejects the unknown subcommand
    let out = tinum(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // usage error: bad parameter reaches our own validation
    let out = tinum(&["star-value", "-n", "4", "-k", "2", "-t", "3", "-q", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // resource-cap refusal
    let out = tinum(&["tables", "--scheme", "conjugacy 12"]);
    assert_eq!(out.status.code(), Some(3));
    let out = tinum(&[
        "search",
        "--ground",
        "grassmann 4 2 2",
        "--size",
        "7",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn caps_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_tinum"))
        .args(["tables", "--scheme", "conjugacy 9"])
        .env("EKR_CAPS", "conjugacy=9")
        .output()
        .unwrap();
    assert!(out.status.success());
}
