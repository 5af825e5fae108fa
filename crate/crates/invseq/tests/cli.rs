//! End-to-end runs of the binary: worked examples, output formats, the
//! determinism contract, exit codes, and the resource-limit override.

use std::process::{Command, Output};

fn invseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn count_table_and_formats() {
    let out = invseq(&["count", "--class", "C", "--n", "1..6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let counts: Vec<&str> = text.split_whitespace().collect();
    assert_eq!(
        counts,
        ["1", "1", "2", "2", "3", "6", "4", "23", "5", "102", "6", "495"]
    );

    let out = invseq(&["count", "--class", "AB", "--n", "1..5", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,count\n1,1\n2,2\n3,6\n4,22\n5,90\n");

    let out = invseq(&["count", "--class", "ABC", "--n", "1..5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["class"], "201,210,110,101,100");
    let counts: Vec<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, [1, 2, 6, 21, 79]);
}

#[test]
fn byte_identical_output_across_runs() {
    let args = ["verify", "--theorem", "thm-1.3", "--max-n", "5", "--json"];
    let first = invseq(&args);
    let second = invseq(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let args = ["enumerate", "--class", "T", "--n", "4", "--format", "json"];
    assert_eq!(invseq(&args).stdout, invseq(&args).stdout);
}

#[test]
fn map_worked_examples() {
    let out = invseq(&[
        "map",
        "--bijection",
        "gamma",
        "--input",
        "0,0,0,0,3,3,0,3,3,3,4,6",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0,1,2,3,0,0,0,0,5,7,9,11");

    let out = invseq(&["map", "--bijection", "alpha", "--input", "0,1,0,0"]);
    assert_eq!(stdout(&out).trim(), "0,1,1,0");

    let out = invseq(&["map", "--bijection", "lehmer", "--input-perm", "3,1,2"]);
    assert_eq!(stdout(&out).trim(), "0,1,1");

    let out = invseq(&[
        "map",
        "--bijection",
        "bcode",
        "--input-perm",
        "6,1,3,2,5,4,7",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["output"], serde_json::json!([0, 1, 1, 2, 1, 4, 0]));

    let out = invseq(&[
        "map",
        "--bijection",
        "bcode-inv",
        "--input",
        "0,1,1,2,1,4,0",
    ]);
    assert_eq!(stdout(&out).trim(), "6,1,3,2,5,4,7");
}

#[test]
fn map_rejects_inputs_outside_the_class() {
    let out = invseq(&["map", "--bijection", "gamma", "--input", "0,1,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    let message = stderr(&out);
    assert!(
        message.contains("100"),
        "witness pattern missing: {message}"
    );
    assert!(
        message.contains("(2,3,4)"),
        "witness triple missing: {message}"
    );

    let out = invseq(&[
        "map",
        "--bijection",
        "gamma",
        "--input",
        "0,1,0,0",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stderr(&out)).unwrap();
    assert_eq!(v["error"]["kind"], "not-in-class");
}

#[test]
fn trace_matches_the_displayed_rows() {
    let out = invseq(&["trace", "--input", "0,0,0,0,3,3,0,3,3,3,4,6"]);
    assert!(out.status.success());
    let rows: Vec<String> = stdout(&out).lines().map(|l| l.replace(' ', "")).collect();
    assert_eq!(
        rows,
        [
            "000033033346",
            "0003303334611",
            "0023303334611",
            "0123303334611",
            "0123033346911",
            "0123033467911",
            "0123034567911",
            "0123033457911",
            "0123033357911",
            "0123000057911",
        ]
    );

    let out = invseq(&["trace", "--input", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 0);
    assert_eq!(v["image"], serde_json::json!([0]));
}

#[test]
fn verify_exit_codes() {
    let out = invseq(&["verify", "--theorem", "thm-1.3", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass"));

    let out = invseq(&["verify", "--theorem", "nope"]);
    assert_eq!(out.status.code(), Some(2));

    let out = invseq(&["verify", "--theorem", "ms-equi", "--max-n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["name"], "ms-equi");
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["maxN"], 4);
}

#[test]
fn resource_limit_is_env_configurable() {
    let out = Command::new(env!("CARGO_BIN_EXE_invseq"))
        .args(["count", "--class", "C", "--n", "4"])
        .env("INVSEQ_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("resource limit"));

    let out = Command::new(env!("CARGO_BIN_EXE_invseq"))
        .args(["count", "--class", "C", "--n", "4"])
        .env("INVSEQ_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gamma_flags_non_symmetric_finding() {
    let out = invseq(&["gamma", "--class", "T", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("gamma: [1, 2]"));
    assert!(text.contains("nonnegative: true"));

    // The two gamma routes agree on a permutation class.
    let via_orbits = invseq(&[
        "gamma",
        "--class",
        "perm:2134,2143",
        "--n",
        "5",
        "--via",
        "orbits",
        "--format",
        "json",
    ]);
    let via_poly = invseq(&["gamma", "--class", "BC", "--n", "5", "--format", "json"]);
    let a: serde_json::Value = serde_json::from_str(&stdout(&via_orbits)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&via_poly)).unwrap();
    assert_eq!(a["gamma"], b["gamma"]);

    // Non-symmetric ascent polynomial surfaces as a finding with exit 1.
    let out = invseq(&["gamma", "--class", "CA", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not symmetric"));
    let out = invseq(&["gamma", "--class", "CA", "--n", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("[1, 25, 132, 185, 50, 1]"));

    // Orbit route on a sequence class is a usage error.
    let out = invseq(&["gamma", "--class", "C", "--n", "4", "--via", "orbits"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_and_poly() {
    let out = invseq(&["enumerate", "--class", "C", "--n", "3"]);
    assert_eq!(stdout(&out), "0,0,0\n0,0,1\n0,0,2\n0,1,0\n0,1,1\n0,1,2\n");

    // Mass 116 = |T_5|; the gamma cross-check against the no-double-ascent
    // counts pins these coefficients independently.
    let out = invseq(&["poly", "--class", "T", "--n", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!([1, 25, 64, 25, 1]));
    assert_eq!(v["symmetric"], true);

    let out = invseq(&["poly", "--class", "C", "--n", "3"]);
    assert_eq!(stdout(&out).trim(), "[1, 4, 1]");
}
