use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magicwin"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_balanced_and_unbalanced() {
    let v = json(&["check", "fixtures/tsym3.json"]);
    assert_eq!(v["result"]["ok"], true);
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));

    let out = run(&["check", "fixtures/unbalanced.json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["ok"], false);
    assert!(!v["result"]["unbalanced_lines"].as_array().unwrap().is_empty());
}

#[test]
fn decimals_and_bad_usage_are_rejected() {
    let out = run(&["window", "fixtures/hilbert1.json", "--delta", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a rational"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "fixtures/does_not_exist.json"]).status.code(), Some(2));
}

#[test]
fn window_on_a_wall_is_a_domain_error() {
    let out = run(&["window", "fixtures/hilbert1.json", "--delta", "1/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("perturb"));
}

#[test]
fn facets_of_hilbert2() {
    let v = json(&["facets", "fixtures/hilbert2.json"]);
    let supports: Vec<&str> = v["result"]["facets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["support"].as_str().unwrap())
        .collect();
    assert_eq!(supports, ["2", "4", "4", "4", "4", "2"]);
    assert!(v["result"]["sigma_x_facets"].is_array());
}

#[test]
fn skew_torus_crossing() {
    let v = json(&["cross", "fixtures/skew_torus.json", "--delta", "1/5", "--delta-prime", "6/5"]);
    let r = &v["result"]["result"];
    assert_eq!(r["matrix"], serde_json::json!([["0", "1"], ["1", "0"]]));
    assert_eq!(r["unimodular"], true);
    assert_eq!(v["result"]["walls_crossed"], 1);
}

#[test]
fn hilbert_walls_conventions() {
    let v = json(&["hilbert", "--n", "2", "--walls"]);
    let w = &v["result"]["walls"];
    assert_eq!(w["conventions_differ"], false);
    assert_eq!(w["sigma_x"]["per_period"], serde_json::json!(["0", "1/2"]));

    let v = json(&["hilbert", "--n", "3", "--walls"]);
    let w = &v["result"]["walls"];
    assert_eq!(w["conventions_differ"], true);
    assert_eq!(w["nabla"]["per_period"], serde_json::json!(["0", "1/6", "1/2", "5/6"]));
    assert_eq!(w["sigma_x"]["exactly_roots_of_unity"], true);

    assert_eq!(run(&["hilbert", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn groupoid_word_and_verify() {
    let v = json(&["groupoid", "fixtures/skew_torus.json", "--word", "fixtures/word_skew.json"]);
    assert!(v["result"].is_object());
    let v = json(&["groupoid", "--verify", "fixtures/verify_hilbert1.json"]);
    assert_eq!(v["result"]["report"]["passed"], true);
}

#[test]
fn quiver_qprime_identity() {
    let v = json(&["quiver", "fixtures/jordan2.json", "--qprime"]);
    assert_eq!(v["result"]["qprime"]["multiset_identity"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["facets", "fixtures/tsym3.json"][..],
        &["window", "fixtures/tsym3.json"][..],
        &["hilbert", "--n", "3", "--walls"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}
