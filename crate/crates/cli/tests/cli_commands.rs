//! End-to-end tests of the command binary against the shipped corpus.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homnambu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_sl2_exits_zero() {
    let out = run(&["verify", &data("sl2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("hom_nambu      holds"), "{text}");
    assert!(text.contains("overall: valid"));
}

#[test]
fn verify_structured_output_is_json() {
    let out = run(&["verify", &data("super11.json"), "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["valid"], serde_json::Value::Bool(true));
    assert_eq!(v["axioms"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_repeated_runs_are_identical() {
    let a = run(&[
        "verify",
        &data("three_lie_4d.json"),
        "--format",
        "structured",
    ]);
    let b = run(&[
        "verify",
        &data("three_lie_4d.json"),
        "--format",
        "structured",
    ]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn twist_by_swap_matches_committed_file() {
    let out = run(&[
        "twist",
        &data("sl2.json"),
        "--beta",
        &data("maps/sl2_swap.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read_to_string(data("sl2_twisted.json")).unwrap();
    assert_eq!(stdout(&out), expected);
}

#[test]
fn twist_by_non_morphism_fails_with_exit_one() {
    let out = run(&[
        "twist",
        &data("sl2.json"),
        "--beta",
        &data("maps/sl2_proj_h.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not a morphism"));
}

#[test]
fn dsum_produces_summed_dimension() {
    let out = run(&["dsum", &data("sl2.json"), &data("abelian2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dimension"], serde_json::json!(5));
}

#[test]
fn graph_of_morphism_exits_zero() {
    let out = run(&[
        "graph",
        &data("sl2.json"),
        &data("sl2.json"),
        "--map",
        &data("maps/sl2_swap.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("is_morphism:          true"));
    assert!(text.contains("graph_is_subalgebra:  true"));
}

#[test]
fn graph_of_non_morphism_exits_one() {
    let out = run(&[
        "graph",
        &data("sl2.json"),
        &data("sl2.json"),
        "--map",
        &data("maps/sl2_proj_h.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("is_morphism:          false"));
    assert!(text.contains("graph_is_subalgebra:  false"));
}

#[test]
fn der_reports_sl2_dimension() {
    let out = run(&["der", &data("sl2.json"), "--k", "0", "--parity", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim 3"));
}

#[test]
fn der_structure_check_passes() {
    let out = run(&["der", &data("super11.json"), "--structure", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("super Jacobi: true"));
}

#[test]
fn cohom_reports_rigidity() {
    let out = run(&["cohom", &data("sl2.json"), "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rigid"], serde_json::json!(true));
    assert_eq!(v["h_even"], serde_json::json!(0));

    let out = run(&["cohom", &data("abelian2.json"), "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rigid"], serde_json::json!(false));
    assert_eq!(v["h_even"], serde_json::json!(2));
}

#[test]
fn cohom_level_one_diagnostic_agrees() {
    let out = run(&[
        "cohom",
        &data("sl2_twisted.json"),
        "--level",
        "1",
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["operator_comparison"]["kernels_agree"],
        serde_json::json!(true)
    );
}

#[test]
fn deform_check_valid_and_invalid() {
    let out = run(&[
        "deform",
        "check",
        &data("abelian2.json"),
        "--terms",
        &data("terms/abelian2_solvable.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("valid: true"));

    // A non-cocycle term on sl(2) must fail at order 1.
    let dir = std::env::temp_dir().join("homnambu-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad_terms.json");
    std::fs::write(
        &bad,
        r#"{
  "version": "1",
  "order": 2,
  "terms": [
    { "power": 1, "entries": [ { "args": [0, 1], "value": { "0": "1" } } ] }
  ]
}
"#,
    )
    .unwrap();
    let out = run(&[
        "deform",
        "check",
        &data("sl2.json"),
        "--terms",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("first failure at order 1"));
}

#[test]
fn deform_trivialize_on_rigid_base() {
    let out = run(&[
        "deform",
        "trivialize",
        &data("sl2.json"),
        "--terms",
        &data("terms/sl2_pushforward.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], serde_json::json!(3));
}

#[test]
fn deform_trivialize_rejects_nontrivial_class() {
    let out = run(&[
        "deform",
        "trivialize",
        &data("abelian2.json"),
        "--terms",
        &data("terms/abelian2_solvable.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("essentially nontrivial"));
}

#[test]
fn deform_reduce_outputs_reduced_terms() {
    let out = run(&[
        "deform",
        "reduce",
        &data("sl2.json"),
        "--terms",
        &data("terms/sl2_pushforward.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn deform_equiv_detects_inequivalence() {
    let dir = std::env::temp_dir().join("homnambu-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let null = dir.join("null_terms.json");
    std::fs::write(
        &null,
        "{\n  \"version\": \"1\",\n  \"order\": 5,\n  \"terms\": []\n}\n",
    )
    .unwrap();
    let out = run(&[
        "deform",
        "equiv",
        &data("abelian2.json"),
        "--terms",
        &data("terms/abelian2_solvable.json"),
        "--other",
        null.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not equivalent"));

    // A deformation is equivalent to itself.
    let out = run(&[
        "deform",
        "equiv",
        &data("abelian2.json"),
        "--terms",
        &data("terms/abelian2_solvable.json"),
        "--other",
        &data("terms/abelian2_solvable.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_two() {
    let dir = std::env::temp_dir().join("homnambu-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("garbage.json");
    std::fs::write(&bad, "not json").unwrap();
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = run(&["verify", "/nonexistent/file.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn unknown_flags_exit_two() {
    let out = run(&["verify", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
