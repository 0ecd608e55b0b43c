//! Integration tests for the command-line surface: dispatch results, JSON
//! payload round-trips, and exit codes.

mod common;

use common::*;
use serde_json::Value;
use sturmian::cli::{dispatch, Status};
use sturmian::morphism::MorphismWord;
use sturmian::quad::QuadNumber;
use sturmian::words::{Boundary, IetParams};

fn run(args: &[&str]) -> sturmian::cli::CommandResult {
    dispatch(args.iter().map(|s| s.to_string()))
}

#[test]
fn normalize_ascii() {
    let r = run(&["normalize", "aaBABBa"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["normalized"], "aaBBBAa");
    assert_eq!(r.printable(), "aaBBBAa");
}

#[test]
fn normalize_accepts_greek_synonyms() {
    let r = run(&["normalize", "aaβαββa"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["normalized"], "aaBBBAa");
}

#[test]
fn delta_orbit_json_shape() {
    let r = run(&["delta-orbit", "aaBBBAa", "--json"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["preperiod"], 5);
    assert_eq!(r.payload["period"], 6);
    assert_eq!(r.payload["words"].as_array().unwrap().len(), 11);

    // The envelope itself re-parses, and every orbit word re-parses as a
    // valid normalized name.
    let envelope: Value = serde_json::from_str(&r.printable()).unwrap();
    assert_eq!(envelope["status"], "ok");
    for w in envelope["payload"]["words"].as_array().unwrap() {
        let parsed: MorphismWord = w.as_str().unwrap().parse().unwrap();
        assert!(sturmian::normalization::is_normalized(&parsed));
    }
}

#[test]
fn delta_with_iterations() {
    let r = run(&["delta", "aaBBBAa", "--iterations", "11"]);
    assert_eq!(r.payload["result"], "bbBBBAb");
    // Non-normalized input normalizes first, with a diagnostic.
    let r = run(&["delta", "abB"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["normalized"], "baB");
    assert!(!r.diagnostics.is_empty());
}

#[test]
fn compose_and_apply() {
    let r = run(&["compose", "aBb"]);
    assert_eq!(r.payload["image0"], "100");
    assert_eq!(r.payload["image1"], "10010");
    assert_eq!(r.payload["incidence"][0][1], 3);
    assert_eq!(r.payload["primitive"], true);

    let r = run(&["apply", "a", "1"]);
    assert_eq!(r.payload["output"], "10");
}

#[test]
fn fixed_point_and_params() {
    let r = run(&["fixed-point", "aBb", "--length", "19"]);
    assert_eq!(r.payload["prefix"], "1001010010010010100");

    let r = run(&["params", "abB", "--theta-form"]);
    assert_eq!(r.payload["l0"], "-1+sqrt(3)");
    assert_eq!(r.payload["l1"], "2-sqrt(3)");
    assert_eq!(r.payload["rho"], "3/2-1/2*sqrt(3)");
    // Payload values re-parse into the exact parameters.
    let p = IetParams::new(
        r.payload["l0"].as_str().unwrap().parse().unwrap(),
        r.payload["l1"].as_str().unwrap().parse().unwrap(),
        r.payload["rho"].as_str().unwrap().parse().unwrap(),
        r.payload["boundary"].as_str().unwrap().parse().unwrap(),
    )
    .unwrap();
    assert_eq!(p.boundary(), Boundary::Lower);
    let gamma: QuadNumber = r.payload["gamma"].as_str().unwrap().parse().unwrap();
    assert_eq!(gamma, p.slope());
}

#[test]
fn generate_round_trip() {
    let r = run(&[
        "generate",
        "--l0",
        "-1+sqrt(3)",
        "--l1",
        "2-sqrt(3)",
        "--rho",
        "3/2-1/2*sqrt(3)",
        "--length",
        "19",
    ]);
    assert_eq!(r.payload["word"], "0100010010001000100");
}

#[test]
fn derive_report() {
    let r = run(&["derive", "aBb", "--factor", "0", "--length", "11"]);
    assert_eq!(r.payload["derived_prefix"], "01101010110");
    assert_eq!(r.payload["return_words"][0], "0");
    assert_eq!(r.payload["return_words"][1], "01");
    assert!(r.payload["matched_delta_power"].is_null());
}

#[test]
fn match_delta_lists_powers() {
    let r = run(&["match-delta", "bB", "--prefix-len", "8", "--derive-len", "60"]);
    assert_eq!(r.status, Status::Ok);
    let matches = r.payload["matches"].as_array().unwrap();
    assert!(!matches.is_empty());
    assert_eq!(matches[0]["prefix"], "");
    assert_eq!(matches[0]["delta_power"], 0);
}

#[test]
fn classify_and_closed_set() {
    let r = run(&["classify", "abB"]);
    assert_eq!(r.payload["closeable"], false);
    assert_eq!(r.payload["delta_class"], "other");

    let r = run(&["classify", "bB"]);
    assert_eq!(r.payload["closeable"], true);
    assert_eq!(r.payload["delta_class"], "gamma");

    let r = run(&["closed-set", "bA"]);
    let members: Vec<&str> = r.payload["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["name"].as_str().unwrap())
        .collect();
    assert_eq!(members, vec!["bA", "Ab", "bB", "Bb"]);
}

#[test]
fn verify_exit_codes() {
    let r = run(&["verify", "bB", "--max-factor-len", "4", "--derive-len", "50"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.exit_code(), 0);
    assert_eq!(r.payload["failures"], 0);

    // Non-closeable names cannot produce a closed set: domain error.
    let r = run(&["verify", "abB"]);
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn yasutomi_both_forms() {
    let r = run(&[
        "yasutomi",
        "--gamma",
        "-1/2+1/2*sqrt(3)",
        "--delta",
        "-1/2+sqrt(3)",
    ]);
    assert_eq!(r.payload["fixed_by_primitive"], false);

    let r = run(&["yasutomi", "--theta", "-1+sqrt(2)", "--rho", "sqrt(2)"]);
    assert_eq!(r.payload["fixed_by_primitive"], true);

    let r = run(&["yasutomi", "--gamma", "1/2"]);
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn usage_errors_exit_two() {
    let r = run(&["no-such-command"]);
    assert_eq!(r.status, Status::UsageError);
    assert_eq!(r.exit_code(), 2);

    let r = run(&["normalize", "xyz"]);
    assert_eq!(r.status, Status::DomainError);
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn binary_round_trip_through_subprocess() {
    use std::process::Command;
    let exe = env!("CARGO_BIN_EXE_sturmian");
    let out = Command::new(exe)
        .args(["normalize", "aaBABBa"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "aaBBBAa");

    let out = Command::new(exe).args(["delta", "aAa"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seed_flag_is_accepted() {
    let r = run(&["--seed", "42", "normalize", "ab"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["normalized"], "ba");
}

#[test]
fn payloads_reparse_against_invariants() {
    // Representative payloads re-validate against the library's own parsers
    // and invariants.
    let r = run(&["derive", "bB", "--factor", "010", "--length", "15"]);
    let factor: sturmian::BinaryWord =
        r.payload["factor"].as_str().unwrap().parse().unwrap();
    assert_eq!(factor.len(), 3);
    let derived = r.payload["derived_prefix"].as_str().unwrap();
    assert!(derived.len() >= 15 && derived.bytes().all(|b| b == b'0' || b == b'1'));

    let q = run(&["params", "bB"]);
    let rho: QuadNumber = q.payload["rho"].as_str().unwrap().parse().unwrap();
    let l1: QuadNumber = q.payload["l1"].as_str().unwrap().parse().unwrap();
    assert_eq!(rho, l1, "standard word has rho = l1");

    let _ = name("bB");
    let _ = bin("0");
    let _ = crate::common::q("1/2");
}
