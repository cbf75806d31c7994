//! End-to-end tests of the binary: exit codes, JSON shapes, and the
//! re-verified witness words.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_framings"))
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn surface_info_reports_invariants() {
    let out = bin().args(["surface", "info", "-g", "2", "-b", "1"]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["b1"], 4);
    assert_eq!(v["euler_characteristic"], -3);
}

#[test]
fn surface_info_rejects_zero_boundary() {
    let out = bin().args(["surface", "info", "-g", "1", "-b", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["kind"], "infeasible");
}

#[test]
fn framing_equiv_emits_a_replayable_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f1 = write(
        dir.path(),
        "f1.json",
        r#"{"surface":{"genus":1,"boundary":1},"rot_alpha":[6],"rot_beta":[4],"rot_boundary":[]}"#,
    );
    let f2 = write(
        dir.path(),
        "f2.json",
        r#"{"surface":{"genus":1,"boundary":1},"rot_alpha":[2],"rot_beta":[0],"rot_boundary":[]}"#,
    );
    let out = bin().args(["framing", "equiv", &f1, &f2]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], true);
    assert!(v["witness"].is_array());
    assert!(!v["witness"].as_array().unwrap().is_empty());

    let f3 = write(
        dir.path(),
        "f3.json",
        r#"{"surface":{"genus":1,"boundary":1},"rot_alpha":[1],"rot_beta":[0],"rot_boundary":[]}"#,
    );
    let out = bin().args(["framing", "equiv", &f2, &f3]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], false);
    assert!(v["witness"].is_null());
}

#[test]
fn framing_canon_round_trips_through_classify() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "f.json",
        r#"{"surface":{"genus":1,"boundary":2},"rot_alpha":[2],"rot_beta":[4],"rot_boundary":[1]}"#,
    );
    let out = bin().args(["framing", "canon", &f]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["canonical"]["rot_alpha"][0], 2);
    assert_eq!(v["canonical"]["rot_beta"][0], 0);

    // the canonical framing classifies to the same key
    let canon = write(
        dir.path(),
        "canon.json",
        &serde_json::to_string(&v["canonical"]).unwrap(),
    );
    let reclassified = bin().args(["framing", "classify", &canon]).output().unwrap();
    assert!(reclassified.status.success());
    let rv = stdout_json(&reclassified);
    assert_eq!(rv["orbit_key"], v["orbit_key"]);
}

#[test]
fn framing_realize_accepts_keys_and_rejects_bad_divisors() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(
        dir.path(),
        "key.json",
        r#"{"surface":{"genus":1,"boundary":2},"orbit_key":{"genus1":{"nu":[-2,2],"a_tilde":2}}}"#,
    );
    let out = bin().args(["framing", "realize", &good]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["framing"]["rot_alpha"][0], 2);

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"surface":{"genus":1,"boundary":2},"orbit_key":{"genus1":{"nu":[-2,2],"a_tilde":3}}}"#,
    );
    let out = bin().args(["framing", "realize", &bad]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_json_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "broken.json", "{not json");
    let out = bin().args(["framing", "classify", &f]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["kind"], "malformed_input");

    // fractional rotation numbers are malformed, not infeasible
    let f = write(
        dir.path(),
        "frac.json",
        r#"{"surface":{"genus":1,"boundary":1},"rot_alpha":[1.5],"rot_beta":[0],"rot_boundary":[]}"#,
    );
    let out = bin().args(["framing", "classify", &f]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn huge_rotation_numbers_are_supported() {
    let dir = tempfile::tempdir().unwrap();
    let big = "123456789012345678901234567890123456789";
    let f = write(
        dir.path(),
        "big.json",
        &format!(
            r#"{{"surface":{{"genus":1,"boundary":1}},"rot_alpha":[{big}],"rot_beta":["{big}"],"rot_boundary":[]}}"#
        ),
    );
    let out = bin().args(["framing", "classify", &f]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["a_tilde"].to_string(), big);
}

#[test]
fn spin_orbits_reports_the_fiber_table() {
    let out = bin().args(["spin", "orbits", "-g", "1", "-b", "1"]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["agrees"], true);
    assert_eq!(v["total_orbits"], 2);
    let fibers = v["fibers"].as_array().unwrap();
    let zero_fiber = fibers.iter().find(|f| f["h"] == serde_json::json!([0])).unwrap();
    assert_eq!(zero_fiber["enumerated"], 2);
    let mut split: Vec<u64> = zero_fiber["arf_split"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    split.sort_unstable();
    assert_eq!(split, vec![1, 3]);
}

#[test]
fn spin_equiv_emits_witness_class() {
    let dir = tempfile::tempdir().unwrap();
    let w1 = write(
        dir.path(),
        "w1.json",
        r#"{"surface":{"genus":1,"boundary":1},"base":[0,0]}"#,
    );
    let w2 = write(
        dir.path(),
        "w2.json",
        r#"{"surface":{"genus":1,"boundary":1},"base":[1,0]}"#,
    );
    let out = bin().args(["spin", "equiv", &w1, &w2]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["witness"], serde_json::json!([0, 1]));

    let w3 = write(
        dir.path(),
        "w3.json",
        r#"{"surface":{"genus":1,"boundary":1},"base":[1,1]}"#,
    );
    let out = bin().args(["spin", "equiv", &w1, &w3]).output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], false);
}

#[test]
fn rel_subcommands_cover_the_cases() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "rel.json",
        r#"{"surface":{"genus":1,"boundary":2},"rot_alpha":[2],"rot_beta":[0],"arc_ceil":[5],"delta_nu":[-2,2]}"#,
    );
    let out = bin().args(["rel", "classify", &f]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["orbit_key"]["rel_genus1"]["a_tilde"], 2);
    assert_eq!(v["orbit_key"]["rel_genus1"]["gen_arf"], 1);

    let out = bin().args(["rel", "canon", &f]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["canonical"]["arc_ceil"][0], 0);
    assert!(!v["word"].as_array().unwrap().is_empty());

    let g = write(
        dir.path(),
        "rel2.json",
        r#"{"surface":{"genus":1,"boundary":2},"rot_alpha":[4],"rot_beta":[0],"arc_ceil":[0],"delta_nu":[-2,2]}"#,
    );
    let out = bin().args(["rel", "equiv", &f, &g]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], true);
    assert!(!v["witness"].as_array().unwrap().is_empty());

    // infeasible boundary: exit 2
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"surface":{"genus":1,"boundary":2},"delta_nu":[0,1]}"#,
    );
    let out = bin().args(["rel", "exists", &bad]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["exists"], false);

    // relative genus 0 is explicitly unsupported
    let g0 = write(
        dir.path(),
        "g0.json",
        r#"{"surface":{"genus":0,"boundary":3},"rot_alpha":[],"rot_beta":[],"arc_ceil":[0,0],"delta_nu":[0,1,1]}"#,
    );
    let out = bin().args(["rel", "classify", &g0]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_spin_suite_passes() {
    let out = bin()
        .args(["verify", "--suite", "spin", "--max-size", "6"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = stdout_json(&out);
    let suites = v.as_array().unwrap();
    assert_eq!(suites[0]["suite"], "spin");
    assert!(suites[0]["failures"].as_array().unwrap().is_empty());
}
