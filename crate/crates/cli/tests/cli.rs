use std::process::{Command, Output};

fn epgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epgraph")).args(args).env_remove("EPGRAPH_CERT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn show_q8() {
    let o = epgraph(&["show", "--group", "Q8"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("|M| = 3"));
    assert!(s.contains("sizes [4, 4, 4]"));
    assert!(s.contains("isolated {e, a^2}"));
}

#[test]
fn show_json() {
    let o = epgraph(&["show", "--group", "D:8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["maximal_cyclic_count"], 5);
    assert_eq!(v["maximal_cyclic_sizes"], serde_json::json!([4, 2, 2, 2, 2]));
}

#[test]
fn d8_reduced_dot_has_seven_vertices() {
    let o = epgraph(&["build", "--group", "D8", "--graph", "reduced", "--format", "dot"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("graph \"D8 reduced\""));
    assert_eq!(s.lines().filter(|l| l.contains("[label=")).count(), 7);
    assert_eq!(s.lines().filter(|l| l.contains(" -- ")).count(), 18);
}

#[test]
fn build_json_edges() {
    let o = epgraph(&["build", "--group", "Z2xZ2", "--graph", "complement", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn invariants_s3() {
    let o = epgraph(&["invariants", "--group", "S3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["complement"]["clique_number"], 4);
    assert_eq!(v["complement"]["chromatic_number"], 4);
    assert_eq!(v["complement"]["girth"], "3");
    assert_eq!(v["reduced"]["cyclomatic_number"], 5);
}

#[test]
fn classify_d8_with_certificates() {
    let o = epgraph(&["classify", "--group", "D8", "--certificates"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("toroidal: true"));
    assert!(s.contains("projective-planar: true"));
    assert!(s.contains("certificate genus1:"));
    assert!(s.contains("certificate crosscap1:"));
}

#[test]
fn classify_uses_certificate_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_epgraph"))
        .args(["classify", "--group", "Q8"])
        .env("EPGRAPH_CERT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(dir.path().join("Q8-genus0.cert").exists());
}

#[test]
fn verify_all_passes() {
    let o = epgraph(&["verify", "--max-order", "15", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS") || l.starts_with("PARTIAL")).count(), 8);
    assert!(!s.contains("FAIL"));
}

#[test]
fn verify_single_claim_json() {
    let o = epgraph(&["verify", "--claim", "c-cyclic", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["claim_id"], "c-cyclic");
    assert_eq!(v[0]["coverage"], "corroborated on 28 groups");
}

#[test]
fn output_is_stable() {
    let a = epgraph(&["verify", "--format", "json"]);
    let b = epgraph(&["verify", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn ingest_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for sel in ["Q8", "D12", "A4", "Z2xZ6"] {
        let table = epgraph(&["show", "--group", sel, "--format", "table"]);
        let path = dir.path().join(format!("{sel}.txt"));
        std::fs::write(&path, &table.stdout).unwrap();
        let o = epgraph(&["ingest", "--file", path.to_str().unwrap(), "--compare", sel]);
        assert_eq!(o.status.code(), Some(0), "{sel}");
        assert!(stdout(&o).contains(&format!("isomorphic to {sel}: yes")));
    }
    let path = dir.path().join("Q8.txt");
    let o = epgraph(&["ingest", "--file", path.to_str().unwrap(), "--compare", "D8"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn file_selector_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mystery.txt");
    std::fs::write(&path, epgraph(&["show", "--group", "S3", "--format", "table"]).stdout).unwrap();
    let o = epgraph(&["show", "--file", path.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("mystery (order 6, non-abelian)"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["show"][..],
        &["show", "--group", "X9"],
        &["show", "--group", "D:7"],
        &["verify", "--claim", "nope"],
        &["verify", "--max-order", "40"],
        &["list", "--format", "dot"],
        &["frobnicate"],
    ] {
        let o = epgraph(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn malformed_table_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "2\n0 1\n0 1\n").unwrap();
    let o = epgraph(&["ingest", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a valid Cayley table"));
}
