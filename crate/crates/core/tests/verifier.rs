use epgraph::verifier::{all_passed, render_json, render_table, Status, Verifier, CLAIM_IDS};

fn verifier() -> Verifier {
    Verifier::new(15).unwrap()
}

#[test]
fn every_claim_holds_up_to_order_15() {
    let reports = verifier().verify_all();
    println!("{}", render_table(&reports, false));
    assert_eq!(reports.len(), 8);
    for (r, id) in reports.iter().zip(CLAIM_IDS) {
        assert_eq!(r.claim_id, id);
        assert!(matches!(r.status, Status::Pass | Status::Partial), "{id}: {:?}", r.failures().collect::<Vec<_>>());
        assert!(!r.claim_text.is_empty());
    }
    assert!(all_passed(&reports));
}

#[test]
fn coverage_wording() {
    let v = verifier();
    assert_eq!(v.maximal_cyclic_table().coverage, "checked on 28 groups");
    assert_eq!(v.no_two_maximal().coverage, "corroborated on 28 groups");
}

#[test]
fn cyclic_groups_are_vacuous_for_reduced_claims() {
    let r = verifier().c_cyclic();
    let z12 = r.per_group.iter().find(|c| c.group == "Z12").unwrap();
    assert_eq!(z12.status, Status::Vacuous);
    let r = verifier().bipartite_girth_perfect();
    let z13 = r.per_group.iter().find(|c| c.group == "Z13").unwrap();
    assert_eq!(z13.status, Status::Pass);
    assert_eq!(z13.observed, "bipartite=true, girth=inf");
}

#[test]
fn pinned_entries_are_partial() {
    let r = verifier().surface_classification();
    let status = |g: &str| r.per_group.iter().find(|c| c.group == g).unwrap().status;
    assert_eq!(status("Z3xZ3"), Status::Partial);
    assert_eq!(status("Z2xZ6"), Status::Partial);
    assert_eq!(status("D8"), Status::Pass);
    assert_eq!(status("A4"), Status::Pass);
    assert_eq!(r.status, Status::Partial);
}

#[test]
fn perturbed_fixture_fails_exactly_that_claim() {
    let v = verifier();
    let mut fx = v.fixtures().clone();
    fx.maximal_cyclic_row_mut("A4").unwrap().count = 6;
    let bad = v.clone().with_fixtures(fx);
    let reports = bad.verify_all();
    let failed: Vec<&str> = reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.claim_id.as_str()).collect();
    assert_eq!(failed, ["table-maximal-cyclic"]);
    let f: Vec<_> = reports[0].failures().collect();
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].group, "A4");
    assert!(f[0].witness.as_deref().unwrap().starts_with("maximal cyclic subgroups of A4"));
    assert!(!all_passed(&reports));
}

#[test]
fn perturbed_surface_set_fails_with_witness() {
    let v = verifier();
    let mut fx = v.fixtures().clone();
    fx.surface.planar.retain(|g| g != "Q8");
    let r = v.with_fixtures(fx).surface_classification();
    let f: Vec<_> = r.failures().collect();
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].group, "Q8");
    assert!(f[0].witness.as_deref().unwrap().contains("contradicted: planar"));
}

#[test]
fn reports_are_deterministic() {
    let a = render_json(&verifier().verify_all());
    let b = render_json(&verifier().verify_all());
    assert_eq!(a, b);
    let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(parsed[0]["status"], "PASS");
    assert_eq!(parsed[0]["per_group"].as_array().unwrap().len(), 28);
}
