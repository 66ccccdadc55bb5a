//! Registry plumbing, the π₁ table, and report serialization.

use std::collections::BTreeSet;

use paper_verify::*;

#[test]
fn ids_are_unique_and_tagged() {
    let ids = claim_ids();
    let set: BTreeSet<&str> = ids.iter().copied().collect();
    assert_eq!(set.len(), ids.len());
    for t in Tag::ALL {
        assert!(registry().iter().any(|c| c.tag == t), "no claim tagged {t}");
        assert_eq!(t.as_str().parse::<Tag>().unwrap(), t);
    }
    assert!("geometry".parse::<Tag>().is_err());
}

#[test]
fn moduli_claims_are_skipped_with_a_location() {
    for c in registry().iter().filter(|c| c.tag == Tag::Moduli) {
        let rec = run_claim(c.id).unwrap();
        assert_eq!(rec.status, Status::Skipped);
        assert!(!rec.location.is_empty());
    }
}

#[test]
fn unknown_claim_is_an_error() {
    assert_eq!(run_claim("no-such-claim"), Err(VerifyError::UnknownClaim("no-such-claim".into())));
}

#[test]
fn single_claims() {
    let rec = run_claim("4a2-overlattice-index").unwrap();
    assert_eq!(rec.status, Status::Pass, "{}", rec.detail);
    assert_eq!(rec.values["indices"], serde_json::json!([3, 9]));
    let rec = run_claim("f3-system-no-solution").unwrap();
    assert_eq!(rec.status, Status::Pass, "{}", rec.detail);
    assert_eq!(rec.values["solutions"], serde_json::json!(0));
    let rec = run_claim("u6e8e8-form-isometry").unwrap();
    assert_eq!(rec.status, Status::Pass, "{}", rec.detail);
    assert!(rec.values["isometry_images"].is_array());
}

#[test]
fn tag_filters() {
    let codes = run_all(Some("codes"));
    assert!(!codes.claims.is_empty());
    assert!(codes.claims.iter().all(|c| c.tag == Tag::Codes));
    let none = run_all(Some("nonsense"));
    assert!(none.claims.is_empty());
    assert_eq!(none.summary, Summary::default());
}

#[test]
fn full_run_has_no_failures_and_round_trips() {
    let report = run_all(None);
    for c in &report.claims {
        assert_ne!(c.status, Status::Fail, "{}: {} / {}", c.id, c.computed, c.detail);
        if c.status == Status::Pass {
            assert!(!c.values.is_empty() && !c.detail.is_empty(), "{}", c.id);
        }
    }
    let ids: Vec<&str> = report.claims.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert_eq!(report.summary.total, registry().len());
    assert_eq!(report.summary.pass + report.summary.skipped, report.summary.total);
    assert!(report.is_success());
    assert_eq!(report.version, REPORT_VERSION);
    let back = Report::from_json(&report.to_json()).unwrap();
    assert_eq!(back, report);
    let table = report.to_table();
    assert!(table.contains("f3-system-no-solution"));
    assert!(table.contains(&format!("{} pass", report.summary.pass)));
}

#[test]
fn values_are_exact() {
    // rationals are fraction strings, never floats
    let rec = run_claim("height-7-12").unwrap();
    assert_eq!(rec.values["height"], serde_json::json!("7/12"));
    fn no_floats(v: &serde_json::Value) -> bool {
        match v {
            serde_json::Value::Number(n) => n.is_i64() || n.is_u64(),
            serde_json::Value::Array(a) => a.iter().all(no_floats),
            serde_json::Value::Object(o) => o.values().all(no_floats),
            _ => true,
        }
    }
    for c in run_all(Some("ellsurf")).claims {
        assert!(c.values.values().all(no_floats), "{}", c.id);
    }
}

#[test]
fn pi1_table() {
    assert_eq!(classify_pi1(1, 1).unwrap().group_label, "Z/6");
    assert_eq!(classify_pi1(1, 4).unwrap().group_label, "S3 x Z/3");
    assert_eq!(classify_pi1(4, 4).unwrap().group_label, "(Z/3)^2 x Z/2");
    assert_eq!(classify_pi1(4, 1).unwrap().group_label, "(Z/3)^2 x Z/2");
    for (a, b) in [(0, 0), (1, 2), (3, 4), (4, 13), (2, 1)] {
        assert_eq!(classify_pi1(a, b), Err(VerifyError::Pi1Input(a, b)));
    }
    let labels: BTreeSet<String> =
        [(1, 1), (1, 4), (4, 4)].iter().map(|&(a, b)| classify_pi1(a, b).unwrap().group_label).collect();
    assert_eq!(labels, GROUP_LABELS.iter().map(|s| s.to_string()).collect());
}
