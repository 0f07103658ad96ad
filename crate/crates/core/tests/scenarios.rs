use num_bigint::BigInt;

use mw_trisect::cli::default_params;
use mw_trisect::planecurves::{verify_scenario, Scenario};
use mw_trisect::scalars::Rat;

fn failing(name: &str, params: &[Rat]) -> Vec<(String, Option<String>)> {
    verify_scenario(name, params)
        .unwrap()
        .items
        .into_iter()
        .filter(|i| !i.pass)
        .map(|i| (i.id, i.param))
        .collect()
}

#[test]
fn case_i_is_general_except_for_one_tangency() {
    // at c = 5 the cubic through p1, p3 touches the conic x = t^2 + 1/4
    let fails = failing("case_i", &default_params(Scenario::CaseI));
    assert_eq!(fails, vec![("conic_points_e1".to_string(), Some("5".to_string()))]);
}

#[test]
fn case_ii_fails_only_at_the_degenerate_member() {
    let fails = failing("case_ii", &default_params(Scenario::CaseIi));
    assert!(!fails.is_empty());
    assert!(fails.iter().all(|(_, p)| p.as_deref() == Some("0")), "{fails:?}");
    let ids: Vec<&str> = fails.iter().map(|(id, _)| id.as_str()).collect();
    assert!(ids.contains(&"smooth_e1") && ids.contains(&"smooth_e2"));
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn rational_parameters() {
    let report = verify_scenario("case_ii", &[rat(1, 3)]).unwrap();
    let fails: Vec<_> = report.items.iter().filter(|i| !i.pass).map(|i| &i.id).collect();
    assert!(fails.is_empty(), "{fails:?}");
    assert_eq!(report.params, vec!["1/3"]);
}

#[test]
fn singular_members_are_detected() {
    // E1 is singular at s in {0, 84, -1/2, -1/10, -1/20}, E2 at s in {0, 14, -18, -2/5, -9/20}
    for (s, e1, e2) in [(rat(-1, 2), false, true), (rat(84, 1), false, true), (rat(-18, 1), true, false)] {
        let p = s.to_string();
        let fails = failing("case_ii", &[s]);
        let has = |id: &str| fails.iter().any(|(i, q)| i == id && q.as_deref() == Some(p.as_str()));
        assert_eq!(!has("smooth_e1"), e1, "{p}");
        assert_eq!(!has("smooth_e2"), e2, "{p}");
    }
}

#[test]
fn report_serializes() {
    let report = verify_scenario("case_i", &[]).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["scenario"], "case_i");
    assert!(json["items"].as_array().unwrap().iter().any(|i| i["id"] == "double_p14"));
}
