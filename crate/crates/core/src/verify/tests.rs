use rayon::prelude::*;

use super::checks::{theorem_constants, Degree3Sides};
use super::named::{Degree3Basis, Expander};
use super::*;
use crate::belyi::maps::psi3;
use crate::exactfield::rat;

fn failures(results: &[CheckResult]) -> Vec<String> {
    results
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{} {:?}: {:?} {:?} {:?}", r.name, r.status, r.error, r.failed_items, r.first_mismatch))
        .collect()
}

#[test]
fn registry_is_complete_and_sorted() {
    let names: Vec<&str> = registry().iter().map(|c| c.name).collect();
    let mut expected = vec![
        "octa1",
        "octa2",
        "octa_cubic_chain",
        "klein_param",
        "quad_transform",
        "cubic_transform",
        "case7_cubic_rel",
        "case7_quad_rel",
        "case3a_theorem",
        "case3a_inverse",
        "case3a_tilde",
        "case3b_identities",
        "case4a_theorem",
        "case4a_radical",
        "case4a_split",
        "case4b_identities",
        "case7_proposition",
        "belyi_patterns",
        "rh_genus",
        "compose_psi7",
        "fiber_product",
        "psi4_relation",
        "divisor_norms",
        "psi3_sign",
    ];
    expected.sort();
    assert_eq!(names, expected);
    assert!(registry().iter().all(|c| c.default_order >= 40));
    assert_eq!(find("case3a_theorem").unwrap().default_order, 60);
    assert_eq!(find("case7_proposition").unwrap().default_order, 60);
}

#[test]
fn paper_literal_readings_fail() {
    let with_reading: Vec<CheckSpec> = registry().into_iter().filter(|c| c.reading.is_some()).collect();
    assert_eq!(with_reading.len(), 6);
    let results: Vec<CheckResult> = with_reading
        .par_iter()
        .map(|s| run_spec(s, 16, Variant::PaperLiteral))
        .collect();
    for r in results {
        assert_eq!(r.status, Status::Fail, "{} should fail: {:?}", r.name, r.error);
        assert_eq!(r.variant, Some(Variant::PaperLiteral));
    }
}

#[test]
fn passing_checks_stay_passing_at_a_higher_order() {
    let results: Vec<(CheckResult, CheckResult)> = registry()
        .par_iter()
        .map(|s| (run_spec(s, 12, Variant::Corrected), run_spec(s, 20, Variant::Corrected)))
        .collect();
    let lo: Vec<CheckResult> = results.iter().map(|r| r.0.clone()).collect();
    let hi: Vec<CheckResult> = results.iter().map(|r| r.1.clone()).collect();
    assert_eq!(failures(&lo), Vec::<String>::new());
    assert_eq!(failures(&hi), Vec::<String>::new());
}

#[test]
fn perturbed_constant_fails_early() {
    let e = Expander::at_origin(40);
    let b = Degree3Basis::new(&e).unwrap();
    let s = Degree3Sides::new(&e, &psi3()).unwrap();
    let combo = |c: &[crate::exactfield::FieldElement; 3]| &(&b.y0.scale(&c[0]) + &b.y1.scale(&c[1])) + &b.y2.scale(&c[2]);
    let exact = theorem_constants(&b.s7);
    assert!(s.l0.first_mismatch(&combo(&exact)).is_none());
    let mut c = exact.clone();
    c[1] = (&b.s7.tower().from_int(3) + &b.s7).scale(&rat(1, 11));
    let idx = s.l0.first_mismatch(&combo(&c)).expect("perturbation must be detected");
    assert!(idx <= 2, "mismatch at {idx}");
}

#[test]
fn split_reports_the_derived_coefficient() {
    let r = run_check_variant("case4a_split", 40, Variant::Corrected).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.notes.iter().any(|n| n.contains("13/32")));
    let r = run_check_variant("case4a_split", 40, Variant::PaperLiteral).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.failed_items.iter().any(|f| f.contains("13/22")));
}

#[test]
fn psi3_sign_reports_both_relations() {
    let r = run_check("psi3_sign", 40).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.reading.as_deref(), Some(PSI3_NORMALIZED_SIGN.corrected));
    assert!(psi3().degree() == 21);
}

#[test]
fn configuration_errors() {
    assert!(matches!(run_check("nope", 40), Err(Error::UnknownCheck(_))));
    assert!(matches!(run_check("octa1", 7), Err(Error::InvalidConfig(_))));
    let r = run_check("rh_genus", 8).unwrap();
    assert_eq!(r.order, None);
    assert_eq!(r.variant, None);
}
