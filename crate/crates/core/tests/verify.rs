use lozenge::region::DentedHexParams;
use lozenge::verify::*;

#[test]
fn kuo_family_and_random_configurations_hold() {
    let rep = kuo_suite(DEFAULT_SEED, 20, 2);
    assert!(rep.entries.len() >= 26);
    for e in &rep.entries {
        assert!(e.holds, "{} on {}: {:?}", e.label, e.scaffold, e.error);
    }
    assert!(rep.passed);
}

#[test]
fn alternate_kuo_sign_fails_on_scaffolds() {
    let fails = kuo_family(1).iter().map(kuo_entry).filter(|e| !e.alternate_sign_holds).count();
    assert!(fails > 0);
}

#[test]
fn injected_fault_is_caught() {
    let opts = SuiteOptions { underline_fault: 1, ..SuiteOptions::default() };
    let rep = run_suite(Suite::Poly, &opts);
    assert!(!rep.passed);
    assert!(rep.failures.iter().all(|f| f.starts_with("polynomiality_suite")));
}

#[test]
fn reports_are_deterministic() {
    let opts =
        SuiteOptions { bounds: Bounds { max_b: 2, max_c: 2, max_m: 1, max_n: 1, a_max: 2 }, ..SuiteOptions::default() };
    let one = serde_json::to_vec(&run_suite(Suite::All, &opts)).unwrap();
    let two = serde_json::to_vec(&run_suite(Suite::All, &opts)).unwrap();
    assert_eq!(one, two);
    let other = SuiteOptions { seed: 7, ..opts };
    assert_ne!(one, serde_json::to_vec(&run_suite(Suite::All, &other)).unwrap());
}

#[test]
fn default_suites_pass() {
    let rep = run_suite(Suite::All, &SuiteOptions::default());
    assert!(rep.passed, "{:?}", rep.failures);
}

#[test]
fn cross_check_agrees_along_a() {
    for a in 0..=3 {
        let p = DentedHexParams::balanced(a, 4, 3, vec![2], vec![3]).unwrap();
        let rep = cross_check(&p, &Method::ALL).unwrap();
        assert!(rep.agree, "{p}: {:?}", rep.counts);
        assert_eq!(rep.counts.len(), 3);
    }
}

#[test]
fn cross_check_rejects_unbalanced() {
    let p = DentedHexParams::new(1, 2, 2, 2, vec![1], vec![]).unwrap();
    assert!(cross_check(&p, &Method::ALL).is_err());
}

#[test]
fn forced_reduction_suite_passes() {
    let rep = forced_reduction_suite(DEFAULT_SEED, 30);
    assert_eq!(rep.entries.len(), 30);
    assert!(rep.entries.iter().any(|e| e.cells_after < e.cells_before));
    assert!(rep.passed);
}

#[test]
fn monotonicity_small_bounds() {
    let rep = monotonicity_suite(&Bounds { max_b: 2, max_c: 2, max_m: 2, max_n: 1, a_max: 1 });
    assert!(rep.pairs_checked > 0);
    assert!(rep.passed());
}
