use digamma_laplace::registry::{self, VerifyConfig};

fn quiet() -> VerifyConfig {
    VerifyConfig {
        timing: false,
        ..VerifyConfig::default()
    }
}

#[test]
fn every_entry_passes() {
    let report = registry::verify_all(&quiet());
    for v in &report.verdicts {
        assert!(v.pass, "{} failed: {:?}", v.id, v);
    }
    assert_eq!(report.summary.total, registry::list_identities().len());
    assert!(report.all_passed());
}

#[test]
fn ids_are_unique_and_ordered() {
    let ids: Vec<&str> = registry::list_identities().iter().map(|e| e.id).collect();
    assert_eq!(ids.len(), 28);
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    let report = registry::verify_all(&quiet());
    let reported: Vec<&str> = report.verdicts.iter().map(|v| v.id.as_str()).collect();
    assert_eq!(reported, ids);
}

#[test]
fn tolerances_exceed_computed_error_estimates() {
    let cfg = quiet();
    for entry in registry::list_identities() {
        for s in entry.evaluate(&cfg).unwrap() {
            let claimed = s.lhs.err + s.rhs.err;
            assert!(
                claimed <= entry.tol,
                "{} {}: error estimate {claimed:e} above tolerance {:e}",
                entry.id,
                s.label,
                entry.tol
            );
        }
    }
}

#[test]
fn results_are_deterministic() {
    let a = registry::verify_all(&quiet());
    let b = registry::verify_all(&quiet());
    assert_eq!(a, b);
}

#[test]
fn tightened_tolerances_expose_the_hard_entries() {
    let cfg = VerifyConfig {
        tol_scale: 1e-4,
        ..quiet()
    };
    for id in ["JUMP4", "LAMBDA-0"] {
        let v = registry::verify(id, &cfg).unwrap();
        assert!(!v.pass, "{id} should not survive a 1e-4 tolerance scale");
    }
}

#[test]
fn offset_right_hand_sides_fail() {
    let cfg = VerifyConfig {
        rhs_offset: 1e-3,
        ..quiet()
    };
    let report = registry::verify_all(&cfg);
    assert_eq!(report.summary.passed, 0);
}

#[test]
fn lookup_by_id() {
    let v = registry::verify("euler-2", &quiet()).unwrap();
    assert_eq!(v.id, "EULER-2");
    assert!(v.pass);
    assert!((v.lhs - -0.944_093_284_04).abs() < 1e-10);
    assert!(registry::find("NO-SUCH").is_err());
}

#[test]
fn judge_rejects_non_finite() {
    use digamma_laplace::quad::EvalResult;
    let s = registry::Sample {
        label: "nan".into(),
        lhs: EvalResult::exact(f64::NAN),
        rhs: EvalResult::exact(1.0),
    };
    assert!(!registry::judge("X", &[s], 1.0, 0.0).pass);
    assert!(!registry::judge("X", &[], 1.0, 0.0).pass);
}
