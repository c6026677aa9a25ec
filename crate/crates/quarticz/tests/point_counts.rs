use quarticz::cmform::a_p;
use quarticz::pointcount::{count_variety, measured_trace, verify_birational_map, verify_count_formulas, CountMethod, VarietyId};

const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[test]
fn closed_forms_hold_at_five_primes() {
    for p in PRIMES {
        for r in verify_count_formulas(p, a_p(p).unwrap()).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn fermat_count_at_three() {
    assert_eq!(count_variety(VarietyId::FermatSurface, 3, CountMethod::Naive).unwrap(), 16);
}

#[test]
fn traces_match_cm_form() {
    for p in PRIMES {
        let t = measured_trace(p).unwrap();
        assert_eq!(t, a_p(p).unwrap(), "p={p}");
        assert!(t.abs() <= 2 * p as i64);
    }
    assert_eq!(measured_trace(3).unwrap(), 0);
}

#[test]
fn z_methods_agree() {
    for p in [3, 5, 7] {
        let a = count_variety(VarietyId::Zsatake, p, CountMethod::Naive).unwrap();
        let b = count_variety(VarietyId::Zsatake, p, CountMethod::Charsum).unwrap();
        assert_eq!(a, b, "p={p}");
    }
}

#[test]
fn fermat_curve_methods_agree() {
    for p in PRIMES {
        let a = count_variety(VarietyId::FermatCurve, p, CountMethod::Naive).unwrap();
        let b = count_variety(VarietyId::FermatCurve, p, CountMethod::Charsum).unwrap();
        assert_eq!(a, b, "p={p}");
    }
}

#[test]
fn birational_map_is_a_bijection() {
    for p in [3, 5, 7, 13] {
        let r = verify_birational_map(p).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.matching_assignments.iter().any(|s| s == "Y[0, 1, 2, 3] X[0, 1, 2, 3]"), "{r:?}");
    }
}
