use quarticz::soudry::*;
use quarticz::theta::siegel::c;
use quarticz::theta::symplectic::{gamma48_basics, random_gamma48};
use quarticz::theta::{generator, sample_points, SiegelPoint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn resolution_gammas() -> Vec<quarticz::theta::SymplecticMat> {
    gamma48_basics().into_iter().filter(|g| g.c() != [[0, 0], [0, 0]]).collect()
}

#[test]
fn unique_convention_survives() {
    let tau = SiegelPoint::new(c(0.11, 1.5), c(0.07, 0.2), c(-0.05, 1.6)).unwrap();
    let r = resolve_ez_convention(&resolution_gammas(), &tau, 1e-12, 1e-6).unwrap();
    assert_eq!(r.adopted, Some(EzConvention::adopted()), "{:#?}", r.trials);
    let y2 = EzConvention { sign: SignCoordinate::Y2, ..EzConvention::adopted() };
    assert_eq!(r.also_passing, vec![y2]);
    let printed = EzConvention { orientation: Orientation::Tau32, ..EzConvention::adopted() };
    let t = r.trials.iter().find(|t| t.convention == printed).unwrap();
    assert!(t.invariance_residual > 1e-3);
}

#[test]
fn gamma48_invariance_at_sample_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(48);
    let gammas: Vec<_> = (0..10).map(|_| random_gamma48(&mut rng, 3, 16)).collect();
    for tau in sample_points() {
        for g in &gammas {
            let r = ez_two_form_check(g, &tau, 1e-12, EzConvention::adopted()).unwrap();
            assert!(r.residual < 1e-6, "{g} {}", r.residual);
        }
    }
}

#[test]
fn gamma_z_generators_act_through_a_sign() {
    let tau = SiegelPoint::diag(c(0.0, 2.0), c(0.0, 2.0)).unwrap();
    let rows = ez_gamma_z_check(&tau, 1e-12, EzConvention::adopted()).unwrap();
    for row in &rows {
        assert!(row.conjugated_residual < 1e-6, "{row:?}");
        let flipped = row.generator == "e1e4" || row.generator == "e1e6";
        if flipped {
            // Pullback equals −E_Z^♯, so the relative residual is 2.
            assert!((row.residual - 2.0).abs() < 1e-6, "{row:?}");
        } else {
            assert!(row.residual < 1e-6, "{row:?}");
        }
    }
}

#[test]
fn e6_is_not_an_invariance() {
    let tau = SiegelPoint::diag(c(0.0, 2.0), c(0.0, 2.0)).unwrap();
    let r = ez_two_form_check(&generator(6).unwrap(), &tau, 1e-12, EzConvention::adopted()).unwrap();
    assert!(r.residual > 1e-3);
}

#[test]
fn boundary_matches_fz_after_g0() {
    let m = ez_phi_match(20, Exponent::PiGram).unwrap();
    assert!(m.support_agrees);
    assert!(m.residual < 1e-8);
    assert_eq!(m.terms_compared, 20);
    assert!((m.scalar8 - c(2.0, 0.0)).norm() < 1e-12);
    assert!(!ez_phi_match(20, Exponent::TwoPiTrace).unwrap().support_agrees);
}

#[test]
fn boundary_support_is_cm() {
    for (e, _) in h0_boundary_stratum(400, Exponent::PiGram) {
        assert_eq!(e % 8, 2, "{e}");
    }
}

#[test]
fn truncation_doubling() {
    for tau in sample_points() {
        let a = ez_eval(&tau, 1e-12, EzConvention::adopted()).unwrap();
        let b = ez_eval(&tau, 1e-24, EzConvention::adopted()).unwrap();
        assert!((0..3).all(|k| (a[k] - b[k]).norm() < 1e-12));
    }
}

#[test]
fn boundary_limit_is_g_at_quarter_argument() {
    use quarticz::cmform::{g_expansion, GSource};
    let tau1 = c(0.13, 0.7);
    let g = g_expansion(GSource::HeckeCharacter, 200).unwrap();
    let q = (c(0.0, 2.0 * std::f64::consts::PI) * tau1 / 4.0).exp();
    let g_val: quarticz::theta::C64 = g.coeffs().iter().enumerate().map(|(n, a)| a.to_complex() * q.powu(n as u32)).sum();
    let h = ez_eval(&SiegelPoint::diag(tau1, c(0.0, 12.0)).unwrap(), 1e-14, EzConvention::adopted()).unwrap();
    assert!((h[0] - g_val).norm() < 1e-9, "{} {}", h[0], g_val);
    assert!(h[1].norm() < 1e-9 && h[2].norm() < 1e-9);
}
