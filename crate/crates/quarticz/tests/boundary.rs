use quarticz::theta::boundary::{fz_phi_samples, g0, g2, theta_square_product_eval};
use quarticz::theta::orbits::{orbit_decomposition, set_from_members, set_members};
use quarticz::theta::siegel::c;
use quarticz::theta::{fz_expansion, fz_tuple, phi_after_g0, theta_square_product, tuple_expansion, Characteristic};

#[test]
fn phi_of_fz_is_theta_square_product() {
    let order = 200;
    let phi = phi_after_g0(&fz_expansion(order));
    assert!(phi.agrees_with(&theta_square_product(order), order));
    assert!(!phi.is_empty());
}

#[test]
fn other_orbit_members_vanish_on_the_boundary() {
    let orbits = orbit_decomposition(6);
    let fz = set_from_members(&fz_tuple());
    let orbit = orbits.iter().find(|o| o.contains(&fz)).unwrap();
    assert_eq!(orbit.len(), 15);
    let special = [Characteristic::g2(1, 1, 1, 1), Characteristic::g2(1, 0, 0, 1)];
    let mut without_special = vec![];
    for &s in orbit.iter().filter(|&&s| s != fz) {
        let ms = set_members(s);
        if !ms.iter().any(|m| special.contains(m)) {
            without_special.push(s);
        }
        let phi = phi_after_g0(&tuple_expansion(&ms, 60).unwrap());
        assert!(phi.is_empty(), "{ms:?}");
    }
    // One member carries neither θ₁₁₁₁ nor θ₁₀₀₁; it vanishes through θ₁₀₀₀θ₁₁₀₀.
    let g = Characteristic::g2;
    let exception = set_from_members(&[g(0, 0, 0, 0), g(0, 0, 1, 0), g(0, 1, 0, 0), g(0, 1, 1, 0), g(1, 0, 0, 0), g(1, 1, 0, 0)]);
    assert_eq!(without_special, vec![exception]);
}

#[test]
fn slash_by_g0_and_g2_on_the_boundary() {
    let tau1 = c(0.1, 0.8);
    let reference = theta_square_product_eval(tau1, 1e-14).unwrap();
    assert!((theta_square_product(200).eval(&[tau1]) - reference).norm() < 1e-10);
    for s in fz_phi_samples(&g0(), tau1, &[8.0, 16.0], 1e-14).unwrap() {
        // det(s) = −1 enters the weight-3 slash.
        assert!((s.ratio_to_theta_product + 1.0).norm() < 1e-6, "{s:?}");
    }
    for s in fz_phi_samples(&g2(), tau1, &[8.0, 16.0], 1e-14).unwrap() {
        assert!((s.ratio_to_theta_product - 1.0).norm() < 1e-6, "{s:?}");
    }
}
