use quarticz::theta::siegel::c;
use quarticz::theta::symplectic::{random_gamma2, random_gamma48};
use quarticz::theta::transform::{gamma48_words, word_matrix};
use quarticz::theta::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn squared_law_over_random_gamma2() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let tau = &sample_points()[2];
    for _ in 0..20 {
        let m = random_gamma2(&mut rng, 8);
        for e in even_characteristics(2) {
            let r = verify_igusa_transformation(&[e], &m, tau, 1e-14).unwrap();
            assert!(r.squared_residual < 1e-8, "{m} {e:?} {}", r.squared_residual);
        }
    }
}

#[test]
fn igusa_rejects_matrices_outside_gamma2() {
    let j = quarticz::theta::symplectic::sp4_generators()[0];
    let e = even_characteristics(2)[0];
    assert_eq!(verify_igusa_transformation(&[e], &j, &sample_points()[0], 1e-12).unwrap_err(), quarticz::Error::NotInGamma2);
}

fn fz_invariance(g: &SymplecticMat, tau: &SiegelPoint) -> f64 {
    let j = tau.j(g);
    let lhs = fz_eval(&tau.act(g).unwrap(), 1e-14).unwrap() / (j * j * j);
    (lhs - fz_eval(tau, 1e-14).unwrap()).norm()
}

#[test]
fn fz_is_invariant_on_gamma_z() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut gammas: Vec<SymplecticMat> = gamma_z_generators().into_iter().map(|x| x.1).collect();
    gammas.extend((0..10).map(|_| random_gamma48(&mut rng, 4, 40)));
    for tau in &sample_points()[..2] {
        for g in &gammas {
            assert!(fz_invariance(g, tau) < 1e-8, "{g}");
        }
    }
}

#[test]
fn gamma48_words_lie_in_gamma48() {
    for w in gamma48_words() {
        assert!(word_matrix(&w).in_gamma48(), "{w:?}");
    }
    for (_, g) in gamma_z_generators() {
        assert!(g.in_gamma2() && !g.in_gamma48());
    }
}

fn six_subsets() -> Vec<Vec<Characteristic>> {
    let ev = even_characteristics(2);
    (0u32..1024)
        .filter(|m| m.count_ones() == 6)
        .map(|mask| (0..10).filter(|i| mask >> i & 1 == 1).map(|i| ev[i]).collect())
        .collect()
}

#[test]
fn gamma_z_congruences_against_table() {
    let subsets = six_subsets();
    assert_eq!(subsets.len(), 210);
    let invariant: Vec<bool> = subsets.iter().map(|ms| gamma_z_invariant_by_table(ms).unwrap()).collect();
    assert_eq!(invariant.iter().filter(|&&b| b).count(), 5);
    let corrected = subsets.iter().zip(&invariant).filter(|(ms, &inv)| gamma_z_tuple_predicate(ms) == inv).count();
    let printed = subsets.iter().zip(&invariant).filter(|(ms, &inv)| gamma_z_tuple_predicate_printed(ms) == inv).count();
    assert_eq!((corrected, printed), (210, 202));
    assert!(gamma_z_tuple_predicate(&fz_tuple()));
}

#[test]
fn table_invariance_agrees_with_numerics() {
    let tau = SiegelPoint::new(c(0.11, 0.9), c(0.07, 0.2), c(-0.05, 1.1)).unwrap();
    let gens: Vec<SymplecticMat> = gamma_z_generators().into_iter().map(|x| x.1).collect();
    for ms in six_subsets() {
        let numeric = gens.iter().all(|g| {
            let j = tau.j(g);
            let r = tuple_eval(&ms, &tau.act(g).unwrap(), 1e-14).unwrap() / (j * j * j * tuple_eval(&ms, &tau, 1e-14).unwrap());
            (r - c(1.0, 0.0)).norm() < 1e-8
        });
        assert_eq!(numeric, gamma_z_invariant_by_table(&ms).unwrap(), "{ms:?}");
    }
}
