//! One line per acceptance criterion. Criteria that do not hold are printed as
//! FAIL; the test asserts that each outcome, including each known failure and
//! its exact cause, is unchanged.

use std::time::Instant;

use quarticz::verify;

const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

struct Outcome {
    id: u8,
    passed: bool,
    note: String,
}

fn line(o: &Outcome) {
    println!("criterion {}: {} ({})", o.id, if o.passed { "PASS" } else { "FAIL" }, o.note);
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let r = verify::counts(&PRIMES, 13).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let passed = r.passed && r.fermat_at_3 == Some(16) && r.max_residual == 0 && secs <= 60.0;
    Outcome { id: 1, passed, note: format!("|F(F_3)| = {:?}, {} formula rows, {secs:.1} s", r.fermat_at_3, r.formulas.len()) }
}

fn criterion2() -> Outcome {
    let r = verify::fermat(&PRIMES).unwrap();
    Outcome { id: 2, passed: r.passed && r.rows.len() == 5, note: format!("measured trace at 3 = {}", r.trace_at_3) }
}

fn criterion3() -> Outcome {
    let g = verify::g_triple(200).unwrap();
    let h = verify::hecke(50, 1000).unwrap();
    let passed = g.passed && h.passed && h.primes.len() == 14;
    Outcome {
        id: 3,
        passed,
        note: format!("sources agree {}, max |a_p|/2p = {:.3}, Hecke on {} coefficients", g.sources_agree, g.ramanujan_ratio, h.coefficients_checked),
    }
}

fn criterion4() -> Outcome {
    let r = verify::phi_identity(200, 1e-8).unwrap();
    let passed = r.fz_matches_theta_product && r.nonvanishing_others.is_empty() && r.orbit_size == 15;
    Outcome { id: 4, passed, note: format!("{} other orbit members vanish", r.orbit_size - 1 - r.nonvanishing_others.len()) }
}

fn criterion5() -> (Outcome, Vec<String>) {
    let o = verify::orbits();
    let phi = verify::phi_identity(40, 1e-8).unwrap();
    let exceptions = phi.members_without_1111_or_1001.clone();
    let passed = o.passed && exceptions.is_empty();
    let note = format!("{} six-tuples, {} orbits of sizes {:?}; members without 1111 or 1001: {:?}", o.six_subsets, o.orbits, o.sizes, exceptions);
    (Outcome { id: 5, passed, note }, exceptions)
}

fn criterion6() -> Outcome {
    let r = verify::transformation(0x5eed, 1e-8).unwrap();
    let passed = r.passed && r.random_matrices == 20 && r.table_pairs == 45;
    Outcome {
        id: 6,
        passed,
        note: format!(
            "squared law {:.1e}, table {:.1e}, F_Z on Gamma_Z {:.1e}, on Gamma(4,8) {:.1e}",
            r.squared_law_max, r.table_max, r.fz_gamma_z_max, r.fz_gamma48_max
        ),
    }
}

fn criterion7() -> Outcome {
    let l = verify::lfactors(&PRIMES).unwrap();
    let f = verify::lefschetz(&PRIMES).unwrap();
    let s = verify::spin(50).unwrap();
    let passed = l.passed && f.passed && s.passed && s.rows.len() == 14;
    Outcome { id: 7, passed, note: format!("degree-21 factors, Lefschetz at 5 primes, spin identity at {} primes", s.rows.len()) }
}

fn criterion8() -> (Outcome, Vec<String>) {
    let start = Instant::now();
    let r = verify::ez(1e-6, 0.0, 0x5eed).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let passed = r.passed && secs <= 300.0;
    let note = format!(
        "Gamma(4,8) {:.1e}, Gamma_Z generators {:.1e} (failing {:?}), conjugates {:.1e}, boundary residual {:.1e} with 8h0 = {} phi, {secs:.1} s",
        r.gamma48_max, r.gamma_z_max, r.gamma_z_failures, r.gamma_z_conjugated_max, r.phi.residual, r.phi.scalar8.re
    );
    assert!(r.gamma48_passed && r.phi_passed, "{note}");
    (Outcome { id: 8, passed, note }, r.gamma_z_failures)
}

fn main() {
    let (c5, exceptions) = criterion5();
    let (c8, ez_failures) = criterion8();
    let outcomes = [criterion1(), criterion2(), criterion3(), criterion4(), c5, criterion6(), criterion7(), c8];
    for o in &outcomes {
        line(o);
    }
    let passed: Vec<bool> = outcomes.iter().map(|o| o.passed).collect();
    assert_eq!(passed, [true, true, true, true, false, true, true, false]);
    // Known failures: one orbit member lacks both characteristics, and two
    // Gamma_Z generators negate the 2-form.
    assert_eq!(exceptions, ["0000,0010,0100,0110,1000,1100"]);
    assert_eq!(ez_failures, ["e1e4", "e1e6"]);
}
