//! Exact Fourier expansions of theta constants and of F_Z.

use crate::arith::{GaussInt, QuarterSeries};
use crate::error::Result;
use crate::theta::characteristic::{fz_tuple, Characteristic};

fn isqrt(n: i64) -> i64 {
    let mut r = (n.max(0) as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Exact expansion of θ_m to the given order.
///
/// With k = 2a + m′ the lattice term sits at index k² (genus 1) or
/// (k₁², 2k₁k₂, k₂²) (genus 2) and carries i^{k·m″}.
pub fn theta_expansion(m: &Characteristic, order: i64) -> QuarterSeries {
    let r = isqrt(order);
    let ks = |parity: u8| (-r - 1..=r + 1).filter(move |k| k.rem_euclid(2) == parity as i64);
    match m.genus() {
        1 => {
            let (a, c) = (m.top()[0], m.bottom()[0] as i64);
            QuarterSeries::genus1(order, ks(a).map(|k| (k * k, GaussInt::i_pow(k * c))))
        }
        2 => {
            let (t, b) = (m.top(), m.bottom());
            let (c, d) = (b[0] as i64, b[1] as i64);
            let terms = ks(t[0]).flat_map(|k1| {
                ks(t[1]).map(move |k2| ([k1 * k1, 2 * k1 * k2, k2 * k2], GaussInt::i_pow(k1 * c + k2 * d)))
            });
            QuarterSeries::from_terms(2, order, terms)
        }
        g => panic!("exact expansions are implemented for genus 1 and 2, not {g}"),
    }
}

/// Product of the expansions of a tuple of characteristics of one genus.
pub fn tuple_expansion(ms: &[Characteristic], order: i64) -> Result<QuarterSeries> {
    let genus = ms.first().map_or(2, |m| m.genus() as u8);
    let factors: Vec<QuarterSeries> = ms.iter().map(|m| theta_expansion(m, order)).collect();
    QuarterSeries::product(genus, order, &factors)
}

/// F_Z = θ₀₀₀₀ θ₀₀₀₁ θ₀₀₁₀ θ₀₀₁₁ θ₀₁₁₀ θ₀₁₀₀.
pub fn fz_expansion(order: i64) -> QuarterSeries {
    tuple_expansion(&fz_tuple(), order).expect("all factors have genus 2")
}

/// Φ(f|g₀): swap τ₁ ↔ τ₃, then keep the terms with e₂ = e₃ = 0.
///
/// Only the coordinate substitution is applied; the scalar det(s)^{-k} of
/// the weight-k slash is left out, matching the limit
/// lim_{t→∞} f(diag(it, τ₁)).
pub fn phi_after_g0(f: &QuarterSeries) -> QuarterSeries {
    assert_eq!(f.genus(), 2, "Φ∘[g₀] takes a genus-2 series");
    f.map_index(1, f.order(), |[e1, e2, e3]| {
        let swapped = [e3, e2, e1];
        (swapped[1] == 0 && swapped[2] == 0).then_some([swapped[0], 0, 0])
    })
}

/// θ₀₀² θ₀₁² θ₁₀² as a genus-1 series.
pub fn theta_square_product(order: i64) -> QuarterSeries {
    let g = Characteristic::g1;
    tuple_expansion(&[g(0, 0), g(0, 0), g(0, 1), g(0, 1), g(1, 0), g(1, 0)], order).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::characteristic::all_characteristics;

    fn gi(n: i64) -> GaussInt {
        GaussInt::from(n)
    }

    #[test]
    fn genus1_examples() {
        let t = theta_expansion(&Characteristic::g1(0, 0), 20);
        assert_eq!(t, QuarterSeries::genus1(20, [(0, gi(1)), (4, gi(2)), (16, gi(2))]));
        for order in [0, 1, 9, 50] {
            assert!(theta_expansion(&Characteristic::g1(1, 1), order).is_empty());
        }
        let t10 = theta_expansion(&Characteristic::g1(1, 0), 30);
        assert_eq!(t10, QuarterSeries::genus1(30, [(1, gi(2)), (9, gi(2)), (25, gi(2))]));
    }

    #[test]
    fn genus2_zero_characteristic() {
        let t = theta_expansion(&Characteristic::g2(0, 0, 0, 0), 4);
        let expect = QuarterSeries::from_terms(2, 4, [([0, 0, 0], gi(1)), ([4, 0, 0], gi(2)), ([0, 0, 4], gi(2))]);
        assert_eq!(t, expect);
    }

    #[test]
    fn odd_vanish_and_e2_even() {
        for m in all_characteristics(2) {
            let t = theta_expansion(&m, 40);
            assert_eq!(t.is_empty(), !m.is_even(), "{m}");
            assert!(t.iter().all(|(ix, _)| ix[1] % 2 == 0));
        }
    }

    #[test]
    fn fz_basic_shape() {
        let f = fz_expansion(24);
        assert_eq!(f.get([0, 0, 0]), gi(0));
        assert_eq!(f.get([0, 0, 2]), gi(4));
        assert!(f.iter().all(|(_, c)| c.im == 0));
    }

    #[test]
    fn phi_of_fz_is_theta_square_product() {
        let f = fz_expansion(40);
        assert_eq!(phi_after_g0(&f), theta_square_product(40));
    }
}
