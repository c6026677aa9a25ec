//! Local Euler factors in T = p^{−s}: the L-function of H² of Z, the Lefschetz
//! count of Z̃, and the degree-4 spinor quartic of F_Z.

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::field::{check_odd_prime, chi, chi_m1};
use crate::arith::{GaussInt, GaussPolynomial, IntPolynomial};
use crate::cmform::a_p;
use crate::error::{Error, Result};
use crate::pointcount::{count_variety, fermat_linear_coefficient, CountMethod, VarietyId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorKind {
    Zeta,
    /// Quadratic character χ_d, d ∈ {−1, 2, −2}.
    Chi(i64),
    G,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerFactor {
    pub p: u64,
    pub label: String,
    pub poly: IntPolynomial,
}

/// Local factor at p of the given kind after the shift s → s − j, i.e. T → p^j T.
pub fn euler_factor(kind: FactorKind, p: u64, twist: u32) -> Result<EulerFactor> {
    check_odd_prime(p)?;
    let pj = (p as i64).pow(twist);
    let (poly, label) = match kind {
        FactorKind::Zeta => (IntPolynomial::from_i64(&[1, -pj]), "zeta".to_string()),
        FactorKind::Chi(d) => {
            if ![-1, 2, -2].contains(&d) {
                return Err(Error::UnsupportedCharacter(d));
            }
            (IntPolynomial::from_i64(&[1, -chi(d, p) * pj]), format!("chi({d})"))
        }
        FactorKind::G => {
            let pi = p as i64;
            (IntPolynomial::from_i64(&[1, -a_p(p)? * pj, chi_m1(p) * pi * pi * pj * pj]), "g".to_string())
        }
    };
    Ok(EulerFactor { p, label: format!("{label}(s-{twist})"), poly })
}

/// (8 + 7χ₋₁(p) + 2χ₂(p) + 2χ₋₂(p))p + a_p.
pub fn trace_h2(p: u64) -> Result<i64> {
    check_odd_prime(p)?;
    Ok((8 + 7 * chi_m1(p) + 2 * chi(2, p) + 2 * chi(-2, p)) * p as i64 + a_p(p)?)
}

/// ζ(s−1)⁸ L(s−1,χ₋₁)⁷ L(s−1,χ₂)² L(s−1,χ₋₂)² L(s,g) at p.
pub fn h2_lpoly(p: u64) -> Result<EulerFactor> {
    let f = |k, e| Ok::<_, Error>(euler_factor(k, p, 1)?.poly.pow(e));
    let poly = f(FactorKind::Zeta, 8)?
        .mul(&f(FactorKind::Chi(-1), 7)?)
        .mul(&f(FactorKind::Chi(2), 2)?)
        .mul(&f(FactorKind::Chi(-2), 2)?)
        .mul(&euler_factor(FactorKind::G, p, 0)?.poly);
    Ok(EulerFactor { p, label: "H2".into(), poly })
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzCheck {
    pub p: u64,
    pub predicted: i64,
    pub measured: u64,
    pub residual: i64,
}

/// 1 + p³ + (p + t) + (p² + p·t) against |Z̃(F_p)|, t = (9 + 7χ₋₁ + 2χ₂ + 2χ₋₂)p + a_p.
pub fn lefschetz_check(p: u64) -> Result<LefschetzCheck> {
    check_odd_prime(p)?;
    let q = p as i64;
    let t = fermat_linear_coefficient(p) * q + a_p(p)?;
    let predicted = 1 + q * q * q + (q + t) + (q * q + q * t);
    let measured = count_variety(VarietyId::Ztilde, p, CountMethod::Charsum)?;
    Ok(LefschetzCheck { p, predicted, measured, residual: measured as i64 - predicted })
}

/// μ = k₁ + k₂ − 3.
pub fn mu_rho(k1: i64, k2: i64) -> i64 {
    k1 + k2 - 3
}

/// 1 − λ₁T + (λ₁² − λ₂ − δp^{μ−1})T² − δλ₁p^μT³ + δ²p^{2μ}T⁴.
pub fn ae_quartic(lambda1: GaussInt, lambda2: GaussInt, delta: GaussInt, mu: i64, p: u64) -> GaussPolynomial {
    let pw = |e: i64| GaussInt::from((p as i64).pow(e as u32));
    GaussPolynomial::new(vec![
        GaussInt::ONE,
        -lambda1,
        lambda1 * lambda1 - lambda2 - delta * pw(mu - 1),
        -(delta * lambda1 * pw(mu)),
        delta * delta * pw(2 * mu),
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinCheck {
    pub p: u64,
    pub lambda1: GaussInt,
    pub lambda2: GaussInt,
    pub delta: GaussInt,
    /// True when δ was pinned by the T³ coefficient; false when λ₁ = 0 left
    /// only δ² = 1 and χ₋₁(p) was used.
    pub delta_determined: bool,
    pub chi_m1: i64,
    pub target: GaussPolynomial,
    pub residual: GaussPolynomial,
}

/// Matches the quartic against L_p(s,g)L_p(s−1,g).
///
/// λ₁ comes from T¹, δ from T⁴ (δ² = c₄/p⁶) and T³. λ₂ is the eigenvalue
/// predicted by the Satake roots β = A ∪ B of the two g-factors,
/// λ₂ = h₂(β) − δp^{μ−1} with h₂ the complete symmetric square, so the T²
/// coefficient is an independent check.
pub fn spin_identity_check(p: u64) -> Result<SpinCheck> {
    check_odd_prime(p)?;
    let q = p as i64;
    let mu = mu_rho(3, 3);
    let ap = a_p(p)?;
    let eps = chi_m1(p);
    let g0 = IntPolynomial::from_i64(&[1, -ap, eps * q * q]);
    let g1 = g0.substitute_scaled(&BigInt::from(q));
    let target_int = g0.mul(&g1);
    let target = GaussPolynomial::from_int(&target_int).expect("coefficients fit in i64");
    let c = |k: usize| target.coeff(k);

    let lambda1 = -c(1);
    let p3 = GaussInt::from(q.pow(3));
    let delta_sq = c(4).div_exact(GaussInt::from(q.pow(6))).ok_or(Error::NoConvention("T^4 coefficient not divisible by p^6".into()))?;
    let (delta, determined) = if lambda1.is_zero() {
        (GaussInt::from(eps), false)
    } else {
        let d = c(3).div_exact(-(lambda1 * p3)).ok_or(Error::NoConvention("T^3 coefficient does not determine delta".into()))?;
        (d, true)
    };
    let delta = if delta * delta == delta_sq { delta } else { GaussInt::ZERO };

    // h₂ of the roots of 1 − sT + PT²: s² − P.
    let (s_a, p_a) = (GaussInt::from(ap), GaussInt::from(eps * q * q));
    let (s_b, p_b) = (GaussInt::from(ap * q), GaussInt::from(eps * q.pow(4)));
    let h2 = (s_a * s_a - p_a) + (s_b * s_b - p_b) + s_a * s_b;
    let lambda2 = h2 - delta * GaussInt::from(q.pow((mu - 1) as u32));

    let quartic = ae_quartic(lambda1, lambda2, delta, mu, p);
    let residual = target.sub(&quartic);
    Ok(SpinCheck { p, lambda1, lambda2, delta, delta_determined: determined, chi_m1: eps, target, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_examples() {
        assert_eq!(euler_factor(FactorKind::Chi(-1), 5, 1).unwrap().poly, IntPolynomial::from_i64(&[1, -5]));
        assert_eq!(euler_factor(FactorKind::G, 3, 0).unwrap().poly, IntPolynomial::from_i64(&[1, 0, -9]));
        assert_eq!(euler_factor(FactorKind::Zeta, 7, 0).unwrap().poly, IntPolynomial::from_i64(&[1, -1]));
        assert!(euler_factor(FactorKind::Chi(3), 5, 0).is_err());
    }

    #[test]
    fn h2_shape() {
        for p in [3, 5, 7] {
            let h = h2_lpoly(p).unwrap();
            assert_eq!(h.poly.degree(), 21);
            assert_eq!(h.poly.coeff(1), BigInt::from(-trace_h2(p).unwrap()));
        }
        assert_eq!(trace_h2(3).unwrap(), 3);
        assert_eq!(trace_h2(5).unwrap(), 55 + a_p(5).unwrap());
    }

    #[test]
    fn quartic_at_zero() {
        let q = ae_quartic(GaussInt::ZERO, GaussInt::ZERO, GaussInt::ONE, 3, 5);
        let want: Vec<GaussInt> = [1, 0, -25, 0, 5i64.pow(6)].map(GaussInt::from).to_vec();
        assert_eq!(q.coeffs(), &want[..]);
        assert_eq!(mu_rho(3, 1), 1);
    }

    #[test]
    fn spin_small_primes() {
        for p in [3, 5, 13] {
            let s = spin_identity_check(p).unwrap();
            assert!(s.residual.is_zero(), "{s:?}");
            assert_eq!(s.delta, GaussInt::from(s.chi_m1));
        }
        assert_eq!(spin_identity_check(3).unwrap().lambda1, GaussInt::ZERO);
    }

    #[test]
    fn lefschetz_at_three() {
        let l = lefschetz_check(3).unwrap();
        assert_eq!((l.predicted, l.residual), (64, 0));
    }
}
