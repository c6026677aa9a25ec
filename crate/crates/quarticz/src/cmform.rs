//! The weight-3 CM newform g of level 16 with nebentypus χ₋₁, built from
//! theta constants, from a Gaussian lattice sum, and multiplicatively from
//! its Hecke character.

use serde::Serialize;

use crate::arith::field::{check_odd_prime, chi_m1, is_prime};
use crate::arith::{gauss_primary_decompose, GaussInt};
use crate::error::{Error, Result};
use crate::theta::expansion::theta_square_product;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GSource {
    ThetaProduct,
    GaussSum,
    HeckeCharacter,
}

/// Σ a_n qⁿ, q = e^{2πiτ}, for 0 ≤ n ≤ order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllipticQExpansion {
    coeffs: Vec<GaussInt>,
}

impl EllipticQExpansion {
    pub fn new(coeffs: Vec<GaussInt>) -> Self {
        EllipticQExpansion { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> GaussInt {
        self.coeffs.get(n).copied().unwrap_or(GaussInt::ZERO)
    }

    pub fn coeffs(&self) -> &[GaussInt] {
        &self.coeffs
    }

    /// Integer coefficients, when all are rational.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.as_int()).collect()
    }

    pub fn scale_div(&self, d: GaussInt) -> Option<Self> {
        self.coeffs.iter().map(|c| c.div_exact(d)).collect::<Option<Vec<_>>>().map(Self::new)
    }

    /// First index with a nonzero coefficient.
    pub fn leading(&self) -> Option<(usize, GaussInt)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(n, c)| (n, *c))
    }

    /// Coefficient pairs [n, a_n] for export.
    pub fn pairs(&self) -> Vec<(usize, GaussInt)> {
        self.coeffs.iter().copied().enumerate().collect()
    }
}

/// θ₀₀²θ₀₁²θ₁₀² at 4τ in q-powers, divided by its leading coefficient.
fn from_theta_product(order: usize) -> Result<EllipticQExpansion> {
    // A genus-1 index e is exp(πiτe/4); after τ → 4τ it is q^{e/2}.
    let s = theta_square_product(2 * order as i64).rescale4();
    let mut c = vec![GaussInt::ZERO; order + 1];
    for (ix, v) in s.iter() {
        let big = ix[0];
        if big % 8 != 0 {
            return Err(Error::NoConvention(format!("exponent {big} is not a multiple of 8")));
        }
        if let Some(slot) = c.get_mut((big / 8) as usize) {
            *slot = *v;
        }
    }
    let e = EllipticQExpansion::new(c);
    let (_, lead) = e.leading().ok_or(Error::ZeroSeries("theta product"))?;
    e.scale_div(lead).ok_or(Error::NoConvention("leading coefficient does not divide".into()))
}

/// Readings of the sign factor in the Gaussian lattice sum, as functions of
/// s = x + y ∈ Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GaussSignConvention {
    /// i^{x+y}.
    IPower,
    /// (−1)^{⌊(x+y)/2⌋}.
    FloorHalf,
    /// (−1)^{x+y−1}, the Schwartz sign (−1)^{x₁+y₁} on z₂ = 0.
    ShiftedParity,
}

impl GaussSignConvention {
    pub fn all() -> [GaussSignConvention; 3] {
        [Self::IPower, Self::FloorHalf, Self::ShiftedParity]
    }

    fn sign(self, s: i64) -> GaussInt {
        let pm = |e: i64| GaussInt::from(if e.rem_euclid(2) == 0 { 1 } else { -1 });
        match self {
            Self::IPower => GaussInt::i_pow(s),
            Self::FloorHalf => pm(s.div_euclid(2)),
            Self::ShiftedParity => pm(s - 1),
        }
    }
}

/// (i/2) Σ (ix + y)² · sign(x + y) · exp(πi(x² + y²)τ) over x + iy ∈ (1+i)/2 + Z[i],
/// taken at 4τ, in q-powers, without normalization and multiplied by 8 so
/// that every reading stays in Z[i].
///
/// With X = 2x and Y = 2y odd, 8·term = i(iX + Y)²·sign at q^{(X²+Y²)/2}.
pub fn gauss_sum_raw(order: usize, conv: GaussSignConvention) -> EllipticQExpansion {
    let mut c8 = vec![GaussInt::ZERO; order + 1];
    let r = ((2 * order) as f64).sqrt() as i64 + 1;
    for xx in (-r..=r).filter(|v| v.rem_euclid(2) == 1) {
        for yy in (-r..=r).filter(|v| v.rem_euclid(2) == 1) {
            let n = ((xx * xx + yy * yy) / 2) as usize;
            if n > order {
                continue;
            }
            let base = GaussInt::new(yy, xx);
            c8[n] += GaussInt::I * base * base * conv.sign((xx + yy) / 2);
        }
    }
    EllipticQExpansion::new(c8)
}

#[derive(Clone, Debug, Serialize)]
pub struct GaussSumResolution {
    pub convention: GaussSignConvention,
    /// 8 · lattice sum = scalar8 · g.
    pub scalar8: GaussInt,
    pub rejected: Vec<GaussSignConvention>,
}

/// The sign reading whose lattice sum is a constant multiple of the theta product.
pub fn resolve_gauss_convention(order: usize) -> Result<GaussSumResolution> {
    let reference = from_theta_product(order)?;
    let mut found = None;
    let mut rejected = vec![];
    for conv in GaussSignConvention::all() {
        let raw = gauss_sum_raw(order, conv);
        let matched = raw.leading().and_then(|(_, lead)| {
            let ok = (0..=order).all(|n| raw.coeff(n) == lead * reference.coeff(n));
            ok.then_some(lead)
        });
        match (matched, &found) {
            (Some(lead), None) => found = Some((conv, lead)),
            _ => rejected.push(conv),
        }
    }
    let (convention, scalar8) = found.ok_or(Error::NoConvention("no sign reading matches the theta product".into()))?;
    Ok(GaussSumResolution { convention, scalar8, rejected })
}

/// a_p = π² + π̄² for the primary π of norm p, and 0 at inert p.
pub fn a_p(p: u64) -> Result<i64> {
    check_odd_prime(p)?;
    if p % 4 == 3 {
        return Ok(0);
    }
    let pi = gauss_primary_decompose(p)?;
    Ok((pi * pi + pi.conj() * pi.conj()).as_int().expect("trace is rational"))
}

/// a_n for n ≤ order from a_p, a_{p^k} = a_p a_{p^{k−1}} − χ₋₁(p)p² a_{p^{k−2}} and a₂ = 0.
fn from_hecke(order: usize) -> Result<EllipticQExpansion> {
    let mut a = vec![0i64; order + 1];
    if order >= 1 {
        a[1] = 1;
    }
    for n in 2..=order {
        let p = (2..=n).find(|d| n % d == 0).unwrap();
        let mut m = n;
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        let pk = if p == 2 {
            0
        } else {
            let ap = a_p(p as u64)?;
            let eps = chi_m1(p as u64) * (p * p) as i64;
            let (mut prev, mut cur) = (1i64, ap);
            for _ in 1..k {
                (prev, cur) = (cur, ap * cur - eps * prev);
            }
            cur
        };
        a[n] = pk * a[m];
    }
    Ok(EllipticQExpansion::new(a.into_iter().map(GaussInt::from).collect()))
}

/// g to the given order from the chosen construction, normalized to a₁ = 1.
pub fn g_expansion(source: GSource, order: usize) -> Result<EllipticQExpansion> {
    if order < 1 {
        return Err(Error::OrderTooSmall { needed: 1, have: order });
    }
    match source {
        GSource::ThetaProduct => from_theta_product(order),
        GSource::GaussSum => {
            let res = resolve_gauss_convention(order)?;
            gauss_sum_raw(order, res.convention).scale_div(res.scalar8).ok_or(Error::NoConvention("scalar does not divide".into()))
        }
        GSource::HeckeCharacter => from_hecke(order),
    }
}

/// T_p g − a_p g on the coefficients n = 1..=order/p, using
/// (T_p g)_n = a_{np} + χ₋₁(p)p² a_{n/p}.
pub fn hecke_tp_check(p: u64, g: &EllipticQExpansion) -> Result<Vec<GaussInt>> {
    check_odd_prime(p)?;
    let pu = p as usize;
    let valid = g.order() / pu;
    if valid < 1 {
        return Err(Error::OrderTooSmall { needed: pu, have: g.order() });
    }
    let ap = g.coeff(pu);
    let eps = chi_m1(p) * (p * p) as i64;
    Ok((1..=valid)
        .map(|n| {
            let mut t = g.coeff(n * pu);
            if n % pu == 0 {
                t += g.coeff(n / pu).scale(eps);
            }
            t - ap * g.coeff(n)
        })
        .collect())
}

/// Whether n is an odd prime, for callers iterating over a coefficient range.
pub fn is_odd_prime(n: u64) -> bool {
    n % 2 == 1 && is_prime(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(e: &EllipticQExpansion) -> Vec<i64> {
        e.to_i64().unwrap()
    }

    #[test]
    fn leading_terms() {
        let g = ints(&g_expansion(GSource::ThetaProduct, 20).unwrap());
        assert_eq!(&g[..18], &[0, 1, 0, 0, 0, -6, 0, 0, 0, 9, 0, 0, 0, 10, 0, 0, 0, -30]);
    }

    #[test]
    fn three_sources_agree() {
        let t = g_expansion(GSource::ThetaProduct, 120).unwrap();
        assert_eq!(g_expansion(GSource::GaussSum, 120).unwrap(), t);
        assert_eq!(g_expansion(GSource::HeckeCharacter, 120).unwrap(), t);
    }

    #[test]
    fn gauss_convention() {
        let r = resolve_gauss_convention(60).unwrap();
        assert_eq!(r.convention, GaussSignConvention::ShiftedParity);
        assert_eq!(r.scalar8, GaussInt::from(-8));
    }

    #[test]
    fn a_p_values() {
        assert_eq!(a_p(3).unwrap(), 0);
        assert_eq!(a_p(7).unwrap(), 0);
        assert_eq!(a_p(5).unwrap(), -6);
        assert_eq!(a_p(13).unwrap(), 10);
        assert!(a_p(2).is_err());
    }

    #[test]
    fn hecke_small() {
        let g = g_expansion(GSource::HeckeCharacter, 400).unwrap();
        for p in [3, 5, 13] {
            assert!(hecke_tp_check(p, &g).unwrap().iter().all(|c| c.is_zero()));
        }
        assert!(hecke_tp_check(401, &g).is_err());
    }
}
