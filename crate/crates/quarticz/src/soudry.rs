//! The vector-valued Eisenstein series E_Z = (h₀, h₁, h₂) of weight det ⊗ Sym²
//! as a lattice sum over pairs of Gaussian numbers, its 2-form, and its
//! boundary value.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::GaussInt;
use crate::error::{Error, Result};
use crate::theta::eval::sym_eigenvalues;
use crate::theta::expansion::{fz_expansion, phi_after_g0};
use crate::theta::siegel::{cmat_inv, CMat2, SiegelPoint, C64};
use crate::theta::boundary;
use crate::theta::symplectic::{gamma_z_generators, SymplecticMat};

/// The real pairing r(z₁, z₂) entering the off-diagonal of the Fourier index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pairing {
    /// Re(z₁z̄₂).
    Conjugate,
    /// Re(z₁z₂).
    Plain,
}

/// Which coordinate of z₂ enters the sign (−1)^{x₁+y₁+·}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SignCoordinate {
    X2,
    Y2,
}

/// Normalization of the exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Exponent {
    /// 2πi(τ₁N(z₁) + τ₂r + τ₃N(z₂)).
    TwoPiTrace,
    /// πi(τ₁N(z₁) + 2τ₂r + τ₃N(z₂)), the theta normalization.
    PiGram,
}

/// Orientation of the third basis 2-form paired with h₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// dτ₃∧dτ₂.
    Tau32,
    /// dτ₂∧dτ₃.
    Tau23,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EzConvention {
    pub pairing: Pairing,
    pub sign: SignCoordinate,
    pub exponent: Exponent,
    pub orientation: Orientation,
}

impl EzConvention {
    pub fn all() -> Vec<EzConvention> {
        let mut out = vec![];
        for exponent in [Exponent::PiGram, Exponent::TwoPiTrace] {
            for pairing in [Pairing::Conjugate, Pairing::Plain] {
                for sign in [SignCoordinate::X2, SignCoordinate::Y2] {
                    for orientation in [Orientation::Tau32, Orientation::Tau23] {
                        out.push(EzConvention { pairing, sign, exponent, orientation });
                    }
                }
            }
        }
        out
    }

    /// The reading as printed: Re(z₁z₂), (−1)^{x₁+y₁+x₂}, 2πi·tr, dτ₃∧dτ₂.
    pub fn printed() -> EzConvention {
        EzConvention { pairing: Pairing::Plain, sign: SignCoordinate::X2, exponent: Exponent::TwoPiTrace, orientation: Orientation::Tau32 }
    }

    /// Number of choices differing from the printed reading.
    pub fn deviations(&self) -> usize {
        let p = Self::printed();
        [self.pairing != p.pairing, self.sign != p.sign, self.exponent != p.exponent, self.orientation != p.orientation].iter().filter(|&&b| b).count()
    }

    /// The convention adopted after resolution; see `resolve_ez_convention`.
    pub fn adopted() -> EzConvention {
        EzConvention { pairing: Pairing::Conjugate, sign: SignCoordinate::X2, exponent: Exponent::PiGram, orientation: Orientation::Tau23 }
    }

    /// S(τ) with exponent πi·tr(S(τ)·G), G the Gram matrix of (z₁, z₂) under the pairing.
    fn s_matrix(&self, tau: &SiegelPoint) -> [C64; 3] {
        match self.exponent {
            Exponent::PiGram => [tau.tau1, tau.tau2, tau.tau3],
            Exponent::TwoPiTrace => [tau.tau1 * 2.0, tau.tau2, tau.tau3 * 2.0],
        }
    }
}

/// (h₀, h₁, h₂).
pub type VectorValue = [C64; 3];

fn tail_bound(lambda: f64, nmax: f64) -> f64 {
    // Lattice points with N₁ + N₂ ≤ m number at most (π²/2)(√m + 2)⁴; each
    // term is bounded by ½(N₁ + N₂)·exp(−πλ(N₁ + N₂)).
    let count = |m: f64| PI * PI / 2.0 * (m.sqrt() + 2.0).powi(4);
    let mut s = 0.0;
    let mut n = nmax.floor();
    loop {
        let t = (count(n + 1.0) - count(n).min(count(n + 1.0))) * 0.5 * (n + 1.0) * (-PI * lambda * n).exp();
        s += t;
        if n * lambda > 1.0 && t < 1e-6 * s.max(1e-300) {
            break;
        }
        n += 1.0;
    }
    s
}

/// Smallest N with the sum over N₁ + N₂ > N bounded by tol.
pub fn truncation_norm(lambda: f64, tol: f64) -> f64 {
    let mut n = 1.0;
    while tail_bound(lambda, n) > tol {
        n *= 1.25;
    }
    n
}

/// E_Z(τ) by the lattice sum, truncated at N(z₁) + N(z₂) ≤ N with a tail below tol.
///
/// For fixed z₁ the sum over z₂ = c + di runs over a box and factors into
/// sums over c and d.
pub fn ez_eval(tau: &SiegelPoint, tol: f64, conv: EzConvention) -> Result<VectorValue> {
    ez_eval_with_floor(tau, tol, 0.0, conv)
}

/// As `ez_eval`, summing at least over N(z₁) + N(z₂) ≤ `min_norm`.
pub fn ez_eval_with_floor(tau: &SiegelPoint, tol: f64, min_norm: f64, conv: EzConvention) -> Result<VectorValue> {
    let s = conv.s_matrix(tau);
    let lam = sym_eigenvalues(&[vec![s[0].im, s[1].im], vec![s[1].im, s[2].im]]).into_iter().fold(f64::INFINITY, f64::min);
    if !(lam > 0.0) {
        return Err(Error::NotPositiveDefinite);
    }
    let nmax = truncation_norm(lam, tol).max(min_norm);
    let r1 = (nmax.sqrt() + 1.0).floor() as i64;
    let ipi = C64::new(0.0, PI);
    let out = (-r1..=r1)
        .into_par_iter()
        .map(|a| {
            let mut acc = [C64::new(0.0, 0.0); 3];
            let x1 = a as f64 + 0.5;
            for b in -r1..=r1 {
                let y1 = b as f64 + 0.5;
                let n1 = x1 * x1 + y1 * y1;
                if n1 > nmax {
                    continue;
                }
                let r2 = (nmax - n1).sqrt().floor() as i64;
                // r = αc + βd.
                let (alpha, beta) = match conv.pairing {
                    Pairing::Conjugate => (x1, y1),
                    Pairing::Plain => (x1, -y1),
                };
                let mut f = [C64::new(0.0, 0.0); 3];
                let mut g = [C64::new(0.0, 0.0); 3];
                // The one-dimensional sums can overflow on their own, so each is
                // scaled by its largest term and the offset moves to the prefactor.
                let expo = |t: f64, lin: f64| ipi * (s[2] * (t * t) + s[1] * (2.0 * lin * t));
                let peak = |lin: f64| (-r2..=r2).map(|t| expo(t as f64, lin).re).fold(f64::NEG_INFINITY, f64::max);
                let (mf, mg) = (peak(alpha), peak(beta));
                for c in -r2..=r2 {
                    let cf = c as f64;
                    let sgn = if conv.sign == SignCoordinate::X2 && c.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
                    let w = (expo(cf, alpha) - mf).exp() * sgn;
                    f[0] += w;
                    f[1] += w * cf;
                    f[2] += w * (cf * cf);
                }
                for d in -r2..=r2 {
                    let df = d as f64;
                    let sgn = if conv.sign == SignCoordinate::Y2 && d.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
                    let w = (expo(df, beta) - mg).exp() * sgn;
                    g[0] += w;
                    g[1] += w * df;
                    g[2] += w * (df * df);
                }
                let i = C64::new(0.0, 1.0);
                // Σ (c − id)^k f(c)g(d) for k = 0, 1, 2.
                let k0 = f[0] * g[0];
                let k1 = f[1] * g[0] - i * f[0] * g[1];
                let k2 = f[2] * g[0] - i * 2.0 * f[1] * g[1] - f[0] * g[2];
                let sgn1 = if (a + b).rem_euclid(2) == 1 { -1.0 } else { 1.0 };
                let pre = (ipi * (s[0] * n1) + mf + mg).exp() * C64::new(0.0, 0.5) * sgn1;
                let zb = C64::new(x1, -y1);
                acc[0] += pre * zb * zb * k0;
                acc[1] += pre * zb * k1;
                acc[2] += pre * k2;
            }
            acc
        })
        .reduce(|| [C64::new(0.0, 0.0); 3], |x, y| [x[0] + y[0], x[1] + y[1], x[2] + y[2]]);
    Ok(out)
}

/// ∂τ′/∂τ for τ′ = γτ in the coordinates (τ₁, τ₂, τ₃), from dτ′ = ᵗP dτ P with P = (Cτ + D)⁻¹.
pub fn coordinate_jacobian(gamma: &SymplecticMat, tau: &SiegelPoint) -> [[C64; 3]; 3] {
    let p: CMat2 = cmat_inv(&tau.automorphy(gamma));
    let z = C64::new(0.0, 0.0);
    let o = C64::new(1.0, 0.0);
    let basis: [CMat2; 3] = [[[o, z], [z, z]], [[z, o], [o, z]], [[z, z], [z, o]]];
    let mut j = [[z; 3]; 3];
    for (col, e) in basis.iter().enumerate() {
        let mut out = [[z; 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[a][b] += p[k][a] * e[k][l] * p[l][b];
                    }
                }
            }
        }
        j[0][col] = out[0][0];
        j[1][col] = out[0][1];
        j[2][col] = out[1][1];
    }
    j
}

/// γ*(E_Z^♯) in the basis dτ₁∧dτ₂, dτ₁∧dτ₃ and the oriented third form at τ.
pub fn pullback_two_form(h_at_image: &VectorValue, jac: &[[C64; 3]; 3], orientation: Orientation) -> VectorValue {
    let third = match orientation {
        Orientation::Tau32 => (2usize, 1usize),
        Orientation::Tau23 => (1, 2),
    };
    // Components as (a, b, h) meaning h·dτ_a∧dτ_b.
    let terms = [(0usize, 1usize, h_at_image[0]), (0, 2, h_at_image[1]), (third.0, third.1, h_at_image[2])];
    let wedge = |c: usize, d: usize| -> C64 { terms.iter().map(|&(a, b, h)| h * (jac[a][c] * jac[b][d] - jac[a][d] * jac[b][c])).sum() };
    [wedge(0, 1), wedge(0, 2), wedge(third.0, third.1)]
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoFormCheck {
    pub pulled_back: VectorValue,
    pub original: VectorValue,
    /// max component difference over max component size.
    pub residual: f64,
}

/// Compares γ*(E_Z^♯) with E_Z^♯ at τ.
pub fn ez_two_form_check(gamma: &SymplecticMat, tau: &SiegelPoint, tol: f64, conv: EzConvention) -> Result<TwoFormCheck> {
    ez_two_form_check_with_floor(gamma, tau, tol, 0.0, conv)
}

/// As `ez_two_form_check`, with both lattice sums covering N(z₁) + N(z₂) ≤ `min_norm`.
pub fn ez_two_form_check_with_floor(
    gamma: &SymplecticMat,
    tau: &SiegelPoint,
    tol: f64,
    min_norm: f64,
    conv: EzConvention,
) -> Result<TwoFormCheck> {
    if !gamma.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    let image = tau.act(gamma)?;
    let h_img = ez_eval_with_floor(&image, tol, min_norm, conv)?;
    let h = ez_eval_with_floor(tau, tol, min_norm, conv)?;
    let pb = pullback_two_form(&h_img, &coordinate_jacobian(gamma, tau), conv.orientation);
    let scale = h.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let diff = (0..3).map(|k| (pb[k] - h[k]).norm()).fold(0.0, f64::max);
    let finite = pb.iter().chain(h.iter()).all(|v| v.is_finite());
    let residual = if finite { diff / scale.max(1e-300) } else { f64::INFINITY };
    Ok(TwoFormCheck { pulled_back: pb, original: h, residual })
}

/// Eight times the z₂ = 0 stratum of h₀ as a series in u = e^{πiτ₁/4}:
/// i·(−1)^{a+b}·(X − iY)² at u^{X²+Y²} (PiGram) or u^{2(X²+Y²)} (TwoPiTrace),
/// with X = 2a + 1, Y = 2b + 1.
pub fn h0_boundary_stratum(order: i64, exponent: Exponent) -> Vec<(i64, GaussInt)> {
    let mut coeffs = std::collections::BTreeMap::new();
    let r = (order as f64).sqrt() as i64 + 1;
    for xx in (-r..=r).filter(|v| v.rem_euclid(2) == 1) {
        for yy in (-r..=r).filter(|v| v.rem_euclid(2) == 1) {
            let e = match exponent {
                Exponent::PiGram => xx * xx + yy * yy,
                Exponent::TwoPiTrace => 2 * (xx * xx + yy * yy),
            };
            if e > order {
                continue;
            }
            let (a, b) = ((xx - 1) / 2, (yy - 1) / 2);
            let sgn = if (a + b).rem_euclid(2) == 1 { -1 } else { 1 };
            let zb = GaussInt::new(xx, -yy);
            *coeffs.entry(e).or_insert(GaussInt::ZERO) += GaussInt::I * zb * zb * GaussInt::from(sgn);
        }
    }
    coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiMatch {
    pub terms_compared: usize,
    /// (8·stratum coefficient) / (Φ(F_Z|g₀) coefficient) at the leading exponent.
    pub scalar8: C64,
    pub support_agrees: bool,
    pub residual: f64,
}

/// Compares the z₂ = 0 stratum of h₀ with Φ(F_Z|g₀) up to one scalar over the
/// first `terms` nonzero coefficients, by exact cross-multiplication.
pub fn ez_phi_match(terms: usize, exponent: Exponent) -> Result<PhiMatch> {
    let mut order = 16i64;
    loop {
        let phi: Vec<(i64, GaussInt)> = phi_after_g0(&fz_expansion(order)).iter().map(|(ix, c)| (ix[0], *c)).collect();
        let stratum = h0_boundary_stratum(order, exponent);
        if phi.len() < terms && order < 4096 {
            order *= 2;
            continue;
        }
        let (&(e0, s0), &(f0, p0)) = match (stratum.first(), phi.first()) {
            (Some(s), Some(p)) => (s, p),
            _ => return Err(Error::ZeroSeries("boundary stratum")),
        };
        let n = terms.min(phi.len());
        let exps_s: Vec<i64> = stratum.iter().take(n).map(|x| x.0).collect();
        let exps_p: Vec<i64> = phi.iter().take(n).map(|x| x.0).collect();
        let support_agrees = e0 == f0 && exps_s == exps_p;
        let mut residual: f64 = if support_agrees { 0.0 } else { f64::INFINITY };
        if support_agrees {
            let norm = (s0 * p0).to_complex().norm();
            for k in 0..n {
                let d = stratum[k].1 * p0 - s0 * phi[k].1;
                residual = residual.max(d.to_complex().norm() / norm);
            }
        }
        return Ok(PhiMatch { terms_compared: n, scalar8: s0.to_complex() / p0.to_complex(), support_agrees, residual });
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConventionTrial {
    pub convention: EzConvention,
    pub invariance_residual: f64,
    pub phi_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EzResolution {
    pub adopted: Option<EzConvention>,
    /// Other passing conventions.
    pub also_passing: Vec<EzConvention>,
    pub trials: Vec<ConventionTrial>,
}

/// Tries every convention against the 2-form invariance under `gammas` at τ
/// and the boundary match. Among passing conventions the one closest to the
/// printed reading is adopted; a tie leaves none adopted.
pub fn resolve_ez_convention(gammas: &[SymplecticMat], tau: &SiegelPoint, tol: f64, threshold: f64) -> Result<EzResolution> {
    let mut trials = vec![];
    for conv in EzConvention::all() {
        let mut worst: f64 = 0.0;
        for g in gammas {
            worst = worst.max(ez_two_form_check(g, tau, tol, conv)?.residual);
        }
        let phi = ez_phi_match(20, conv.exponent)?;
        trials.push(ConventionTrial { convention: conv, invariance_residual: worst, phi_residual: phi.residual });
    }
    let mut passing: Vec<EzConvention> =
        trials.iter().filter(|t| t.invariance_residual < threshold && t.phi_residual < threshold).map(|t| t.convention).collect();
    passing.sort_by_key(|c| c.deviations());
    let adopted = match passing.as_slice() {
        [a] => Some(*a),
        [a, b, ..] if a.deviations() < b.deviations() => Some(*a),
        _ => None,
    };
    let also_passing = passing.into_iter().filter(|c| Some(*c) != adopted).collect();
    Ok(EzResolution { adopted, also_passing, trials })
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaZFormCheck {
    pub generator: String,
    pub residual: f64,
    /// Residual for g₀γg₀⁻¹.
    pub conjugated_residual: f64,
}

/// The 2-form check on each Γ_Z generator γ and on its conjugate g₀γg₀⁻¹.
pub fn ez_gamma_z_check(tau: &SiegelPoint, tol: f64, conv: EzConvention) -> Result<Vec<GammaZFormCheck>> {
    ez_gamma_z_check_with_floor(tau, tol, 0.0, conv)
}

/// As `ez_gamma_z_check` with a minimum truncation norm.
pub fn ez_gamma_z_check_with_floor(tau: &SiegelPoint, tol: f64, min_norm: f64, conv: EzConvention) -> Result<Vec<GammaZFormCheck>> {
    let g0 = boundary::g0();
    gamma_z_generators()
        .into_iter()
        .map(|(name, g)| {
            Ok(GammaZFormCheck {
                generator: name.to_string(),
                residual: ez_two_form_check_with_floor(&g, tau, tol, min_norm, conv)?.residual,
                conjugated_residual: ez_two_form_check_with_floor(&(g0 * g * g0.inverse()), tau, tol, min_norm, conv)?.residual,
            })
        })
        .collect()
}
