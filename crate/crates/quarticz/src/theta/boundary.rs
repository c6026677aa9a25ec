//! Siegel Φ of slashed theta products, measured numerically along
//! γ·diag(τ₁, it) as t grows.

use serde::Serialize;

use crate::error::Result;
use crate::theta::characteristic::{fz_tuple, Characteristic};
use crate::theta::eval::{theta_eval_g1, tuple_eval};
use crate::theta::siegel::{c, SiegelPoint, C64};
use crate::theta::symplectic::SymplecticMat;

/// [[s, 0], [0, s]] with s the swap.
pub fn g0() -> SymplecticMat {
    SymplecticMat::new([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]).expect("symplectic")
}

/// [[s, 0], [s′, s]] with s′ = [[0, 0], [2, 0]].
pub fn g2() -> SymplecticMat {
    SymplecticMat::new([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [2, 0, 1, 0]]).expect("symplectic")
}

/// det(Cτ + D)^{−r} ∏θ_m(γτ) at τ = diag(τ₁, it), r = len/2.
pub fn slashed_tuple_at(ms: &[Characteristic], gamma: &SymplecticMat, tau1: C64, t: f64, tol: f64) -> Result<C64> {
    let tau = SiegelPoint::diag(tau1, c(0.0, t))?;
    let j = tau.j(gamma);
    Ok(tuple_eval(ms, &tau.act(gamma)?, tol)? / j.powi(ms.len() as i32 / 2))
}

/// θ₀₀²θ₀₁²θ₁₀²(τ₁).
pub fn theta_square_product_eval(tau1: C64, tol: f64) -> Result<C64> {
    let g = Characteristic::g1;
    let mut v = c(1.0, 0.0);
    for m in [g(0, 0), g(0, 1), g(1, 0)] {
        let th = theta_eval_g1(&m, tau1, tol)?;
        v *= th * th;
    }
    Ok(v)
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiSample {
    pub t: f64,
    pub value: C64,
    /// value / θ₀₀²θ₀₁²θ₁₀²(τ₁).
    pub ratio_to_theta_product: C64,
}

/// F_Z|γ along diag(τ₁, it) for each t.
pub fn fz_phi_samples(gamma: &SymplecticMat, tau1: C64, ts: &[f64], tol: f64) -> Result<Vec<PhiSample>> {
    let reference = theta_square_product_eval(tau1, tol)?;
    ts.iter()
        .map(|&t| {
            let value = slashed_tuple_at(&fz_tuple(), gamma, tau1, t, tol)?;
            Ok(PhiSample { t, value, ratio_to_theta_product: value / reference })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_matrices_are_symplectic() {
        assert!(g0().is_symplectic() && g2().is_symplectic());
    }
}
