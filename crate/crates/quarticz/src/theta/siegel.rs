//! Points of the genus-2 Siegel upper half space and the symplectic action on them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::theta::symplectic::SymplecticMat;

pub type C64 = Complex64;
/// Row-major 2×2 complex matrix.
pub type CMat2 = [[C64; 2]; 2];

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn cmat_mul(a: &CMat2, b: &CMat2) -> CMat2 {
    let mut out = [[C64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn cmat_det(a: &CMat2) -> C64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

pub fn cmat_inv(a: &CMat2) -> CMat2 {
    let d = cmat_det(a);
    [[a[1][1] / d, -a[0][1] / d], [-a[1][0] / d, a[0][0] / d]]
}

pub fn cmat_transpose(a: &CMat2) -> CMat2 {
    [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]
}

fn int_block(b: [[i64; 2]; 2]) -> CMat2 {
    b.map(|row| row.map(|x| C64::new(x as f64, 0.0)))
}

fn cmat_add(a: &CMat2, b: &CMat2) -> CMat2 {
    [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]
}

/// Smallest eigenvalue of a real symmetric 2×2 matrix.
pub fn min_eig_sym2(a: f64, b: f64, d: f64) -> f64 {
    let mean = 0.5 * (a + d);
    let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
    mean - rad
}

/// τ = [[τ1, τ2], [τ2, τ3]] with positive-definite imaginary part.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SiegelPoint {
    pub tau1: C64,
    pub tau2: C64,
    pub tau3: C64,
}

impl SiegelPoint {
    pub fn new(tau1: C64, tau2: C64, tau3: C64) -> Result<Self> {
        let p = SiegelPoint { tau1, tau2, tau3 };
        if tau1.im <= 0.0 || tau1.im * tau3.im - tau2.im * tau2.im <= 0.0 {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(p)
    }

    pub fn diag(t1: C64, t3: C64) -> Result<Self> {
        Self::new(t1, C64::new(0.0, 0.0), t3)
    }

    pub fn from_matrix(m: &CMat2) -> Result<Self> {
        Self::new(m[0][0], 0.5 * (m[0][1] + m[1][0]), m[1][1])
    }

    pub fn matrix(&self) -> CMat2 {
        [[self.tau1, self.tau2], [self.tau2, self.tau3]]
    }

    pub fn coords(&self) -> [C64; 3] {
        [self.tau1, self.tau2, self.tau3]
    }

    /// Least eigenvalue of Im τ.
    pub fn min_imag_eig(&self) -> f64 {
        min_eig_sym2(self.tau1.im, self.tau2.im, self.tau3.im)
    }

    /// Cτ + D.
    pub fn automorphy(&self, m: &SymplecticMat) -> CMat2 {
        let t = self.matrix();
        cmat_add(&cmat_mul(&int_block(m.c()), &t), &int_block(m.d()))
    }

    /// det(Cτ + D).
    pub fn j(&self, m: &SymplecticMat) -> C64 {
        cmat_det(&self.automorphy(m))
    }

    /// Mτ = (Aτ + B)(Cτ + D)⁻¹.
    pub fn act(&self, m: &SymplecticMat) -> Result<SiegelPoint> {
        let t = self.matrix();
        let num = cmat_add(&cmat_mul(&int_block(m.a()), &t), &int_block(m.b()));
        let out = cmat_mul(&num, &cmat_inv(&self.automorphy(m)));
        SiegelPoint::from_matrix(&out)
    }
}

/// Fixed sample points with Im τ ≽ 2I.
pub fn sample_points() -> Vec<SiegelPoint> {
    vec![
        SiegelPoint::diag(c(0.0, 2.0), c(0.0, 2.0)).unwrap(),
        SiegelPoint::new(c(0.0, 2.0), c(0.0, 0.5), c(0.0, 2.0)).unwrap(),
        SiegelPoint::new(c(0.21, 2.3), c(-0.13, 0.2), c(0.07, 2.1)).unwrap(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive() {
        assert!(SiegelPoint::new(c(0.0, 1.0), c(0.0, 2.0), c(0.0, 1.0)).is_err());
        assert!(SiegelPoint::diag(c(0.0, -1.0), c(0.0, 1.0)).is_err());
    }

    #[test]
    fn identity_action() {
        let t = sample_points()[2];
        let back = t.act(&SymplecticMat::identity()).unwrap();
        assert!((back.tau2 - t.tau2).norm() < 1e-15);
        assert!((t.j(&SymplecticMat::identity()) - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn min_eig() {
        assert!((min_eig_sym2(2.0, 0.5, 2.0) - 1.5).abs() < 1e-15);
    }
}
