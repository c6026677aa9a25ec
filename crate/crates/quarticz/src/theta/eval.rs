//! Numeric theta constants by truncated lattice sums with a rigorous tail bound.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::theta::characteristic::{fz_tuple, Characteristic};
use crate::theta::siegel::{c, SiegelPoint, C64};

/// Eigenvalues of a small real symmetric matrix (cyclic Jacobi).
pub fn sym_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = cs * akp - sn * akq;
                    a[k][q] = sn * akp + cs * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = cs * apk - sn * aqk;
                    a[q][k] = sn * apk + cs * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

/// Smallest box radius N such that every lattice vector with ‖n‖∞ > N
/// contributes at most `tol` in total. Terms are bounded by
/// (2π√g·(k+½))^deg · exp(−πλ(k−½)²) on the shell ‖n‖∞ = k.
pub fn box_radius(genus: usize, lambda: f64, tol: f64, deg: i32) -> i64 {
    let g = genus as i32;
    let shell = |k: f64| (2.0 * k + 1.0).powi(g) - (2.0 * k - 1.0).powi(g);
    let poly = |k: f64| (2.0 * PI * (genus as f64).sqrt() * (k + 0.5)).powi(deg);
    let term = |k: f64| shell(k) * poly(k) * (-PI * lambda * (k - 0.5) * (k - 0.5)).exp();
    let tail = |n: i64| {
        let mut s = 0.0;
        let mut k = n + 1;
        loop {
            let t = term(k as f64);
            s += t;
            if (k as f64 - 0.5) * (k as f64 - 0.5) * lambda > 1.0 && t < 1e-6 * tol.min(s) {
                break;
            }
            k += 1;
            if k > n + 100_000 {
                break;
            }
        }
        s
    };
    let mut n = 1;
    while tail(n) > tol {
        n += 1;
    }
    n
}

fn check_tau(tau: &[Vec<C64>]) -> Result<f64> {
    let im: Vec<Vec<f64>> = tau.iter().map(|r| r.iter().map(|z| z.im).collect()).collect();
    let lam = sym_eigenvalues(&im).into_iter().fold(f64::INFINITY, f64::min);
    if !(lam > 0.0) {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(lam)
}

fn lattice_points(genus: usize, n: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * n + 1) as usize;
    let total = side.pow(genus as u32);
    (0..total).map(move |mut idx| {
        let mut v = Vec::with_capacity(genus);
        for _ in 0..genus {
            v.push((idx % side) as i64 - n);
            idx /= side;
        }
        v
    })
}

/// θ_m(τ) for genus 1..=3; τ is a symmetric g×g matrix.
pub fn theta_eval_matrix(m: &Characteristic, tau: &[Vec<C64>], tol: f64) -> Result<C64> {
    let g = m.genus();
    assert_eq!(tau.len(), g);
    let lam = check_tau(tau)?;
    let n = box_radius(g, lam, tol, 0);
    let (top, bottom) = (m.top(), m.bottom());
    let mut sum = c(0.0, 0.0);
    for a in lattice_points(g, n) {
        let x: Vec<f64> = (0..g).map(|i| a[i] as f64 + 0.5 * top[i] as f64).collect();
        let mut q = c(0.0, 0.0);
        for i in 0..g {
            for j in 0..g {
                q += tau[i][j] * (x[i] * x[j]);
            }
        }
        let lin: f64 = (0..g).map(|i| x[i] * bottom[i] as f64).sum();
        sum += (C64::new(0.0, PI) * (q + lin)).exp();
    }
    Ok(sum)
}

pub fn theta_eval_g1(m: &Characteristic, tau: C64, tol: f64) -> Result<C64> {
    theta_eval_matrix(m, &[vec![tau]], tol)
}

/// θ_m(τ) at a genus-2 point.
pub fn theta_eval(m: &Characteristic, tau: &SiegelPoint, tol: f64) -> Result<C64> {
    let t = tau.matrix();
    theta_eval_matrix(m, &[t[0].to_vec(), t[1].to_vec()], tol)
}

/// ∇_z θ_m(τ, z) at z = 0, the leading data of an odd characteristic.
pub fn theta_gradient(m: &Characteristic, tau: &SiegelPoint, tol: f64) -> Result<[C64; 2]> {
    let lam = tau.min_imag_eig();
    if !(lam > 0.0) {
        return Err(Error::NotPositiveDefinite);
    }
    let n = box_radius(2, lam, tol, 1);
    let t = tau.matrix();
    let (top, bottom) = (m.top(), m.bottom());
    let mut grad = [c(0.0, 0.0); 2];
    for a in lattice_points(2, n) {
        let x = [a[0] as f64 + 0.5 * top[0] as f64, a[1] as f64 + 0.5 * top[1] as f64];
        let q = t[0][0] * (x[0] * x[0]) + t[0][1] * (2.0 * x[0] * x[1]) + t[1][1] * (x[1] * x[1]);
        let lin = x[0] * bottom[0] as f64 + x[1] * bottom[1] as f64;
        let w = (C64::new(0.0, PI) * (q + lin)).exp() * C64::new(0.0, 2.0 * PI);
        grad[0] += w * x[0];
        grad[1] += w * x[1];
    }
    Ok(grad)
}

pub fn tuple_eval(ms: &[Characteristic], tau: &SiegelPoint, tol: f64) -> Result<C64> {
    ms.iter().try_fold(c(1.0, 0.0), |acc, m| Ok(acc * theta_eval(m, tau, tol)?))
}

pub fn fz_eval(tau: &SiegelPoint, tol: f64) -> Result<C64> {
    tuple_eval(&fz_tuple(), tau, tol)
}
