//! Python bindings: exact counts and coefficients, theta and E_Z evaluation,
//! and the aggregate checks as JSON strings.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use qz::pointcount::{CountMethod, VarietyId};
use qz::theta::{Characteristic, SiegelPoint};

fn err(e: qz::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point(tau: (Complex64, Complex64, Complex64)) -> PyResult<SiegelPoint> {
    SiegelPoint::new(tau.0, tau.1, tau.2).map_err(err)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

/// Fourier coefficient a_p of g at an odd prime p.
#[pyfunction]
fn a_p(p: u64) -> PyResult<i64> {
    qz::cmform::a_p(p).map_err(err)
}

/// Coefficients a_0..a_order of g; source is "theta", "gauss" or "hecke".
#[pyfunction]
#[pyo3(signature = (order, source = "theta"))]
fn g_coefficients(order: usize, source: &str) -> PyResult<Vec<i64>> {
    use qz::cmform::GSource;
    let src = match source {
        "theta" => GSource::ThetaProduct,
        "gauss" => GSource::GaussSum,
        "hecke" => GSource::HeckeCharacter,
        _ => return Err(PyValueError::new_err(format!("unknown source {source:?}"))),
    };
    let g = qz::cmform::g_expansion(src, order).map_err(err)?;
    g.to_i64().ok_or_else(|| PyValueError::new_err("coefficients are not rational integers"))
}

/// Number of F_p-points of a named variety.
#[pyfunction]
#[pyo3(signature = (variety, p, method = "charsum"))]
fn count(variety: &str, p: u64, method: &str) -> PyResult<u64> {
    let v = match variety {
        "fermat" => VarietyId::FermatSurface,
        "fermat_curve" => VarietyId::FermatCurve,
        "cone" => VarietyId::ConeF,
        "z" => VarietyId::Zsatake,
        "u1c" => VarietyId::U1c,
        "u2c" => VarietyId::U2c,
        "ztilde" => VarietyId::Ztilde,
        _ => return Err(PyValueError::new_err(format!("unknown variety {variety:?}"))),
    };
    let m = match method {
        "charsum" => CountMethod::Charsum,
        "naive" => CountMethod::Naive,
        _ => return Err(PyValueError::new_err(format!("unknown method {method:?}"))),
    };
    qz::pointcount::count_variety(v, p, m).map_err(err)
}

/// Trace of Frobenius on H² of Z̃ at p.
#[pyfunction]
fn trace_h2(p: u64) -> PyResult<i64> {
    qz::lfactors::trace_h2(p).map_err(err)
}

/// θ_m(τ) for a characteristic written as four bits, e.g. "1100".
#[pyfunction]
#[pyo3(signature = (characteristic, tau, tol = 1e-14))]
fn theta(characteristic: &str, tau: (Complex64, Complex64, Complex64), tol: f64) -> PyResult<Complex64> {
    let m: Characteristic = characteristic.parse().map_err(err)?;
    qz::theta::theta_eval(&m, &point(tau)?, tol).map_err(err)
}

/// F_Z(τ), the product of the six theta constants.
#[pyfunction]
#[pyo3(signature = (tau, tol = 1e-14))]
fn fz(tau: (Complex64, Complex64, Complex64), tol: f64) -> PyResult<Complex64> {
    qz::theta::fz_eval(&point(tau)?, tol).map_err(err)
}

/// The three components of E_Z(τ) in the adopted convention.
#[pyfunction]
#[pyo3(signature = (tau, tol = 1e-12))]
fn ez(tau: (Complex64, Complex64, Complex64), tol: f64) -> PyResult<[Complex64; 3]> {
    qz::soudry::ez_eval(&point(tau)?, tol, qz::soudry::EzConvention::adopted()).map_err(err)
}

/// Sizes of the orbits on six-element sets of even characteristics.
#[pyfunction]
fn orbit_sizes() -> Vec<usize> {
    let mut s: Vec<usize> = qz::theta::orbit_decomposition(6).iter().map(|o| o.len()).collect();
    s.sort_unstable();
    s
}

/// Runs one aggregate check and returns its report as JSON.
#[pyfunction]
fn check(name: &str) -> PyResult<String> {
    use qz::verify;
    let primes = [3, 5, 7, 11, 13];
    Ok(match name {
        "counts" => json(&verify::counts(&primes, 13).map_err(err)?),
        "fermat" => json(&verify::fermat(&primes).map_err(err)?),
        "orbits" => json(&verify::orbits()),
        "g-triple" => json(&verify::g_triple(200).map_err(err)?),
        "spin" => json(&verify::spin(50).map_err(err)?),
        "lefschetz" => json(&verify::lefschetz(&primes).map_err(err)?),
        _ => return Err(PyValueError::new_err(format!("unknown check {name:?}"))),
    })
}

#[pymodule]
#[pyo3(name = "quarticz")]
fn quarticz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(a_p, m)?)?;
    m.add_function(wrap_pyfunction!(g_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(trace_h2, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(fz, m)?)?;
    m.add_function(wrap_pyfunction!(ez, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_sizes, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
