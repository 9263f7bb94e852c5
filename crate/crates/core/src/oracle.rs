//! Independent reference computations used by the verification suites.
//!
//! Nothing here calls the production E1 or li code paths.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_real, QuadratureOptions};

// e^{-60} ≈ 9e-27 bounds the neglected tail relative to the retained part.
const RAY_LENGTH: f64 = 60.0;

fn oracle_options() -> QuadratureOptions {
    QuadratureOptions {
        abs_tol: 1e-300,
        rel_tol: 1e-13,
        max_subdivisions: 20_000,
    }
}

/// E1(z) = e^{-z} ∫_0^∞ e^{-u}/(z + u) du along the horizontal ray from z; Re(z) > 0.
pub fn e1_quadrature_oracle(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.is_finite() {
        return Err(Error::domain(format!(
            "the E1 quadrature oracle integrates along a ray and needs Re(z) > 0, got {z}"
        )));
    }
    let opts = oracle_options();
    // A short first panel resolves the 1/(z+u) peak when |z| is small.
    let knee = z.norm().min(1.0);
    let head = integrate(
        |u| Complex64::new((-u).exp(), 0.0) / (z + u),
        0.0,
        knee,
        &opts,
    )?;
    let body = integrate(
        |u| Complex64::new((-u).exp(), 0.0) / (z + u),
        knee,
        RAY_LENGTH,
        &opts,
    )?;
    Ok((head.value + body.value) * (-z).exp())
}

/// ∫_a^b dt / ln t for 1 ∉ [a, b].
pub fn li_difference_oracle(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || (a - 1.0) * (b - 1.0) <= 0.0 {
        return Err(Error::domain(
            "li difference oracle needs an interval of (0, ∞) avoiding t = 1",
        ));
    }
    let (v, _) = integrate_real(|t| 1.0 / t.ln(), a, b, &oracle_options())?;
    Ok(v)
}

/// Ei(x) by its power series accumulated in descending-magnitude order; x > 0.
///
/// Sums γ + ln x + Σ x^k/(k·k!) with all terms positive, so no cancellation.
pub fn ei_series_oracle(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 60.0) {
        return Err(Error::domain("Ei series oracle supports 0 < x < 60"));
    }
    let mut terms = Vec::new();
    let mut power = 1.0;
    for k in 1..1000 {
        power *= x / k as f64;
        let term = power / k as f64;
        terms.push(term);
        if k as f64 > x && term < 1e-18 * x.max(1.0) {
            break;
        }
    }
    let tail: f64 = terms.iter().rev().sum();
    Ok(0.577_215_664_901_532_860_606_512 + x.ln() + tail)
}
