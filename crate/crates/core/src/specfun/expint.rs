use num_complex::Complex64;

use super::{SeriesControl, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::summation::ComplexCompensatedSum;

/// |z| below which E1 uses the power series.
pub const E1_CROSSOVER_RADIUS: f64 = 4.0;

/// Beyond this |arg z| the continued fraction converges too slowly; the series
/// takes over even above the crossover radius.
const CUT_WEDGE_ARG: f64 = 3.0;

const OVERFLOW_RE: f64 = -700.0;
const CF_MAX_ITERATIONS: usize = 20_000;
const CF_EPS: f64 = 1e-16;
const ASYMPTOTIC_EI_MIN: f64 = 50.0;

/// Exponential integral E1(z) = ∫_z^∞ e^{-t}/t dt on the principal branch.
///
/// Points on the cut (Im z = 0, Re z < 0, either sign of zero) return the
/// upper-half-plane limit, so E1(-x) = -Ei(x) - iπ.
pub fn exp_integral_e1(z: Complex64) -> Result<Complex64> {
    exp_integral_e1_with(z, &SeriesControl::default())
}

pub fn exp_integral_e1_with(z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    if !z.is_finite() {
        return Err(Error::domain(format!("E1 argument {z} is not finite")));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain("E1 has a logarithmic singularity at z = 0"));
    }
    if z.re < OVERFLOW_RE {
        return Err(Error::Overflow(format!(
            "E1({z}): e^-z exceeds binary64 range for Re(z) < {OVERFLOW_RE}"
        )));
    }
    // -0.0 + 0.0 == +0.0, which pins the cut to its upper side.
    let z = Complex64::new(z.re, z.im + 0.0);
    if z.norm() < E1_CROSSOVER_RADIUS || z.arg().abs() > CUT_WEDGE_ARG {
        e1_series(z, ctl)
    } else {
        e1_continued_fraction(z)
    }
}

/// E1(z) = -γ - Log z - Σ_{k≥1} (-z)^k / (k·k!).
pub fn e1_series(z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain("E1 series undefined at z = 0"));
    }
    let z = Complex64::new(z.re, z.im + 0.0);
    let mut sum = ComplexCompensatedSum::new();
    let mut power = Complex64::new(1.0, 0.0);
    let magnitude = z.norm();
    for k in 1..=ctl.max_terms {
        let kf = k as f64;
        power *= -z / kf;
        let term = power / kf;
        sum.add(term);
        // Only stop once past the peak term, where the tail is geometric.
        if kf > magnitude
            && term.norm() <= ctl.rel_tolerance * sum.value().norm().max(f64::MIN_POSITIVE)
        {
            return Ok(-EULER_GAMMA - z.ln() - sum.value());
        }
    }
    Err(Error::NonConvergence(format!(
        "E1 series at {z} did not settle within {} terms",
        ctl.max_terms
    )))
}

/// E1(z) = e^{-z} / (z + 1 - 1²/(z + 3 - 2²/(z + 5 - …))), modified Lentz.
///
/// Valid for |arg z| < π; convergence slows near the negative real axis and
/// for small |z|.
pub fn e1_continued_fraction(z: Complex64) -> Result<Complex64> {
    let tiny = Complex64::new(1e-300, 0.0);
    let guard = |v: Complex64| if v.norm() < 1e-300 { tiny } else { v };

    let mut b = z + 1.0;
    let mut c = Complex64::new(1e300, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..=CF_MAX_ITERATIONS {
        let an = -((i * i) as f64);
        b += 2.0;
        d = guard(d * an + b).inv();
        c = guard(b + c.inv() * an);
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).norm() < CF_EPS {
            return Ok(h * (-z).exp());
        }
    }
    Err(Error::NonConvergence(format!(
        "E1 continued fraction at {z} did not settle within {CF_MAX_ITERATIONS} iterations"
    )))
}

/// Principal-value exponential integral Ei(x) for real x ≠ 0.
pub fn exp_integral_ei(x: f64) -> Result<f64> {
    exp_integral_ei_with(x, &SeriesControl::default())
}

pub fn exp_integral_ei_with(x: f64, ctl: &SeriesControl) -> Result<f64> {
    if x == 0.0 || x.is_nan() {
        return Err(Error::domain("Ei has a logarithmic singularity at x = 0"));
    }
    if x <= -E1_CROSSOVER_RADIUS {
        // Ei(-t) = -E1(t)
        return Ok(-exp_integral_e1_with(Complex64::new(-x, 0.0), ctl)?.re);
    }
    if x > 709.0 {
        return Err(Error::Overflow(format!("Ei({x}) exceeds binary64 range")));
    }
    if x >= ASYMPTOTIC_EI_MIN {
        return ei_asymptotic(x);
    }

    // γ + ln|x| + Σ x^k/(k·k!)
    let mut sum = crate::summation::CompensatedSum::new();
    let mut power = 1.0;
    for k in 1..=ctl.max_terms {
        let kf = k as f64;
        power *= x / kf;
        let term = power / kf;
        sum.add(term);
        if kf > x.abs()
            && term.abs() <= ctl.rel_tolerance * sum.value().abs().max(f64::MIN_POSITIVE)
        {
            return Ok(EULER_GAMMA + x.abs().ln() + sum.value());
        }
    }
    Err(Error::NonConvergence(format!(
        "Ei series at {x} did not settle within {} terms",
        ctl.max_terms
    )))
}

// Ei(x) ~ e^x/x · Σ k!/x^k, truncated at the smallest term.
fn ei_asymptotic(x: f64) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..(x as usize) {
        let next = term * k as f64 / x;
        if next < 1e-17 {
            break;
        }
        sum += next;
        term = next;
    }
    Ok(x.exp() / x * sum)
}

/// Principal-value logarithmic integral li(x) = Ei(ln x).
pub fn log_integral(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("li(x) needs x > 0, got {x}")));
    }
    if x == 1.0 {
        return Err(Error::domain("li(x) diverges at x = 1"));
    }
    exp_integral_ei(x.ln())
}
