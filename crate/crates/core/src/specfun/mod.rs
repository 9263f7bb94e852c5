//! Special functions consumed by the prime zeta evaluators.
//!
//! Everything here is binary64. E1 is evaluated on the principal branch with
//! its cut on (-∞, 0]; arguments lying exactly on the cut take the limit from
//! the upper half-plane.

mod expint;
mod zeta;

pub use expint::{
    e1_continued_fraction, e1_series, exp_integral_e1, exp_integral_e1_with, exp_integral_ei,
    exp_integral_ei_with, log_integral, E1_CROSSOVER_RADIUS,
};
pub use zeta::{
    log_riemann_zeta, riemann_zeta, riemann_zeta_detailed, riemann_zeta_with_params,
    zeta_parameters, ZetaEvaluation, ZETA_CALIBRATED_IM,
};

/// Complex scalar used for s, (s-1)·log x and every P(s) value.
pub type ComplexValue = num_complex::Complex64;

/// Euler–Mascheroni constant γ to 20 digits.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

/// Truncation policy for power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tolerance: f64,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tolerance: 1e-15,
            max_terms: 500,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_tolerance: f64, max_terms: usize) -> crate::Result<Self> {
        if !(rel_tolerance > 0.0) || max_terms < 1 {
            return Err(crate::Error::domain(
                "series control needs rel_tolerance > 0 and max_terms >= 1",
            ));
        }
        Ok(Self {
            rel_tolerance,
            max_terms,
        })
    }
}
