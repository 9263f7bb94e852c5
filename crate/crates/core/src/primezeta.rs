//! The four P(s) evaluators and the finite-x error envelope.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::primes::{mobius_sieve, prime_count, MobiusTable, PrimeTable};
use crate::specfun::{exp_integral_e1, log_integral, log_riemann_zeta};
use crate::summation::ComplexCompensatedSum;

/// Möbius terms with Re(ns) beyond this contribute |log ζ(ns)| < 2^{-59}.
pub const MOBIUS_RE_CUTOFF: f64 = 60.0;

/// |arg ζ(ns)| above which the principal Log is flagged as possibly off-branch.
pub const WIDE_ARG_THRESHOLD: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Direct,
    Mobius,
    Rh,
    RhCorrected,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Direct,
        Method::Mobius,
        Method::Rh,
        Method::RhCorrected,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Mobius => "mobius",
            Method::Rh => "rh",
            Method::RhCorrected => "rh-corrected",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::domain(format!("unknown method `{s}`")))
    }
}

/// Diagnostics attached to a Möbius evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Note {
    /// |arg ζ(ns)| > 3: the principal Log may differ from the continuous branch.
    WideZetaArgument { n: u64, arg: f64 },
    /// ζ(ns) evaluated with |Im(ns)| beyond the calibrated range.
    ZetaUncalibrated { n: u64 },
}

/// A computed P(s) together with how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub method: Method,
    /// x for the continuation, the sieve limit for the direct sum, the last n
    /// for Möbius inversion.
    pub truncation: f64,
    /// A-priori envelope; zero for Möbius inversion.
    pub error_bound: f64,
    pub on_cut: bool,
    pub notes: Vec<Note>,
}

/// Whether `s` lies on the branch cut (1/2, 1] of the continuation.
pub fn on_branch_cut(s: Complex64) -> bool {
    s.im == 0.0 && s.re > 0.5 && s.re <= 1.0
}

fn check_finite(s: Complex64) -> Result<()> {
    if s.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("s = {s} is not finite")))
    }
}

fn check_half_plane(s: Complex64) -> Result<()> {
    check_finite(s)?;
    if !(s.re > 0.5) {
        return Err(Error::domain(format!(
            "P(s) is supported for Re(s) > 1/2, got {s}"
        )));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("pole at s=1".into()));
    }
    Ok(())
}

/// Σ p^{-s} over `primes` in ascending order with compensated summation.
pub fn prime_power_sum(s: Complex64, primes: &[u32]) -> Complex64 {
    primes
        .iter()
        .map(|&p| (-s * f64::from(p).ln()).exp())
        .collect::<ComplexCompensatedSum>()
        .value()
}

/// Σ_{p ≤ limit} p^{-s}; Re(s) > 1.
pub fn prime_zeta_direct(s: Complex64, table: &PrimeTable) -> Result<Evaluation> {
    check_finite(s)?;
    if !(s.re > 1.0) {
        return Err(Error::domain(format!(
            "the prime sum converges only for Re(s) > 1, got {s}"
        )));
    }
    let limit = table.limit() as f64;
    let sigma = s.re;
    Ok(Evaluation {
        value: prime_power_sum(s, table.primes()),
        method: Method::Direct,
        truncation: limit,
        error_bound: limit.powf(1.0 - sigma) / ((sigma - 1.0) * limit.ln()),
        on_cut: false,
        notes: Vec::new(),
    })
}

/// Σ_{n ≤ n_max} μ(n)/n · Log ζ(ns) with the principal Log.
pub fn prime_zeta_mobius(s: Complex64, n_max: u64) -> Result<Evaluation> {
    if n_max < 1 {
        return Err(Error::domain("Möbius inversion needs n_max >= 1"));
    }
    check_half_plane(s)?;
    // Terms past Re(ns) > cutoff are dropped anyway; no need to sieve further.
    let useful = ((MOBIUS_RE_CUTOFF / s.re).floor() as u64).clamp(1, n_max);
    let mu = mobius_sieve(useful)?;
    prime_zeta_mobius_with(s, &mu)
}

/// Möbius inversion over every n in `mu` with Re(ns) ≤ 60.
pub fn prime_zeta_mobius_with(s: Complex64, mu: &MobiusTable) -> Result<Evaluation> {
    check_half_plane(s)?;
    let mut acc = ComplexCompensatedSum::new();
    let mut notes = Vec::new();
    let mut last = 1;
    for (n, m) in mu.iter() {
        let nf = n as f64;
        if nf * s.re > MOBIUS_RE_CUTOFF {
            break;
        }
        last = n;
        if m == 0 {
            continue;
        }
        let (log_zeta, zeta) = log_riemann_zeta(s * nf)?;
        if !zeta.calibrated {
            notes.push(Note::ZetaUncalibrated { n });
        }
        let arg = zeta.value.arg();
        if arg.abs() > WIDE_ARG_THRESHOLD {
            notes.push(Note::WideZetaArgument { n, arg });
        }
        acc.add(log_zeta * (f64::from(m) / nf));
    }
    Ok(Evaluation {
        value: acc.value(),
        method: Method::Mobius,
        truncation: last as f64,
        error_bound: 0.0,
        on_cut: on_branch_cut(s),
        notes,
    })
}

fn check_truncation(x: f64, table: &PrimeTable) -> Result<()> {
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::domain(format!(
            "limit variable x must be >= 2, got {x}"
        )));
    }
    if x > table.limit() as f64 {
        return Err(Error::Range(format!(
            "x = {x} exceeds the prime table limit {}",
            table.limit()
        )));
    }
    Ok(())
}

/// Σ_{p ≤ x} p^{-s} + E1((s-1)·log x), Re(s) > 1/2.
///
/// On the cut (1/2, 1] the E1 term takes its upper-half-plane value, so only
/// the real part is comparable with other continuations there.
pub fn prime_zeta_rh(s: Complex64, x: f64, table: &PrimeTable) -> Result<Evaluation> {
    check_half_plane(s)?;
    check_truncation(x, table)?;
    let log_x = x.ln();
    let z = Complex64::new((s.re - 1.0) * log_x, s.im * log_x);
    let tail = exp_integral_e1(z).map_err(|e| match e {
        Error::Domain(_) => Error::Pole("singularity at s=1".into()),
        other => other,
    })?;
    Ok(Evaluation {
        value: prime_power_sum(s, table.primes_up_to(x)) + tail,
        method: Method::Rh,
        truncation: x,
        error_bound: error_bound(s, x)?,
        on_cut: on_branch_cut(s),
        notes: Vec::new(),
    })
}

/// The boundary term (π(x) - li(x))·x^{-s}, with half-step π.
pub fn boundary_term(s: Complex64, x: f64, table: &PrimeTable) -> Result<Complex64> {
    let pi_x = prime_count(x, table)?;
    let li_x = log_integral(x)?;
    Ok((-s * x.ln()).exp() * (pi_x - li_x))
}

/// [`prime_zeta_rh`] minus the boundary term (π(x) - li(x))/x^s.
pub fn prime_zeta_rh_corrected(s: Complex64, x: f64, table: &PrimeTable) -> Result<Evaluation> {
    let mut eval = prime_zeta_rh(s, x, table)?;
    eval.value -= boundary_term(s, x, table)?;
    eval.method = Method::RhCorrected;
    Ok(eval)
}

/// x^{1/2 - Re(s)}·log x, the finite-x envelope with unit constant.
pub fn error_bound(s: Complex64, x: f64) -> Result<f64> {
    if !(s.re > 0.5) || !s.is_finite() {
        return Err(Error::domain(format!(
            "error bound needs Re(s) > 1/2, got {s}"
        )));
    }
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::domain(format!("error bound needs x >= 2, got {x}")));
    }
    Ok(x.powf(0.5 - s.re) * x.ln())
}

/// Dispatches to the evaluator for `method`. `x` is the continuation limit,
/// `n_max` the Möbius cutoff; the direct sum runs over the whole table.
pub fn evaluate(
    method: Method,
    s: Complex64,
    x: f64,
    n_max: u64,
    table: &PrimeTable,
) -> Result<Evaluation> {
    match method {
        Method::Direct => prime_zeta_direct(s, table),
        Method::Mobius => prime_zeta_mobius(s, n_max),
        Method::Rh => prime_zeta_rh(s, x, table),
        Method::RhCorrected => prime_zeta_rh_corrected(s, x, table),
    }
}
