//! Invariant suites run by `primezeta verify`.
//!
//! Each check reports pass/fail plus the measured quantity. Random sample
//! points come from a fixed seed so runs are reproducible.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    branch_jump, convergence_study, scan_vertical, tail_identity_check, ScanSettings,
};
use crate::error::Result;
use crate::oracle::{e1_quadrature_oracle, li_difference_oracle};
use crate::primes::{mobius_sieve, prime_count, sieve, PrimeTable};
use crate::primezeta::{
    boundary_term, error_bound, prime_zeta_direct, prime_zeta_mobius, prime_zeta_rh,
    prime_zeta_rh_corrected, Method,
};
use crate::specfun::{
    e1_continued_fraction, e1_series, exp_integral_e1, log_integral, riemann_zeta,
    riemann_zeta_with_params, zeta_parameters, SeriesControl, E1_CROSSOVER_RADIUS,
};

const SEED: u64 = 0x5eed_2e7a;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(suite: &'static str, name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            suite,
            name,
            passed,
            detail,
        }
    }

    fn from_result(suite: &'static str, name: &'static str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Self::new(suite, name, passed, detail),
            Err(e) => Self::new(suite, name, false, format!("error: {e}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Specfun,
    Primes,
    PrimeZeta,
    Analysis,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Specfun,
        Suite::Primes,
        Suite::PrimeZeta,
        Suite::Analysis,
    ];
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

pub fn run(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Specfun => specfun_checks(),
        Suite::Primes => primes_checks(),
        Suite::PrimeZeta => match sieve(1_000_000) {
            Ok(table) => primezeta_checks(&table),
            Err(e) => vec![Check::new("primezeta", "sieve", false, e.to_string())],
        },
        Suite::Analysis => match sieve(10_000) {
            Ok(table) => analysis_checks(&table),
            Err(e) => vec![Check::new("analysis", "sieve", false, e.to_string())],
        },
    }
}

pub fn run_all() -> Vec<Check> {
    Suite::ALL.into_iter().flat_map(run).collect()
}

fn specfun_checks() -> Vec<Check> {
    const S: &str = "specfun";
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();

    out.push(Check::from_result(
        S,
        "e1 vs quadrature oracle (20 points, 1e-10 rel)",
        (|| {
            let mut worst = 0.0f64;
            for k in 0..20 {
                let z = Complex64::new(
                    0.05 + 0.6 * k as f64,
                    7.0 * ((k * 7) % 20) as f64 / 20.0 - 3.0,
                );
                worst = worst.max(rel(exp_integral_e1(z)?, e1_quadrature_oracle(z)?));
            }
            Ok((worst <= 1e-10, format!("max rel diff {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "e1 series/continued-fraction crossover (1e-12 rel)",
        (|| {
            let mut worst = 0.0f64;
            for i in 0..=8 {
                let r = E1_CROSSOVER_RADIUS * (0.8 + 0.05 * i as f64);
                for j in 0..=24 {
                    let th = -2.99 + 5.98 * j as f64 / 24.0;
                    let z = Complex64::from_polar(r, th);
                    let s = e1_series(z, &SeriesControl::default())?;
                    worst = worst.max(rel(s, e1_continued_fraction(z)?));
                }
            }
            Ok((worst <= 1e-12, format!("max rel diff {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "e1 derivative -e^-z/z by central differences",
        (|| {
            let mut worst = 0.0f64;
            for re in [-3.0, -0.7, 0.4, 2.5, 6.0] {
                for im in [-4.0, -0.5, 0.5, 5.0] {
                    let z = Complex64::new(re, im);
                    let h = 1e-5 * z.norm().max(1.0);
                    let d = (exp_integral_e1(z + h)? - exp_integral_e1(z - h)?) / (2.0 * h);
                    let expected = -(-z).exp() / z;
                    worst = worst.max((d - expected).norm() / expected.norm().max(1.0));
                }
            }
            Ok((worst <= 1e-6, format!("max mixed error {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "conjugate symmetry of e1 and zeta (100 points each)",
        (|| {
            let mut worst = 0.0f64;
            for _ in 0..100 {
                let z = Complex64::new(rng.gen_range(-8.0..20.0), rng.gen_range(0.01..30.0));
                worst = worst.max(rel(exp_integral_e1(z.conj())?, exp_integral_e1(z)?.conj()));
                let s = Complex64::new(rng.gen_range(0.2..6.0), rng.gen_range(0.01..80.0));
                worst = worst.max(rel(riemann_zeta(s.conj())?, riemann_zeta(s)?.conj()));
            }
            Ok((worst <= 1e-14, format!("max rel asymmetry {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "e1 jump across the cut is -2πi",
        (|| {
            let mut worst = 0.0f64;
            for x in [0.5, 1.0, 2.0] {
                let jump = exp_integral_e1(Complex64::new(-x, 1e-8))?
                    - exp_integral_e1(Complex64::new(-x, -1e-8))?;
                worst = worst.max((jump - Complex64::new(0.0, -2.0 * PI)).norm());
            }
            Ok((worst <= 1e-6, format!("max deviation {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "zeta(2) = π²/6",
        (|| {
            let d = (riemann_zeta(Complex64::new(2.0, 0.0))?.re - PI * PI / 6.0).abs();
            Ok((d <= 1e-13, format!("abs diff {d:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "zeta Euler–Maclaurin stability (2N, M+2)",
        (|| {
            let mut worst = 0.0f64;
            for sigma in [0.55, 0.75, 1.5, 2.0, 4.0] {
                for t in [0.1, 1.0, 10.0, 50.0, 100.0] {
                    let s = Complex64::new(sigma, t);
                    let (n, m) = zeta_parameters(s);
                    let base = riemann_zeta_with_params(s, n, m)?.value;
                    let refined = riemann_zeta_with_params(s, 2 * n, m + 2)?.value;
                    worst = worst.max(rel(base, refined));
                }
            }
            Ok((worst <= 1e-12, format!("max rel change {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "li' = 1/log x by finite differences",
        (|| {
            let mut worst = 0.0f64;
            for x in [10.0, 1e2, 1e4] {
                let h = 1e-3 * x;
                let d = (log_integral(x + h)? - log_integral(x - h)?) / (2.0 * h);
                worst = worst.max((d * x.ln() - 1.0).abs());
            }
            Ok((worst <= 1e-6, format!("max rel error {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "li(1e5) - li(1e4) vs quadrature",
        (|| {
            let d =
                (log_integral(1e5)? - log_integral(1e4)? - li_difference_oracle(1e4, 1e5)?).abs();
            Ok((d <= 1e-9, format!("abs diff {d:.3e}")))
        })(),
    ));

    out
}

fn primes_checks() -> Vec<Check> {
    const S: &str = "primes";
    let mut out = Vec::new();

    out.push(Check::from_result(
        S,
        "sieve to 1e5 equals trial division",
        (|| {
            let table = sieve(100_000)?;
            let trial: Vec<u32> = (2u32..=100_000)
                .filter(|&n| {
                    (2..)
                        .take_while(|d| d * d <= n)
                        .all(|d| !n.is_multiple_of(d))
                })
                .collect();
            Ok((
                table.primes() == trial.as_slice(),
                format!("{} primes", table.len()),
            ))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "mobius to 1e3 equals factorization",
        (|| {
            let mu = mobius_sieve(1000)?;
            let mut mismatches = 0;
            let mut squarefree = 0;
            let mut abs_sum = 0;
            for (n, m) in mu.iter() {
                let expected = mobius_by_factoring(n);
                mismatches += usize::from(expected != m);
                squarefree += usize::from(expected != 0);
                abs_sum += m.unsigned_abs() as usize;
            }
            Ok((
                mismatches == 0 && abs_sum == squarefree,
                format!("{mismatches} mismatches, {squarefree} squarefree"),
            ))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "half-step π at every prime ≤ 1e3",
        (|| {
            let table = sieve(1001)?;
            let mut bad = 0;
            for &p in table.primes() {
                let p = f64::from(p);
                let l = prime_count(p - 1e-9, &table)?;
                let r = prime_count(p + 1e-9, &table)?;
                bad += usize::from(l + r != 2.0 * prime_count(p, &table)?);
            }
            Ok((bad == 0, format!("{bad} violations")))
        })(),
    ));

    out
}

fn mobius_by_factoring(mut n: u64) -> i8 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

fn primezeta_checks(table: &PrimeTable) -> Vec<Check> {
    const S: &str = "primezeta";
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut out = Vec::new();

    // The direct sum stops at the table limit, so its own tail estimate is
    // added to the 1e-8 agreement tolerance.
    out.push(Check::from_result(
        S,
        "direct(1e6) vs mobius(1e3) at 50 random s",
        (|| {
            let mut worst = 0.0f64;
            let mut ok = true;
            for _ in 0..50 {
                let s = Complex64::new(rng.gen_range(1.5..3.0), rng.gen_range(-20.0..20.0));
                let d = prime_zeta_direct(s, table)?;
                let m = prime_zeta_mobius(s, 1000)?.value;
                let diff = (d.value - m).norm();
                ok &= diff <= 1e-8 + d.error_bound;
                worst = worst.max(diff);
            }
            Ok((ok, format!("max abs diff {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "continuation stable in x for Re(s) > 1",
        (|| {
            let mut ok = true;
            let mut worst = 0.0f64;
            for s in [
                Complex64::new(1.1, 0.0),
                Complex64::new(1.5, 3.0),
                Complex64::new(2.0, -10.0),
                Complex64::new(3.0, 25.0),
            ] {
                let d = (prime_zeta_rh(s, 1e4, table)?.value - prime_zeta_rh(s, 1e3, table)?.value)
                    .norm();
                let b = error_bound(s, 1e3)?;
                ok &= d <= b;
                worst = worst.max(d / b);
            }
            Ok((ok, format!("max deviation/bound {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "error decay at s = 0.75+2i under the envelope",
        (|| {
            let s = Complex64::new(0.75, 2.0);
            let reference = prime_zeta_mobius(s, 2000)?;
            let rows = convergence_study(s, &[1e2, 1e3, 1e4], &reference, table)?;
            let detail = rows
                .iter()
                .map(|r| format!("x={:e}: {:.3e}/{:.3e}", r.x, r.abs_error, r.bound))
                .collect::<Vec<_>>()
                .join(", ");
            Ok((rows.iter().all(|r| !r.exceeds), detail))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "branch jump of P is -2π on (1/2, 1], none at 1.2",
        (|| {
            let mut ok = true;
            let mut parts = Vec::new();
            for sigma in [0.6, 0.75, 0.9] {
                let j = branch_jump(sigma, 1e-8, 1e4, table)?;
                ok &= (j.extrapolated + 2.0 * PI).abs() <= 1e-3;
                parts.push(format!("σ={sigma}: {:.9}", j.extrapolated));
            }
            let j = branch_jump(1.2, 1e-8, 1e4, table)?;
            ok &= j.extrapolated.abs() <= 1e-9;
            parts.push(format!("σ=1.2: {:.3e}", j.extrapolated));
            Ok((ok, parts.join(", ")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "conjugate symmetry of every evaluator",
        (|| {
            let mut worst = 0.0f64;
            for s in [
                Complex64::new(0.75, 2.0),
                Complex64::new(1.5, 7.0),
                Complex64::new(2.5, 0.3),
            ] {
                let pairs = [
                    (
                        prime_zeta_mobius(s, 1000)?.value,
                        prime_zeta_mobius(s.conj(), 1000)?.value,
                    ),
                    (
                        prime_zeta_rh(s, 1e4, table)?.value,
                        prime_zeta_rh(s.conj(), 1e4, table)?.value,
                    ),
                    (
                        prime_zeta_rh_corrected(s, 1e4, table)?.value,
                        prime_zeta_rh_corrected(s.conj(), 1e4, table)?.value,
                    ),
                ];
                for (a, b) in pairs {
                    worst = worst.max((a - b.conj()).norm());
                }
                if s.re > 1.0 {
                    let a = prime_zeta_direct(s, table)?.value;
                    let b = prime_zeta_direct(s.conj(), table)?.value;
                    worst = worst.max((a - b.conj()).norm());
                }
            }
            Ok((worst <= 1e-13, format!("max asymmetry {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "corrected minus uncorrected equals boundary term",
        (|| {
            let mut worst = 0.0f64;
            for (s, x) in [
                (Complex64::new(2.0, 0.0), 1e4),
                (Complex64::new(0.75, 3.0), 9973.0),
                (Complex64::new(0.8, 0.0), 500.0),
            ] {
                let d =
                    prime_zeta_rh(s, x, table)?.value - prime_zeta_rh_corrected(s, x, table)?.value;
                worst = worst.max((d - boundary_term(s, x, table)?).norm());
            }
            Ok((worst <= 1e-14, format!("max residual {worst:.3e}")))
        })(),
    ));

    out
}

fn analysis_checks(table: &PrimeTable) -> Vec<Check> {
    const S: &str = "analysis";
    let mut out = Vec::new();

    out.push(Check::from_result(
        S,
        "tail identity residual ≤ 1e-8",
        (|| {
            let mut worst = 0.0f64;
            for s in [
                Complex64::new(2.0, 0.0),
                Complex64::new(3.0, 0.0),
                Complex64::new(2.0, 5.0),
            ] {
                for x in [10.0, 1e3] {
                    worst = worst.max(tail_identity_check(s, x)?);
                }
            }
            Ok((worst <= 1e-8, format!("max residual {worst:.3e}")))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "scan table self-consistency",
        (|| {
            let settings = ScanSettings {
                methods: vec![Method::Mobius, Method::Rh, Method::RhCorrected],
                ..Default::default()
            };
            let scan = scan_vertical(0.75, 0.5, 5.0, 0.5, &settings, table)?;
            let mut bad = 0;
            for row in &scan.rows {
                let r = row.sample(Method::Mobius).and_then(|s| s.value);
                for s in &row.samples {
                    if let (Some(v), Some(r), Some(d)) = (s.value, r, s.diff_vs_reference) {
                        bad += usize::from((v - r).norm() != d);
                    }
                }
            }
            Ok((
                bad == 0,
                format!("{} rows, {bad} inconsistent samples", scan.rows.len()),
            ))
        })(),
    ));

    out.push(Check::from_result(
        S,
        "convergence study under envelope for Re(s) ≥ 0.75",
        (|| {
            let mut exceed = 0;
            for s in [
                Complex64::new(0.75, 2.0),
                Complex64::new(0.75, 20.0),
                Complex64::new(0.9, 5.0),
                Complex64::new(1.5, 0.0),
            ] {
                let reference = prime_zeta_mobius(s, 1000)?;
                exceed += convergence_study(s, &[1e2, 1e3, 1e4], &reference, table)?
                    .iter()
                    .filter(|r| r.exceeds)
                    .count();
            }
            Ok((exceed == 0, format!("{exceed} envelope violations")))
        })(),
    ));

    out
}
