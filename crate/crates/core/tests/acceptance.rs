//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p primezeta-core --test acceptance`.

use std::f64::consts::{E, PI};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use primezeta::analysis::{branch_jump, ScanSettings};
use primezeta::oracle::e1_quadrature_oracle;
use primezeta::specfun::{e1_continued_fraction, e1_series, E1_CROSSOVER_RADIUS};
use primezeta::{
    convergence_study, error_bound, exp_integral_e1, log_integral, prime_zeta_direct,
    prime_zeta_mobius, riemann_zeta, scan_real, scan_vertical, sieve, tail_identity_check, Method,
    SeriesControl,
};

const X: f64 = 1e4;
const N_MAX: u64 = 1000;

// fig2/fig3 vertical line: largest |Re Δ| and |Im Δ| between the continuation and Möbius
// inversion over σ = 0.75, t ∈ [0.1, 50], measured once and frozen here
// (observed 3.7367e-2 and 3.8142e-2; the Möbius values agree with an
// independent 25-digit evaluation to 1e-14 along the line).
const FIG23_GOLDEN_RE: f64 = 3.737e-2;
const FIG23_GOLDEN_IM: f64 = 3.815e-2;

// P(2) summed independently to 10^8 with its tail estimate; agrees with the
// 30-digit literature value 0.452247420041065498506543364832.
const P2_CONSTANT: f64 = 0.452_247_420_041_065_5;

struct Outcome {
    id: &'static str,
    passed: bool,
    detail: String,
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> (T, Duration) {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let start = Instant::now();
    let out = pool.install(f);
    (out, start.elapsed())
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn figures_2_3() -> Outcome {
    let table = sieve(X as u64).unwrap();
    let settings = ScanSettings {
        x: X,
        n_max: N_MAX,
        methods: vec![Method::Mobius, Method::Rh],
    };
    let (scan, elapsed) =
        single_threaded(|| scan_vertical(0.75, 0.1, 50.0, 0.1, &settings, &table).unwrap());
    let mut within = true;
    let (mut re_max, mut im_max) = (0.0f64, 0.0f64);
    for row in &scan.rows {
        let r = row.sample(Method::Rh).and_then(|s| s.value);
        let m = row.sample(Method::Mobius).and_then(|s| s.value);
        let (Some(r), Some(m)) = (r, m) else {
            within = false;
            continue;
        };
        let (dre, dim) = ((r.re - m.re).abs(), (r.im - m.im).abs());
        within &= dre <= row.envelope && dim <= row.envelope;
        re_max = re_max.max(dre);
        im_max = im_max.max(dim);
    }
    let golden = re_max <= FIG23_GOLDEN_RE && im_max <= FIG23_GOLDEN_IM;
    let fast = elapsed < Duration::from_secs(60);
    Outcome {
        id: "1 fig2/fig3 vertical scan",
        passed: within && golden && fast && scan.rows.len() == 500,
        detail: format!(
            "{} samples, max |ReΔ| = {re_max:.6e}, max |ImΔ| = {im_max:.6e} (golden {FIG23_GOLDEN_RE:e}/{FIG23_GOLDEN_IM:e}), envelope {:.4}, {:.1?} single-threaded",
            scan.rows.len(),
            error_bound(c(0.75, 0.0), X).unwrap(),
            elapsed
        ),
    }
}

fn figure_1() -> Outcome {
    let table = sieve(X as u64).unwrap();
    let settings = ScanSettings {
        x: X,
        n_max: N_MAX,
        methods: vec![Method::Mobius, Method::Rh],
    };
    let (scan, elapsed) =
        single_threaded(|| scan_real(0.5001, 2.0, 0.001, &settings, &table).unwrap());
    let mut within = true;
    let mut worst_ratio = 0.0f64;
    for row in scan.rows.iter().filter(|r| r.abscissa >= 0.6) {
        let r = row.sample(Method::Rh).and_then(|s| s.value);
        let m = row.sample(Method::Mobius).and_then(|s| s.value);
        let (Some(r), Some(m)) = (r, m) else {
            within = false;
            continue;
        };
        let d = (r.re - m.re).abs();
        within &= d <= row.envelope;
        worst_ratio = worst_ratio.max(d / row.envelope);
    }
    let onset = scan.first_exceedance_descending(Method::Rh);
    let onset_ok = onset.is_none_or(|s| s < 0.6);
    Outcome {
        id: "2 fig1 real scan",
        passed: within && onset_ok && elapsed < Duration::from_secs(120),
        detail: format!(
            "{} samples, max |ReΔ|/envelope for s >= 0.6 = {worst_ratio:.4}, first exceedance (descending) = {}, {:.1?} single-threaded",
            scan.rows.len(),
            onset.map_or("none".to_string(), |s| format!("{s:.4}")),
            elapsed
        ),
    }
}

fn tail_identity() -> Outcome {
    let mut worst = 0.0f64;
    for s in [c(2.0, 0.0), c(3.0, 0.0), c(2.0, 5.0)] {
        for x in [E, 10.0, 1e3] {
            worst = worst.max(tail_identity_check(s, x).unwrap());
        }
    }
    Outcome {
        id: "3 tail identity",
        passed: worst <= 1e-8,
        detail: format!("max residual {worst:.3e} over 9 grid points"),
    }
}

fn cross_method() -> Outcome {
    let table = sieve(100_000_000).unwrap();
    let direct = prime_zeta_direct(c(2.0, 0.0), &table).unwrap();
    let mobius = prime_zeta_mobius(c(2.0, 0.0), N_MAX).unwrap();
    let diff = (direct.value - mobius.value).norm();
    // the direct sum is short of P(2) by its tail, which its bound covers
    let direct_ok = (direct.value.re - P2_CONSTANT).abs() <= direct.error_bound + 1e-12;
    let mobius_ok = (mobius.value.re - P2_CONSTANT).abs() <= 1e-12;
    Outcome {
        id: "4 cross-method oracle at s=2",
        passed: diff <= 1e-9 && direct_ok && mobius_ok,
        detail: format!(
            "direct = {:.15}, tail bound {:.2e}, mobius = {:.15}, |Δ| = {diff:.3e}",
            direct.value.re, direct.error_bound, mobius.value.re
        ),
    }
}

fn error_decay() -> Outcome {
    let table = sieve(X as u64).unwrap();
    let xs = [1e2, 1e3, 1e4];
    let mut passed = true;
    let mut parts = Vec::new();
    for s in [c(0.75, 2.0), c(1.5, 0.0)] {
        let reference = prime_zeta_mobius(s, N_MAX).unwrap();
        let rows = convergence_study(s, &xs, &reference, &table).unwrap();
        passed &= rows.iter().all(|r| !r.exceeds);
        passed &= rows[2].abs_error < rows[0].abs_error;
        parts.push(format!(
            "s={s}: {}",
            rows.iter()
                .map(|r| format!("{:.2e}<={:.2e}", r.abs_error, r.bound))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    Outcome {
        id: "5 error decay",
        passed,
        detail: parts.join("; "),
    }
}

fn branch_structure() -> Outcome {
    let table = sieve(X as u64).unwrap();
    let mut passed = true;
    let mut parts = Vec::new();
    for sigma in [0.6, 0.75, 0.9] {
        let j = branch_jump(sigma, 1e-8, X, &table).unwrap();
        passed &= (j.extrapolated + 2.0 * PI).abs() <= 1e-3;
        parts.push(format!("σ={sigma}: {:.9}", j.extrapolated));
    }
    let j = branch_jump(1.2, 1e-8, X, &table).unwrap();
    passed &= j.extrapolated.abs() <= 1e-9;
    parts.push(format!("σ=1.2: {:.2e} (raw {:.2e})", j.extrapolated, j.raw));
    Outcome {
        id: "6 branch structure",
        passed,
        detail: parts.join(", "),
    }
}

fn special_functions() -> Outcome {
    let mut e1_worst = 0.0f64;
    for k in 0..20 {
        let z = c(0.1 + 1.3 * k as f64, 12.0 * (k as f64 / 19.0) - 6.0);
        let v = exp_integral_e1(z).unwrap();
        let o = e1_quadrature_oracle(z).unwrap();
        e1_worst = e1_worst.max((v - o).norm() / o.norm());
    }

    let mut cross_worst = 0.0f64;
    for i in 0..=16 {
        let r = E1_CROSSOVER_RADIUS * (0.8 + 0.4 * i as f64 / 16.0);
        for j in 0..=40 {
            let z = Complex64::from_polar(r, -2.999 + 5.998 * j as f64 / 40.0);
            let s = e1_series(z, &SeriesControl::default()).unwrap();
            let f = e1_continued_fraction(z).unwrap();
            cross_worst = cross_worst.max((s - f).norm() / f.norm());
        }
    }

    let zeta_err = (riemann_zeta(c(2.0, 0.0)).unwrap().re - PI * PI / 6.0).abs();

    let mut li_worst = 0.0f64;
    for x in [10.0, 1e2, 1e4] {
        let h = 1e-3 * x;
        let d = (log_integral(x + h).unwrap() - log_integral(x - h).unwrap()) / (2.0 * h);
        li_worst = li_worst.max((d * x.ln() - 1.0).abs());
    }

    Outcome {
        id: "7 special functions",
        passed: e1_worst <= 1e-10 && cross_worst <= 1e-12 && zeta_err <= 1e-13 && li_worst <= 1e-6,
        detail: format!(
            "E1 vs quadrature {e1_worst:.2e}, crossover {cross_worst:.2e}, ζ(2) {zeta_err:.2e}, li' {li_worst:.2e}"
        ),
    }
}

fn main() {
    let criteria: [fn() -> Outcome; 7] = [
        figures_2_3,
        figure_1,
        tail_identity,
        cross_method,
        error_decay,
        branch_structure,
        special_functions,
    ];
    let mut failures = 0;
    for run in criteria {
        let o = run();
        println!(
            "[{}] {}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.detail
        );
        failures += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
