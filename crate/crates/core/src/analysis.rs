//! Scans behind the published figures, convergence studies in x, and
//! quadrature checks of the tail identity.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::primes::PrimeTable;
use crate::primezeta::{error_bound, evaluate, on_branch_cut, prime_zeta_rh, Evaluation, Method};
use crate::quadrature::{integrate, QuadratureOptions};
use crate::specfun::exp_integral_e1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanAxis {
    /// s runs along the real axis.
    RealS,
    /// s = σ + it with t running.
    VerticalT,
}

/// What a scan evaluates at every sample.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanSettings {
    pub x: f64,
    pub n_max: u64,
    pub methods: Vec<Method>,
}

impl Default for ScanSettings {
    fn default() -> Self {
        Self {
            x: 1e4,
            n_max: 1000,
            methods: vec![Method::Mobius, Method::Rh],
        }
    }
}

/// One method's outcome at one sample.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanSample {
    pub method: Method,
    pub value: Option<Complex64>,
    /// Message of the evaluator error, when the method failed here.
    pub error: Option<String>,
    /// Distance to the reference method's value; real parts only on the cut.
    pub diff_vs_reference: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub abscissa: f64,
    pub s: Complex64,
    /// The nominal sample hit s = 1 and was moved by half a step.
    pub skipped_pole: bool,
    pub on_cut: bool,
    /// error_bound(s, x) at this sample.
    pub envelope: f64,
    pub samples: Vec<ScanSample>,
    /// Largest diff_vs_reference among non-reference methods.
    pub pairwise_abs_diff: Option<f64>,
}

impl ScanRow {
    pub fn sample(&self, method: Method) -> Option<&ScanSample> {
        self.samples.iter().find(|s| s.method == method)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanTable {
    pub axis: ScanAxis,
    /// Real part of the vertical line; `None` for real scans.
    pub sigma: Option<f64>,
    pub x: f64,
    pub methods: Vec<Method>,
    pub reference: Method,
    pub rows: Vec<ScanRow>,
}

impl ScanTable {
    /// Largest |Re Δ| and |Im Δ| between `method` and the reference over rows
    /// where both succeeded. Imaginary parts are skipped on the cut.
    pub fn max_component_diffs(&self, method: Method) -> (f64, f64) {
        let mut re_max = 0.0f64;
        let mut im_max = 0.0f64;
        for row in &self.rows {
            let (Some(a), Some(b)) = (
                row.sample(method).and_then(|s| s.value),
                row.sample(self.reference).and_then(|s| s.value),
            ) else {
                continue;
            };
            re_max = re_max.max((a.re - b.re).abs());
            if !row.on_cut {
                im_max = im_max.max((a.im - b.im).abs());
            }
        }
        (re_max, im_max)
    }

    /// Walking from the largest abscissa down, the first sample where
    /// `method` deviates from the reference by more than the envelope.
    pub fn first_exceedance_descending(&self, method: Method) -> Option<f64> {
        self.rows.iter().rev().find_map(|row| {
            let diff = row.sample(method)?.diff_vs_reference?;
            (diff > row.envelope).then_some(row.abscissa)
        })
    }

    pub fn failed_samples(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| &r.samples)
            .filter(|s| s.value.is_none())
            .count()
    }
}

fn sample_count(start: f64, end: f64, step: f64) -> usize {
    // Tolerate accumulated rounding in (end - start)/step.
    ((end - start) / step + 1e-9).floor() as usize + 1
}

fn reference_method(methods: &[Method]) -> Method {
    if methods.contains(&Method::Mobius) {
        Method::Mobius
    } else {
        methods[0]
    }
}

fn check_settings(settings: &ScanSettings, step: f64) -> Result<()> {
    if settings.methods.is_empty() {
        return Err(Error::domain("a scan needs at least one method"));
    }
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::domain(format!(
            "scan step must be positive, got {step}"
        )));
    }
    Ok(())
}

fn evaluate_row(
    abscissa: f64,
    s: Complex64,
    skipped_pole: bool,
    settings: &ScanSettings,
    reference: Method,
    table: &PrimeTable,
) -> Result<ScanRow> {
    let on_cut = on_branch_cut(s);
    let outcomes: Vec<(Method, Result<Evaluation>)> = settings
        .methods
        .iter()
        .map(|&m| (m, evaluate(m, s, settings.x, settings.n_max, table)))
        .collect();
    let reference_value = outcomes
        .iter()
        .find(|(m, _)| *m == reference)
        .and_then(|(_, r)| r.as_ref().ok())
        .map(|e| e.value);

    let samples: Vec<ScanSample> = outcomes
        .into_iter()
        .map(|(method, outcome)| match outcome {
            Ok(eval) => ScanSample {
                method,
                value: Some(eval.value),
                error: None,
                diff_vs_reference: reference_value.map(|r| compare(eval.value, r, on_cut)),
            },
            Err(e) => ScanSample {
                method,
                value: None,
                error: Some(e.to_string()),
                diff_vs_reference: None,
            },
        })
        .collect();
    let pairwise_abs_diff = samples
        .iter()
        .filter(|s| s.method != reference)
        .map(|s| s.diff_vs_reference)
        .try_fold(None::<f64>, |acc, d| {
            d.map(|d| Some(acc.map_or(d, |a| a.max(d))))
        })
        .flatten();

    Ok(ScanRow {
        abscissa,
        s,
        skipped_pole,
        on_cut,
        envelope: error_bound(s, settings.x)?,
        samples,
        pairwise_abs_diff,
    })
}

/// Distance used throughout the comparisons: real parts only on the cut.
pub fn compare(a: Complex64, b: Complex64, on_cut: bool) -> f64 {
    if on_cut {
        (a.re - b.re).abs()
    } else {
        (a - b).norm()
    }
}

/// Scan P(s) for real s from `s_min` to `s_max` in steps of `step`.
///
/// A sample landing on s = 1 is moved to 1 + step/2 and marked. Per-sample
/// evaluator failures are recorded in the row, never propagated.
pub fn scan_real(
    s_min: f64,
    s_max: f64,
    step: f64,
    settings: &ScanSettings,
    table: &PrimeTable,
) -> Result<ScanTable> {
    check_settings(settings, step)?;
    if !(s_min > 0.5 && s_min <= s_max && s_max.is_finite()) {
        return Err(Error::domain(format!(
            "real scan needs 1/2 < s_min <= s_max, got [{s_min}, {s_max}]"
        )));
    }
    let reference = reference_method(&settings.methods);
    let count = sample_count(s_min, s_max, step);
    let rows = (0..count)
        .into_par_iter()
        .map(|k| {
            let mut s = s_min + k as f64 * step;
            let hit = (s - 1.0).abs() <= 1e-9 * step;
            if hit {
                s = 1.0 + 0.5 * step;
            }
            evaluate_row(s, Complex64::new(s, 0.0), hit, settings, reference, table)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanTable {
        axis: ScanAxis::RealS,
        sigma: None,
        x: settings.x,
        methods: settings.methods.clone(),
        reference,
        rows,
    })
}

/// Scan P(σ + it) for t from `t_min` to `t_max` in steps of `step`.
pub fn scan_vertical(
    sigma: f64,
    t_min: f64,
    t_max: f64,
    step: f64,
    settings: &ScanSettings,
    table: &PrimeTable,
) -> Result<ScanTable> {
    check_settings(settings, step)?;
    if !(sigma > 0.5) || !sigma.is_finite() {
        return Err(Error::domain(format!(
            "vertical scan needs sigma > 1/2, got {sigma}"
        )));
    }
    if !(t_min > 0.0 && t_min <= t_max && t_max.is_finite()) {
        return Err(Error::domain(format!(
            "vertical scan needs 0 < t_min <= t_max, got [{t_min}, {t_max}]"
        )));
    }
    let reference = reference_method(&settings.methods);
    let count = sample_count(t_min, t_max, step);
    let rows = (0..count)
        .into_par_iter()
        .map(|k| {
            let t = t_min + k as f64 * step;
            evaluate_row(
                t,
                Complex64::new(sigma, t),
                false,
                settings,
                reference,
                table,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanTable {
        axis: ScanAxis::VerticalT,
        sigma: Some(sigma),
        x: settings.x,
        methods: settings.methods.clone(),
        reference,
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub x: f64,
    pub abs_error: f64,
    pub bound: f64,
    pub exceeds: bool,
}

/// Deviation of the continuation from `reference` at each x, against the envelope.
pub fn convergence_study(
    s: Complex64,
    x_values: &[f64],
    reference: &Evaluation,
    table: &PrimeTable,
) -> Result<Vec<ConvergenceRow>> {
    if x_values.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::domain("x values must be strictly increasing"));
    }
    let on_cut = on_branch_cut(s);
    x_values
        .iter()
        .map(|&x| {
            let eval = prime_zeta_rh(s, x, table)?;
            let abs_error = compare(eval.value, reference.value, on_cut);
            Ok(ConvergenceRow {
                x,
                abs_error,
                bound: eval.error_bound,
                exceeds: abs_error > eval.error_bound,
            })
        })
        .collect()
}

/// |∫_x^∞ dt/(t^s log t) - E1((s-1) log x)| with the integral done by
/// quadrature in u = log t; Re(s) > 1, x ≥ 2.
pub fn tail_identity_check(s: Complex64, x: f64) -> Result<f64> {
    if !(s.re > 1.0) || !s.is_finite() {
        return Err(Error::domain(format!(
            "tail integral converges only for Re(s) > 1, got {s}"
        )));
    }
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::domain(format!(
            "tail identity needs x >= 2, got {x}"
        )));
    }
    let a = s - 1.0;
    let lower = x.ln();
    // ∫_U^∞ |e^{-a u}/u| du ≤ e^{-Re(a) U}/(Re(a) U)
    let mut upper = lower + 1.0;
    while (-a.re * upper).exp() / (a.re * upper) > 1e-17 {
        upper *= 2.0;
    }
    let opts = QuadratureOptions {
        abs_tol: 1e-16,
        rel_tol: 1e-13,
        max_subdivisions: 20_000,
    };
    let lhs = integrate(|u| (-a * u).exp() / u, lower, upper, &opts)?;
    let rhs = exp_integral_e1(a * lower)?;
    Ok((lhs.value - rhs).norm())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchJump {
    /// Im P(σ+iε) - Im P(σ-iε).
    pub raw: f64,
    /// Two-point extrapolation to ε → 0, cancelling the O(ε) smooth part.
    pub extrapolated: f64,
}

/// Measured imaginary-part jump of the continuation across the real axis at σ.
pub fn branch_jump(sigma: f64, eps: f64, x: f64, table: &PrimeTable) -> Result<BranchJump> {
    if !(eps > 0.0) {
        return Err(Error::domain("branch jump needs eps > 0"));
    }
    let jump = |e: f64| -> Result<f64> {
        let above = prime_zeta_rh(Complex64::new(sigma, e), x, table)?;
        let below = prime_zeta_rh(Complex64::new(sigma, -e), x, table)?;
        Ok(above.value.im - below.value.im)
    };
    let raw = jump(eps)?;
    let doubled = jump(2.0 * eps)?;
    Ok(BranchJump {
        raw,
        extrapolated: 2.0 * raw - doubled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve;
    use crate::primezeta::prime_zeta_mobius;
    use std::f64::consts::{E, PI};

    fn table() -> PrimeTable {
        sieve(10_000).unwrap()
    }

    #[test]
    fn sample_counts() {
        assert_eq!(sample_count(0.1, 50.0, 0.1), 500);
        assert_eq!(sample_count(0.5001, 2.0, 0.001), 1500);
        assert_eq!(sample_count(2.0, 2.0, 0.1), 1);
        assert_eq!(sample_count(1.0, 1.1, 0.1), 2);
    }

    #[test]
    fn single_point_real_scan() {
        let t = scan_real(2.0, 2.0, 0.01, &ScanSettings::default(), &table()).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.reference, Method::Mobius);
        assert!(t.rows[0].pairwise_abs_diff.unwrap() <= 1e-5);
    }

    #[test]
    fn real_scan_skips_pole() {
        let t = scan_real(0.9, 1.1, 0.05, &ScanSettings::default(), &table()).unwrap();
        assert_eq!(t.rows.len(), 5);
        let hit: Vec<_> = t.rows.iter().filter(|r| r.skipped_pole).collect();
        assert_eq!(hit.len(), 1);
        assert!((hit[0].abscissa - 1.025).abs() < 1e-12);
        assert!(t.rows.windows(2).all(|w| w[0].abscissa < w[1].abscissa));
        assert_eq!(t.failed_samples(), 0);
    }

    #[test]
    fn real_scan_records_row_failures() {
        let settings = ScanSettings {
            methods: vec![Method::Mobius, Method::Direct],
            ..Default::default()
        };
        let t = scan_real(0.9, 1.2, 0.1, &settings, &table()).unwrap();
        // direct fails for s ≤ 1; the pole sample moved to 1.05 succeeds
        let failed: Vec<_> = t
            .rows
            .iter()
            .filter(|r| r.sample(Method::Direct).unwrap().value.is_none())
            .map(|r| r.abscissa)
            .collect();
        assert_eq!(failed, vec![0.9]);
        assert!(t.rows[0]
            .sample(Method::Direct)
            .unwrap()
            .error
            .as_deref()
            .unwrap()
            .contains("Re(s) > 1"));
        assert!(t.rows[0].pairwise_abs_diff.is_none());
        assert!(t.rows[1].skipped_pole);
        assert!(t.rows[1].pairwise_abs_diff.is_some());
        assert_eq!(t.failed_samples(), 1);
    }

    #[test]
    fn scan_rows_are_self_consistent() {
        let settings = ScanSettings {
            methods: vec![Method::Mobius, Method::Rh, Method::RhCorrected],
            ..Default::default()
        };
        let t = scan_vertical(0.75, 1.0, 3.0, 0.5, &settings, &table()).unwrap();
        for row in &t.rows {
            let r = row.sample(Method::Mobius).unwrap().value.unwrap();
            let mut worst: f64 = 0.0;
            for s in &row.samples {
                let d = (s.value.unwrap() - r).norm();
                assert_eq!(s.diff_vs_reference.unwrap(), d);
                if s.method != Method::Mobius {
                    worst = worst.max(d);
                }
            }
            assert_eq!(row.pairwise_abs_diff.unwrap(), worst);
        }
    }

    #[test]
    fn vertical_scan_degenerate_range() {
        let t = scan_vertical(2.0, 1.0, 1.1, 0.1, &ScanSettings::default(), &table()).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.sigma, Some(2.0));
    }

    #[test]
    fn vertical_scan_at_sigma_two_under_envelope() {
        let t = scan_vertical(2.0, 1.0, 10.0, 0.5, &ScanSettings::default(), &table()).unwrap();
        let bound = error_bound(Complex64::new(2.0, 0.0), 1e4).unwrap();
        for row in &t.rows {
            assert!(row.pairwise_abs_diff.unwrap() <= bound);
        }
    }

    #[test]
    fn scan_preconditions() {
        let s = ScanSettings::default();
        let tb = table();
        assert!(scan_real(0.5, 1.0, 0.1, &s, &tb).is_err());
        assert!(scan_real(1.5, 1.0, 0.1, &s, &tb).is_err());
        assert!(scan_real(0.6, 1.0, 0.0, &s, &tb).is_err());
        assert!(scan_vertical(0.5, 1.0, 2.0, 0.1, &s, &tb).is_err());
        assert!(scan_vertical(0.75, 0.0, 2.0, 0.1, &s, &tb).is_err());
        let empty = ScanSettings {
            methods: vec![],
            ..Default::default()
        };
        assert!(scan_real(0.6, 1.0, 0.1, &empty, &tb).is_err());
    }

    #[test]
    fn envelope_onset_search() {
        let t = scan_real(0.6, 0.7, 0.05, &ScanSettings::default(), &table()).unwrap();
        assert_eq!(t.first_exceedance_descending(Method::Rh), None);
        let (re, im) = t.max_component_diffs(Method::Rh);
        assert!(re < 0.5);
        assert_eq!(im, 0.0);
    }

    #[test]
    fn convergence_study_shapes() {
        let tb = table();
        let s = Complex64::new(0.75, 2.0);
        let reference = prime_zeta_mobius(s, 2000).unwrap();
        let rows = convergence_study(s, &[1e2, 1e3, 1e4], &reference, &tb).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| !r.exceeds));
        assert!(convergence_study(s, &[], &reference, &tb)
            .unwrap()
            .is_empty());
        assert!(convergence_study(s, &[1e3, 1e2], &reference, &tb).is_err());
    }

    #[test]
    fn tail_identity_grid() {
        for (s, x) in [
            (Complex64::new(2.0, 0.0), 10.0),
            (Complex64::new(3.0, 1.0), 100.0),
            (Complex64::new(2.0, 0.0), E),
            (Complex64::new(2.0, 5.0), 1e3),
        ] {
            let r = tail_identity_check(s, x).unwrap();
            assert!(r <= 1e-8, "s = {s}, x = {x}: {r}");
        }
        assert!(tail_identity_check(Complex64::new(1.0, 2.0), 10.0).is_err());
        assert!(tail_identity_check(Complex64::new(2.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn jump_across_cut() {
        let tb = table();
        for sigma in [0.6, 0.75, 0.9] {
            let j = branch_jump(sigma, 1e-8, 1e4, &tb).unwrap();
            assert!(
                (j.extrapolated + 2.0 * PI).abs() < 1e-3,
                "σ = {sigma}: {j:?}"
            );
            assert!((j.raw + 2.0 * PI).abs() < 1e-3);
        }
        let j = branch_jump(1.2, 1e-8, 1e4, &tb).unwrap();
        assert!(j.extrapolated.abs() <= 1e-9, "{j:?}");
    }
}
