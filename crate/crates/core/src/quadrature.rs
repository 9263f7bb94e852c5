//! Globally adaptive Gauss–Kronrod (7, 15) quadrature on finite intervals.
//!
//! Integrands are complex valued; real integrands go through
//! [`integrate_real`]. The interval with the largest error estimate is bisected
//! until the summed estimate meets `max(abs_tol, rel_tol·|I|)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the 7-point rule living on XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-15,
            rel_tol: 1e-13,
            max_subdivisions: 4000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Integral {
    pub value: Complex64,
    /// Sum of per-panel |K15 - G7| estimates.
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
    }
}

/// Integrates a complex-valued `f` over `[a, b]`.
pub fn integrate<F>(f: F, a: f64, b: f64, opts: &QuadratureOptions) -> Result<Integral>
where
    F: Fn(f64) -> Complex64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("quadrature limits must be finite"));
    }
    if a == b {
        return Ok(Integral {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    let mut heap = BinaryHeap::new();
    let first = gauss_kronrod(&f, a, b);
    let mut total = first.value;
    let mut error = first.error;
    let mut evaluations = 15;
    heap.push(first);

    for _ in 0..opts.max_subdivisions {
        if !total.is_finite() {
            return Err(Error::NonConvergence(
                "integrand produced a non-finite value".into(),
            ));
        }
        if error <= opts.abs_tol.max(opts.rel_tol * total.norm()) {
            return Ok(Integral {
                value: total,
                error_estimate: error,
                evaluations,
            });
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval collapsed to adjacent floats
            break;
        }
        let left = gauss_kronrod(&f, worst.a, mid);
        let right = gauss_kronrod(&f, mid, worst.b);
        evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed drift accumulated by the incremental updates.
    let resummed: Complex64 = heap.iter().map(|p| p.value).sum();
    let error: f64 = heap.iter().map(|p| p.error).sum();
    if error <= opts.abs_tol.max(opts.rel_tol * resummed.norm()) {
        return Ok(Integral {
            value: resummed,
            error_estimate: error,
            evaluations,
        });
    }
    Err(Error::NonConvergence(format!(
        "adaptive quadrature on [{a}, {b}] stalled with error estimate {error:e}"
    )))
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<F>(f: F, a: f64, b: f64, opts: &QuadratureOptions) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let r = integrate(|t| Complex64::new(f(t), 0.0), a, b, opts)?;
    Ok((r.value.re, r.error_estimate))
}
