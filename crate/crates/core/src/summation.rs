//! Compensated summation for long prime sums.

use num_complex::Complex64;

/// Neumaier's variant of Kahan summation on a single binary64 accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Component-wise compensated accumulator for complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexCompensatedSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexCompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

impl FromIterator<Complex64> for ComplexCompensatedSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_lost_by_naive_sum() {
        let mut acc = CompensatedSum::new();
        let mut naive = 0.0;
        for v in [1.0, 1e100, 1.0, -1e100] {
            acc.add(v);
            naive += v;
        }
        assert_eq!(acc.value(), 2.0);
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn harmonic_tail_matches_reverse_order() {
        let forward: CompensatedSum = (1..=1_000_000).fold(CompensatedSum::new(), |mut a, k| {
            a.add(1.0 / k as f64);
            a
        });
        let reverse = (1..=1_000_000).rev().map(|k| 1.0 / k as f64).sum::<f64>();
        assert!((forward.value() - reverse).abs() < 1e-13);
    }

    #[test]
    fn complex_sum_collects() {
        let acc: ComplexCompensatedSum = (0..10)
            .map(|k| Complex64::new(k as f64, -(k as f64)))
            .collect();
        assert_eq!(acc.value(), Complex64::new(45.0, -45.0));
    }
}
