//! Implementation against independent routes: quadrature, positive-term
//! series, trial division and brute-force factorization.

use std::f64::consts::PI;

use num_complex::Complex64;
use primezeta::oracle::{e1_quadrature_oracle, ei_series_oracle, li_difference_oracle};
use primezeta::specfun::riemann_zeta_with_params;
use primezeta::{
    exp_integral_e1, exp_integral_ei, log_integral, mobius_sieve, prime_zeta_direct,
    prime_zeta_mobius, prime_zeta_rh, riemann_zeta, sieve,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn e1_matches_quadrature_across_the_right_half_plane() {
    for re in [0.01, 0.3, 1.0, 2.0, 3.9, 4.1, 8.0, 25.0] {
        for im in [-30.0, -3.0, -0.2, 0.0, 0.7, 4.0, 12.0] {
            let z = c(re, im);
            let v = exp_integral_e1(z).unwrap();
            let o = e1_quadrature_oracle(z).unwrap();
            assert!((v - o).norm() <= 1e-10 * o.norm(), "z = {z}: {v} vs {o}");
        }
    }
}

#[test]
fn e1_known_points() {
    // quadrature of the defining integral along the real ray
    let o = e1_quadrature_oracle(c(1.0, 0.0)).unwrap();
    assert!((o.re - 0.219_383_934_395_520).abs() < 1e-12);
    assert!((exp_integral_e1(c(1.0, 0.0)).unwrap() - o).norm() < 1e-10);
    let z = c(2.0, 3.0);
    assert!((exp_integral_e1(z).unwrap() - e1_quadrature_oracle(z).unwrap()).norm() < 1e-10);
}

#[test]
fn e1_on_the_cut_equals_minus_ei_minus_i_pi() {
    for x in [0.1, 1.0, 2.5, 3.99, 4.5, 9.0, 20.0] {
        let v = exp_integral_e1(c(-x, 0.0)).unwrap();
        let ei = ei_series_oracle(x).unwrap();
        assert!((v.re + ei).abs() <= 1e-13 * ei.abs().max(1.0), "x = {x}");
        assert_eq!(v.im, -PI);
    }
}

#[test]
fn ei_and_li_match_the_positive_series() {
    assert!((exp_integral_ei(1.0).unwrap() - ei_series_oracle(1.0).unwrap()).abs() < 1e-15);
    for x in [0.01, 0.5, 2.0, 7.0, 15.0, 40.0, 55.0] {
        let a = exp_integral_ei(x).unwrap();
        let b = ei_series_oracle(x).unwrap();
        assert!(
            (a - b).abs() <= 1e-14 * b.abs().max(1.0),
            "x = {x}: {a} vs {b}"
        );
    }
    let li2 = ei_series_oracle(2f64.ln()).unwrap();
    assert!((log_integral(2.0).unwrap() - li2).abs() < 1e-15);
    assert!((li2 - 1.045_163_780_117_492).abs() < 1e-14);
}

#[test]
fn li_differences_match_quadrature() {
    let d = log_integral(1e5).unwrap() - log_integral(1e4).unwrap();
    assert!((d - li_difference_oracle(1e4, 1e5).unwrap()).abs() < 1e-9);
    let d = log_integral(0.9).unwrap() - log_integral(0.2).unwrap();
    assert!((d - li_difference_oracle(0.2, 0.9).unwrap()).abs() < 1e-11);
}

#[test]
fn zeta_is_self_consistent_under_parameter_doubling() {
    let s = c(0.75, 10.0);
    let reference = riemann_zeta_with_params(s, 200, 12).unwrap().value;
    let doubled = riemann_zeta_with_params(s, 400, 12).unwrap().value;
    assert!((reference - doubled).norm() / doubled.norm() <= 1e-11);
    assert!((riemann_zeta(s).unwrap() - doubled).norm() / doubled.norm() <= 1e-11);
}

#[test]
fn zeta_head_against_brute_force_sum() {
    // ζ(s) - Σ_{k≤K} k^{-s} ≈ K^{1-s}/(s-1) for large K; compare at s = 3
    let s = c(3.0, 0.0);
    let k_max = 100_000u32;
    let head: f64 = (1..=k_max).rev().map(|k| f64::from(k).powi(-3)).sum();
    let tail = 0.5 / f64::from(k_max).powi(2) - 0.5 / f64::from(k_max).powi(3);
    assert!((riemann_zeta(s).unwrap().re - (head + tail)).abs() < 1e-15);
}

#[test]
fn sieve_counts_match_trial_division() {
    let trial = (2u64..=10_000)
        .filter(|&n| {
            (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
        })
        .count();
    assert_eq!(trial, 1229);
    assert_eq!(sieve(10_000).unwrap().len(), trial);
}

#[test]
fn mobius_matches_factorization() {
    let mu = mobius_sieve(1000).unwrap();
    for n in 1..=1000u64 {
        let mut m = n;
        let mut sign = 1i8;
        let mut squareful = false;
        for p in 2..=n {
            if m.is_multiple_of(p) {
                m /= p;
                if m.is_multiple_of(p) {
                    squareful = true;
                    break;
                }
                sign = -sign;
            }
            if m == 1 {
                break;
            }
        }
        assert_eq!(mu.mu(n), if squareful { 0 } else { sign }, "n = {n}");
    }
}

#[test]
fn three_routes_to_p_of_two() {
    let table = sieve(1_000_000).unwrap();
    let direct = prime_zeta_direct(c(2.0, 0.0), &table).unwrap();
    let mobius = prime_zeta_mobius(c(2.0, 0.0), 1000).unwrap();
    let rh = prime_zeta_rh(c(2.0, 0.0), 1e4, &table).unwrap();
    // the direct sum undershoots by its tail
    let gap = mobius.value.re - direct.value.re;
    assert!(
        gap > 0.0 && gap <= direct.error_bound,
        "{gap} vs {}",
        direct.error_bound
    );
    assert!((rh.value - mobius.value).norm() <= rh.error_bound);
    assert!((rh.value - mobius.value).norm() <= 9.3e-6);
}

#[test]
fn direct_and_mobius_at_four() {
    let table = sieve(1_000_000).unwrap();
    let d = prime_zeta_direct(c(4.0, 0.0), &table).unwrap().value;
    let m = prime_zeta_mobius(c(4.0, 0.0), 1000).unwrap().value;
    assert!((d - m).norm() <= 1e-12);
}

#[test]
fn continuation_tracks_mobius_off_the_axis() {
    let table = sieve(10_000).unwrap();
    let s = c(0.75, 0.1);
    let rh = prime_zeta_rh(s, 1e4, &table).unwrap();
    let m = prime_zeta_mobius(s, 1000).unwrap();
    assert!((rh.value - m.value).norm() <= rh.error_bound);
    // far tighter than the envelope in practice
    assert!((rh.value - m.value).norm() <= 0.05);
}
