//! Prime zeta function P(s) = Σ_p p^{-s} for Re(s) > 1/2.
//!
//! The main evaluator continues P(s) past the line of absolute convergence by
//! adding the complex exponential integral E1((s-1)·log x) to the prime sum
//! truncated at x. Three other evaluators are provided for cross-validation:
//!
//! - [`prime_zeta_direct`]: the plain prime sum, Re(s) > 1 only.
//! - [`prime_zeta_mobius`]: Möbius inversion over log ζ(ns), the reference
//!   used for comparisons inside the critical strip.
//! - [`prime_zeta_rh_corrected`]: the continuation with the boundary term
//!   (π(x) - li(x))/x^s subtracted.
//!
//! The continuation is exact only as x → ∞ and its finite-x deviation is of
//! order x^{1/2-Re(s)}·log x under the Riemann hypothesis; [`error_bound`]
//! returns that envelope with unit constant.
//!
//! ```
//! use primezeta::{prime_zeta_rh, sieve, ComplexValue};
//!
//! let table = sieve(10_000).unwrap();
//! let eval = prime_zeta_rh(ComplexValue::new(2.0, 0.0), 1e4, &table).unwrap();
//! assert!((eval.value.re - 0.452247420041065).abs() < eval.error_bound);
//! ```

// Constants carry every digit of their source value, and `!(x > 0.0)` style
// checks are used on purpose so that NaN falls into the rejecting branch.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod error;
pub mod oracle;
pub mod primes;
pub mod primezeta;
pub mod quadrature;
pub mod specfun;
pub mod summation;
pub mod verify;

pub use analysis::{
    convergence_study, scan_real, scan_vertical, tail_identity_check, ConvergenceRow, ScanAxis,
    ScanRow, ScanSample, ScanTable,
};
pub use error::{Error, Result};
pub use primes::{mobius_sieve, prime_count, sieve, MobiusTable, PrimeTable};
pub use primezeta::{
    error_bound, prime_zeta_direct, prime_zeta_mobius, prime_zeta_rh, prime_zeta_rh_corrected,
    Evaluation, Method, Note,
};
pub use specfun::{
    exp_integral_e1, exp_integral_ei, log_integral, riemann_zeta, ComplexValue, SeriesControl,
};
