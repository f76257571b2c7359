//! Exact rational kernel: Pochhammer symbols, terminating hypergeometric
//! series, Krawtchouk polynomials with their weights and norms, and the
//! orthonormal Krawtchouk functions as exact radicals.
//!
//! Nothing here rounds. Conversion to `f64` happens in the model builders.

use num_bigint::BigInt;
use num_rational::BigRational;

pub mod identities;
mod krawtchouk;
mod radical;
mod series;

pub use krawtchouk::{
    krawtchouk, krawtchouk_symmetric, norm_h, tilde_krawtchouk, weight_printed, weight_standard, KrawtchoukSpec,
};
pub use radical::RadicalValue;
pub use series::{binomial, hyp2f1_terminating, hyp3f2_terminating, pochhammer};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// The integer `value` as a rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// The reduced fraction `numer / denom`. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}
