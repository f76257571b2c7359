use num_traits::{One, Signed, Zero};

use super::series::{binomial, hyp2f1_terminating, pochhammer};
use super::{int, RadicalValue, Rational};
use crate::error::{domain, Result};

/// Arguments of `K_n(x; p, N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukSpec {
    pub degree: u32,
    pub point: u32,
    pub p: Rational,
    pub size: u32,
}

impl KrawtchoukSpec {
    pub fn new(degree: u32, point: u32, p: Rational, size: u32) -> Result<Self> {
        let spec = Self { degree, point, p, size };
        spec.validate()?;
        Ok(spec)
    }

    /// The symmetric case `p = 1/2`.
    pub fn symmetric(degree: u32, point: u32, size: u32) -> Result<Self> {
        Self::new(degree, point, Rational::new(1.into(), 2.into()), size)
    }

    fn validate(&self) -> Result<()> {
        if self.degree > self.size || self.point > self.size {
            return Err(domain(format!(
                "Krawtchouk K_{}({}; p, {}) needs n <= N and x <= N",
                self.degree, self.point, self.size
            )));
        }
        check_probability(&self.p)
    }
}

fn check_probability(p: &Rational) -> Result<()> {
    if !p.is_positive() || *p >= Rational::one() {
        return Err(domain(format!("parameter p = {p} must lie in (0, 1)")));
    }
    Ok(())
}

/// `K_n(x; p, N) = 2F1(-n, -x; -N; 1/p)`.
pub fn krawtchouk(spec: &KrawtchoukSpec) -> Result<Rational> {
    spec.validate()?;
    hyp2f1_terminating(
        -i64::from(spec.degree),
        &int(-i64::from(spec.point)),
        &int(-i64::from(spec.size)),
        &spec.p.recip(),
    )
}

/// Symmetric Krawtchouk polynomial `K_n(x; 1/2, N)`.
pub fn krawtchouk_symmetric(n: u32, x: u32, size: u32) -> Result<Rational> {
    krawtchouk(&KrawtchoukSpec::symmetric(n, x, size)?)
}

/// The weight as it appears next to the orthonormal functions:
/// `binom(N, x) p^x (1-p)^x`. For `p = 1/2` this is `binom(N, x) 4^{-x}`.
///
/// This is the weight under which the closed-form eigenvector matrix of the
/// position operator is orthogonal; it does not make the polynomials
/// orthogonal on their own (see [`weight_standard`]).
pub fn weight_printed(x: u32, p: &Rational, size: u32) -> Result<Rational> {
    check_probability(p)?;
    let q = Rational::one() - p;
    Ok(binomial(size, x)? * num_traits::pow(p * q, x as usize))
}

/// The binomial distribution `binom(N, x) p^x (1-p)^{N-x}`, the measure of
/// Krawtchouk orthogonality.
pub fn weight_standard(x: u32, p: &Rational, size: u32) -> Result<Rational> {
    check_probability(p)?;
    let q = Rational::one() - p;
    let b = binomial(size, x)?;
    Ok(b * num_traits::pow(p.clone(), x as usize) * num_traits::pow(q, (size - x) as usize))
}

/// Squared norm `h(n, N) = (-1)^n n! / (-N)_n · ((1-p)/p)^n`, always positive.
pub fn norm_h(n: u32, p: &Rational, size: u32) -> Result<Rational> {
    check_probability(p)?;
    if n > size {
        return Err(domain(format!("norm h({n}, {size}) needs n <= N")));
    }
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let factorial = pochhammer(&Rational::one(), n);
    let falling = pochhammer(&int(-i64::from(size)), n);
    let odds = (Rational::one() - p) / p;
    Ok(sign * factorial / falling * num_traits::pow(odds, n as usize))
}

/// Orthonormal symmetric Krawtchouk function
/// `K̃_n(x; 1/2, N) = sqrt(w(x, N) / h(n, N)) · K_n(x; 1/2, N)`,
/// built with [`weight_printed`] and held exactly.
pub fn tilde_krawtchouk(n: u32, x: u32, size: u32) -> Result<RadicalValue> {
    let half = Rational::new(1.into(), 2.into());
    let k = krawtchouk_symmetric(n, x, size)?;
    if k.is_zero() {
        return Ok(RadicalValue::zero());
    }
    let sign = if k.is_negative() { -1 } else { 1 };
    let square = weight_printed(x, &half, size)? * &k * &k / norm_h(n, &half, size)?;
    Ok(RadicalValue::new(sign, square).expect("weight and norm are positive"))
}
