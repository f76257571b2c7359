use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Exact real number `sign · √square` with `square` a nonnegative rational.
///
/// `sign` is zero exactly when `square` is zero, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadicalValue {
    sign: i8,
    square: Rational,
}

impl RadicalValue {
    pub fn zero() -> Self {
        Self { sign: 0, square: Rational::zero() }
    }

    pub fn one() -> Self {
        Self { sign: 1, square: Rational::one() }
    }

    /// Builds `sign · √square`. A negative `square` is rejected.
    pub fn new(sign: i8, square: Rational) -> Option<Self> {
        if square.is_negative() {
            return None;
        }
        if square.is_zero() || sign == 0 {
            return Some(Self::zero());
        }
        Some(Self { sign: sign.signum(), square })
    }

    /// `+√square` for a nonnegative rational.
    pub fn sqrt(square: Rational) -> Option<Self> {
        Self::new(1, square)
    }

    /// The radical equal to the rational `value`.
    pub fn from_rational(value: &Rational) -> Self {
        let sign = if value.is_zero() {
            0
        } else if value.is_negative() {
            -1
        } else {
            1
        };
        Self { sign, square: value * value }
    }

    pub fn from_integer(value: i64) -> Self {
        Self::from_rational(&Rational::from_integer(value.into()))
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The exact rational value, when `square` is a perfect rational square.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let numer = exact_isqrt(self.square.numer())?;
        let denom = exact_isqrt(self.square.denom())?;
        let root = Rational::new(numer, denom);
        Some(if self.sign < 0 { -root } else { root })
    }

    /// Nearest binary64 value: `sign · sqrt(square)` with one rounding of
    /// the quotient and one of the square root.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let q = self.square.to_f64().unwrap_or(f64::NAN);
        f64::from(self.sign) * q.sqrt()
    }
}

fn exact_isqrt(value: &BigInt) -> Option<BigInt> {
    if value.is_negative() {
        return None;
    }
    let root = value.sqrt();
    (&root * &root == *value).then_some(root)
}

impl Mul for &RadicalValue {
    type Output = RadicalValue;

    fn mul(self, rhs: &RadicalValue) -> RadicalValue {
        if self.is_zero() || rhs.is_zero() {
            return RadicalValue::zero();
        }
        RadicalValue { sign: self.sign * rhs.sign, square: &self.square * &rhs.square }
    }
}

impl Mul for RadicalValue {
    type Output = RadicalValue;

    fn mul(self, rhs: RadicalValue) -> RadicalValue {
        &self * &rhs
    }
}

impl Neg for RadicalValue {
    type Output = RadicalValue;

    fn neg(self) -> RadicalValue {
        RadicalValue { sign: -self.sign, square: self.square }
    }
}

impl fmt::Display for RadicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.sign, self.to_rational()) {
            (0, _) => write!(f, "0"),
            (_, Some(r)) => write!(f, "{r}"),
            (s, None) => write!(f, "{}√({})", if s < 0 { "-" } else { "" }, self.square),
        }
    }
}
