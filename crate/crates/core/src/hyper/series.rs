use num_traits::{One, Zero};

use super::{int, Rational};
use crate::error::{domain, Error, Result};

/// Rising factorial `(a)_k = a (a+1) ··· (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Binomial coefficient `N! / (x! (N-x)!)`.
pub fn binomial(n: u32, x: u32) -> Result<Rational> {
    if x > n {
        return Err(domain(format!("binomial({n}, {x}) needs x <= N")));
    }
    let x = x.min(n - x);
    let mut acc = Rational::one();
    for i in 0..x {
        acc = acc * int(i64::from(n - i)) / int(i64::from(i + 1));
    }
    Ok(acc)
}

/// Sums `Σ_k Π(upper)_k / (Π(lower)_k k!) z^k` up to `terms` inclusive,
/// advancing each term from the previous one by its ratio.
///
/// Once a numerator Pochhammer factor hits zero every later term vanishes
/// and the sum stops; a zero denominator factor ahead of a nonzero term is
/// an error.
fn terminating_series(upper: &[Rational], lower: &[Rational], z: &Rational, terms: u32) -> Result<Rational> {
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..terms {
        let shift = int(i64::from(k));
        let mut num = z.clone();
        for a in upper {
            num *= a + &shift;
        }
        if num.is_zero() {
            break;
        }
        let mut den = int(i64::from(k) + 1);
        for b in lower {
            den *= b + &shift;
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator { term: k as usize + 1 });
        }
        term = term * num / den;
        sum += &term;
    }
    Ok(sum)
}

fn terminating_order(a: i64) -> Result<u32> {
    if a > 0 {
        return Err(domain(format!("terminating parameter must be <= 0, got {a}")));
    }
    u32::try_from(-a).map_err(|_| domain(format!("terminating parameter {a} too large")))
}

/// `2F1(a, b; c; z)` for a nonpositive integer `a`.
pub fn hyp2f1_terminating(a: i64, b: &Rational, c: &Rational, z: &Rational) -> Result<Rational> {
    let order = terminating_order(a)?;
    terminating_series(&[int(a), b.clone()], std::slice::from_ref(c), z, order)
}

/// `3F2(a1, a2, a3; b1, b2; z)` for a nonpositive integer `a1`.
pub fn hyp3f2_terminating(
    a1: i64,
    a2: &Rational,
    a3: &Rational,
    b1: &Rational,
    b2: &Rational,
    z: &Rational,
) -> Result<Rational> {
    let order = terminating_order(a1)?;
    terminating_series(&[int(a1), a2.clone(), a3.clone()], &[b1.clone(), b2.clone()], z, order)
}
