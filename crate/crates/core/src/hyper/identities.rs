//! Exhaustive exact checks of the Krawtchouk and hypergeometric identities
//! behind the closed-form spectral decomposition.
//!
//! Each suite sweeps its full valid index range and compares both sides in
//! exact rational arithmetic; a failure records the offending indices.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::krawtchouk::{krawtchouk, krawtchouk_symmetric, norm_h, KrawtchoukSpec};
use super::series::{binomial, hyp2f1_terminating, hyp3f2_terminating, pochhammer};
use super::{int, ratio, Rational};
use crate::error::Result;

/// Outcome of one exhaustive identity sweep.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn collect(name: &'static str, outcomes: Vec<(usize, Vec<String>)>) -> Self {
        let checked = outcomes.iter().map(|(c, _)| c).sum();
        let failures = outcomes.into_iter().flat_map(|(_, f)| f).collect();
        Self { name, checked, failures }
    }
}

fn k_sym(n: i64, x: i64, size: i64) -> Result<Rational> {
    krawtchouk_symmetric(n as u32, x as u32, size as u32)
}

/// `3F2(-n, n, -x; 1/2, lower; 1)`; symmetric in the sign of `n`.
fn balanced_3f2(n: i64, x: i64, lower: i64) -> Result<Rational> {
    let a = n.abs();
    hyp3f2_terminating(-a, &int(a), &int(-x), &ratio(1, 2), &int(lower), &Rational::one())
}

fn record(failures: &mut Vec<String>, label: String, lhs: Result<Rational>, rhs: Result<Rational>) {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => {}
        (Ok(l), Ok(r)) => failures.push(format!("{label}: {l} != {r}")),
        (Err(e), _) | (_, Err(e)) => failures.push(format!("{label}: {e}")),
    }
}

/// Difference relation raising the size from `2(j-1)` to `2j` at shifted
/// argument:
///
/// `j(2j-1) K_{j+n}(2x+2; 2j) = -(x+1)(2x+1) K_{j+n-1}(2x; 2j-2)
///                             + (j-x-1)(2j-2x-3) K_{j+n-1}(2x+2; 2j-2)`
///
/// over `1 <= j <= j_max`, `0 <= x <= j-1`, `1 <= j+n <= 2j-1`. At `x = j-1`
/// the last coefficient vanishes and its polynomial is evaluated off the
/// lattice, so that term is dropped.
pub fn difference_relation_shifted(j_max: u32) -> IdentityReport {
    let outcomes = (1..=i64::from(j_max))
        .into_par_iter()
        .map(|j| {
            let mut failures = Vec::new();
            let mut checked = 0;
            for x in 0..j {
                for d in 1..2 * j {
                    checked += 1;
                    let lhs = k_sym(d, 2 * x + 2, 2 * j).map(|k| int(j * (2 * j - 1)) * k);
                    let rhs = (|| {
                        let mut r = int(-(x + 1) * (2 * x + 1)) * k_sym(d - 1, 2 * x, 2 * j - 2)?;
                        let c = (j - x - 1) * (2 * j - 2 * x - 3);
                        if c != 0 {
                            r += int(c) * k_sym(d - 1, 2 * x + 2, 2 * j - 2)?;
                        }
                        Ok(r)
                    })();
                    record(&mut failures, format!("j={j} n={} x={x}", d - j), lhs, rhs);
                }
            }
            (checked, failures)
        })
        .collect();
    IdentityReport::collect("krawtchouk difference relation (shifted argument)", outcomes)
}

/// Difference relation lowering the size from `2j` to `2(j-1)`:
///
/// `2(j+n)(j-n) K_{j+n-1}(2x; 2j-2) = j(2j-1) [K_{j+n}(2x; 2j) - K_{j+n}(2x+2; 2j)]`
pub fn difference_relation_lowered(j_max: u32) -> IdentityReport {
    let outcomes = (1..=i64::from(j_max))
        .into_par_iter()
        .map(|j| {
            let mut failures = Vec::new();
            let mut checked = 0;
            for x in 0..j {
                for d in 1..2 * j {
                    checked += 1;
                    let n = d - j;
                    let lhs = k_sym(d - 1, 2 * x, 2 * j - 2).map(|k| int(2 * (j + n) * (j - n)) * k);
                    let rhs = (|| {
                        let diff = k_sym(d, 2 * x, 2 * j)? - k_sym(d, 2 * x + 2, 2 * j)?;
                        Ok(int(j * (2 * j - 1)) * diff)
                    })();
                    record(&mut failures, format!("j={j} n={n} x={x}"), lhs, rhs);
                }
            }
            (checked, failures)
        })
        .collect();
    IdentityReport::collect("krawtchouk difference relation (lowered size)", outcomes)
}

/// Reduction of the symmetric `2F1` at even argument to a balanced `3F2`:
///
/// `2F1(-2x, -j-n; -2j; 2) = (-1)^x binom(j,x)/binom(2j,2x) · 3F2(-n, n, -x; 1/2, -j; 1)`
///
/// over `0 <= j <= j_max`, `0 <= x <= j`, `-j <= n <= j`.
pub fn reduction_to_balanced_3f2(j_max: u32) -> IdentityReport {
    let outcomes = (0..=i64::from(j_max))
        .into_par_iter()
        .map(|j| {
            let mut failures = Vec::new();
            let mut checked = 0;
            for x in 0..=j {
                for n in -j..=j {
                    checked += 1;
                    let lhs = hyp2f1_terminating(-2 * x, &int(-j - n), &int(-2 * j), &int(2));
                    let rhs = (|| {
                        let sign = if x % 2 == 0 { int(1) } else { int(-1) };
                        let ratio = binomial(j as u32, x as u32)? / binomial(2 * j as u32, 2 * x as u32)?;
                        Ok(sign * ratio * balanced_3f2(n, x, -j)?)
                    })();
                    record(&mut failures, format!("j={j} n={n} x={x}"), lhs, rhs);
                }
            }
            (checked, failures)
        })
        .collect();
    IdentityReport::collect("2F1 to balanced 3F2 reduction", outcomes)
}

/// `(x - j + 1) · 3F2(-n, n, -x-1; 1/2, -j+1; 1)`.
///
/// When `x = j - 1` the coefficient and the lower factor `(-j+1)_j` vanish
/// together. The product is then taken as the limit with `j` perturbed in
/// both places: every term but `k = j` is killed, and in that term the two
/// zeros cancel.
fn coefficient_times_lowered_series(n: i64, x: i64, j: i64) -> Result<Rational> {
    let coefficient = x - j + 1;
    if coefficient != 0 {
        return Ok(int(coefficient) * balanced_3f2(n, x + 1, -j + 1)?);
    }
    let a = n.abs();
    if a < j {
        return Ok(Rational::zero());
    }
    let k = j as u32;
    let num = pochhammer(&int(-a), k) * pochhammer(&int(a), k) * pochhammer(&int(-x - 1), k);
    let den = pochhammer(&ratio(1, 2), k) * pochhammer(&int(1), k) * pochhammer(&int(-j + 1), k - 1);
    Ok(num / den)
}

/// `j · 3F2(-n,n,-x-1; 1/2,-j; 1) = (x+1) · 3F2(-n,n,-x; 1/2,-j+1; 1)
///                                  - (x-j+1) · 3F2(-n,n,-x-1; 1/2,-j+1; 1)`
///
/// over `1 <= j <= j_max`, `|n| <= j`, `0 <= x <= j-1`.
pub fn balanced_relation_shifted(j_max: u32) -> IdentityReport {
    let outcomes = (1..=i64::from(j_max))
        .into_par_iter()
        .map(|j| {
            let mut failures = Vec::new();
            let mut checked = 0;
            for x in 0..j {
                for n in -j..=j {
                    checked += 1;
                    let lhs = balanced_3f2(n, x + 1, -j).map(|f| int(j) * f);
                    let rhs =
                        (|| Ok(int(x + 1) * balanced_3f2(n, x, -j + 1)? - coefficient_times_lowered_series(n, x, j)?))(
                        );
                    record(&mut failures, format!("j={j} n={n} x={x}"), lhs, rhs);
                }
            }
            (checked, failures)
        })
        .collect();
    IdentityReport::collect("balanced 3F2 relation (shifted argument)", outcomes)
}

/// `(j^2 - n^2)/j · 3F2(-n,n,-x; 1/2,-j+1; 1) = (x + 1/2) · 3F2(-n,n,-x-1; 1/2,-j; 1)
///                                             - (x - j + 1/2) · 3F2(-n,n,-x; 1/2,-j; 1)`
///
/// over `1 <= j <= j_max`, `|n| <= j`, `0 <= x <= j-1`.
pub fn balanced_relation_lowered(j_max: u32) -> IdentityReport {
    let outcomes = (1..=i64::from(j_max))
        .into_par_iter()
        .map(|j| {
            let mut failures = Vec::new();
            let mut checked = 0;
            for x in 0..j {
                for n in -j..=j {
                    checked += 1;
                    let lhs = balanced_3f2(n, x, -j + 1).map(|f| ratio(j * j - n * n, j) * f);
                    let rhs = (|| {
                        let half = ratio(1, 2);
                        Ok((int(x) + &half) * balanced_3f2(n, x + 1, -j)?
                            - (int(x - j) + &half) * balanced_3f2(n, x, -j)?)
                    })();
                    record(&mut failures, format!("j={j} n={n} x={x}"), lhs, rhs);
                }
            }
            (checked, failures)
        })
        .collect();
    IdentityReport::collect("balanced 3F2 relation (lowered size)", outcomes)
}

/// Orthogonality of symmetric Krawtchouk polynomials restricted to even
/// points, inherited from Hahn polynomials at `α = β = -1/2`:
///
/// `Σ_{x=0}^{N} 2^{1-2N} binom(2N,n) binom(2N,2x) K_n(2x; 2N) K_{n'}(2x; 2N)
///    = δ_{n,n'}`, doubled when `n = n' = N`.
pub fn even_point_orthogonality(n_max: u32) -> IdentityReport {
    let outcomes = (0..=n_max)
        .into_par_iter()
        .map(|size| {
            let mut failures = Vec::new();
            let mut checked = 0;
            let table: Result<Vec<Vec<Rational>>> =
                (0..=size).map(|n| (0..=size).map(|x| krawtchouk_symmetric(n, 2 * x, 2 * size)).collect()).collect();
            let table = match table {
                Ok(t) => t,
                Err(e) => return (1, vec![format!("N={size}: {e}")]),
            };
            let scale = num_traits::pow(ratio(1, 2), (2 * size) as usize) * int(2);
            let weights: Vec<Rational> =
                (0..=size).map(|x| binomial(2 * size, 2 * x).expect("2x <= 2N") * &scale).collect();
            for n in 0..=size {
                let prefactor = binomial(2 * size, n).expect("n <= 2N");
                for m in 0..=size {
                    checked += 1;
                    let sum: Rational = (0..=size as usize)
                        .map(|x| &weights[x] * &table[n as usize][x] * &table[m as usize][x])
                        .sum::<Rational>()
                        * &prefactor;
                    let expected = match (n == m, n == size) {
                        (false, _) => int(0),
                        (true, false) => int(1),
                        (true, true) => int(2),
                    };
                    if sum != expected {
                        failures.push(format!("N={size} n={n} n'={m}: {sum} != {expected}"));
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    IdentityReport::collect("even-point Krawtchouk orthogonality", outcomes)
}

/// `Σ_x weight(x, p, N) K_n(x; p, N) K_m(x; p, N)` for an arbitrary weight.
pub fn orthogonality_sum(
    weight: impl Fn(u32, &Rational, u32) -> Result<Rational>,
    n: u32,
    m: u32,
    p: &Rational,
    size: u32,
) -> Result<Rational> {
    let mut sum = Rational::zero();
    for x in 0..=size {
        let kn = krawtchouk(&KrawtchoukSpec::new(n, x, p.clone(), size)?)?;
        let km = krawtchouk(&KrawtchoukSpec::new(m, x, p.clone(), size)?)?;
        sum += weight(x, p, size)? * kn * km;
    }
    Ok(sum)
}

/// `Σ_x w(x) K_n K_{n'} = h(n) δ_{n,n'}` under `weight` for every
/// `N <= n_max` and every `p` in `ps`.
pub fn krawtchouk_orthogonality(
    weight: fn(u32, &Rational, u32) -> Result<Rational>,
    n_max: u32,
    ps: &[Rational],
) -> IdentityReport {
    let cases: Vec<(Rational, u32)> = ps.iter().flat_map(|p| (0..=n_max).map(move |size| (p.clone(), size))).collect();
    let outcomes = cases
        .into_par_iter()
        .map(|(p, size)| {
            let mut failures = Vec::new();
            let mut checked = 0;
            let table = (0..=size)
                .map(|n| {
                    (0..=size)
                        .map(|x| krawtchouk(&KrawtchoukSpec::new(n, x, p.clone(), size)?))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>();
            let weights = (0..=size).map(|x| weight(x, &p, size)).collect::<Result<Vec<_>>>();
            let (table, weights) = match (table, weights) {
                (Ok(t), Ok(w)) => (t, w),
                (Err(e), _) | (_, Err(e)) => return (1, vec![format!("p={p} N={size}: {e}")]),
            };
            for n in 0..=size as usize {
                let weighted: Vec<Rational> = weights.iter().zip(&table[n]).map(|(w, k)| w * k).collect();
                for (m, row) in table.iter().enumerate().skip(n) {
                    checked += 1;
                    let sum: Rational = weighted.iter().zip(row).map(|(a, b)| a * b).sum();
                    let expected = if n == m { norm_h(n as u32, &p, size).expect("n <= N") } else { Rational::zero() };
                    if sum != expected {
                        failures.push(format!("p={p} N={size} n={n} n'={m}: {sum} != {expected}"));
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    IdentityReport::collect("Krawtchouk orthogonality", outcomes)
}

/// `K_n(x; 1/2, N) = (-1)^n K_n(N - x; 1/2, N)` for all `N <= n_max`.
pub fn symmetric_reflection(n_max: u32) -> IdentityReport {
    let outcomes = (0..=n_max)
        .into_par_iter()
        .map(|size| {
            let mut failures = Vec::new();
            let mut checked = 0;
            for n in 0..=size {
                for x in 0..=size {
                    checked += 1;
                    let lhs = krawtchouk_symmetric(n, x, size);
                    let rhs = krawtchouk_symmetric(n, size - x, size).map(|k| if n % 2 == 0 { k } else { -k });
                    record(&mut failures, format!("N={size} n={n} x={x}"), lhs, rhs);
                }
            }
            (checked, failures)
        })
        .collect();
    IdentityReport::collect("symmetric Krawtchouk reflection", outcomes)
}

/// All exact suites at the given sizes: difference, reduction and balanced
/// relations up to `j_max`, even-point orthogonality up to `N = j_max`,
/// standard orthogonality up to `N = 2 j_max` and reflection up to
/// `N = 2 j_max + 10`.
pub fn all_suites(j_max: u32) -> Vec<IdentityReport> {
    let ps = [ratio(1, 2), ratio(1, 3), ratio(3, 4)];
    vec![
        difference_relation_shifted(j_max),
        difference_relation_lowered(j_max),
        reduction_to_balanced_3f2(j_max),
        balanced_relation_shifted(j_max),
        balanced_relation_lowered(j_max),
        even_point_orthogonality(j_max),
        krawtchouk_orthogonality(super::weight_standard, 2 * j_max, &ps),
        symmetric_reflection(2 * j_max + 10),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::{weight_printed, weight_standard};

    #[test]
    fn small_sweeps_pass() {
        for report in all_suites(4) {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn limit_term_is_needed() {
        // dropping the vanishing coefficient outright breaks the relation at x = j-1, |n| = j
        let j = 3;
        let x = j - 1;
        let n = j;
        let lhs = int(j) * balanced_3f2(n, x + 1, -j).unwrap();
        let naive = int(x + 1) * balanced_3f2(n, x, -j + 1).unwrap();
        assert_ne!(lhs, naive);
        assert_eq!(lhs, naive - coefficient_times_lowered_series(n, x, j).unwrap());
    }

    #[test]
    fn printed_weight_breaks_orthogonality() {
        let half = ratio(1, 2);
        assert_eq!(orthogonality_sum(weight_printed, 0, 1, &half, 2).unwrap(), ratio(15, 16));
        assert_eq!(orthogonality_sum(weight_standard, 0, 1, &half, 2).unwrap(), int(0));
    }
}
