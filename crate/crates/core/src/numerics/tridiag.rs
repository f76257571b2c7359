//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for the
//! eigenvalues, inverse iteration for the eigenvectors.
//!
//! Knows nothing about the oscillator; it is the yardstick the closed-form
//! spectral decomposition is measured against.

use super::Matrix;
use crate::error::{Error, Result};

const MAX_BISECTION_STEPS: usize = 10_000;
const MAX_INVERSE_ITERATIONS: usize = 8;
/// Eigenvalues closer than this multiple of `‖T‖` are treated as a cluster
/// whose vectors are reorthogonalized against each other.
const CLUSTER_GAP: f64 = 1e-3;

/// Real symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiag {
    diagonal: Vec<f64>,
    offdiagonal: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diagonal: Vec<f64>, offdiagonal: Vec<f64>) -> Result<Self> {
        if diagonal.len() != offdiagonal.len() + 1 {
            return Err(Error::Shape(format!(
                "tridiagonal with {} diagonal entries needs {} off-diagonal entries, got {}",
                diagonal.len(),
                diagonal.len().saturating_sub(1),
                offdiagonal.len()
            )));
        }
        Ok(Self { diagonal, offdiagonal })
    }

    pub fn len(&self) -> usize {
        self.diagonal.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn offdiagonal(&self) -> &[f64] {
        &self.offdiagonal
    }

    pub fn to_dense(&self) -> Matrix<f64> {
        let n = self.len();
        Matrix::from_fn(n, n, |r, c| match r.abs_diff(c) {
            0 => self.diagonal[r],
            1 => self.offdiagonal[r.min(c)],
            _ => 0.0,
        })
    }

    /// `‖T‖_∞`, which equals `‖T‖_1` by symmetry.
    pub fn norm(&self) -> f64 {
        (0..self.len()).map(|i| self.diagonal[i].abs() + self.off(i).abs() + self.off(i + 1).abs()).fold(0.0, f64::max)
    }

    /// Coupling between rows `i - 1` and `i`; zero past either end.
    fn off(&self, i: usize) -> f64 {
        if i == 0 || i > self.offdiagonal.len() {
            0.0
        } else {
            self.offdiagonal[i - 1]
        }
    }

    fn gershgorin(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.len() {
            let radius = self.off(i).abs() + self.off(i + 1).abs();
            lo = lo.min(self.diagonal[i] - radius);
            hi = hi.max(self.diagonal[i] + radius);
        }
        let pad = f64::EPSILON * self.norm().max(1.0) * 4.0;
        (lo - pad, hi + pad)
    }

    fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..self.len())
            .map(|i| {
                let mut y = self.diagonal[i] * v[i];
                if i > 0 {
                    y += self.offdiagonal[i - 1] * v[i - 1];
                }
                if i + 1 < self.len() {
                    y += self.offdiagonal[i] * v[i + 1];
                }
                y
            })
            .collect()
    }
}

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub eigenvalues: Vec<f64>,
    pub vectors: Matrix<f64>,
}

/// Number of eigenvalues of `t` strictly below `shift`, counted as the
/// negative pivots of the `LDLᵀ` factorization of `t - shift·I`.
pub fn sturm_count(t: &SymTridiag, shift: f64) -> usize {
    let pivmin = f64::MIN_POSITIVE * t.offdiagonal.iter().map(|e| e * e).fold(1.0, f64::max);
    let mut count = 0;
    let mut pivot = 1.0;
    for i in 0..t.len() {
        let coupling = t.off(i);
        pivot = (t.diagonal[i] - shift) - if i == 0 { 0.0 } else { coupling * coupling / pivot };
        if pivot.abs() < pivmin {
            pivot = -pivmin;
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

fn bisect(t: &SymTridiag, index: usize, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    for _ in 0..MAX_BISECTION_STEPS {
        let mid = 0.5 * (a + b);
        if b - a <= tol || mid <= a || mid >= b {
            return Ok(mid);
        }
        if sturm_count(t, mid) <= index {
            a = mid;
        } else {
            b = mid;
        }
    }
    Err(Error::NotConverged(format!("bisection for eigenvalue {index} stuck in [{a}, {b}]")))
}

/// Solves `(t - shift·I) x = rhs` by Gaussian elimination with partial
/// pivoting; exactly singular pivots are nudged to `tiny`.
fn shifted_solve(t: &SymTridiag, shift: f64, rhs: &[f64], tiny: f64) -> Vec<f64> {
    let n = t.len();
    // rows of U: main, first and second superdiagonal
    let mut main: Vec<f64> = t.diagonal.iter().map(|d| d - shift).collect();
    let mut sup1: Vec<f64> = (0..n).map(|i| t.off(i + 1)).collect();
    let mut sup2 = vec![0.0; n];
    let mut sub: Vec<f64> = (0..n).map(|i| t.off(i + 1)).collect();
    let mut x = rhs.to_vec();
    for i in 0..n.saturating_sub(1) {
        if sub[i].abs() > main[i].abs() {
            // swap rows i and i+1
            let (m, s1) = (main[i], sup1[i]);
            main[i] = sub[i];
            sup1[i] = main[i + 1];
            sup2[i] = sup1[i + 1];
            sub[i] = m;
            main[i + 1] = s1;
            sup1[i + 1] = 0.0;
            x.swap(i, i + 1);
            let factor = sub[i] / main[i];
            main[i + 1] -= factor * sup1[i];
            sup1[i + 1] -= factor * sup2[i];
            x[i + 1] -= factor * x[i];
        } else {
            if main[i] == 0.0 {
                main[i] = tiny;
            }
            let factor = sub[i] / main[i];
            main[i + 1] -= factor * sup1[i];
            x[i + 1] -= factor * x[i];
        }
    }
    if n > 0 && main[n - 1] == 0.0 {
        main[n - 1] = tiny;
    }
    for i in (0..n).rev() {
        let mut acc = x[i];
        if i + 1 < n {
            acc -= sup1[i] * x[i + 1];
        }
        if i + 2 < n {
            acc -= sup2[i] * x[i + 2];
        }
        x[i] = acc / main[i];
    }
    x
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

/// Deterministic pseudo-random start vector (splitmix64).
fn start_vector(n: usize, seed: u64) -> Vec<f64> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0x2545_F491_4F6C_DD1D);
    (0..n)
        .map(|_| {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^= z >> 31;
            (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        })
        .collect()
}

/// Full eigendecomposition of `t`; eigenvalues are bisected to width `tol`.
pub fn eigh_tridiagonal(t: &SymTridiag, tol: f64) -> Result<EigenResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("bisection tolerance must be positive, got {tol}")));
    }
    let n = t.len();
    let norm = t.norm();
    let (lo, hi) = t.gershgorin();
    let eigenvalues = (0..n).map(|k| bisect(t, k, lo, hi, tol)).collect::<Result<Vec<_>>>()?;

    let tiny = f64::EPSILON * norm.max(f64::MIN_POSITIVE);
    let cluster_gap = CLUSTER_GAP * norm;
    let pertol = 10.0 * f64::EPSILON * norm;
    let accept = 10.0 * tol + 64.0 * f64::EPSILON * norm.max(1.0);

    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut cluster_start = 0;
    let mut prev_shift = f64::NEG_INFINITY;
    for (k, &lambda) in eigenvalues.iter().enumerate() {
        if k > 0 && lambda - eigenvalues[k - 1] > cluster_gap {
            cluster_start = k;
        }
        // separate shifts of (nearly) equal eigenvalues so the solves differ
        let shift = if k > cluster_start && lambda - prev_shift < pertol { prev_shift + pertol } else { lambda };
        prev_shift = shift;

        let mut v = start_vector(n, k as u64);
        normalize(&mut v);
        let mut converged = false;
        for iteration in 0..MAX_INVERSE_ITERATIONS {
            v = shifted_solve(t, shift, &v, tiny);
            for _ in 0..2 {
                for prev in &columns[cluster_start..k] {
                    let overlap = dot(&v, prev);
                    v.iter_mut().zip(prev).for_each(|(x, p)| *x -= overlap * p);
                }
            }
            if normalize(&mut v) == 0.0 {
                v = start_vector(n, (k + n * (iteration + 1)) as u64);
                normalize(&mut v);
                continue;
            }
            if iteration >= 1 {
                let tv = t.apply(&v);
                let residual = tv.iter().zip(&v).map(|(a, b)| (a - lambda * b).abs()).fold(0.0, f64::max);
                if residual <= accept {
                    converged = true;
                    break;
                }
            }
        }
        if !converged {
            return Err(Error::NotConverged(format!("inverse iteration for eigenvalue {k} ({lambda})")));
        }
        columns.push(v);
    }
    let vectors = Matrix::from_fn(n, n, |r, c| columns[c][r]);
    Ok(EigenResult { eigenvalues, vectors })
}
