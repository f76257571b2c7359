use num_complex::Complex64;

use crate::algebra::RepLabel;
use crate::error::{domain, Result};
use crate::hyper::{int, RadicalValue};
use crate::numerics::{commutator, max_abs_diff, Matrix, SymTridiag};

/// `M_k²`: `k(k+1)` for odd `k`, `(2j-k)(2j-k-1)` for even `k`.
pub fn m_k_squared(k: usize, rep: RepLabel) -> Result<u64> {
    let two_j = 2 * u64::from(rep.j());
    let k64 = k as u64;
    if k64 >= two_j {
        return Err(domain(format!("M_{k} needs 0 <= k <= 2j-1 = {}", two_j as i64 - 1)));
    }
    Ok(if k % 2 == 1 { k64 * (k64 + 1) } else { (two_j - k64) * (two_j - k64 - 1) })
}

/// Exact off-diagonal entry `M_k` of the position matrix.
pub fn m_k_exact(k: usize, rep: RepLabel) -> Result<RadicalValue> {
    let square = m_k_squared(k, rep)?;
    Ok(RadicalValue::sqrt(int(square as i64)).expect("nonnegative"))
}

pub fn m_k(k: usize, rep: RepLabel) -> Result<f64> {
    Ok((m_k_squared(k, rep)? as f64).sqrt())
}

fn off_diagonal(rep: RepLabel) -> Vec<f64> {
    (0..rep.dim() - 1).map(|k| m_k(k, rep).expect("k < 2j")).collect()
}

/// `M^q = 2q̂` as a symmetric tridiagonal matrix with zero diagonal.
pub fn position_tridiag(rep: RepLabel) -> SymTridiag {
    SymTridiag::new(vec![0.0; rep.dim()], off_diagonal(rep)).expect("consistent sizes")
}

/// Dense `M^q = 2q̂`.
pub fn position_matrix(rep: RepLabel) -> Matrix<f64> {
    position_tridiag(rep).to_dense()
}

/// Dense `M^p = 2i·p̂`: `M_k` above the diagonal, `-M_k` below.
pub fn momentum_matrix(rep: RepLabel) -> Matrix<f64> {
    let off = off_diagonal(rep);
    let n = rep.dim();
    Matrix::from_fn(n, n, |r, c| {
        if c == r + 1 {
            off[r]
        } else if r == c + 1 {
            -off[c]
        } else {
            0.0
        }
    })
}

/// `Ĥ = J0 + j + 1/2 = diag(1/2, 3/2, …, 2j + 1/2)`.
pub fn hamiltonian_matrix(rep: RepLabel) -> Matrix<f64> {
    let levels: Vec<f64> = (0..rep.dim()).map(|n| n as f64 + 0.5).collect();
    Matrix::diagonal(&levels)
}

/// `q̂ = M^q / 2` as a complex matrix.
pub fn position_operator(rep: RepLabel) -> Matrix<Complex64> {
    position_matrix(rep).map(|&x| Complex64::new(0.5 * x, 0.0))
}

/// `p̂ = M^p / (2i)`.
pub fn momentum_operator(rep: RepLabel) -> Matrix<Complex64> {
    momentum_matrix(rep).map(|&x| Complex64::new(0.0, -0.5 * x))
}

/// Max-entry residuals of `[Ĥ, q̂] + i p̂` and `[Ĥ, p̂] - i q̂`.
pub fn heisenberg_residuals(rep: RepLabel) -> (f64, f64) {
    let h = hamiltonian_matrix(rep).to_complex();
    let q = position_operator(rep);
    let p = momentum_operator(rep);
    let i = Complex64::i();
    let hq = commutator(&h, &q).expect("square");
    let hp = commutator(&h, &p).expect("square");
    let r1 = max_abs_diff(&hq, &p.map(|&x| -i * x)).expect("same shape");
    let r2 = max_abs_diff(&hp, &q.map(|&x| i * x)).expect("same shape");
    (r1, r2)
}
