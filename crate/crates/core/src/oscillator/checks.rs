//! Float-level verification of the closed-form model against the
//! independent tridiagonal eigensolver.

use num_complex::Complex64;

use super::eigenbasis::{build_v, cp_transform, SpectralData};
use super::operators::{heisenberg_residuals, momentum_operator, position_matrix, position_tridiag};
use super::spectrum::position_matrix_eigenvalues;
use super::wavefunction::{apply_transform, momentum_wavefunctions, position_wavefunctions};
use crate::algebra::RepLabel;
use crate::error::Result;
use crate::numerics::{eigh_tridiagonal, matmul, max_abs_diff, EigenResult, Matrix, SymTridiag};
use crate::report::{Check, Report};

/// Per-entry agreement required between closed-form and oracle eigenvectors.
pub const EIGENVECTOR_TOLERANCE: f64 = 1e-8;
/// Bisection width handed to the oracle; bisection stops earlier at
/// floating-point resolution.
const ORACLE_BISECTION_WIDTH: f64 = 1e-15;

/// Solves `M^q` with the oracle eigensolver.
pub fn oracle_decomposition(rep: RepLabel) -> Result<EigenResult> {
    eigh_tridiagonal(&position_tridiag(rep), ORACLE_BISECTION_WIDTH)
}

/// Flips each oracle column to point the same way as the matching column of `u`.
pub fn align_signs(u: &Matrix<f64>, vectors: &Matrix<f64>) -> Matrix<f64> {
    let n = u.rows();
    let signs: Vec<f64> = (0..u.cols())
        .map(|c| {
            let overlap: f64 = (0..n).map(|r| u[(r, c)] * vectors[(r, c)]).sum();
            if overlap < 0.0 {
                -1.0
            } else {
                1.0
            }
        })
        .collect();
    Matrix::from_fn(vectors.rows(), vectors.cols(), |r, c| signs[c] * vectors[(r, c)])
}

/// Replacement of one off-diagonal entry `M_k` of the position matrix.
/// Used to exercise the failure path of the checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Corruption {
    pub k: usize,
    pub value: f64,
}

/// Every float-level spectral identity of the model at representation `rep`.
///
/// `corrupt` swaps one `M_k` in the position matrix the checks are run
/// against, while the closed form stays untouched.
pub fn spectral_checks(rep: RepLabel, tol: f64, corrupt: Option<Corruption>) -> Result<Report> {
    let j = rep.j();
    let tag = |name: &str| format!("{name} (j={j})");
    let mut report = Report::default();
    let data = SpectralData::assemble(rep)?;
    let n = rep.dim();

    let mut tridiag = position_tridiag(rep);
    let mut mq = position_matrix(rep);
    if let Some(Corruption { k, value }) = corrupt {
        if k + 1 < n {
            let mut off = tridiag.offdiagonal().to_vec();
            off[k] = value;
            tridiag = SymTridiag::new(tridiag.diagonal().to_vec(), off)?;
            mq[(k, k + 1)] = value;
            mq[(k + 1, k)] = value;
        }
    }

    report.push(Check::residual(tag("U orthogonality"), data.orthogonality_residual(), tol));
    report.push(Check::residual(tag("U row orthogonality"), data.row_orthogonality_residual(), tol));
    report.push(Check::residual(tag("MUUD residual"), data.eigen_residual_against(&mq)?, tol));

    let oracle = eigh_tridiagonal(&tridiag, ORACLE_BISECTION_WIDTH)?;
    let closed_form = position_matrix_eigenvalues(rep);
    let eig_gap = oracle.eigenvalues.iter().zip(&closed_form).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    report.push(Check::residual(tag("eigenvalues vs oracle"), eig_gap, tol));
    let listed_gap = data.eigenvalues.iter().zip(&closed_form).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    report.push(Check::residual(tag("eigenvalues vs closed form"), listed_gap, tol));

    let aligned = align_signs(&data.u, &oracle.vectors);
    let vec_gap = max_abs_diff(&aligned, &data.u)?;
    report.push(Check::residual(tag("eigenvectors vs oracle"), vec_gap, EIGENVECTOR_TOLERANCE.max(tol)));

    let (hq, hp) = heisenberg_residuals(rep);
    report.push(Check::residual(tag("Heisenberg [H,q] = -i p"), hq, tol));
    report.push(Check::residual(tag("Heisenberg [H,p] = i q"), hp, tol));

    let v = build_v(&data);
    let grid: Vec<Complex64> = data.grid().values().iter().map(|&q| Complex64::new(q, 0.0)).collect();
    let pv = matmul(&momentum_operator(rep), &v)?;
    let vq = matmul(&v, &Matrix::diagonal(&grid))?;
    report.push(Check::residual(tag("momentum eigen-relation"), max_abs_diff(&pv, &vq)?, tol));
    let id = Matrix::<Complex64>::identity(n);
    report.push(Check::residual(tag("V unitarity"), max_abs_diff(&matmul(&v.adjoint(), &v)?, &id)?, tol));

    let k = cp_transform(&data);
    report.push(Check::residual(tag("transform unitarity"), max_abs_diff(&matmul(&k.adjoint(), &k)?, &id)?, tol));

    let psis = position_wavefunctions(&data);
    let phis = momentum_wavefunctions(&data);
    let mut transform_gap = 0.0f64;
    let mut norm_gap = 0.0f64;
    let mut parity_gap = 0.0f64;
    for (psi, phi) in psis.iter().zip(&phis) {
        let mapped = apply_transform(&k, psi)?;
        for ((_, a), (_, b)) in mapped.entries.iter().zip(&phi.entries) {
            transform_gap = transform_gap.max((a - b).norm());
        }
        for t in [psi, phi] {
            norm_gap = norm_gap.max((t.norm_squared() - 1.0).abs());
            parity_gap = parity_gap.max(t.parity_residual());
        }
    }
    report.push(Check::residual(tag("transform maps position to momentum"), transform_gap, tol));
    report.push(Check::residual(tag("wavefunction normalization"), norm_gap, tol));
    report.push(Check::residual(tag("wavefunction parity"), parity_gap, tol));
    Ok(report)
}
