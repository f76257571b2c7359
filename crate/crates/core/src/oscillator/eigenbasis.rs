//! Closed-form eigenvectors of the position operator.
//!
//! Row `2i` of `U` samples the orthonormal symmetric Krawtchouk function
//! `K̃_{2i}(·; 1/2, 2j)` and is symmetric about the middle column; row
//! `2i+1` samples `K̃_{2i}(·; 1/2, 2j-2)` and is antisymmetric, with a zero
//! in the middle column. Column `l` is the eigenvector for the `l`-th
//! smallest eigenvalue `2 q_{l-j}`.

use num_complex::Complex64;

use super::operators::position_matrix;
use super::spectrum::{position_matrix_eigenvalues, PositionGrid};
use crate::algebra::RepLabel;
use crate::error::{Error, Result};
use crate::hyper::{ratio, tilde_krawtchouk, RadicalValue, Rational};
use crate::numerics::{matmul, max_abs_diff, transpose, Matrix};

/// Tolerance every [`SpectralData`] is checked against before it is handed out.
pub const SPECTRAL_TOLERANCE: f64 = 1e-10;

/// `2^{half_exponent / 2}` as an exact radical.
fn sqrt_two_power(half_exponent: i64) -> RadicalValue {
    let square: Rational = if half_exponent >= 0 {
        ratio(1, 1) * num_traits::pow(ratio(2, 1), half_exponent as usize)
    } else {
        num_traits::pow(ratio(1, 2), (-half_exponent) as usize)
    };
    RadicalValue::sqrt(square).expect("positive")
}

fn parity_sign(i: i64) -> RadicalValue {
    RadicalValue::from_integer(if i % 2 == 0 { 1 } else { -1 })
}

/// The eigenvector matrix `U` with exact entries.
pub fn build_u_exact(rep: RepLabel) -> Result<Matrix<RadicalValue>> {
    let j = i64::from(rep.j());
    let n = rep.dim();
    let mut u = Matrix::filled(n, n, RadicalValue::zero());
    if j == 0 {
        u[(0, 0)] = RadicalValue::one();
        return Ok(u);
    }
    let col = |c: i64| c as usize;
    let size = 2 * j as u32;

    for i in 0..=j {
        let row = col(2 * i);
        let sign = parity_sign(i);
        let k_tilde = |x: i64| tilde_krawtchouk(2 * i as u32, x as u32, size);
        for k in 1..j {
            let value = &(&sign * &sqrt_two_power(2 * (k - j))) * &k_tilde(k)?;
            u[(row, col(j - k))] = value.clone();
            u[(row, col(j + k))] = value;
        }
        let edge = &(&sign * &sqrt_two_power(-1)) * &k_tilde(j)?;
        u[(row, 0)] = edge.clone();
        u[(row, col(2 * j))] = edge;
        u[(row, col(j))] = &(&sign * &sqrt_two_power(1 - 2 * j)) * &k_tilde(0)?;
    }

    for i in 0..j {
        let row = col(2 * i + 1);
        let sign = parity_sign(i + 1);
        let k_tilde = |x: i64| tilde_krawtchouk(2 * i as u32, x as u32, size - 2);
        for k in 1..j {
            let value = &(&sign * &sqrt_two_power(2 * (k - j))) * &k_tilde(k - 1)?;
            u[(row, col(j - k))] = value.clone();
            u[(row, col(j + k))] = -value;
        }
        let edge = &(&sign * &sqrt_two_power(-1)) * &k_tilde(j - 1)?;
        u[(row, 0)] = edge.clone();
        u[(row, col(2 * j))] = -edge;
    }
    Ok(u)
}

/// Eigenvalues of `M^q` (ascending) with the matching eigenvector matrix.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub rep: RepLabel,
    pub eigenvalues: Vec<f64>,
    pub u: Matrix<f64>,
}

impl SpectralData {
    /// Assembles `U` and the eigenvalues without checking them.
    pub fn assemble(rep: RepLabel) -> Result<Self> {
        let u = build_u_exact(rep)?.map(RadicalValue::to_f64);
        Ok(Self { rep, eigenvalues: position_matrix_eigenvalues(rep), u })
    }

    /// `‖UᵀU - I‖_max`.
    pub fn orthogonality_residual(&self) -> f64 {
        let gram = matmul(&transpose(&self.u), &self.u).expect("square");
        max_abs_diff(&gram, &Matrix::identity(self.u.rows())).expect("square")
    }

    /// `‖U Uᵀ - I‖_max`.
    pub fn row_orthogonality_residual(&self) -> f64 {
        let gram = matmul(&self.u, &transpose(&self.u)).expect("square");
        max_abs_diff(&gram, &Matrix::identity(self.u.rows())).expect("square")
    }

    /// `‖M U - U D‖_max` for a given position matrix `M`.
    pub fn eigen_residual_against(&self, mq: &Matrix<f64>) -> Result<f64> {
        let lhs = matmul(mq, &self.u)?;
        let rhs = matmul(&self.u, &Matrix::diagonal(&self.eigenvalues))?;
        max_abs_diff(&lhs, &rhs)
    }

    pub fn eigen_residual(&self) -> f64 {
        self.eigen_residual_against(&position_matrix(self.rep)).expect("square")
    }

    /// The position grid paired with the columns: column `l` ↔ `q_{l-j}`.
    pub fn grid(&self) -> PositionGrid {
        super::spectrum::position_eigenvalues(self.rep)
    }
}

/// `U` and the eigenvalues of `M^q`, verified to satisfy `UᵀU = I` and
/// `M^q U = U D^q` within [`SPECTRAL_TOLERANCE`].
pub fn build_u(rep: RepLabel) -> Result<SpectralData> {
    let data = SpectralData::assemble(rep)?;
    for (name, residual) in
        [("U orthogonality", data.orthogonality_residual()), ("MUUD residual", data.eigen_residual())]
    {
        if !(residual < SPECTRAL_TOLERANCE) {
            return Err(Error::Verification { name: name.into(), residual, tol: SPECTRAL_TOLERANCE });
        }
    }
    Ok(data)
}

/// `i^k` for `k >= 0`.
fn i_power(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `V_{k,l} = i^{k+1} U_{k,l}`: eigenvectors of the momentum operator.
pub fn build_v(data: &SpectralData) -> Matrix<Complex64> {
    let u = &data.u;
    Matrix::from_fn(u.rows(), u.cols(), |k, l| i_power(k + 1) * u[(k, l)])
}

/// The CP Krawtchouk transform `𝒦 = Uᵀ V`, mapping position wavefunctions
/// to momentum wavefunctions.
pub fn cp_transform(data: &SpectralData) -> Matrix<Complex64> {
    matmul(&transpose(&data.u).to_complex(), &build_v(data)).expect("square")
}
