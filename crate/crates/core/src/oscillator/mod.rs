//! The finite oscillator built on the CP-deformed algebra.
//!
//! `Ĥ = J0 + j + 1/2`, `q̂ = (J+ + J-)/2` and `p̂ = i(J+ - J-)/2`. The
//! position matrix `M^q = 2q̂` is tridiagonal with zero diagonal, and its
//! eigenvectors are known in closed form (see [`build_u`]).

mod checks;
mod eigenbasis;
mod operators;
mod spectrum;
mod wavefunction;

pub use checks::{align_signs, oracle_decomposition, spectral_checks, Corruption, EIGENVECTOR_TOLERANCE};
pub use eigenbasis::{build_u, build_u_exact, build_v, cp_transform, SpectralData, SPECTRAL_TOLERANCE};
pub use operators::{
    hamiltonian_matrix, heisenberg_residuals, m_k, m_k_exact, m_k_squared, momentum_matrix, momentum_operator,
    position_matrix, position_operator, position_tridiag,
};
pub use spectrum::{
    comparison_spectra, position_eigenvalues, position_matrix_eigenvalues, PositionGrid, SpectrumModel,
};
pub use wavefunction::{
    apply_transform, momentum_wavefunction, momentum_wavefunctions, position_wavefunction, position_wavefunctions,
    wavefunction, Picture, WavefunctionTable,
};

use crate::algebra::RepLabel;
use crate::error::Result;

/// The oscillator in a fixed representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OscillatorModel {
    pub rep: RepLabel,
}

impl OscillatorModel {
    pub fn new(rep: RepLabel) -> Self {
        Self { rep }
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn grid(&self) -> PositionGrid {
        position_eigenvalues(self.rep)
    }

    pub fn spectral_data(&self) -> Result<SpectralData> {
        build_u(self.rep)
    }
}
