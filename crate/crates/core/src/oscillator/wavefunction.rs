use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use super::eigenbasis::{build_v, SpectralData};
use crate::error::{domain, Error, Result};
use crate::numerics::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Picture {
    Position,
    Momentum,
}

impl FromStr for Picture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "position" => Ok(Picture::Position),
            "momentum" => Ok(Picture::Momentum),
            other => Err(domain(format!("unknown picture `{other}`"))),
        }
    }
}

impl fmt::Display for Picture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Picture::Position => "position",
            Picture::Momentum => "momentum",
        })
    }
}

/// Overlaps of the energy eigenstate `n = j + m` with the position (or
/// momentum) eigenbasis, one `(grid value, amplitude)` pair per grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionTable {
    pub n: usize,
    pub picture: Picture,
    pub entries: Vec<(f64, Complex64)>,
}

impl WavefunctionTable {
    pub fn norm_squared(&self) -> f64 {
        self.entries.iter().map(|(_, a)| a.norm_sqr()).sum()
    }

    pub fn amplitudes(&self) -> Vec<Complex64> {
        self.entries.iter().map(|&(_, a)| a).collect()
    }

    /// `max_q |ψ(-q) - (-1)^n ψ(q)|`, pairing grid points by mirrored index.
    pub fn parity_residual(&self) -> f64 {
        let len = self.entries.len();
        let sign = if self.n.is_multiple_of(2) { 1.0 } else { -1.0 };
        (0..len).map(|i| (self.entries[len - 1 - i].1 - self.entries[i].1 * sign).norm()).fold(0.0, f64::max)
    }
}

fn table_from(data: &SpectralData, n: usize, picture: Picture, amplitudes: &Matrix<Complex64>) -> WavefunctionTable {
    let grid = data.grid();
    let entries = grid.values().iter().enumerate().map(|(l, &q)| (q, amplitudes[(n, l)])).collect();
    WavefunctionTable { n, picture, entries }
}

fn check_state(data: &SpectralData, n: usize) -> Result<()> {
    let max = data.u.rows() - 1;
    if n > max {
        return Err(domain(format!("state index n = {n} outside 0..={max}")));
    }
    Ok(())
}

/// `Ψ_n(q_{l-j}) = U_{n,l}` for every grid point.
pub fn position_wavefunction(data: &SpectralData, n: usize) -> Result<WavefunctionTable> {
    check_state(data, n)?;
    Ok(table_from(data, n, Picture::Position, &data.u.to_complex()))
}

/// `Φ_n(p_{l-j}) = V_{n,l}`; the momentum grid equals the position grid.
pub fn momentum_wavefunction(data: &SpectralData, n: usize) -> Result<WavefunctionTable> {
    check_state(data, n)?;
    Ok(table_from(data, n, Picture::Momentum, &build_v(data)))
}

pub fn wavefunction(data: &SpectralData, n: usize, picture: Picture) -> Result<WavefunctionTable> {
    match picture {
        Picture::Position => position_wavefunction(data, n),
        Picture::Momentum => momentum_wavefunction(data, n),
    }
}

pub fn position_wavefunctions(data: &SpectralData) -> Vec<WavefunctionTable> {
    let u = data.u.to_complex();
    (0..u.rows()).map(|n| table_from(data, n, Picture::Position, &u)).collect()
}

pub fn momentum_wavefunctions(data: &SpectralData) -> Vec<WavefunctionTable> {
    let v = build_v(data);
    (0..v.rows()).map(|n| table_from(data, n, Picture::Momentum, &v)).collect()
}

/// `Φ(p_l) = Σ_k 𝒦_{kl} Ψ(q_k)`.
pub fn apply_transform(transform: &Matrix<Complex64>, psi: &WavefunctionTable) -> Result<WavefunctionTable> {
    let len = psi.entries.len();
    if transform.shape() != (len, len) {
        return Err(Error::Shape(format!("{:?} transform on {len} grid points", transform.shape())));
    }
    let entries = (0..len)
        .map(|l| {
            let amp = (0..len).map(|k| transform[(k, l)] * psi.entries[k].1).sum();
            (psi.entries[l].0, amp)
        })
        .collect();
    Ok(WavefunctionTable { n: psi.n, picture: Picture::Momentum, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RepLabel;
    use crate::oscillator::{build_u, cp_transform};

    const R2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn assert_entries(t: &WavefunctionTable, want: &[(f64, Complex64)]) {
        assert_eq!(t.entries.len(), want.len());
        for ((q, a), (wq, wa)) in t.entries.iter().zip(want) {
            assert!((q - wq).abs() < 1e-15 && (a - wa).norm() < 1e-15, "{:?} vs {want:?}", t.entries);
        }
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn im(x: f64) -> Complex64 {
        Complex64::new(0.0, x)
    }

    #[test]
    fn j1_position_tables() {
        let data = build_u(RepLabel::new(1)).unwrap();
        let tables = position_wavefunctions(&data);
        assert_entries(&tables[0], &[(-1.0, re(0.5)), (0.0, re(R2)), (1.0, re(0.5))]);
        assert_entries(&tables[1], &[(-1.0, re(-R2)), (0.0, re(0.0)), (1.0, re(R2))]);
        assert_entries(&tables[2], &[(-1.0, re(0.5)), (0.0, re(-R2)), (1.0, re(0.5))]);
    }

    #[test]
    fn j1_momentum_ground_state() {
        let data = build_u(RepLabel::new(1)).unwrap();
        let phi = momentum_wavefunction(&data, 0).unwrap();
        assert_entries(&phi, &[(-1.0, im(0.5)), (0.0, im(R2)), (1.0, im(0.5))]);
    }

    #[test]
    fn momentum_phases() {
        // even states purely imaginary, odd states real
        let data = build_u(RepLabel::new(6)).unwrap();
        for t in momentum_wavefunctions(&data) {
            for (_, a) in &t.entries {
                if t.n % 2 == 0 {
                    assert_eq!(a.re, 0.0);
                } else {
                    assert_eq!(a.im, 0.0);
                }
            }
            // Φ_{2n'} = i (-1)^{n'} Ψ_{2n'}
            if t.n % 2 == 0 {
                let psi = position_wavefunction(&data, t.n).unwrap();
                for ((_, a), (_, b)) in t.entries.iter().zip(&psi.entries) {
                    let sign = if (t.n / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    assert!((a.im - sign * b.re).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn out_of_range_state() {
        let data = build_u(RepLabel::new(2)).unwrap();
        assert!(position_wavefunction(&data, 5).is_err());
        assert!(momentum_wavefunction(&data, 4).is_ok());
    }

    #[test]
    fn transform_reproduces_momentum_j1() {
        let data = build_u(RepLabel::new(1)).unwrap();
        let k = cp_transform(&data);
        for (psi, phi) in position_wavefunctions(&data).iter().zip(momentum_wavefunctions(&data)) {
            let mapped = apply_transform(&k, psi).unwrap();
            for ((_, a), (_, b)) in mapped.entries.iter().zip(&phi.entries) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn parity_and_norm() {
        let data = build_u(RepLabel::new(9)).unwrap();
        for t in position_wavefunctions(&data).iter().chain(&momentum_wavefunctions(&data)) {
            assert!((t.norm_squared() - 1.0).abs() < 1e-12);
            assert!(t.parity_residual() < 1e-15);
        }
    }

    #[test]
    fn picture_parsing() {
        assert_eq!("momentum".parse::<Picture>().unwrap(), Picture::Momentum);
        assert!("energy".parse::<Picture>().is_err());
    }
}
