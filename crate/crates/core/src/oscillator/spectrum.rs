use std::fmt;
use std::str::FromStr;

use crate::algebra::RepLabel;
use crate::error::{domain, Error, Result};
use crate::hyper::{int, RadicalValue};

/// The `2j + 1` position eigenvalues `q_k = sign(k) √(|k|(2j - |k|))`,
/// `k = -j, …, j`, in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionGrid {
    rep: RepLabel,
    exact: Vec<RadicalValue>,
    values: Vec<f64>,
}

impl PositionGrid {
    pub fn rep(&self) -> RepLabel {
        self.rep
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn exact(&self) -> &[RadicalValue] {
        &self.exact
    }

    /// `q_k` for `-j <= k <= j`.
    pub fn value(&self, k: i64) -> f64 {
        self.values[self.rep.index_of(k)]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `q_{±(j-k)} = ±√((j-k)(j+k))`, `k = 0, …, j`.
pub fn position_eigenvalues(rep: RepLabel) -> PositionGrid {
    let j = i64::from(rep.j());
    let exact: Vec<RadicalValue> = (-j..=j)
        .map(|k| {
            let square = k.abs() * (2 * j - k.abs());
            RadicalValue::new(k.signum() as i8, int(square)).expect("nonnegative")
        })
        .collect();
    let values = exact.iter().map(RadicalValue::to_f64).collect();
    PositionGrid { rep, exact, values }
}

/// Eigenvalues of `M^q = 2q̂` in ascending order: twice the grid.
pub fn position_matrix_eigenvalues(rep: RepLabel) -> Vec<f64> {
    position_eigenvalues(rep).values().iter().map(|q| 2.0 * q).collect()
}

/// Finite oscillator models whose position spectra are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumModel {
    /// Undeformed su(2): equidistant, `q_{±k} = ±k`.
    Su2,
    /// sl(2|1): `q_{±k} = ±√k`.
    Sl21,
    /// The CP-deformed model.
    Su2Cp,
}

impl SpectrumModel {
    pub const ALL: [SpectrumModel; 3] = [SpectrumModel::Su2, SpectrumModel::Sl21, SpectrumModel::Su2Cp];

    pub fn tag(self) -> &'static str {
        match self {
            SpectrumModel::Su2 => "su2",
            SpectrumModel::Sl21 => "sl21",
            SpectrumModel::Su2Cp => "su2cp",
        }
    }
}

impl FromStr for SpectrumModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "su2" => Ok(SpectrumModel::Su2),
            "sl21" => Ok(SpectrumModel::Sl21),
            "su2cp" => Ok(SpectrumModel::Su2Cp),
            other => Err(domain(format!("unknown model `{other}` (expected su2, sl21 or su2cp)"))),
        }
    }
}

impl fmt::Display for SpectrumModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Ascending position spectrum of `model` in the `(2j+1)`-dimensional
/// representation.
pub fn comparison_spectra(model: SpectrumModel, rep: RepLabel) -> Vec<f64> {
    let j = i64::from(rep.j());
    match model {
        SpectrumModel::Su2 => (-j..=j).map(|k| k as f64).collect(),
        SpectrumModel::Sl21 => (-j..=j).map(|k| k.signum() as f64 * (k.abs() as f64).sqrt()).collect(),
        SpectrumModel::Su2Cp => position_eigenvalues(rep).values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-14)
    }

    #[test]
    fn small_grids() {
        assert_eq!(position_eigenvalues(RepLabel::new(0)).values(), &[0.0]);
        assert_eq!(position_eigenvalues(RepLabel::new(1)).values(), &[-1.0, 0.0, 1.0]);
        let s3 = 3f64.sqrt();
        assert!(close(position_eigenvalues(RepLabel::new(2)).values(), &[-2.0, -s3, 0.0, s3, 2.0]));
    }

    #[test]
    fn grid_j5() {
        let want: Vec<f64> = [-25.0, -24.0, -21.0, -16.0, -9.0, 0.0, 9.0, 16.0, 21.0, 24.0, 25.0]
            .iter()
            .map(|&s: &f64| s.signum() * s.abs().sqrt())
            .collect();
        let grid = position_eigenvalues(RepLabel::new(5));
        assert!(close(grid.values(), &want));
        assert_eq!(grid.value(1), 3.0);
        assert_eq!(grid.value(-5), -5.0);
    }

    #[test]
    fn grid_invariants() {
        for j in 1..=40 {
            let rep = RepLabel::new(j);
            let grid = position_eigenvalues(rep);
            let ji = i64::from(j);
            assert_eq!(grid.value(0), 0.0);
            assert_eq!(grid.value(ji), f64::from(j));
            assert_eq!(grid.value(-ji), -f64::from(j));
            for k in 0..=ji {
                assert_eq!(grid.exact()[rep.index_of(-k)], -grid.exact()[rep.index_of(k)].clone());
            }
            assert!(grid.values().windows(2).all(|w| w[0] < w[1]));
            // gaps shrink towards the edge
            let gaps: Vec<f64> = (0..ji).map(|k| grid.value(k + 1) - grid.value(k)).collect();
            assert!(gaps.windows(2).all(|g| g[1] < g[0]), "j={j}: {gaps:?}");
        }
    }

    #[test]
    fn comparison_models() {
        let rep = RepLabel::new(5);
        let su2 = comparison_spectra(SpectrumModel::Su2, rep);
        assert_eq!(su2, (-5..=5).map(f64::from).collect::<Vec<_>>());
        let sl21 = comparison_spectra(SpectrumModel::Sl21, rep);
        let want: Vec<f64> = (-5i32..=5).map(|k| f64::from(k.signum()) * f64::from(k.abs()).sqrt()).collect();
        assert!(close(&sl21, &want));
        assert_eq!(comparison_spectra(SpectrumModel::Su2Cp, rep), position_eigenvalues(rep).values());
        assert!("su3".parse::<SpectrumModel>().is_err());
        assert_eq!("sl21".parse::<SpectrumModel>().unwrap(), SpectrumModel::Sl21);
    }
}
