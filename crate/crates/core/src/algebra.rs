//! The CP-deformed su(2) algebra on the basis `|j,m⟩`.
//!
//! `J0` and `C` act diagonally, `P` is the parity `(-1)^{j+m}`, and the
//! ladder operators pick their square-root coefficient by the parity of
//! `j + m`. The relations
//!
//! ```text
//! [J0, J±] = ±J±,   [J+, J-] = 2 J0 (CP - 1),   {P, J±} = 0,   [P, J0] = 0,
//! P² = 1,           C central
//! ```
//!
//! only close for integer `j`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hyper::{int, RadicalValue, Rational};
use crate::numerics::{anticommutator, commutator, matmul, max_abs, max_abs_diff, sub, Matrix};
use crate::report::{Check, Report};

/// Representation label `j`: a nonnegative integer, dimension `2j + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepLabel(u32);

impl RepLabel {
    pub fn new(j: u32) -> Self {
        Self(j)
    }

    /// Accepts only finite nonnegative integers; `1.5` is not a label.
    pub fn from_f64(j: f64) -> Result<Self> {
        if !j.is_finite() || j < 0.0 || j.fract() != 0.0 || j > f64::from(u32::MAX) {
            return Err(Error::InvalidLabel(j.to_string()));
        }
        Ok(Self(j as u32))
    }

    pub fn j(self) -> u32 {
        self.0
    }

    pub fn dim(self) -> usize {
        2 * self.0 as usize + 1
    }

    /// Matrix index `j + m` of the basis vector `|j,m⟩`.
    pub fn index_of(self, m: i64) -> usize {
        (m + i64::from(self.0)) as usize
    }

    pub fn m_of(self, index: usize) -> i64 {
        index as i64 - i64::from(self.0)
    }

    /// The basis in matrix order `m = -j, …, j`.
    pub fn basis(self) -> impl Iterator<Item = BasisState> {
        let j = i64::from(self.0);
        (-j..=j).map(move |m| BasisState { j: self.0, m })
    }
}

impl FromStr for RepLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(j) = s.trim().parse::<u32>() {
            return Ok(Self(j));
        }
        let value: f64 = s.trim().parse().map_err(|_| Error::InvalidLabel(s.to_string()))?;
        Self::from_f64(value)
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Basis vector `|j,m⟩` with `-j <= m <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisState {
    j: u32,
    m: i64,
}

impl BasisState {
    pub fn new(j: u32, m: i64) -> Result<Self> {
        if m.unsigned_abs() > u64::from(j) {
            return Err(Error::Domain(format!("|{j},{m}⟩ needs -j <= m <= j")));
        }
        Ok(Self { j, m })
    }

    pub fn j(self) -> u32 {
        self.j
    }

    pub fn m(self) -> i64 {
        self.m
    }

    pub fn rep(self) -> RepLabel {
        RepLabel(self.j)
    }

    /// `j + m` is even.
    pub fn is_even(self) -> bool {
        (i64::from(self.j) + self.m) % 2 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    J0,
    Jplus,
    Jminus,
    C,
    P,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] =
        [GeneratorKind::J0, GeneratorKind::Jplus, GeneratorKind::Jminus, GeneratorKind::C, GeneratorKind::P];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::J0 => "J0",
            GeneratorKind::Jplus => "J+",
            GeneratorKind::Jminus => "J-",
            GeneratorKind::C => "C",
            GeneratorKind::P => "P",
        }
    }
}

/// `coefficient · |target⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTerm {
    pub coefficient: RadicalValue,
    pub target: BasisState,
}

fn term(square: i64, sign: i8, target: BasisState) -> Option<ActionTerm> {
    let coefficient = RadicalValue::new(sign, int(square)).expect("squared coefficients are nonnegative");
    (!coefficient.is_zero()).then_some(ActionTerm { coefficient, target })
}

/// Action of a generator on a basis vector. Vanishing coefficients, and
/// ladder steps that would leave `-j..=j`, give `None`.
pub fn act(g: GeneratorKind, s: BasisState) -> Option<ActionTerm> {
    let j = i64::from(s.j);
    let m = s.m;
    let shifted = |dm: i64| BasisState::new(s.j, m + dm).ok();
    match g {
        GeneratorKind::J0 => Some(ActionTerm { coefficient: RadicalValue::from_integer(m), target: s })
            .filter(|t| !t.coefficient.is_zero()),
        GeneratorKind::C => term(4 * j * j, 1, s),
        GeneratorKind::P => {
            Some(ActionTerm { coefficient: RadicalValue::from_integer(if s.is_even() { 1 } else { -1 }), target: s })
        }
        GeneratorKind::Jplus => {
            let square = if s.is_even() { (j - m) * (j - m - 1) } else { (j + m) * (j + m + 1) };
            term(square, 1, shifted(1)?)
        }
        GeneratorKind::Jminus => {
            let square = if s.is_even() { (j + m) * (j + m - 1) } else { (j - m) * (j - m + 1) };
            term(square, 1, shifted(-1)?)
        }
    }
}

/// Matrix of a generator in the basis `m = -j, …, j`; column `j + m` holds
/// the image of `|j,m⟩`.
pub fn generator_matrix(g: GeneratorKind, rep: RepLabel) -> Matrix<RadicalValue> {
    let n = rep.dim();
    let mut out = Matrix::filled(n, n, RadicalValue::zero());
    for (col, state) in rep.basis().enumerate() {
        if let Some(t) = act(g, state) {
            out[(rep.index_of(t.target.m), col)] = t.coefficient;
        }
    }
    out
}

/// Floating-point image of [`generator_matrix`].
pub fn generator_matrix_f64(g: GeneratorKind, rep: RepLabel) -> Matrix<f64> {
    generator_matrix(g, rep).map(RadicalValue::to_f64)
}

fn coefficient(g: GeneratorKind, rep: RepLabel, from: i64, to: i64) -> RadicalValue {
    BasisState::new(rep.j(), from)
        .ok()
        .and_then(|s| act(g, s))
        .filter(|t| t.target.m == to)
        .map_or_else(RadicalValue::zero, |t| t.coefficient)
}

/// `[J+, J-]` on `|j,m⟩` in exact arithmetic against `2m(2j(-1)^{j+m} - 1)`.
/// Returns the indices `m` where they differ.
pub fn exact_ladder_commutator_mismatches(rep: RepLabel) -> Vec<i64> {
    let j = i64::from(rep.j());
    rep.basis()
        .filter_map(|s| {
            let m = s.m;
            let down_up =
                &coefficient(GeneratorKind::Jplus, rep, m - 1, m) * &coefficient(GeneratorKind::Jminus, rep, m, m - 1);
            let up_down =
                &coefficient(GeneratorKind::Jminus, rep, m + 1, m) * &coefficient(GeneratorKind::Jplus, rep, m, m + 1);
            let lhs = match (down_up.to_rational(), up_down.to_rational()) {
                (Some(a), Some(b)) => a - b,
                _ => return Some(m),
            };
            let parity = if s.is_even() { 1 } else { -1 };
            let rhs: Rational = int(2 * m * (2 * j * parity - 1));
            (lhs != rhs).then_some(m)
        })
        .collect()
}

/// Checks every defining relation as a matrix identity in `f64` against
/// `tol` (max-entry norm), plus the ladder commutator exactly.
pub fn verify_defining_relations(rep: RepLabel, tol: f64) -> Report {
    use GeneratorKind::*;
    let n = rep.dim();
    let [j0, jp, jm, c, p] = GeneratorKind::ALL.map(|g| generator_matrix_f64(g, rep));
    let id = Matrix::<f64>::identity(n);
    let scaled = |a: &Matrix<f64>, s: f64| a.map(|x| s * x);
    let residual = |r: crate::Result<f64>| r.unwrap_or(f64::INFINITY);

    let mut report = Report::default();
    let mut add = |name: &str, r: f64| report.push(Check::residual(name, r, tol));

    add("[J0,J+] = J+", residual(commutator(&j0, &jp).and_then(|x| max_abs_diff(&x, &jp))));
    add("[J0,J-] = -J-", residual(commutator(&j0, &jm).and_then(|x| max_abs_diff(&x, &scaled(&jm, -1.0)))));
    let deformed = matmul(&c, &p).and_then(|cp| sub(&cp, &id)).and_then(|cp1| matmul(&scaled(&j0, 2.0), &cp1));
    add(
        "[J+,J-] = 2 J0 (CP - 1)",
        residual(commutator(&jp, &jm).and_then(|lhs| deformed.and_then(|rhs| max_abs_diff(&lhs, &rhs)))),
    );
    add("{P,J+} = 0", residual(anticommutator(&p, &jp).map(|x| max_abs(&x))));
    add("{P,J-} = 0", residual(anticommutator(&p, &jm).map(|x| max_abs(&x))));
    add("[P,J0] = 0", residual(commutator(&p, &j0).map(|x| max_abs(&x))));
    add("P^2 = 1", residual(matmul(&p, &p).and_then(|x| max_abs_diff(&x, &id))));
    for (g, x) in [(J0, &j0), (Jplus, &jp), (Jminus, &jm), (P, &p)] {
        add(&format!("[C,{}] = 0", g.name()), residual(commutator(&c, x).map(|m| max_abs(&m))));
    }
    let mismatches = exact_ladder_commutator_mismatches(rep);
    report.push(Check::exact("[J+,J-] = 2 J0 (CP - 1) exact diagonal", mismatches.is_empty()));
    report
}

/// `J-` is the transpose of `J+`, entry by entry in exact arithmetic.
pub fn lowering_is_transpose_of_raising(rep: RepLabel) -> bool {
    let jp = generator_matrix(GeneratorKind::Jplus, rep);
    let jm = generator_matrix(GeneratorKind::Jminus, rep);
    let n = rep.dim();
    (0..n).all(|r| (0..n).all(|c| jp[(r, c)] == jm[(c, r)]))
}
