use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Entries with an absolute value, for the max-entry norm.
pub trait Magnitude {
    fn magnitude(&self) -> f64;
}

impl Magnitude for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Magnitude for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, T::zero())
    }

    pub fn diagonal(values: &[T]) -> Self {
        Self::from_fn(values.len(), values.len(), |r, c| if r == c { values[r].clone() } else { T::zero() })
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }
}

impl Matrix<Complex64> {
    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }
}

impl Matrix<f64> {
    pub fn to_complex(&self) -> Matrix<Complex64> {
        self.map(|&x| Complex64::new(x, 0.0))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of {}x{}", self.rows, self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of {}x{}", self.rows, self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Largest entry magnitude; zero for an empty matrix.
pub fn max_abs<T: Magnitude>(a: &Matrix<T>) -> f64 {
    a.data.iter().map(Magnitude::magnitude).fold(0.0, f64::max)
}

pub fn transpose<T: Clone>(a: &Matrix<T>) -> Matrix<T> {
    Matrix::from_fn(a.cols, a.rows, |r, c| a[(c, r)].clone())
}

pub fn matmul<T>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>>
where
    T: Clone + Zero + Mul<Output = T>,
{
    if a.cols != b.rows {
        return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let mut out: Matrix<T> = Matrix::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let lhs = &a.data[r * a.cols + k];
            if lhs.is_zero() {
                continue;
            }
            for c in 0..b.cols {
                let acc = &mut out.data[r * b.cols + c];
                *acc = acc.clone() + lhs.clone() * b.data[k * b.cols + c].clone();
            }
        }
    }
    Ok(out)
}

fn zip_with<T: Clone>(a: &Matrix<T>, b: &Matrix<T>, f: impl Fn(T, T) -> T) -> Result<Matrix<T>> {
    if a.shape() != b.shape() {
        return Err(Error::Shape(format!("{:?} vs {:?}", a.shape(), b.shape())));
    }
    let data = a.data.iter().zip(&b.data).map(|(x, y)| f(x.clone(), y.clone())).collect();
    Ok(Matrix { rows: a.rows, cols: a.cols, data })
}

pub fn add<T: Clone + Add<Output = T>>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    zip_with(a, b, |x, y| x + y)
}

pub fn sub<T: Clone + Sub<Output = T>>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    zip_with(a, b, |x, y| x - y)
}

/// `‖a - b‖_max`.
pub fn max_abs_diff<T>(a: &Matrix<T>, b: &Matrix<T>) -> Result<f64>
where
    T: Clone + Sub<Output = T> + Magnitude,
{
    Ok(max_abs(&sub(a, b)?))
}

/// `‖a·b - c‖_max`.
pub fn product_residual<T>(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>) -> Result<f64>
where
    T: Clone + Zero + Mul<Output = T> + Sub<Output = T> + Magnitude,
{
    max_abs_diff(&matmul(a, b)?, c)
}

/// `a·b - b·a`.
pub fn commutator<T>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>>
where
    T: Clone + Zero + Mul<Output = T> + Sub<Output = T>,
{
    sub(&matmul(a, b)?, &matmul(b, a)?)
}

/// `a·b + b·a`.
pub fn anticommutator<T>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>>
where
    T: Clone + Zero + Mul<Output = T>,
{
    add(&matmul(a, b)?, &matmul(b, a)?)
}
