//! Dense matrix helpers and the independent tridiagonal eigensolver oracle.

mod matrix;
mod tridiag;

pub use matrix::{
    add, anticommutator, commutator, matmul, max_abs, max_abs_diff, product_residual, sub, transpose, Magnitude, Matrix,
};
pub use tridiag::{eigh_tridiagonal, sturm_count, EigenResult, SymTridiag};
