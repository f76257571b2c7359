//! The su(2)_CP finite oscillator.
//!
//! A CP-deformed su(2) algebra drives a one-dimensional oscillator whose
//! position operator has a finite, non-equidistant spectrum. Its
//! eigenvectors are assembled from symmetric Krawtchouk polynomials.
//!
//! * [`hyper`]: exact rational kernel for Pochhammer symbols, terminating
//!   hypergeometric series and Krawtchouk functions.
//! * [`algebra`]: actions of the deformed generators on `|j,m⟩` and checks
//!   of the defining relations.
//! * [`oscillator`]: Hamiltonian, position and momentum matrices, the
//!   closed-form eigenbasis, wavefunctions and the CP Krawtchouk transform.
//! * [`numerics`]: dense matrix helpers and an independent tridiagonal
//!   eigensolver used as an oracle.
//! * [`cli`]: the `su2cp` command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod cli;
pub mod error;
pub mod hyper;
pub mod numerics;
pub mod oscillator;
pub mod report;

pub use error::{Error, Result};
