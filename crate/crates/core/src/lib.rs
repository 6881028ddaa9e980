//! Graded Specht modules of cyclotomic Hecke algebras over prime fields.
//!
//! The crate builds the Hecke algebra `H_d^Lambda` on its Ariki-Koike basis,
//! realizes Specht modules as explicit matrices, constructs the homogeneous
//! generators `e(i)`, `y_r`, `psi_r` on them, and checks the graded structure
//! against tableau combinatorics.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod hecke;
pub mod klr;
pub mod linalg;
pub mod report;
pub mod scalars;
pub mod specht;
pub mod suites;

pub use error::{Error, Result};
