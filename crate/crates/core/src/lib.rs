//! Complexified spacetime algebra (CSTA) with its Dirac-Pauli matrix
//! representation, and verified multivector constructions of su(3)
//! generator sets.
//!
//! The layers build on each other:
//!
//! - [`blade`]: the 16 basis blades of G(1,3) and their signed product.
//! - [`multivector`]: complex-coefficient multivectors and the geometric
//!   product.
//! - [`matrix`]: 4×4 complex matrices, the γ̂ matrices and the
//!   representation `rep` with its inverse `decompose`.
//! - [`generators`]: Gell-Mann bases and the multivector generator sets for
//!   the four gauge copies, permutations and phases.
//! - [`golden`]: reference matrix tables and convention resolution.
//! - [`analysis`]: structure constants, commutation and Jacobi checks,
//!   symmetry sweeps, rank audit.
//! - [`suite`]: the verification runs behind the `csta` command line tool.

pub mod analysis;
pub mod blade;
pub mod cli;
pub mod error;
pub mod generators;
pub mod golden;
pub mod linalg;
pub mod matrix;
pub mod multivector;
pub mod random;
pub mod report;
pub mod suite;
pub mod text;
pub mod tolerance;

pub use blade::{blade_grade, blade_product, Blade, Metric};
pub use error::{Error, Result};
pub use generators::{
    build_base_pairs, build_set, complete_set, gellmann3, gellmann4, BuildParams, CopyId,
    GeneratorSet, Permutation, Phase, PseudoscalarSide,
};
pub use matrix::{
    decompose, gamma_matrix, pauli_matrix, rep, sigma4_matrix, CMatrix, CMatrix2, CMatrix3,
    CMatrix4,
};
pub use multivector::Multivector;
pub use num_complex::Complex64;
