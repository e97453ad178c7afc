//! Verification laboratory for six-vertex transfer-matrix spectra: exact
//! diagonalization, the compatibility determinant and its Riccati
//! coefficients, closed-form Riccati equations, the zero-fixing system, Lie
//! point symmetries and the sl(2) cycle maps on the one-magnon sector.

pub mod calculus;
pub mod cli;
pub mod error;
pub mod functional_system;
pub mod lie_symmetry;
pub mod linalg;
pub mod model_core;
pub mod ode;
pub mod poly;
pub mod report;
pub mod riccati_forms;
pub mod spectral_maps;
pub mod transfer_oracle;
pub mod zero_solver;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
