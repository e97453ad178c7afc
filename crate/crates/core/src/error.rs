//! Error type shared by every module.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    /// A b-weight denominator vanished; `what` names the colliding pair.
    #[error("division by zero: {what}")]
    Pole { what: String },

    #[error("degenerate sector n={n}: {reason} (x = {x})")]
    DegenerateSector { n: usize, x: Complex64, reason: String },

    #[error("root iteration did not converge (max residual {max_residual:.3e})")]
    RootNonConvergence { max_residual: f64 },

    #[error("eigenvalue iteration did not converge after {iterations} sweeps")]
    EigenNonConvergence { iterations: usize },

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("normalization error: {0}")]
    Normalization(String),

    #[error("degenerate subset pair: {0}")]
    DegeneratePair(String),

    #[error("ill-conditioned reconstruction: |denominator| = {denominator:.3e}, scale = {scale:.3e}")]
    Conditioning { denominator: f64, scale: f64 },

    #[error("Newton did not converge after {iterations} iterations (residual {residual:.3e})")]
    NewtonNonConvergence { iterations: usize, residual: f64, trace: Vec<f64> },

    #[error("integration failed at t = {t}: {reason}")]
    Integration { t: f64, reason: String },

    #[error("image is not polynomial: residues {residues:?}")]
    ResidueObstruction { residues: Vec<f64> },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
