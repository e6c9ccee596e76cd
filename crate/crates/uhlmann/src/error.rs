use thiserror::Error;

/// Errors for state validation, linear algebra, and surface geometry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension must be at least 2 (got {dim})")]
    DimensionTooSmall { dim: usize },

    #[error("matrix is not square: {rows} rows, row {row} has {cols} columns")]
    NotSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian (max asymmetry {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("trace must be 1 (got {trace:.17}, residual {residual:.3e})")]
    InvalidTrace { trace: f64, residual: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("purity {purity:.17} outside [1/N, 1] for N = {dim}")]
    InvalidPurity { purity: f64, dim: usize },

    #[error("vector does not map to a valid state (min eigenvalue {min_eigenvalue:.3e})")]
    InvalidState { min_eigenvalue: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no state attains fidelity {fidelity} with a target of Bloch length {lambda_t} (minimum is {min_fidelity})")]
    NoSolution {
        lambda_t: f64,
        fidelity: f64,
        min_fidelity: f64,
    },

    #[error("eigensolver did not converge (off-diagonal residual {off_diagonal:.3e})")]
    NoConvergence { off_diagonal: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
