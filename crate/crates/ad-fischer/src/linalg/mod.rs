//! Dense complex and Hermitian matrix primitives.
//!
//! Everything here is sized for desk-scale verification work (orders up to a
//! few hundred): LU with partial pivoting for determinants and inverses,
//! Cholesky with a relative pivot threshold as the positive-definiteness
//! test, and a cyclic Jacobi eigensolver for Hermitian matrices. All values
//! are immutable after construction and safe to share across threads.

mod eigen;
mod factor;
mod hermitian;
mod matrix;

pub use eigen::{hermitian_eigenvalues, hpd_sqrt, loewner_geq, LoewnerCheck};
pub use factor::{cholesky_factor, cholesky_pd, det, inverse, PDCertificate, DEFAULT_PD_TOL};
pub use hermitian::HermitianMatrix;
pub use matrix::ComplexMatrix;

use thiserror::Error;

/// Errors raised by the matrix primitives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix shape {rows}x{cols} is invalid (rows and cols must be >= 1)")]
    BadShape { rows: usize, cols: usize },
    #[error("entry data length {len} does not match shape {rows}x{cols}")]
    BadLength { rows: usize, cols: usize, len: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("matrix is singular to working tolerance (pivot magnitude {pivot:.3e})")]
    Singular { pivot: f64 },
    #[error("matrix is not positive definite (minimal Cholesky pivot {min_pivot:.3e})")]
    NotPositiveDefinite { min_pivot: f64 },
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}
