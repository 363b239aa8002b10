//! Exact integer linear algebra over graph matrices.

mod charpoly;
mod jacobi;
mod matrix;
mod poly;

pub use charpoly::{char_poly, char_poly_faddeev_leverrier, determinant};
pub use jacobi::{eigenvalues_float, SpectrumFloat, DEFAULT_TOLERANCE};
pub use matrix::{IntSymMatrix, MatrixKind, UnknownMatrixKind};
pub use poly::IntPolynomial;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("matrix must have at least one row")]
    EmptyMatrix,
}

/// Characteristic polynomial of the Laplacian of `g`.
pub fn laplacian_poly(g: &Graph) -> IntPolynomial {
    char_poly(&IntSymMatrix::of(g, MatrixKind::Laplacian))
}

/// Characteristic polynomial of the adjacency matrix of `g`.
pub fn adjacency_poly(g: &Graph) -> IntPolynomial {
    char_poly(&IntSymMatrix::of(g, MatrixKind::Adjacency))
}
