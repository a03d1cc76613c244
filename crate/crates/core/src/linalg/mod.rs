//! Exact linear algebra over a coefficient field, plus determinants and
//! minors of polynomial matrices.

mod matrix;
mod polymat;

use thiserror::Error;

pub use matrix::Matrix;
pub use polymat::PolyMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has rank {rank} < {cols} columns and cannot be completed")]
    RankDeficient { rank: usize, cols: usize },
    #[error("{0}")]
    Shape(String),
}
