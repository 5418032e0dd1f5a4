use thiserror::Error;

use crate::matrix::MatrixError;
use crate::parser::ExprError;
use crate::series::SeriesError;

/// Errors from array constructions built on series and matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiordanError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("insufficient order: {needed} coefficients needed, series carry {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("{0}")]
    Invalid(&'static str),
    #[error("Hessenberg theorem inapplicable: superdiagonal entry alpha_{index} is zero")]
    ZeroAlpha { index: usize },
    #[error("Hessenberg matrix is singular")]
    SingularHessenberg,
    #[error("matrix too small: order {order}, at least {min} required")]
    TooSmall { order: usize, min: usize },
    #[error("matrix is not lower Hessenberg: nonzero entry at ({row}, {col})")]
    NotHessenberg { row: usize, col: usize },
    #[error("principal submatrix of order {order} is singular")]
    SingularPrincipal { order: usize },
}

pub type Result<T, E = RiordanError> = std::result::Result<T, E>;
