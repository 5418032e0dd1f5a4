//! Exact Riordan-array arithmetic: truncated power series over the rationals,
//! Riordan, exponential Riordan and almost-Riordan matrices, their row and
//! column partial sums, lower Hessenberg inverses, and production matrices.

pub mod bfile;
pub mod bivariate;
pub mod error;
pub mod golden;
pub mod hessenberg;
pub mod matrix;
pub mod parser;
pub mod partial_sums;
pub mod phyllotaxis;
pub mod polynomial;
pub mod production;
pub mod riordan;
pub mod sample;
pub mod series;
pub mod verify;

pub use bivariate::BivariateSeries;
pub use error::RiordanError;
pub use matrix::{EntryDiff, ExactMatrix, MatrixError};
pub use parser::{expand, expand_bivariate, parse_expr, Expr, ExprError};
pub use polynomial::Polynomial;
pub use riordan::{AlmostRiordanPair, ExpRiordanPair, RiordanPair};
pub use series::{format_coef, int, ratio, Coef, Series, SeriesError};
