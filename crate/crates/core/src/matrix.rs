//! Dense matrices over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bivariate::BivariateSeries;
use crate::series::{format_coef, int, Coef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is singular: no pivot available in row {row}")]
    Singular { row: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Coef>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Coef::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Coef::one() } else { Coef::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Coef) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Builds from rows; shorter rows are zero-padded to the longest one.
    /// Convenient for transcribing lower-triangular displays.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.iter().map(|r| r.as_ref().len()).max().unwrap_or(0);
        Self::from_fn(rows.len(), cols, |i, j| {
            int(rows[i].as_ref().get(j).copied().unwrap_or(0))
        })
    }

    /// Square matrix from a (possibly ragged) lower-triangular listing.
    pub fn lower_from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n = rows.len();
        Self::from_fn(n, n, |i, j| {
            int(rows[i].as_ref().get(j).copied().unwrap_or(0))
        })
    }

    pub fn from_coef_rows(rows: Vec<Vec<Coef>>) -> Self {
        let n = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ExactMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Entry `(n, k)` is the coefficient of `x^n y^k`.
    pub fn from_bivariate(b: &BivariateSeries) -> Self {
        Self::from_fn(b.order_x(), b.order_y(), |n, k| b.get(n, k).clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Coef {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Coef) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Coef] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Coef> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vec(&self) -> Vec<Vec<Coef>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Top-left `rows` by `cols` block.
    pub fn truncate(&self, rows: usize, cols: usize) -> Self {
        assert!(rows <= self.rows && cols <= self.cols);
        Self::from_fn(rows, cols, |i, j| self.get(i, j).clone())
    }

    /// Leading principal `n` by `n` submatrix.
    pub fn principal(&self, n: usize) -> Self {
        self.truncate(n, n)
    }

    /// Block starting at `(row0, col0)`.
    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols);
        Self::from_fn(rows, cols, |i, j| self.get(row0 + i, col0 + j).clone())
    }

    /// The matrix with its top row removed (one row fewer).
    pub fn remove_top_row(&self) -> Self {
        assert!(self.rows > 0, "no row to remove");
        self.block(1, 0, self.rows - 1, self.cols)
    }

    /// Top row removed, with `extension` appended as the new last row so the
    /// row count is preserved.
    pub fn remove_top_row_extended(&self, extension: &[Coef]) -> Self {
        assert_eq!(extension.len(), self.cols, "extension row has wrong width");
        let mut rows = self.remove_top_row().row_vec();
        rows.push(extension.to_vec());
        Self::from_coef_rows(rows)
    }

    pub fn scale(&self, c: &Coef) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Coef]) -> Vec<Coef> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .fold(Coef::zero(), |acc, (i, a)| acc + a * self.get(i, j))
            })
            .collect()
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Coef]) -> Vec<Coef> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Coef::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Exact Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.row_vec();
        let mut inv = Self::identity(n).row_vec();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(MatrixError::Singular { row: col })?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip();
            for j in 0..n {
                a[col][j] *= &p;
                inv[col][j] *= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    let da = &factor * &a[col][j];
                    a[r][j] -= da;
                    let di = &factor * &inv[col][j];
                    inv[r][j] -= di;
                }
            }
        }
        Ok(Self::from_coef_rows(inv))
    }

    /// Determinant by exact elimination.
    pub fn determinant(&self) -> Result<Coef, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.row_vec();
        let mut det = Coef::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Coef::zero());
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for j in col..n {
                    let d = &factor * &a[col][j];
                    a[r][j] -= d;
                }
            }
        }
        Ok(det)
    }

    /// Ascending coefficients `c_0..c_n` of `det(t I - A)`, by the
    /// Faddeev-LeVerrier recurrence.
    pub fn charpoly(&self) -> Result<Vec<Coef>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut c = vec![Coef::zero(); n + 1];
        c[n] = Coef::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            m = &(self * &m) + &Self::identity(n).scale(&c[n + 1 - k]);
            let am = self * &m;
            let trace = (0..n).fold(Coef::zero(), |acc, i| acc + am.get(i, i));
            c[n - k] = -trace / int(k as i64);
        }
        Ok(c)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    /// Zero strictly above the first superdiagonal.
    pub fn is_lower_hessenberg(&self) -> bool {
        (0..self.rows).all(|i| (i + 2..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|c| c.is_integer())
    }

    /// Entries as `i64` rows, if every entry is an integer that fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|c| {
                        if c.is_integer() {
                            c.to_integer().to_i64()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// First entry (row-major) where the two matrices differ, with both values.
    /// Dimension mismatches are reported at `(min rows, min cols)`.
    pub fn first_difference(&self, other: &Self) -> Option<EntryDiff> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(EntryDiff {
                row: self.rows.min(other.rows),
                col: self.cols.min(other.cols),
                expected: format!("{}x{}", other.rows, other.cols),
                actual: format!("{}x{}", self.rows, self.cols),
            });
        }
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
            .map(|(i, j)| EntryDiff {
                row: i,
                col: j,
                expected: format_coef(other.get(i, j)),
                actual: format_coef(self.get(i, j)),
            })
    }

    /// Rows as decimal strings (`p/q` for non-integers).
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_coef).collect())
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.to_string_rows() {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Location and values of the first mismatching entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDiff {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for EntryDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}): expected {}, got {}",
            self.row, self.col, self.expected, self.actual
        )
    }
}

impl fmt::Display for ExactMatrix {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_string_rows();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            write!(f, "{}", line.join(" "))?;
            if i + 1 < cells.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    /// Panics on a dimension mismatch; see [`ExactMatrix::checked_mul`].
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(&int(-1))
    }
}
