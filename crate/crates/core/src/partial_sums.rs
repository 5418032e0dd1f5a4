//! Row and column partial sums of Riordan arrays and their inverses.
//!
//! The column partial sum is `Σ M` (cumulative sums down each column) and is
//! again Riordan. The row partial sum is `M Σ^T` (cumulative sums along each
//! row); it is full, and its inverse `H` is lower Hessenberg.

use num_traits::Zero;

use crate::bivariate::BivariateSeries;
use crate::error::{Result, RiordanError};
use crate::matrix::ExactMatrix;
use crate::riordan::{matrix_diagonal_sums, sigma, sigma_t, RiordanPair};
use crate::series::{int, Coef, Series};

fn one_minus(s: &Series) -> Series {
    &Series::one(s.order()) - s
}

fn require(p: &RiordanPair, needed: usize) -> Result<()> {
    if p.order() < needed {
        Err(RiordanError::InsufficientOrder {
            needed,
            available: p.order(),
        })
    } else {
        Ok(())
    }
}

/// `(1/(1-x), x) (g, f) = (g/(1-x), f)`.
pub fn col_partial_sum(p: &RiordanPair) -> Result<RiordanPair> {
    let g = p.g().div(&one_minus(&Series::x(p.g().order())))?;
    RiordanPair::general(g, p.f().clone())
}

/// `(1 - fbar, x) (g, f)^{-1}`.
pub fn col_ps_inverse(p: &RiordanPair) -> Result<RiordanPair> {
    let inv = p.inverse()?;
    let left = RiordanPair::general(one_minus(inv.f()), Series::x(inv.order()))?;
    left.multiply(&inv)
}

/// `n` by `n` block of `M Σ^T`: entry `(i, k)` is `sum_{j <= k} M[i][j]`.
pub fn row_partial_sum(p: &RiordanPair, n: usize) -> Result<ExactMatrix> {
    let m = p.matrix(n)?;
    let mut s = ExactMatrix::zeros(n, n);
    for i in 0..n {
        let mut acc = Coef::zero();
        for k in 0..n {
            acc += m.get(i, k);
            s.set(i, k, acc.clone());
        }
    }
    Ok(s)
}

/// `g / ((1 - y)(1 - y f))`.
pub fn row_ps_bivariate_gf(p: &RiordanPair, nx: usize, ny: usize) -> Result<BivariateSeries> {
    require(p, nx)?;
    let g = BivariateSeries::from_x_series(&p.g().truncate(nx), ny);
    let f = BivariateSeries::from_x_series(&p.f().truncate(nx), ny);
    let one = BivariateSeries::one(nx, ny);
    let y = BivariateSeries::y(nx, ny);
    let denom = &(&one - &y) * &(&one - &(&y * &f));
    Ok(g.div(&denom)?)
}

/// The auxiliary pair `(-g/(1-f), f)`.
fn hessenberg_aux(p: &RiordanPair) -> Result<RiordanPair> {
    let g = -&p.g().div(&one_minus(p.f()))?;
    RiordanPair::general(g, p.f().clone())
}

/// `n` by `n` block of the inverse of the infinite row partial sum,
/// `(-g/(1-f), f)^{-1}` with its top row removed. Needs order `n + 1`.
pub fn row_ps_inverse_infinite(p: &RiordanPair, n: usize) -> Result<ExactMatrix> {
    require(p, n + 1)?;
    let inv = hessenberg_aux(&p.truncate(n + 1))?.inverse()?;
    Ok(inv.matrix(n + 1)?.remove_top_row().truncate(n, n))
}

/// Exact inverse of the `n` by `n` row partial sum: the infinite form in rows
/// `0..n-1`, and row `n-1` of `(g, f)^{-1}` as the last row.
pub fn row_ps_inverse_finite(p: &RiordanPair, n: usize) -> Result<ExactMatrix> {
    if n == 0 {
        return Ok(ExactMatrix::zeros(0, 0));
    }
    require(p, n)?;
    let p = p.truncate(n);
    let top = hessenberg_aux(&p)?.inverse()?.matrix(n)?;
    let last = p.inverse()?.matrix(n)?;
    Ok(top.remove_top_row_extended(last.row(n - 1)))
}

/// Bivariate generating function of the infinite `H`:
/// `(((1-x)/(-g(fbar))) / (1 - y fbar) + 1) / x`.
pub fn h_bivariate_gf(p: &RiordanPair, nx: usize, ny: usize) -> Result<BivariateSeries> {
    require(p, nx + 1)?;
    let p = p.truncate(nx + 1);
    let fbar = p.f().revert()?;
    let g_fbar = p.g().compose(&fbar)?;
    let col0 = one_minus(&Series::x(nx + 1)).div(&-&g_fbar)?;
    let a = BivariateSeries::from_x_series(&col0, ny);
    let fb = BivariateSeries::from_x_series(&fbar, ny);
    let one = BivariateSeries::one(nx + 1, ny);
    let y = BivariateSeries::y(nx + 1, ny);
    let b = a.div(&(&one - &(&y * &fb)))?;
    Ok((&b + &one).div_x_pow(1)?)
}

/// `(-g f/x / (1-f), f)`, whose leading block is the inverse of the `P`
/// block of the finite Hessenberg inverse.
pub fn p_inverse_pair(p: &RiordanPair) -> Result<RiordanPair> {
    let gf_over_x = (p.g() * p.f()).div_x_pow(1)?;
    let f = p.f().truncate(gf_over_x.order());
    let g = -&gf_over_x.div(&one_minus(&f))?;
    RiordanPair::general(g, f)
}

/// The row partial sum written as `block + x w^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowPsDecomposition {
    /// Zero top row over the `(n-1)` by `(n-1)` block of [`p_inverse_pair`], zero last column.
    pub block: ExactMatrix,
    /// Row sums of the array.
    pub x: Vec<Coef>,
    /// All ones.
    pub w: Vec<Coef>,
}

impl RowPsDecomposition {
    pub fn reconstruct(&self) -> ExactMatrix {
        let n = self.block.rows();
        ExactMatrix::from_fn(n, n, |i, j| self.block.get(i, j) + &self.x[i] * &self.w[j])
    }
}

pub fn canonical_rowps_decomposition(p: &RiordanPair, n: usize) -> Result<RowPsDecomposition> {
    require(p, n)?;
    // Dividing g f by x costs one order; keep a guard so f still has f_1.
    let p = p.truncate((n + 1).min(p.order()));
    let x = p.row_sums(n)?.into_coeffs();
    let inner = if n > 1 {
        p_inverse_pair(&p)?.matrix(n - 1)?
    } else {
        ExactMatrix::zeros(0, 0)
    };
    let block = ExactMatrix::from_fn(n, n, |i, j| {
        if i >= 1 && j + 1 < n {
            inner.get(i - 1, j).clone()
        } else {
            Coef::zero()
        }
    });
    Ok(RowPsDecomposition {
        block,
        x,
        w: vec![int(1); n],
    })
}

/// The array split as `T + R`, where `T` has bivariate generating function
/// `(-g f/(1-f)) (1-y)/(1-y f)` and `R` carries the row sums in column 0.
pub fn original_array_decomposition(
    p: &RiordanPair,
    n: usize,
) -> Result<(ExactMatrix, ExactMatrix)> {
    require(p, n)?;
    let p = p.truncate(n);
    let lead = -&(p.g() * p.f()).div(&one_minus(p.f()))?;
    let one = BivariateSeries::one(n, n);
    let y = BivariateSeries::y(n, n);
    let f = BivariateSeries::from_x_series(p.f(), n);
    let t = (&BivariateSeries::from_x_series(&lead, n) * &(&one - &y)).div(&(&one - &(&y * &f)))?;
    let sums = p.row_sums(n)?;
    let r = ExactMatrix::from_fn(n, n, |i, j| {
        if j == 0 {
            sums.coeffs()[i].clone()
        } else {
            Coef::zero()
        }
    });
    Ok((ExactMatrix::from_bivariate(&t), r))
}

/// `Σ (M Σ^T) = (Σ M) Σ^T`, with each side built along its own path.
pub fn commute_check(p: &RiordanPair, n: usize) -> Result<bool> {
    let lhs = &sigma(n) * &row_partial_sum(p, n)?;
    let rhs = &col_partial_sum(p)?.matrix(n)? * &sigma_t(n);
    Ok(lhs == rhs)
}

/// Diagonal sums of `Σ M` and `M Σ^T` agree.
pub fn diag_sums_equal_check(p: &RiordanPair, n: usize) -> Result<bool> {
    let col = matrix_diagonal_sums(&col_partial_sum(p)?.matrix(n)?);
    let row = matrix_diagonal_sums(&row_partial_sum(p, n)?);
    Ok(col == row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::riordan::{shift_u, sigma_inv};

    fn example_pair(order: usize) -> RiordanPair {
        RiordanPair::from_exprs("(1+x)/(1-2*x)", "x*(1-x)/(1-3*x)", order).unwrap()
    }

    fn rows(r: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::lower_from_rows(r)
    }

    #[test]
    fn column_partial_sum_of_pascal() {
        let m = col_partial_sum(&RiordanPair::pascal(7))
            .unwrap()
            .matrix(7)
            .unwrap();
        let oracle = &sigma(7) * &RiordanPair::pascal(7).matrix(7).unwrap();
        assert_eq!(m, oracle);
        assert_eq!(m.row(6), &[7, 21, 35, 35, 21, 7, 1].map(int)[..]);
        let d = matrix_diagonal_sums(&m);
        // partial sums of F_{k+1}
        let fib = [1, 1, 2, 3, 5, 8, 13];
        let mut acc = 0;
        let expected: Vec<Coef> = fib
            .iter()
            .map(|v| {
                acc += v;
                int(acc)
            })
            .collect();
        assert_eq!(d, expected);
        let id = col_partial_sum(&RiordanPair::identity(4)).unwrap();
        assert_eq!(id.matrix(4).unwrap(), sigma(4));
    }

    #[test]
    fn column_partial_sum_inverse() {
        for p in [
            RiordanPair::pascal(8),
            example_pair(8),
            RiordanPair::identity(8),
        ] {
            let cps = col_partial_sum(&p).unwrap();
            let inv = col_ps_inverse(&p).unwrap();
            assert_eq!(
                cps.multiply(&inv).unwrap().matrix(8).unwrap(),
                ExactMatrix::identity(8)
            );
            assert_eq!(
                inv.matrix(8).unwrap(),
                cps.matrix(8).unwrap().inverse().unwrap()
            );
        }
        let inv = col_ps_inverse(&RiordanPair::identity(5)).unwrap();
        assert_eq!(inv.g(), &Series::from_ints_padded(&[1, -1], 5));
    }

    #[test]
    fn row_partial_sums() {
        let s = row_partial_sum(&RiordanPair::pascal(7), 7).unwrap();
        assert_eq!(s, &RiordanPair::pascal(7).matrix(7).unwrap() * &sigma_t(7));
        assert_eq!(s.row(6), &[1, 7, 22, 42, 57, 63, 64].map(int)[..]);
        let s = row_partial_sum(&example_pair(6), 6).unwrap();
        assert_eq!(s.row(5), &[48, 240, 384, 438, 449, 450].map(int)[..]);
        assert_eq!(
            row_partial_sum(&RiordanPair::identity(4), 4).unwrap(),
            sigma_t(4)
        );
    }

    #[test]
    fn row_partial_sum_generating_function() {
        for p in [
            RiordanPair::pascal(6),
            example_pair(6),
            RiordanPair::identity(6),
        ] {
            let b = row_ps_bivariate_gf(&p, 6, 6).unwrap();
            assert_eq!(
                ExactMatrix::from_bivariate(&b),
                row_partial_sum(&p, 6).unwrap()
            );
        }
    }

    #[test]
    fn hessenberg_inverse_forms() {
        let p = RiordanPair::pascal(7);
        let inf = row_ps_inverse_infinite(&p, 6).unwrap();
        assert!(inf.is_lower_hessenberg());
        assert_eq!(inf.row(5), &[-2, 11, -25, 30, -20, 7].map(int)[..]);
        assert!((0..5).all(|i| inf.get(i, i + 1) == &int(-1)));
        let fin = row_ps_inverse_finite(&p, 6).unwrap();
        assert_eq!(fin.row(5), &[-1, 5, -10, 10, -5, 1].map(int)[..]);
        assert_eq!(fin.truncate(5, 6), inf.truncate(5, 6));
        let diff = &inf - &fin;
        assert_eq!(diff.row(5), &[-1, 6, -15, 20, -15, 6].map(int)[..]);
        assert_eq!(
            &fin * &row_partial_sum(&p, 6).unwrap(),
            ExactMatrix::identity(6)
        );

        let q = example_pair(7);
        let fin = row_ps_inverse_finite(&q, 6).unwrap();
        assert_eq!(fin.row(5), &[-63, 83, -85, 45, -11, 1].map(int)[..]);
        assert_eq!(fin.row(4), &[102, -126, 114, -54, 12, -1].map(int)[..]);
        assert_eq!(fin, row_partial_sum(&q, 6).unwrap().inverse().unwrap());
    }

    #[test]
    fn infinite_form_matches_product_and_bivariate() {
        for p in [
            RiordanPair::pascal(8),
            example_pair(8),
            RiordanPair::identity(8),
        ] {
            let n = 6;
            let inf = row_ps_inverse_infinite(&p, n).unwrap();
            let neg = RiordanPair::general(-p.g(), p.f().clone()).unwrap();
            let prod = &(&shift_u(n + 1) * &sigma_inv(n + 1))
                * &neg.inverse().unwrap().matrix(n + 1).unwrap();
            assert_eq!(prod.truncate(n, n), inf);
            let b = h_bivariate_gf(&p, n, n).unwrap();
            assert_eq!(ExactMatrix::from_bivariate(&b), inf);
        }
    }

    #[test]
    fn canonical_decomposition() {
        let d = canonical_rowps_decomposition(&example_pair(6), 6).unwrap();
        assert_eq!(d.x, [1, 4, 12, 38, 128, 450].map(int).to_vec());
        assert_eq!(
            d.block,
            rows(&[
                &[0],
                &[-1],
                &[-6, -1],
                &[-26, -8, -1],
                &[-104, -44, -10, -1],
                &[-402, -210, -66, -12, -1],
            ])
        );
        assert_eq!(
            d.reconstruct(),
            row_partial_sum(&example_pair(6), 6).unwrap()
        );
        for p in [RiordanPair::pascal(6), RiordanPair::identity(6)] {
            let d = canonical_rowps_decomposition(&p, 6).unwrap();
            assert_eq!(d.reconstruct(), row_partial_sum(&p, 6).unwrap());
        }
    }

    #[test]
    fn original_decomposition() {
        let p = example_pair(6);
        let (t, r) = original_array_decomposition(&p, 6).unwrap();
        assert_eq!(
            t,
            rows(&[
                &[0],
                &[-1, 1],
                &[-6, 5, 1],
                &[-26, 18, 7, 1],
                &[-104, 60, 34, 9, 1],
                &[-402, 192, 144, 54, 11, 1],
            ])
        );
        assert_eq!(r.col(0), [1, 4, 12, 38, 128, 450].map(int).to_vec());
        assert_eq!(&t + &r, p.matrix(6).unwrap());
        for p in [RiordanPair::pascal(6), RiordanPair::identity(6)] {
            let (t, r) = original_array_decomposition(&p, 6).unwrap();
            assert_eq!(&t + &r, p.matrix(6).unwrap());
        }
    }

    #[test]
    fn commutation_and_diagonal_sums() {
        for (p, n) in [
            (RiordanPair::pascal(8), 8),
            (RiordanPair::identity(5), 5),
            (example_pair(8), 8),
        ] {
            assert!(commute_check(&p, n).unwrap());
            assert!(diag_sums_equal_check(&p, n).unwrap());
        }
    }
}
