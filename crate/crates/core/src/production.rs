//! Production (Stieltjes) matrices `P_M = M^{-1} overline(M)`, their A- and
//! Z-sequences, and identities relating them to row partial sums.

use num_traits::Zero;

use crate::error::{Result, RiordanError};
use crate::matrix::ExactMatrix;
use crate::partial_sums::{row_ps_inverse_finite, row_ps_inverse_infinite};
use crate::riordan::{sigma, sigma_inv, sigma_t, ExpRiordanPair, RiordanPair};
use crate::series::{int, ratio, Coef, Series};

/// `N` by `N` production matrix of an `(N+1)` by `(N+1)` lower-triangular `M`.
pub fn production_matrix(m: &ExactMatrix) -> Result<ExactMatrix> {
    if !m.is_square() || m.rows() == 0 {
        return Err(RiordanError::TooSmall {
            order: m.rows().min(m.cols()),
            min: 1,
        });
    }
    if !m.is_lower_triangular() {
        return Err(RiordanError::Invalid(
            "production matrix needs a lower-triangular matrix",
        ));
    }
    let n = m.rows() - 1;
    let inv = m.principal(n).inverse()?;
    Ok(&inv * &m.block(1, 0, n, n))
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

/// `x / fbar`: column 1 of `P_M`.
pub fn a_sequence(p: &RiordanPair, n: usize) -> Result<Series> {
    require(p, n + 1)?;
    let fbar = p.f().truncate(n + 1).revert()?;
    Ok(fbar.div_x_pow(1)?.reciprocal()?)
}

/// `(1 - 1/g(fbar)) / fbar`: column 0 of `P_M`.
pub fn z_sequence(p: &RiordanPair, n: usize) -> Result<Series> {
    require(p, n + 1)?;
    let p = p.truncate(n + 1);
    let fbar = p.f().revert()?;
    let recip = p.g().compose(&fbar)?.reciprocal()?;
    Ok((&Series::one(n + 1) - &recip).div_cancelling(&fbar)?)
}

/// `x / f`: column 1 of `P_{M^{-1}}`.
pub fn a_sequence_of_inverse(p: &RiordanPair, n: usize) -> Result<Series> {
    require(p, n + 1)?;
    Ok(p.f().truncate(n + 1).div_x_pow(1)?.reciprocal()?)
}

/// `(1 - g) / f`: column 0 of `P_{M^{-1}}`.
pub fn z_sequence_of_inverse(p: &RiordanPair, n: usize) -> Result<Series> {
    require(p, n + 1)?;
    let p = p.truncate(n + 1);
    Ok((&Series::one(n + 1) - p.g()).div_cancelling(p.f())?)
}

/// Row 0 is `e_0`; row `k + 1` is row `k` times `P`.
pub fn generate_from_production(p: &ExactMatrix, n: usize) -> Result<ExactMatrix> {
    if p.rows() < n || p.cols() < n {
        return Err(RiordanError::TooSmall {
            order: p.rows().min(p.cols()),
            min: n,
        });
    }
    let p = p.truncate(n, n);
    let mut rows = Vec::with_capacity(n);
    let mut row = vec![Coef::zero(); n];
    if n > 0 {
        row[0] = int(1);
    }
    for _ in 0..n {
        let next = p.left_apply(&row);
        rows.push(std::mem::replace(&mut row, next));
    }
    Ok(ExactMatrix::from_coef_rows(rows))
}

/// Lower Hessenberg, with every column from the second on a shift of the
/// second, and a nonzero leading entry in that column.
pub fn is_riordan_production(p: &ExactMatrix) -> bool {
    let n = p.rows();
    if n < 2 || !p.is_square() || !p.is_lower_hessenberg() || p.get(0, 1).is_zero() {
        return false;
    }
    (2..n).all(|j| {
        (0..n).all(|i| {
            let expected = if i + 1 >= j {
                p.get(i + 1 - j, 1).clone()
            } else {
                Coef::zero()
            };
            *p.get(i, j) == expected
        })
    })
}

/// `M (Σ M Σ^T)^{-1}`, built at order `N + 1` and cropped so every entry is
/// exact for the infinite product.
pub fn four_fold_product(p: &RiordanPair, n: usize) -> Result<ExactMatrix> {
    let k = n + 1;
    let m = p.matrix(k)?;
    let s = &(&sigma(k) * &m) * &sigma_t(k);
    Ok((&m * &s.inverse()?).truncate(n, n))
}

/// `Σ^{-1} - P_{M^{-1}} Σ^{-1}`, cropped as in [`four_fold_product`].
pub fn four_fold_via_production(p: &RiordanPair, n: usize) -> Result<ExactMatrix> {
    let k = n + 1;
    require(p, k + 1)?;
    let pm = production_matrix(&p.inverse()?.matrix(k + 1)?)?;
    let si = sigma_inv(k);
    Ok((&si - &(&pm * &si)).truncate(n, n))
}

/// `R = (g / ((1-x)(1-f)), f / ((1-x)(1-f)))`.
pub fn four_fold_pair(p: &RiordanPair) -> Result<RiordanPair> {
    let order = p.order();
    let one = Series::one(order);
    let d = &(&one - &Series::x(order)) * &(&one - &p.f().truncate(order));
    RiordanPair::general(
        p.g().truncate(order).div(&d)?,
        p.f().truncate(order).div(&d)?,
    )
}

/// Production matrix of `R^{-1}`, for `R` from [`four_fold_pair`].
pub fn four_fold_target_production(p: &RiordanPair, n: usize) -> Result<ExactMatrix> {
    require(p, n + 1)?;
    production_matrix(&four_fold_pair(p)?.inverse()?.matrix(n + 1)?)
}

/// `x / F` with `F = f / ((1-x)(1-f))`: column 1 of the production matrix
/// of `R^{-1}`.
pub fn a_seq_of_fourfold_target(p: &RiordanPair, n: usize) -> Result<Series> {
    require(p, n + 1)?;
    a_sequence_of_inverse(&four_fold_pair(&p.truncate(n + 1))?, n)
}

/// The three matrices involved in the four-fold product identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourFold {
    pub product: ExactMatrix,
    pub via_production: ExactMatrix,
    pub target_production: ExactMatrix,
}

impl FourFold {
    pub fn compute(p: &RiordanPair, n: usize) -> Result<Self> {
        Ok(FourFold {
            product: four_fold_product(p, n)?,
            via_production: four_fold_via_production(p, n)?,
            target_production: four_fold_target_production(p, n)?,
        })
    }

    /// `M (Σ M Σ^T)^{-1} = Σ^{-1} - P_{M^{-1}} Σ^{-1}`.
    pub fn difference_form_holds(&self) -> bool {
        self.product == self.via_production
    }

    /// Product equals `P_{R^{-1}}` as stated.
    pub fn stated_form_holds(&self) -> bool {
        self.product == self.target_production
    }

    /// Product equals `-P_{R^{-1}}`, the production matrix of `(1, -x) R^{-1}`.
    pub fn negated_form_holds(&self) -> bool {
        self.product == -&self.target_production
    }
}

/// The array `R = (1/(1-rx), x/(1-rx))`.
pub fn stirling_pair(r: i64, order: usize) -> Result<RiordanPair> {
    let g = Series::geometric(int(r), order);
    let f = g.mul_x();
    RiordanPair::general(g, f)
}

/// `[(1 - r x)^{-(r+1)/r}, (1/r) log(1 - r x)]`.
pub fn stirling_exp_pair(r: i64, order: usize) -> Result<ExpRiordanPair> {
    let base = Series::from_ints_padded(&[1, -r], order);
    let g = base.pow_rational(-(r + 1), r)?;
    let f = base.log1()?.scale(&ratio(1, r));
    ExpRiordanPair::new(g, f)
}

/// Both sides of the Stirling identity at size `n`: the inverse of the row
/// partial sum of `(1/(1-rx), x/(1-rx))`, and the production matrix of the
/// exponential array from [`stirling_exp_pair`].
pub fn stirling_sides(r: i64, n: usize) -> Result<(ExactMatrix, ExactMatrix)> {
    let h = row_ps_inverse_infinite(&stirling_pair(r, n + 1)?, n)?;
    let e = stirling_exp_pair(r, n + 1)?.matrix(n + 1)?;
    Ok((h, production_matrix(&e)?))
}

pub fn stirling_production_check(r: i64, n: usize) -> Result<bool> {
    let (h, p) = stirling_sides(r, n)?;
    Ok(h == p)
}

/// The finite inverse agrees with the infinite one above its last row.
pub fn stirling_finite_rows_check(r: i64, n: usize) -> Result<bool> {
    let pair = stirling_pair(r, n + 1)?;
    let fin = row_ps_inverse_finite(&pair, n)?;
    let inf = row_ps_inverse_infinite(&pair, n)?;
    let keep = n.saturating_sub(1);
    Ok(fin.truncate(keep, n) == inf.truncate(keep, n))
}

/// Row `k` of `[e^{2x}, 1 - e^x]` is `(-1)^k` times the ascending
/// coefficients of `det(t I - H_k)`, `H_k` the leading `k` by `k` block of
/// the Hessenberg inverse of Pascal's row partial sum; checked for `k < n`.
pub fn charpoly_rows_check(n: usize) -> Result<bool> {
    let order = n.max(2);
    let e = ExpRiordanPair::from_exprs("exp(2*x)", "1-exp(x)", order)?.matrix(n)?;
    let h = row_ps_inverse_finite(&RiordanPair::pascal(order), n)?;
    for k in 0..n {
        let c = h.principal(k).charpoly()?;
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        if (0..=k).any(|j| *e.get(k, j) != &c[j] * &sign) {
            return Ok(false);
        }
    }
    Ok(true)
}
