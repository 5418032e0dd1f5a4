//! Inversion of lower Hessenberg matrices through the rank-one structure
//!
//! ```text
//! H^{-1} = [[0, 0], [P^{-1}, 0]] + x w^T
//! ```
//!
//! where `P` is the block of `H` above its last row and right of its first
//! column. Indices inside this module are 1-based, `h(i, j)` for
//! `1 <= i, j <= n`; `alpha(i) = h(i, i + 1)`.

use num_traits::{One, Zero};

use crate::error::{Result, RiordanError};
use crate::matrix::ExactMatrix;
use crate::partial_sums::{p_inverse_pair, row_ps_inverse_finite};
use crate::riordan::RiordanPair;
use crate::series::Coef;

/// A square matrix with zeros strictly above the first superdiagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergMatrix {
    m: ExactMatrix,
}

impl HessenbergMatrix {
    pub fn new(m: ExactMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(crate::matrix::MatrixError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            }
            .into());
        }
        for i in 0..m.rows() {
            for j in i + 2..m.cols() {
                if !m.get(i, j).is_zero() {
                    return Err(RiordanError::NotHessenberg { row: i, col: j });
                }
            }
        }
        Ok(HessenbergMatrix { m })
    }

    pub fn n(&self) -> usize {
        self.m.rows()
    }

    pub fn h(&self, i: usize, j: usize) -> &Coef {
        self.m.get(i - 1, j - 1)
    }

    pub fn alpha(&self, i: usize) -> &Coef {
        self.h(i, i + 1)
    }

    pub fn alphas(&self) -> Vec<Coef> {
        (1..self.n()).map(|i| self.alpha(i).clone()).collect()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.m
    }

    fn check_alphas(&self) -> Result<()> {
        match (1..self.n()).find(|&i| self.alpha(i).is_zero()) {
            Some(index) => Err(RiordanError::ZeroAlpha { index }),
            None => Ok(()),
        }
    }

    /// `sum_k h(n, k) x_k`.
    fn last_row_dot(&self, x: &[Coef]) -> Coef {
        let n = self.n();
        (1..=n).fold(Coef::zero(), |acc, k| acc + self.h(n, k) * &x[k - 1])
    }
}

/// `H = [[C, P], [h(n,1), R^T]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergPartition {
    pub c: Vec<Coef>,
    pub r: Vec<Coef>,
    pub p: ExactMatrix,
    pub corner: Coef,
}

impl HessenbergPartition {
    pub fn reassemble(&self) -> ExactMatrix {
        let n = self.c.len() + 1;
        ExactMatrix::from_fn(n, n, |i, j| match (i + 1 < n, j == 0) {
            (true, true) => self.c[i].clone(),
            (true, false) => self.p.get(i, j - 1).clone(),
            (false, true) => self.corner.clone(),
            (false, false) => self.r[j - 1].clone(),
        })
    }
}

pub fn partition(h: &HessenbergMatrix) -> Result<HessenbergPartition> {
    let n = h.n();
    if n < 2 {
        return Err(RiordanError::TooSmall { order: n, min: 2 });
    }
    let m = h.matrix();
    Ok(HessenbergPartition {
        c: (0..n - 1).map(|i| m.get(i, 0).clone()).collect(),
        r: m.row(n - 1)[1..].to_vec(),
        p: m.block(0, 1, n - 1, n - 1),
        corner: m.get(n - 1, 0).clone(),
    })
}

/// `x_1 = 1`, `x_i = -(sum_{j < i} h(i-1, j) x_j) / alpha(i-1)`.
pub fn x_vector(h: &HessenbergMatrix) -> Result<Vec<Coef>> {
    h.check_alphas()?;
    let n = h.n();
    let mut x: Vec<Coef> = Vec::with_capacity(n);
    if n > 0 {
        x.push(Coef::one());
    }
    for i in 2..=n {
        let s = (1..i).fold(Coef::zero(), |acc, j| acc + h.h(i - 1, j) * &x[j - 1]);
        x.push(-s / h.alpha(i - 1));
    }
    Ok(x)
}

/// `w_n = 1 / sum_j h(n, j) x_j`, `w_i = -(sum_{j > i} h(j, i+1) w_j) / alpha(i)`.
pub fn w_vector(h: &HessenbergMatrix) -> Result<Vec<Coef>> {
    let x = x_vector(h)?;
    w_from_x(h, &x)
}

fn w_from_x(h: &HessenbergMatrix, x: &[Coef]) -> Result<Vec<Coef>> {
    let n = h.n();
    let denom = h.last_row_dot(x);
    if denom.is_zero() {
        return Err(RiordanError::SingularHessenberg);
    }
    let mut w = vec![Coef::zero(); n];
    if n == 0 {
        return Ok(w);
    }
    w[n - 1] = denom.recip();
    for i in (1..n).rev() {
        let s = (i + 1..=n).fold(Coef::zero(), |acc, j| acc + h.h(j, i + 1) * &w[j - 1]);
        w[i - 1] = -s / h.alpha(i);
    }
    Ok(w)
}

/// Inverse of a lower-triangular matrix with nonzero diagonal, by forward substitution.
fn lower_triangular_inverse(p: &ExactMatrix) -> ExactMatrix {
    let n = p.rows();
    let mut inv = ExactMatrix::zeros(n, n);
    for col in 0..n {
        for i in col..n {
            let mut s = if i == col { Coef::one() } else { Coef::zero() };
            for k in col..i {
                s -= p.get(i, k) * inv.get(k, col);
            }
            inv.set(i, col, s / p.get(i, i));
        }
    }
    inv
}

/// The `(x, w, P^{-1})` triple of the rank-one inverse formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergDecomposition {
    pub x: Vec<Coef>,
    pub w: Vec<Coef>,
    pub p_inv: ExactMatrix,
}

impl HessenbergDecomposition {
    pub fn assemble(&self) -> ExactMatrix {
        let n = self.x.len();
        ExactMatrix::from_fn(n, n, |i, j| {
            let shifted = if i >= 1 && j + 1 < n {
                self.p_inv.get(i - 1, j).clone()
            } else {
                Coef::zero()
            };
            shifted + &self.x[i] * &self.w[j]
        })
    }
}

pub fn decompose(h: &HessenbergMatrix) -> Result<HessenbergDecomposition> {
    let x = x_vector(h)?;
    let w = w_from_x(h, &x)?;
    let p_inv = if h.n() >= 2 {
        lower_triangular_inverse(&partition(h)?.p)
    } else {
        ExactMatrix::zeros(0, 0)
    };
    Ok(HessenbergDecomposition { x, w, p_inv })
}

/// `H^{-1}` assembled from the rank-one formula.
pub fn zhong_inverse(h: &HessenbergMatrix) -> Result<ExactMatrix> {
    Ok(decompose(h)?.assemble())
}

/// `sum_k h(n, k) x_k = (-1)^{n-1} det(H) / prod alpha_j`.
pub fn det_relation_check(h: &HessenbergMatrix) -> Result<bool> {
    let x = x_vector(h)?;
    let lhs = h.last_row_dot(&x);
    let n = h.n();
    let prod = (1..n).fold(Coef::one(), |acc, i| acc * h.alpha(i));
    let mut rhs = h.matrix().determinant()? / prod;
    if n % 2 == 0 {
        rhs = -rhs;
    }
    Ok(lhs == rhs)
}

/// The `P` block of the finite Hessenberg inverse of the row partial sum is
/// the inverse of the leading block of `(-g f/x / (1-f), f)`.
pub fn p_block_identity_check(p: &RiordanPair, n: usize) -> Result<bool> {
    let h = HessenbergMatrix::new(row_ps_inverse_finite(p, n)?)?;
    let block = partition(&h)?.p;
    let expected = p_inverse_pair(p)?.matrix(n - 1)?.inverse()?;
    Ok(block == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial_sums::row_partial_sum;
    use crate::sample::random_hessenberg;
    use crate::series::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn example_pair(order: usize) -> RiordanPair {
        RiordanPair::from_exprs("(1+x)/(1-2*x)", "x*(1-x)/(1-3*x)", order).unwrap()
    }

    fn finite_h(p: &RiordanPair, n: usize) -> HessenbergMatrix {
        HessenbergMatrix::new(row_ps_inverse_finite(p, n).unwrap()).unwrap()
    }

    #[test]
    fn partitions() {
        let h = finite_h(&RiordanPair::pascal(6), 6);
        let part = partition(&h).unwrap();
        assert_eq!(part.c, [2, -2, 2, -2, 2].map(int).to_vec());
        assert_eq!(part.corner, int(-1));
        assert_eq!(part.r, [5, -10, 10, -5, 1].map(int).to_vec());
        assert_eq!(part.reassemble(), *h.matrix());

        let two = HessenbergMatrix::new(ExactMatrix::from_rows(&[[1, 2], [3, 4]])).unwrap();
        let part = partition(&two).unwrap();
        assert_eq!(
            (part.c, part.corner, part.r),
            (vec![int(1)], int(3), vec![int(4)])
        );
        assert_eq!(part.p, ExactMatrix::from_rows(&[[2]]));

        let one = HessenbergMatrix::new(ExactMatrix::identity(1)).unwrap();
        assert_eq!(
            partition(&one),
            Err(RiordanError::TooSmall { order: 1, min: 2 })
        );

        let h = finite_h(&example_pair(6), 6);
        let part = partition(&h).unwrap();
        assert_eq!(part.c, [4, -12, 30, -60, 102].map(int).to_vec());
        assert_eq!(part.corner, int(-63));
    }

    #[test]
    fn rejects_non_hessenberg() {
        let m = ExactMatrix::from_rows(&[[1, 0, 5], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(
            HessenbergMatrix::new(m),
            Err(RiordanError::NotHessenberg { row: 0, col: 2 })
        );
        let h = HessenbergMatrix::new(ExactMatrix::from_rows(&[[1, 0], [1, 1]])).unwrap();
        assert_eq!(x_vector(&h), Err(RiordanError::ZeroAlpha { index: 1 }));
    }

    #[test]
    fn vectors_for_row_partial_sums() {
        for p in [example_pair(6), RiordanPair::pascal(6)] {
            let h = finite_h(&p, 6);
            assert_eq!(x_vector(&h).unwrap(), p.row_sums(6).unwrap().into_coeffs());
            assert_eq!(w_vector(&h).unwrap(), vec![int(1); 6]);
        }
        assert_eq!(
            x_vector(&finite_h(&example_pair(6), 6)).unwrap(),
            [1, 4, 12, 38, 128, 450].map(int).to_vec()
        );
        let one = HessenbergMatrix::new(ExactMatrix::from_rows(&[[3]])).unwrap();
        assert_eq!(x_vector(&one).unwrap(), vec![int(1)]);
    }

    #[test]
    fn x_vector_solves_leading_rows() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let h = random_hessenberg(&mut rng, 5);
        let x = x_vector(&h).unwrap();
        let hx = h.matrix().apply(&x);
        assert!(hx[..4].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn inverse_of_row_partial_sum_hessenberg() {
        for p in [example_pair(6), RiordanPair::pascal(6)] {
            let h = finite_h(&p, 6);
            assert_eq!(zhong_inverse(&h).unwrap(), row_partial_sum(&p, 6).unwrap());
        }
    }

    #[test]
    fn random_matrices_match_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 30 {
            let n = rng.gen_range(1..=6);
            let h = random_hessenberg(&mut rng, n);
            let Ok(oracle) = h.matrix().inverse() else {
                assert_eq!(zhong_inverse(&h), Err(RiordanError::SingularHessenberg));
                continue;
            };
            let inv = zhong_inverse(&h).unwrap();
            assert_eq!(inv, oracle);
            assert_eq!(&inv * h.matrix(), ExactMatrix::identity(n));
            assert!(det_relation_check(&h).unwrap());
            checked += 1;
        }
    }

    #[test]
    fn determinant_relation() {
        let h = finite_h(&example_pair(6), 6);
        assert!(det_relation_check(&h).unwrap());
        let one = HessenbergMatrix::new(ExactMatrix::from_rows(&[[5]])).unwrap();
        assert!(det_relation_check(&one).unwrap());
    }

    #[test]
    fn p_block_identity() {
        assert!(p_block_identity_check(&example_pair(6), 6).unwrap());
        assert!(p_block_identity_check(&RiordanPair::pascal(6), 6).unwrap());
        assert!(p_block_identity_check(&RiordanPair::identity(4), 4).unwrap());
        let h = finite_h(&example_pair(6), 6);
        let d = decompose(&h).unwrap();
        assert_eq!(
            d.p_inv,
            ExactMatrix::lower_from_rows(&[
                &[-1][..],
                &[-6, -1],
                &[-26, -8, -1],
                &[-104, -44, -10, -1],
                &[-402, -210, -66, -12, -1],
            ])
        );
    }
}
