//! Riordan, exponential Riordan and almost-Riordan arrays, plus the constant
//! matrices used to form partial sums.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Result, RiordanError};
use crate::matrix::ExactMatrix;
use crate::parser::expand;
use crate::series::{int, Coef, Series};

fn require_order(available: usize, needed: usize) -> Result<()> {
    if available < needed {
        Err(RiordanError::InsufficientOrder { needed, available })
    } else {
        Ok(())
    }
}

/// The first `count` columns `g, g f, g f^2, ...`, each truncated to `n`.
fn power_columns(g: &Series, f: &Series, n: usize, count: usize) -> Vec<Series> {
    let g = g.truncate(n);
    let f = f.truncate(n);
    let mut cols = Vec::with_capacity(count);
    let mut col = g;
    for _ in 0..count {
        let next = &col * &f;
        cols.push(col);
        col = next;
    }
    cols
}

fn matrix_from_columns(cols: &[Series], n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, k| cols[k].coeffs()[i].clone())
}

/// A Riordan pair `(g, f)`: entry `(n, k)` of its matrix is `[x^n] g f^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanPair {
    g: Series,
    f: Series,
}

impl RiordanPair {
    /// Normalized pair: `g(0) = 1`, `f(0) = 0`, `f'(0) = 1`.
    pub fn new(g: Series, f: Series) -> Result<Self> {
        let p = Self::general(g, f)?;
        if !p.g.constant_term().is_one() {
            return Err(RiordanError::Invalid("g(0) must be 1"));
        }
        if !p.f.coeffs()[1].is_one() {
            return Err(RiordanError::Invalid("f'(0) must be 1"));
        }
        Ok(p)
    }

    /// Any invertible pair: `g(0) != 0`, `f(0) = 0`, `f'(0) != 0`.
    pub fn general(g: Series, f: Series) -> Result<Self> {
        if f.order() < 2 || g.order() < 1 {
            return Err(RiordanError::InsufficientOrder {
                needed: 2,
                available: f.order().min(g.order()),
            });
        }
        if g.constant_term().is_zero() {
            return Err(RiordanError::Invalid("g(0) must be nonzero"));
        }
        if !f.constant_term().is_zero() {
            return Err(RiordanError::Invalid("f(0) must be 0"));
        }
        if f.coeffs()[1].is_zero() {
            return Err(RiordanError::Invalid("f'(0) must be nonzero"));
        }
        Ok(RiordanPair { g, f })
    }

    /// Expands both expressions to `order` coefficients; see [`RiordanPair::general`].
    pub fn from_exprs(g: &str, f: &str, order: usize) -> Result<Self> {
        Self::general(expand(g, order)?, expand(f, order)?)
    }

    pub fn identity(order: usize) -> Self {
        RiordanPair {
            g: Series::one(order),
            f: Series::x(order),
        }
    }

    /// `(1/(1-x), x/(1-x))`, the binomial matrix.
    pub fn pascal(order: usize) -> Self {
        let g = Series::geometric(int(1), order);
        RiordanPair { f: g.mul_x(), g }
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    /// Number of coefficients carried by both series.
    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    pub fn truncate(&self, order: usize) -> Self {
        RiordanPair {
            g: self.g.truncate(order),
            f: self.f.truncate(order),
        }
    }

    /// The `n` by `n` leading block of the array.
    pub fn matrix(&self, n: usize) -> Result<ExactMatrix> {
        require_order(self.order(), n)?;
        Ok(matrix_from_columns(
            &power_columns(&self.g, &self.f, n, n),
            n,
        ))
    }

    /// `(g, f) (u, v) = (g u(f), v(f))`.
    pub fn multiply(&self, rhs: &RiordanPair) -> Result<Self> {
        let g = &self.g * &rhs.g.compose(&self.f)?;
        let f = rhs.f.compose(&self.f)?;
        Self::general(g, f)
    }

    /// `(g, f)^{-1} = (1 / g(fbar), fbar)`.
    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.revert()?;
        let g = self.g.compose(&fbar)?.reciprocal()?;
        Self::general(g, fbar)
    }

    /// The fundamental theorem: `(g, f) h = g h(f)`.
    pub fn apply(&self, h: &Series) -> Result<Series> {
        Ok(&self.g * &h.compose(&self.f)?)
    }

    /// Row sums, from `g / (1 - f)`.
    pub fn row_sums(&self, n: usize) -> Result<Series> {
        require_order(self.order(), n)?;
        let one = Series::one(n);
        Ok(self.g.truncate(n).div(&(&one - &self.f.truncate(n)))?)
    }

    /// Diagonal sums `sum_k a_{n-k,k}`, from `g / (1 - x f)`.
    pub fn diagonal_sums(&self, n: usize) -> Result<Series> {
        require_order(self.order(), n)?;
        let one = Series::one(n);
        Ok(self
            .g
            .truncate(n)
            .div(&(&one - &self.f.truncate(n).mul_x()))?)
    }
}

/// An exponential Riordan pair `[g, f]`: entry `(n, k)` is `(n!/k!) [x^n] g f^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpRiordanPair {
    g: Series,
    f: Series,
}

impl ExpRiordanPair {
    /// Requires `g(0) = 1`, `f(0) = 0` and `f'(0) != 0`.
    pub fn new(g: Series, f: Series) -> Result<Self> {
        let p = RiordanPair::general(g, f)?;
        if !p.g.constant_term().is_one() {
            return Err(RiordanError::Invalid("g(0) must be 1"));
        }
        Ok(ExpRiordanPair { g: p.g, f: p.f })
    }

    pub fn from_exprs(g: &str, f: &str, order: usize) -> Result<Self> {
        Self::new(expand(g, order)?, expand(f, order)?)
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    pub fn matrix(&self, n: usize) -> Result<ExactMatrix> {
        require_order(self.order(), n)?;
        let cols = power_columns(&self.g, &self.f, n, n);
        let mut factorial = vec![BigInt::one(); n.max(1)];
        for i in 1..n {
            factorial[i] = &factorial[i - 1] * BigInt::from(i);
        }
        Ok(ExactMatrix::from_fn(n, n, |i, k| {
            if k > i {
                return Coef::zero();
            }
            let scale = Coef::new(factorial[i].clone(), factorial[k].clone());
            &cols[k].coeffs()[i] * scale
        }))
    }
}

/// An almost-Riordan triple `(a; g, f)`: column 0 holds `a`, column `k >= 1`
/// holds `x g f^{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostRiordanPair {
    a: Series,
    g: Series,
    f: Series,
}

impl AlmostRiordanPair {
    /// Requires `a(0) != 0`, `g(0) != 0`, `f(0) = 0` and `f'(0) != 0`.
    pub fn new(a: Series, g: Series, f: Series) -> Result<Self> {
        let p = RiordanPair::general(g, f)?;
        if a.order() == 0 || a.constant_term().is_zero() {
            return Err(RiordanError::Invalid("a(0) must be nonzero"));
        }
        Ok(AlmostRiordanPair { a, g: p.g, f: p.f })
    }

    pub fn from_exprs(a: &str, g: &str, f: &str, order: usize) -> Result<Self> {
        Self::new(expand(a, order)?, expand(g, order)?, expand(f, order)?)
    }

    pub fn a(&self) -> &Series {
        &self.a
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.a.order().min(self.g.order()).min(self.f.order())
    }

    pub fn matrix(&self, n: usize) -> Result<ExactMatrix> {
        require_order(self.order(), n)?;
        let xg = self.g.truncate(n).mul_x();
        let tail = power_columns(&xg, &self.f, n, n.saturating_sub(1));
        Ok(ExactMatrix::from_fn(n, n, |i, k| {
            if k == 0 {
                self.a.coeffs()[i].clone()
            } else {
                tail[k - 1].coeff_or_zero(i)
            }
        }))
    }
}

/// `d_n = sum_k M[n-k][k]` over the entries inside the matrix, for each row `n`.
pub fn matrix_diagonal_sums(m: &ExactMatrix) -> Vec<Coef> {
    (0..m.rows())
        .map(|n| {
            (0..=n)
                .filter(|&k| k < m.cols())
                .fold(Coef::zero(), |acc, k| acc + m.get(n - k, k))
        })
        .collect()
}

/// Reverses each row `n` within its first `n + 1` entries.
pub fn reflect_triangle(m: &ExactMatrix) -> Result<ExactMatrix> {
    if !m.is_square() || !m.is_lower_triangular() {
        return Err(RiordanError::Invalid(
            "reflection needs a square lower-triangular matrix",
        ));
    }
    Ok(ExactMatrix::from_fn(m.rows(), m.cols(), |n, k| {
        if k <= n {
            m.get(n, n - k).clone()
        } else {
            Coef::zero()
        }
    }))
}

fn indicator(n: usize, pred: impl Fn(usize, usize) -> Option<i64>) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| int(pred(i, j).unwrap_or(0)))
}

/// `Σ = (1/(1-x), x)`: lower-triangular ones.
pub fn sigma(n: usize) -> ExactMatrix {
    indicator(n, |i, j| (j <= i).then_some(1))
}

/// `Σ^{-1} = (1-x, x)`.
pub fn sigma_inv(n: usize) -> ExactMatrix {
    indicator(n, |i, j| match i.checked_sub(j) {
        Some(0) => Some(1),
        Some(1) => Some(-1),
        _ => None,
    })
}

/// `Σ^T`: upper-triangular ones.
pub fn sigma_t(n: usize) -> ExactMatrix {
    sigma(n).transpose()
}

/// `(1-x, x)^T = (Σ^T)^{-1}`.
pub fn one_minus_x_t(n: usize) -> ExactMatrix {
    sigma_inv(n).transpose()
}

/// Shift `U` with ones on the superdiagonal, so `U M` drops the top row of `M`.
pub fn shift_u(n: usize) -> ExactMatrix {
    indicator(n, |i, j| (j == i + 1).then_some(1))
}

/// `Σ~`: the identity with its first row filled with ones.
pub fn sigma_tilde(n: usize) -> ExactMatrix {
    indicator(n, |i, j| (i == 0 || i == j).then_some(1))
}

pub fn sigma_tilde_t(n: usize) -> ExactMatrix {
    sigma_tilde(n).transpose()
}

/// Binomial matrix `C(i, j)`, built by Pascal's rule.
pub fn binomial(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, 0, int(1));
        for j in 1..=i {
            let v = if j == i {
                int(1)
            } else {
                m.get(i - 1, j - 1) + m.get(i - 1, j)
            };
            m.set(i, j, v);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_pair(order: usize) -> RiordanPair {
        RiordanPair::from_exprs("(1+x)/(1-2*x)", "x*(1-x)/(1-3*x)", order).unwrap()
    }

    fn binom(n: u64, k: u64) -> i64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
    }

    #[test]
    fn pascal_matrix_is_binomial() {
        let m = RiordanPair::pascal(7).matrix(7).unwrap();
        let oracle = ExactMatrix::from_fn(7, 7, |n, k| {
            int(if k <= n { binom(n as u64, k as u64) } else { 0 })
        });
        assert_eq!(m, oracle);
        assert_eq!(binomial(7), oracle);
    }

    #[test]
    fn example_pair_matrix_and_inverse() {
        let p = example_pair(6);
        let m = p.matrix(6).unwrap();
        assert_eq!(
            m,
            ExactMatrix::lower_from_rows(&[
                &[1][..],
                &[3, 1],
                &[6, 5, 1],
                &[12, 18, 7, 1],
                &[24, 60, 34, 9, 1],
                &[48, 192, 144, 54, 11, 1],
            ])
        );
        let inv = p.inverse().unwrap().matrix(6).unwrap();
        assert_eq!(
            inv,
            ExactMatrix::lower_from_rows(&[
                &[1][..],
                &[-3, 1],
                &[9, -5, 1],
                &[-21, 17, -7, 1],
                &[39, -43, 29, -9, 1],
                &[-63, 83, -85, 45, -11, 1],
            ])
        );
        assert_eq!(inv, m.inverse().unwrap());
    }

    #[test]
    fn insufficient_order() {
        assert_eq!(
            RiordanPair::pascal(4).matrix(5),
            Err(RiordanError::InsufficientOrder {
                needed: 5,
                available: 4
            })
        );
    }

    #[test]
    fn normalization_enforced() {
        let two = Series::constant(int(2), 4);
        assert!(RiordanPair::new(two.clone(), Series::x(4)).is_err());
        assert!(RiordanPair::general(two, Series::x(4)).is_ok());
        assert!(RiordanPair::general(Series::one(4), Series::one(4)).is_err());
        assert!(RiordanPair::new(Series::one(4), Series::x(4).scale(&int(-1))).is_err());
    }

    #[test]
    fn multiply_matches_matrix_product() {
        let p = example_pair(8);
        let q = RiordanPair::pascal(8);
        let pq = p.multiply(&q).unwrap();
        assert_eq!(
            pq.matrix(8).unwrap(),
            &p.matrix(8).unwrap() * &q.matrix(8).unwrap()
        );
        let id = RiordanPair::identity(8);
        assert_eq!(p.multiply(&id).unwrap(), p);
        let sigma_pair = RiordanPair::new(Series::geometric(int(1), 8), Series::x(8)).unwrap();
        let cps = sigma_pair.multiply(&p).unwrap();
        assert_eq!(
            cps.g(),
            &p.g().div(&Series::from_ints_padded(&[1, -1], 8)).unwrap()
        );
        assert_eq!(cps.f(), p.f());
    }

    #[test]
    fn pascal_inverse() {
        let inv = RiordanPair::pascal(6).inverse().unwrap();
        let row5: Vec<Coef> = inv.matrix(6).unwrap().row(5).to_vec();
        assert_eq!(row5, [-1, 5, -10, 10, -5, 1].map(int).to_vec());
        assert_eq!(
            RiordanPair::identity(5).inverse().unwrap(),
            RiordanPair::identity(5)
        );
    }

    #[test]
    fn ftra_and_sums() {
        let p = example_pair(7);
        let h = Series::geometric(int(1), 7);
        let applied = p.apply(&h).unwrap();
        assert_eq!(applied, Series::from_ints(&[1, 4, 12, 38, 128, 450, 1624]));
        assert_eq!(p.row_sums(7).unwrap(), applied);
        let col = p.matrix(7).unwrap().apply(h.coeffs());
        assert_eq!(col, applied.coeffs());
        let fib = RiordanPair::pascal(8).diagonal_sums(8).unwrap();
        assert_eq!(fib, Series::from_ints(&[1, 1, 2, 3, 5, 8, 13, 21]));
        assert_eq!(
            fib.coeffs(),
            &matrix_diagonal_sums(&RiordanPair::pascal(8).matrix(8).unwrap())[..]
        );
        assert_eq!(
            RiordanPair::identity(4).row_sums(4).unwrap(),
            Series::from_ints(&[1, 1, 1, 1])
        );
        assert_eq!(p.apply(&Series::one(7)).unwrap(), p.g().truncate(7));
    }

    #[test]
    fn exponential_arrays() {
        let a = ExpRiordanPair::from_exprs("1/(1-x)^2", "log(1-x)", 6).unwrap();
        let ma = a.matrix(6).unwrap();
        assert_eq!(
            ma,
            ExactMatrix::lower_from_rows(&[
                &[1][..],
                &[2, -1],
                &[6, -5, 1],
                &[24, -26, 9, -1],
                &[120, -154, 71, -14, 1],
                &[720, -1044, 580, -155, 20, -1],
            ])
        );
        let b = ExpRiordanPair::from_exprs("exp(2*x)", "1-exp(x)", 6).unwrap();
        let mb = b.matrix(6).unwrap();
        assert_eq!(
            mb,
            ExactMatrix::lower_from_rows(&[
                &[1][..],
                &[2, -1],
                &[4, -5, 1],
                &[8, -19, 9, -1],
                &[16, -65, 55, -14, 1],
                &[32, -211, 285, -125, 20, -1],
            ])
        );
        for n in 1..=10 {
            let a = ExpRiordanPair::from_exprs("1/(1-x)^2", "log(1-x)", n.max(2)).unwrap();
            let b = ExpRiordanPair::from_exprs("exp(2*x)", "1-exp(x)", n.max(2)).unwrap();
            assert_eq!(
                a.matrix(n).unwrap().inverse().unwrap(),
                b.matrix(n).unwrap()
            );
        }
        let id = ExpRiordanPair::new(Series::one(4), Series::x(4)).unwrap();
        assert_eq!(id.matrix(4).unwrap(), ExactMatrix::identity(4));
    }

    #[test]
    fn almost_riordan_arrays() {
        let a = AlmostRiordanPair::from_exprs("(1+2*x)/(1-x^2)", "1/((x-1)*(1+x)^2)", "x/(1+x)", 7)
            .unwrap();
        assert_eq!(
            a.matrix(7).unwrap(),
            ExactMatrix::lower_from_rows(&[
                &[1][..],
                &[2, -1],
                &[1, 1, -1],
                &[2, -2, 2, -1],
                &[1, 2, -4, 3, -1],
                &[2, -3, 6, -7, 4, -1],
                &[1, 3, -9, 13, -11, 5, -1],
            ])
        );
        let c = AlmostRiordanPair::from_exprs("(1+x)/(1-x)", "-1", "x", 6).unwrap();
        let mc = c.matrix(6).unwrap();
        assert_eq!(mc.col(0), [1, 2, 2, 2, 2, 2].map(int).to_vec());
        assert_eq!(&mc * &mc, ExactMatrix::identity(6));
        let id = AlmostRiordanPair::from_exprs("1", "1", "x", 5).unwrap();
        assert_eq!(id.matrix(5).unwrap(), ExactMatrix::identity(5));
    }

    #[test]
    fn constant_matrices() {
        assert_eq!(&sigma(5) * &sigma_inv(5), ExactMatrix::identity(5));
        assert_eq!(&sigma_t(5) * &one_minus_x_t(5), ExactMatrix::identity(5));
        let m = RiordanPair::pascal(5).matrix(5).unwrap();
        let um = &shift_u(5) * &m;
        assert_eq!(um.truncate(4, 5), m.remove_top_row());
        assert!(um.row(4).iter().all(|c| c.is_zero()));
        assert_eq!(
            sigma_tilde(3),
            ExactMatrix::from_rows(&[[1, 1, 1], [0, 1, 0], [0, 0, 1]])
        );
        assert_eq!(sigma_tilde_t(3), sigma_tilde(3).transpose());
    }

    #[test]
    fn reflection() {
        let t = RiordanPair::from_exprs("1/(1-x)", "x*(1+x)", 6)
            .unwrap()
            .matrix(6)
            .unwrap();
        let r = reflect_triangle(&t).unwrap();
        assert_eq!(
            r,
            ExactMatrix::lower_from_rows(&[
                &[1][..],
                &[1, 1],
                &[1, 2, 1],
                &[1, 3, 2, 1],
                &[1, 4, 4, 2, 1],
                &[1, 5, 7, 4, 2, 1],
            ])
        );
        assert_eq!(reflect_triangle(&r).unwrap(), t);
        let b = binomial(6);
        assert_eq!(reflect_triangle(&b).unwrap(), b);
        assert!(reflect_triangle(&sigma_t(3)).is_err());
    }

    #[test]
    fn diagonal_sums_of_identity() {
        let d = matrix_diagonal_sums(&ExactMatrix::identity(5));
        assert_eq!(d, [1, 0, 1, 0, 1].map(int).to_vec());
    }
}
