//! Truncated double series in `x` and `y`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::series::{int, ratio, Coef, Series, SeriesError};

/// Coefficient grid: entry `(n, k)` is the coefficient of `x^n y^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivariateSeries {
    order_x: usize,
    order_y: usize,
    grid: Vec<Vec<Coef>>,
}

impl BivariateSeries {
    pub fn zero(order_x: usize, order_y: usize) -> Self {
        BivariateSeries {
            order_x,
            order_y,
            grid: vec![vec![Coef::zero(); order_y]; order_x],
        }
    }

    pub fn constant(c: Coef, order_x: usize, order_y: usize) -> Self {
        let mut s = Self::zero(order_x, order_y);
        if order_x > 0 && order_y > 0 {
            s.grid[0][0] = c;
        }
        s
    }

    pub fn one(order_x: usize, order_y: usize) -> Self {
        Self::constant(Coef::one(), order_x, order_y)
    }

    pub fn x(order_x: usize, order_y: usize) -> Self {
        let mut s = Self::zero(order_x, order_y);
        if order_x > 1 && order_y > 0 {
            s.grid[1][0] = Coef::one();
        }
        s
    }

    pub fn y(order_x: usize, order_y: usize) -> Self {
        let mut s = Self::zero(order_x, order_y);
        if order_x > 0 && order_y > 1 {
            s.grid[0][1] = Coef::one();
        }
        s
    }

    /// Builds from a grid of rows (`grid[n][k]`); all rows must share a length.
    pub fn from_grid(grid: Vec<Vec<Coef>>) -> Self {
        let order_x = grid.len();
        let order_y = grid.first().map_or(0, |r| r.len());
        assert!(
            grid.iter().all(|r| r.len() == order_y),
            "ragged coefficient grid"
        );
        BivariateSeries {
            order_x,
            order_y,
            grid,
        }
    }

    /// Embeds an `x`-series (constant in `y`).
    pub fn from_x_series(s: &Series, order_y: usize) -> Self {
        let mut out = Self::zero(s.order(), order_y);
        if order_y > 0 {
            for (n, c) in s.coeffs().iter().enumerate() {
                out.grid[n][0] = c.clone();
            }
        }
        out
    }

    pub fn order_x(&self) -> usize {
        self.order_x
    }

    pub fn order_y(&self) -> usize {
        self.order_y
    }

    pub fn get(&self, n: usize, k: usize) -> &Coef {
        &self.grid[n][k]
    }

    pub fn grid(&self) -> &[Vec<Coef>] {
        &self.grid
    }

    pub fn into_grid(self) -> Vec<Vec<Coef>> {
        self.grid
    }

    /// Coefficient of `y^k` as a series in `x`.
    pub fn y_coefficient(&self, k: usize) -> Series {
        Series::new(self.grid.iter().map(|r| r[k].clone()).collect())
    }

    pub fn truncate(&self, order_x: usize, order_y: usize) -> Self {
        let ox = order_x.min(self.order_x);
        let oy = order_y.min(self.order_y);
        BivariateSeries {
            order_x: ox,
            order_y: oy,
            grid: self.grid[..ox].iter().map(|r| r[..oy].to_vec()).collect(),
        }
    }

    pub fn constant_term(&self) -> Coef {
        if self.order_x > 0 && self.order_y > 0 {
            self.grid[0][0].clone()
        } else {
            Coef::zero()
        }
    }

    /// Smallest `n` such that some `x^n y^k` coefficient is nonzero.
    pub fn x_valuation(&self) -> Option<usize> {
        self.grid
            .iter()
            .position(|row| row.iter().any(|c| !c.is_zero()))
    }

    /// Divides by `x^k`; rows below `k` must vanish. The x-order drops by `k`.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, SeriesError> {
        if let Some(v) = self.x_valuation() {
            if v < k {
                return Err(SeriesError::Cancellation {
                    numerator: v,
                    divisor: k,
                });
            }
        }
        let grid: Vec<Vec<Coef>> = self.grid.iter().skip(k).cloned().collect();
        Ok(BivariateSeries {
            order_x: grid.len(),
            order_y: self.order_y,
            grid,
        })
    }

    pub fn scale(&self, c: &Coef) -> Self {
        BivariateSeries {
            order_x: self.order_x,
            order_y: self.order_y,
            grid: self
                .grid
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(&Coef, &Coef) -> Coef) -> Self {
        let ox = self.order_x.min(rhs.order_x);
        let oy = self.order_y.min(rhs.order_y);
        let grid = (0..ox)
            .map(|n| {
                (0..oy)
                    .map(|k| op(&self.grid[n][k], &rhs.grid[n][k]))
                    .collect()
            })
            .collect();
        BivariateSeries {
            order_x: ox,
            order_y: oy,
            grid,
        }
    }

    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let (ox, oy) = (self.order_x, self.order_y);
        if ox == 0 || oy == 0 {
            return Ok(self.clone());
        }
        let c0 = &self.grid[0][0];
        if c0.is_zero() {
            return Err(SeriesError::NonUnit);
        }
        let inv0 = c0.recip();
        let mut r = Self::zero(ox, oy);
        for n in 0..ox {
            for k in 0..oy {
                if n == 0 && k == 0 {
                    r.grid[0][0] = inv0.clone();
                    continue;
                }
                let mut acc = Coef::zero();
                for i in 0..=n {
                    for j in 0..=k {
                        if (i, j) == (0, 0) || self.grid[i][j].is_zero() {
                            continue;
                        }
                        acc += &self.grid[i][j] * &r.grid[n - i][k - j];
                    }
                }
                r.grid[n][k] = -acc * &inv0;
            }
        }
        Ok(r)
    }

    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let ox = self.order_x.min(divisor.order_x);
        let oy = self.order_y.min(divisor.order_y);
        let recip = divisor.truncate(ox, oy).reciprocal()?;
        Ok(&self.truncate(ox, oy) * &recip)
    }

    /// Division that cancels the common power of `x` first (see [`Series::div_cancelling`]).
    pub fn div_cancelling(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let ox = self.order_x.min(divisor.order_x);
        let oy = self.order_y.min(divisor.order_y);
        let den = divisor.truncate(ox, oy);
        let v = den.x_valuation().ok_or(SeriesError::DivisionByZero)?;
        if v == 0 {
            return self.div(divisor);
        }
        let num = self.truncate(ox, oy).div_x_pow(v)?;
        num.div(&den.div_x_pow(v)?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut acc = Self::one(self.order_x, self.order_y);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Sum of `weight(m) * v^m` for `m >= start` until the powers of `v`
    /// vanish. `v` must have zero constant term so the sum is finite.
    fn power_sum(&self, start: usize, weight: impl Fn(usize) -> Coef) -> Self {
        let (ox, oy) = (self.order_x, self.order_y);
        let mut acc = if start == 0 {
            Self::one(ox, oy).scale(&weight(0))
        } else {
            Self::zero(ox, oy)
        };
        let mut power = Self::one(ox, oy);
        let mut m = 0;
        loop {
            m += 1;
            power = &power * self;
            if power.x_valuation().is_none() {
                break;
            }
            if m >= start {
                acc = &acc + &power.scale(&weight(m));
            }
        }
        acc
    }

    pub fn exp0(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::ExpDomain);
        }
        let mut factorials = vec![Coef::one()];
        let limit = self.order_x + self.order_y + 1;
        for m in 1..=limit {
            let next = &factorials[m - 1] * int(m as i64);
            factorials.push(next);
        }
        Ok(self.power_sum(0, |m| factorials[m].recip()))
    }

    pub fn log1(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_one() && self.order_x > 0 && self.order_y > 0 {
            return Err(SeriesError::LogDomain);
        }
        let v = self - &Self::one(self.order_x, self.order_y);
        Ok(v.power_sum(1, |m| {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            ratio(sign, m as i64)
        }))
    }

    /// `self^(p/q)` by the binomial series; needs constant term 1.
    pub fn pow_rational(&self, p: i64, q: i64) -> Result<Self, SeriesError> {
        if q <= 0 {
            return Err(SeriesError::BadExponent);
        }
        if !self.constant_term().is_one() && self.order_x > 0 && self.order_y > 0 {
            return Err(SeriesError::PowDomain);
        }
        let alpha = ratio(p, q);
        let limit = self.order_x + self.order_y + 1;
        let mut binoms = vec![Coef::one()];
        for m in 0..limit {
            let next = &binoms[m] * (&alpha - int(m as i64)) / int(m as i64 + 1);
            binoms.push(next);
        }
        let v = self - &Self::one(self.order_x, self.order_y);
        Ok(v.power_sum(0, |m| binoms[m].clone()))
    }
}

impl<'a> Add<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let ox = self.order_x.min(rhs.order_x);
        let oy = self.order_y.min(rhs.order_y);
        let mut out = BivariateSeries::zero(ox, oy);
        for i in 0..ox {
            for j in 0..oy {
                let a = &self.grid[i][j];
                if a.is_zero() {
                    continue;
                }
                for n in 0..ox - i {
                    for k in 0..oy - j {
                        let b = &rhs.grid[n][k];
                        if !b.is_zero() {
                            out.grid[i + n][j + k] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;
    fn neg(self) -> BivariateSeries {
        self.scale(&int(-1))
    }
}
