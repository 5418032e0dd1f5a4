//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` knows the coefficients of `x^0 .. x^{N-1}` and
//! nothing beyond. Binary operations truncate to the smaller operand order, so
//! the first `N` coefficients of any result depend only on the first `N`
//! coefficients of the inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact coefficient type used throughout the crate.
pub type Coef = BigRational;

/// Integer coefficient.
pub fn int(v: i64) -> Coef {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational coefficient `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Coef {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats a coefficient as `n` or `p/q`.
pub fn format_coef(c: &Coef) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient index {index} is out of range for a series of order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("divisor has zero constant term")]
    NonUnit,
    #[error("division by a series that is zero to the available order")]
    DivisionByZero,
    #[error("numerator vanishes to order {numerator} at x = 0 but the divisor to order {divisor}")]
    Cancellation { numerator: usize, divisor: usize },
    #[error("inner series of a composition must have zero constant term")]
    CompositionDomain,
    #[error("reversion needs f(0) = 0 and a nonzero linear coefficient")]
    ReversionDomain,
    #[error("logarithm needs constant term 1")]
    LogDomain,
    #[error("exponential needs constant term 0")]
    ExpDomain,
    #[error("rational power needs constant term 1")]
    PowDomain,
    #[error("exponent denominator must be positive")]
    BadExponent,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Coef>,
}

impl Series {
    /// Series whose order is the number of supplied coefficients.
    pub fn new(coeffs: Vec<Coef>) -> Self {
        Series { coeffs }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Series::new(values.iter().map(|&v| int(v)).collect())
    }

    /// Polynomial coefficients zero-padded (or cut) to `order`.
    pub fn from_ints_padded(values: &[i64], order: usize) -> Self {
        let mut coeffs: Vec<Coef> = values.iter().take(order).map(|&v| int(v)).collect();
        coeffs.resize(order, Coef::zero());
        Series::new(coeffs)
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![Coef::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Coef::one(), order)
    }

    pub fn constant(c: Coef, order: usize) -> Self {
        let mut s = Series::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::monomial(Coef::one(), 1, order)
    }

    /// `c * x^k` at the given order.
    pub fn monomial(c: Coef, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `1 / (1 - a x)` expanded to `order`.
    pub fn geometric(a: Coef, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut p = Coef::one();
        for _ in 0..order {
            coeffs.push(p.clone());
            p *= &a;
        }
        Series::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coef> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Coef, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    /// Coefficient of `x^n`, or zero past the known order.
    pub(crate) fn coeff_or_zero(&self, n: usize) -> Coef {
        self.coeffs.get(n).cloned().unwrap_or_else(Coef::zero)
    }

    pub fn constant_term(&self) -> Coef {
        self.coeff_or_zero(0)
    }

    /// Keeps at most `order` coefficients.
    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs.iter().take(order).cloned().collect())
    }

    /// Index of the first nonzero coefficient, `None` if all known coefficients vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// True when every known coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Coef) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x * self`, keeping the order (the top coefficient falls off).
    pub fn mul_x(&self) -> Series {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n);
        if n > 0 {
            coeffs.push(Coef::zero());
            coeffs.extend(self.coeffs[..n - 1].iter().cloned());
        }
        Series::new(coeffs)
    }

    /// `self / x^k`; the first `k` coefficients must vanish. The order drops by `k`.
    pub fn div_x_pow(&self, k: usize) -> Result<Series, SeriesError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(SeriesError::Cancellation {
                numerator: self.valuation().unwrap_or(self.order()),
                divisor: k,
            });
        }
        Ok(Series::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Series, SeriesError> {
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NonUnit);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Coef> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = Coef::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(Series::new(out))
    }

    /// `self / divisor`; the divisor needs a nonzero constant term.
    pub fn div(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let n = self.order().min(divisor.order());
        let recip = divisor.truncate(n).reciprocal()?;
        Ok(&self.truncate(n) * &recip)
    }

    /// Division that first cancels the common power of `x`.
    ///
    /// If the divisor vanishes to order `v` at zero, the numerator must vanish
    /// to order at least `v`; both are divided by `x^v` and the quotient has
    /// order `min(orders) - v`.
    pub fn div_cancelling(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let n = self.order().min(divisor.order());
        let v = divisor
            .truncate(n)
            .valuation()
            .ok_or(SeriesError::DivisionByZero)?;
        if v == 0 {
            return self.div(divisor);
        }
        let num = self.truncate(n).div_x_pow(v)?;
        let den = divisor.truncate(n).div_x_pow(v)?;
        num.div(&den)
    }

    /// Integer power; negative exponents need an invertible constant term.
    pub fn pow(&self, e: i64) -> Result<Series, SeriesError> {
        let base = if e < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `self(inner(x))` by Horner's rule; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series, SeriesError> {
        let n = self.order().min(inner.order());
        if n > 0 && !inner.coeffs[0].is_zero() {
            return Err(SeriesError::CompositionDomain);
        }
        let inner = inner.truncate(n);
        let mut acc = Series::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = &acc * &inner;
            if n > 0 {
                acc.coeffs[0] += c;
            }
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[x^n] rev = (1/n) [x^{n-1}] (x / f)^n`.
    pub fn revert(&self) -> Result<Series, SeriesError> {
        let n = self.order();
        if n < 2 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(SeriesError::ReversionDomain);
        }
        // x / f has order n - 1 and a unit constant term.
        let h = self.div_x_pow(1)?.reciprocal()?;
        let mut out = vec![Coef::zero(); n];
        let mut power = Series::one(n - 1);
        for k in 1..n {
            power = &power * &h;
            out[k] = &power.coeffs[k - 1] / int(k as i64);
        }
        Ok(Series::new(out))
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// Formal antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(Coef::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(k as i64 + 1));
        }
        Series::new(coeffs)
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log1(&self) -> Result<Series, SeriesError> {
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogDomain);
        }
        let quotient = self.derivative().div(&self.truncate(n - 1))?;
        Ok(quotient.integral())
    }

    /// Formal exponential of a series with zero constant term.
    pub fn exp0(&self) -> Result<Series, SeriesError> {
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpDomain);
        }
        // e' = u' e  =>  m e_m = sum_{k=1}^m k u_k e_{m-k}
        let mut e: Vec<Coef> = Vec::with_capacity(n);
        e.push(Coef::one());
        for m in 1..n {
            let mut acc = Coef::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * int(k as i64) * &e[m - k];
                }
            }
            e.push(acc / int(m as i64));
        }
        Ok(Series::new(e))
    }

    /// `self^(p/q)` as `exp((p/q) log self)`; needs constant term 1.
    pub fn pow_rational(&self, p: i64, q: i64) -> Result<Series, SeriesError> {
        if q <= 0 {
            return Err(SeriesError::BadExponent);
        }
        if self.order() > 0 && !self.coeffs[0].is_one() {
            return Err(SeriesError::PowDomain);
        }
        self.log1()?.scale(&ratio(p, q)).exp0()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_coef).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::new((0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::new((0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;
    /// Truncated Cauchy product.
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = vec![Coef::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series::new(out)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
