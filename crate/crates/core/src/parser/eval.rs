//! Expansion of parsed expressions into truncated series.

use num_traits::One;

use super::ast::{Expr, ExprKind};
use super::ExprError;
use crate::bivariate::BivariateSeries;
use crate::series::{Coef, Series, SeriesError};

/// Maximum number of times the working order is raised to make up for
/// orders consumed by `x`-cancelling divisions.
const MAX_WIDENING: usize = 8;

/// The operations an expression needs from its value domain.
trait Domain: Sized {
    fn literal(c: &Coef, shape: (usize, usize)) -> Self;
    fn var_x(shape: (usize, usize)) -> Self;
    fn var_y(shape: (usize, usize)) -> Option<Self>;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, rhs: &Self) -> Result<Self, SeriesError>;
    fn pow(&self, e: &Coef) -> Result<Self, SeriesError>;
    fn log1(&self) -> Result<Self, SeriesError>;
    fn exp0(&self) -> Result<Self, SeriesError>;
    fn x_order(&self) -> usize;
}

fn split_exponent(e: &Coef) -> (i64, i64) {
    let p = i64::try_from(e.numer()).expect("exponent numerator fits in i64");
    let q = i64::try_from(e.denom()).expect("exponent denominator fits in i64");
    (p, q)
}

impl Domain for Series {
    fn literal(c: &Coef, shape: (usize, usize)) -> Self {
        Series::constant(c.clone(), shape.0)
    }
    fn var_x(shape: (usize, usize)) -> Self {
        Series::x(shape.0)
    }
    fn var_y(_: (usize, usize)) -> Option<Self> {
        None
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.div_cancelling(rhs)
    }
    fn pow(&self, e: &Coef) -> Result<Self, SeriesError> {
        let (p, q) = split_exponent(e);
        if q == 1 {
            Series::pow(self, p)
        } else {
            self.pow_rational(p, q)
        }
    }
    fn log1(&self) -> Result<Self, SeriesError> {
        Series::log1(self)
    }
    fn exp0(&self) -> Result<Self, SeriesError> {
        Series::exp0(self)
    }
    fn x_order(&self) -> usize {
        self.order()
    }
}

impl Domain for BivariateSeries {
    fn literal(c: &Coef, shape: (usize, usize)) -> Self {
        BivariateSeries::constant(c.clone(), shape.0, shape.1)
    }
    fn var_x(shape: (usize, usize)) -> Self {
        BivariateSeries::x(shape.0, shape.1)
    }
    fn var_y(shape: (usize, usize)) -> Option<Self> {
        Some(BivariateSeries::y(shape.0, shape.1))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.div_cancelling(rhs)
    }
    fn pow(&self, e: &Coef) -> Result<Self, SeriesError> {
        let (p, q) = split_exponent(e);
        if q == 1 {
            BivariateSeries::pow(self, p)
        } else {
            self.pow_rational(p, q)
        }
    }
    fn log1(&self) -> Result<Self, SeriesError> {
        BivariateSeries::log1(self)
    }
    fn exp0(&self) -> Result<Self, SeriesError> {
        BivariateSeries::exp0(self)
    }
    fn x_order(&self) -> usize {
        self.order_x()
    }
}

fn eval<D: Domain>(e: &Expr, shape: (usize, usize)) -> Result<D, ExprError> {
    let domain = |source: SeriesError| ExprError::Domain { pos: e.pos, source };
    Ok(match &e.kind {
        ExprKind::Literal(c) => D::literal(c, shape),
        ExprKind::VarX => D::var_x(shape),
        ExprKind::VarY => D::var_y(shape).ok_or(ExprError::Arity { pos: e.pos })?,
        ExprKind::Negate(a) => eval::<D>(a, shape)?.neg(),
        ExprKind::Add(a, b) => eval::<D>(a, shape)?.add(&eval::<D>(b, shape)?),
        ExprKind::Sub(a, b) => eval::<D>(a, shape)?.sub(&eval::<D>(b, shape)?),
        ExprKind::Mul(a, b) => eval::<D>(a, shape)?.mul(&eval::<D>(b, shape)?),
        ExprKind::Div(a, b) => eval::<D>(a, shape)?
            .div(&eval::<D>(b, shape)?)
            .map_err(domain)?,
        ExprKind::Pow(base, exponent) => {
            if exponent.is_one() {
                eval::<D>(base, shape)?
            } else {
                eval::<D>(base, shape)?.pow(exponent).map_err(domain)?
            }
        }
        ExprKind::Log(a) => eval::<D>(a, shape)?.log1().map_err(domain)?,
        ExprKind::Exp(a) => eval::<D>(a, shape)?.exp0().map_err(domain)?,
    })
}

/// Evaluates at increasing working orders until the requested `x`-order
/// survives every cancelling division.
fn eval_widening<D: Domain>(
    e: &Expr,
    order_x: usize,
    order_y: usize,
) -> Result<(D, usize), ExprError> {
    let mut working = order_x;
    for _ in 0..MAX_WIDENING {
        let value: D = eval(e, (working, order_y))?;
        let got = value.x_order();
        if got >= order_x {
            return Ok((value, order_x));
        }
        working += order_x - got;
    }
    Err(ExprError::Domain {
        pos: e.pos,
        source: SeriesError::DivisionByZero,
    })
}

/// Expands an `x`-only expression to `order` coefficients.
pub fn eval_univariate(e: &Expr, order: usize) -> Result<Series, ExprError> {
    if let Some(pos) = e.find_y() {
        return Err(ExprError::Arity { pos });
    }
    let (s, order): (Series, usize) = eval_widening(e, order, 1)?;
    Ok(s.truncate(order))
}

/// Expands an expression in `x` and `y` to an `order_x` by `order_y` grid.
pub fn eval_bivariate(
    e: &Expr,
    order_x: usize,
    order_y: usize,
) -> Result<BivariateSeries, ExprError> {
    let (s, order_x): (BivariateSeries, usize) = eval_widening(e, order_x, order_y)?;
    Ok(s.truncate(order_x, order_y))
}
