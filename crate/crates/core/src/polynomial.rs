//! Exact polynomials in one variable.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::series::{format_coef, int, Coef, Series, SeriesError};

/// Polynomial with no trailing zero coefficients. The zero polynomial has no
/// coefficients and degree `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Coef>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Coef>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Polynomial::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Coef::one())
    }

    pub fn constant(c: Coef) -> Self {
        Polynomial::new(vec![c])
    }

    /// Reads a series as a polynomial; everything it knows becomes a coefficient.
    pub fn from_series(s: &Series) -> Self {
        Polynomial::new(s.coeffs().to_vec())
    }

    /// Series of the given order; fails if the degree does not fit.
    pub fn to_series(&self, order: usize) -> Result<Series, SeriesError> {
        if let Some(d) = self.degree() {
            if d >= order {
                return Err(SeriesError::OutOfRange { index: d, order });
            }
        }
        let mut c = self.coeffs.clone();
        c.resize(order, Coef::zero());
        Ok(Series::new(c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Coef {
        self.coeffs.get(k).cloned().unwrap_or_else(Coef::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_constant(&self, c: &Coef) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(Coef::zero());
        }
        coeffs[0] += c;
        Polynomial::new(coeffs)
    }

    /// Rising factorial `base (base + 1) ... (base + i - 1)`; the empty product is 1.
    pub fn pochhammer_rising(base: &Polynomial, i: usize) -> Polynomial {
        (0..i).fold(Polynomial::one(), |acc, j| {
            &acc * &base.add_constant(&int(j as i64))
        })
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Coef::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    /// Highest degree first, e.g. `x^2 - 3x + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let body = format_coef(&mag);
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{body}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer() {
        let base = Polynomial::from_ints(&[1, -1]);
        assert_eq!(Polynomial::pochhammer_rising(&base, 0), Polynomial::one());
        assert_eq!(Polynomial::pochhammer_rising(&base, 1), base);
        assert_eq!(
            Polynomial::pochhammer_rising(&base, 2),
            Polynomial::from_ints(&[2, -3, 1])
        );
    }

    #[test]
    fn display_and_trim() {
        let p = Polynomial::from_ints(&[11, -25, 22, -8, 1, 0, 0]);
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.to_string(), "x^4 - 8x^3 + 22x^2 - 25x + 11");
        assert_eq!(
            Polynomial::from_ints(&[5, -8, 5, -1]).to_string(),
            "-x^3 + 5x^2 - 8x + 5"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn series_conversion() {
        let p = Polynomial::from_ints(&[1, 2, 3]);
        assert_eq!(p.to_series(4).unwrap(), Series::from_ints(&[1, 2, 3, 0]));
        assert!(p.to_series(2).is_err());
        assert_eq!(
            Polynomial::from_series(&Series::from_ints(&[1, 2, 3, 0])),
            p
        );
    }
}
