//! Exact univariate polynomials in `k` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient `i` multiplies `k^i`. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and derived equality is exact
/// polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coefficients(coeffs.iter().map(|&c| rational(c)).collect())
    }

    /// `c * k^degree`
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree];
        coeffs.push(c);
        Self::from_coefficients(coeffs)
    }

    /// The polynomial `k`.
    pub fn k() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, k: i64) -> BigRational {
        self.evaluate_at(&rational(k))
    }

    pub fn evaluate_at(&self, k: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * k + c)
    }

    /// Newton divided differences. The result has degree below the number of
    /// points.
    pub fn interpolate(points: &[(i64, BigRational)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::NoInterpolationPoints);
        }
        for (i, (x, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(y, _)| y == x) {
                return Err(Error::DuplicateAbscissa(*x));
            }
        }
        let xs: Vec<BigRational> = points.iter().map(|(x, _)| rational(*x)).collect();
        let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
        let n = points.len();
        for level in 1..n {
            for i in (level..n).rev() {
                table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        // expand c0 + (k-x0)(c1 + (k-x1)(c2 + ...)) from the inside out
        let mut p = Polynomial::zero();
        for i in (0..n).rev() {
            p = p.mul_linear(&xs[i]) + Polynomial::from_coefficients(vec![table[i].clone()]);
        }
        Ok(p)
    }

    /// Interpolates `count` on `k = 1..=degree_bound+1`, then resamples at
    /// `k = degree_bound+2` and fails if the interpolant disagrees there.
    pub fn from_samples<F>(degree_bound: usize, mut count: F) -> Result<Self>
    where
        F: FnMut(i64) -> Result<BigRational>,
    {
        let nodes = degree_bound as i64 + 1;
        let points = (1..=nodes)
            .map(|k| Ok((k, count(k)?)))
            .collect::<Result<Vec<_>>>()?;
        let p = Self::interpolate(&points)?;
        let check = nodes + 1;
        let actual = count(check)?;
        let predicted = p.evaluate(check);
        if predicted != actual {
            return Err(Error::PolynomialityViolation {
                nodes,
                check,
                predicted: predicted.to_string(),
                actual: actual.to_string(),
            });
        }
        Ok(p)
    }

    /// `self * (k - root)`
    fn mul_linear(&self, root: &BigRational) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] += c;
            coeffs[i] -= c * root;
        }
        Self::from_coefficients(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coefficients(self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_coefficients(coeffs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coefficients(coeffs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

/// Decreasing degree, e.g. `1/6*k^3 + 1/2*k^2 - 2/3*k`. Unit coefficients are
/// elided on non-constant terms.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "k".to_owned(),
                _ => format!("k^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}
