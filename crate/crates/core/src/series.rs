//! Truncated formal power series over a generic scalar.
//!
//! A [`PowerSeries`] always carries its truncation order explicitly: the
//! coefficient of `x^j` is known for `0 <= j <= order` and undefined beyond.
//! Binary operations on series of different orders truncate to the smaller
//! order, so no operation ever pads with zeros that were not computed.
//!
//! The exact instantiation used for path counting is
//! [`Series`](crate::Series) (big rationals); the kernel itself only needs
//! field arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, Num};
use thiserror::Error;

/// Field-like scalar the series kernel can work over.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("square root requires constant term 1, found {constant}")]
    SqrtConstantTerm { constant: String },
    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("division by a zero scalar")]
    ZeroScalar,
    #[error("cannot divide by x^{k}: coefficient of x^{index} is {value}, expected 0")]
    NonzeroLeadingCoefficient { k: usize, index: usize, value: String },
    #[error("cannot divide a series of order {order} by x^{k}")]
    ShiftExceedsOrder { k: usize, order: usize },
}

/// Truncated power series `c_0 + c_1 x + ... + c_order x^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// An empty vector is read as the zero series of order 0.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Self { coeffs }
    }

    /// Polynomial `coeffs` viewed as a series of the given order.
    ///
    /// Missing high coefficients are genuine zeros here (the input is a
    /// polynomial), extra ones are dropped.
    pub fn from_polynomial(coeffs: &[T], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|j| coeffs.get(j).cloned().unwrap_or_else(T::zero))
            .collect();
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^j`, or `None` past the truncation order.
    pub fn coeff(&self, j: usize) -> Option<&T> {
        self.coeffs.get(j)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Drops every coefficient above `order`. A larger `order` is a no-op.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        Self { coeffs: self.coeffs[..keep].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().cloned().map(|c| -c).collect() }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|j| {
                (0..=j).fold(T::zero(), |acc, i| {
                    acc + self.coeffs[i].clone() * other.coeffs[j - i].clone()
                })
            })
            .collect();
        Self { coeffs }
    }

    /// Square root with constant term 1.
    ///
    /// Coefficients follow `s_k = (a_k - sum_{i=1}^{k-1} s_i s_{k-i}) / 2`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm { constant: self.coeffs[0].to_string() });
        }
        let two = T::one() + T::one();
        let mut s: Vec<T> = Vec::with_capacity(self.coeffs.len());
        s.push(T::one());
        for k in 1..self.coeffs.len() {
            let cross = (1..k).fold(T::zero(), |acc, i| acc + s[i].clone() * s[k - i].clone());
            s.push((self.coeffs[k].clone() - cross) / two.clone());
        }
        Ok(Self { coeffs: s })
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let mut r: Vec<T> = Vec::with_capacity(self.coeffs.len());
        r.push(T::one() / a0.clone());
        for k in 1..self.coeffs.len() {
            let acc = (1..=k).fold(T::zero(), |acc, i| {
                acc + self.coeffs[i].clone() * r[k - i].clone()
            });
            r.push(-acc / a0.clone());
        }
        Ok(Self { coeffs: r })
    }

    /// Divides by `scalar * x^k`.
    ///
    /// The first `k` coefficients must be exactly zero; a nonzero one means the
    /// numerator was assembled wrong and is reported with its index. The result
    /// has order `order - k`.
    pub fn div_exact(&self, scalar: &T, k: usize) -> Result<Self, SeriesError> {
        if scalar.is_zero() {
            return Err(SeriesError::ZeroScalar);
        }
        if k > self.order() {
            return Err(SeriesError::ShiftExceedsOrder { k, order: self.order() });
        }
        if let Some((index, value)) = self.coeffs[..k].iter().enumerate().find(|(_, c)| !c.is_zero()) {
            return Err(SeriesError::NonzeroLeadingCoefficient { k, index, value: value.to_string() });
        }
        let coeffs = self.coeffs[k..].iter().map(|c| c.clone() / scalar.clone()).collect();
        Ok(Self { coeffs })
    }

    /// `scalar * x^k * self` at the same order; the top `k` coefficients fall off.
    pub fn scale_shift(&self, scalar: &T, k: usize) -> Self {
        let coeffs = (0..self.coeffs.len())
            .map(|j| {
                if j < k {
                    T::zero()
                } else {
                    scalar.clone() * self.coeffs[j - k].clone()
                }
            })
            .collect();
        Self { coeffs }
    }
}

impl<T: Scalar> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn add(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn sub(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn mul(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn neg(self) -> PowerSeries<T> {
        PowerSeries::neg(self)
    }
}

impl<T: fmt::Debug> fmt::Debug for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PowerSeries")
            .field("order", &(self.coeffs.len() - 1))
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<T: Scalar> fmt::Display for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.coeffs.len())
    }
}
