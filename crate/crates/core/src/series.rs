//! Truncated power series over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Coefficients of `t^0 .. t^order`; everything above `order` is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPowerSeries {
    coefficients: Vec<BigRational>,
}

impl TruncatedPowerSeries {
    /// Pads or truncates `coefficients` to exactly `order + 1` entries.
    pub fn new(mut coefficients: Vec<BigRational>, order: usize) -> Self {
        coefficients.resize(order + 1, BigRational::zero());
        Self { coefficients }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coefficients[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|i| &self.coefficients[i] + &other.coefficients[i])
                .collect(),
            order,
        )
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coefficients[i].is_zero())
                    .map(|i| &self.coefficients[i] * &other.coefficients[n - i])
                    .sum()
            })
            .collect();
        Self::new(coefficients, order)
    }

    /// Multiplicative inverse up to the same order.
    ///
    /// Solves `(s * g)_n = [n == 0]` term by term:
    /// `g_n = -(1/s_0) * Σ_{i=1..n} s_i g_{n-i}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let s0 = &self.coefficients[0];
        if s0.is_zero() {
            return Err(Error::SingularSeries);
        }
        let inv0 = s0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coefficients.len());
        out.push(inv0.clone());
        for n in 1..self.coefficients.len() {
            let acc: BigRational = (1..=n)
                .filter(|&i| !self.coefficients[i].is_zero())
                .map(|i| &self.coefficients[i] * &out[n - i])
                .sum();
            out.push(-acc * &inv0);
        }
        Ok(Self { coefficients: out })
    }
}
