//! Truncated formal power series `c_0 + c_1 t + ... + c_N t^N` over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::laurent::{rat, LaurentPoly, Rational};

pub const DEFAULT_ORDER: usize = 20;

/// Exact through order `N`; all higher terms are discarded.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut v: Vec<Rational> = coeffs.into_iter().take(order + 1).collect();
        v.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs: v }
    }

    pub fn from_poly(p: &LaurentPoly, order: usize) -> Result<Self> {
        if !p.is_polynomial() {
            return Err(AlgebraError::NotAPowerSeries);
        }
        let mut s = Self::zero(order);
        for (e, c) in p.terms() {
            if (e as usize) <= order {
                s.coeffs[e as usize] = c.clone();
            }
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(AlgebraError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(AlgebraError::NotInvertibleSeries);
        }
        let inv0 = c0.recip();
        let mut out = Self::zero(self.order());
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out.coeffs[n - k];
            }
            out.coeffs[n] = -acc * &inv0;
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    /// `exp(s)` for `s` with zero constant term, via `n e_n = sum_k k s_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::NonzeroConstantTerm);
        }
        let mut out = Self::one(self.order());
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += rat(k as i64) * &self.coeffs[k] * &out.coeffs[n - k];
            }
            out.coeffs[n] = acc / rat(n as i64);
        }
        Ok(out)
    }

    /// `log(s)` for `s` with constant term 1, via `n l_n = n s_n - sum_{k<n} k l_k s_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(AlgebraError::ConstantTermNotOne);
        }
        let mut out = Self::zero(self.order());
        for n in 1..=self.order() {
            let mut acc = rat(n as i64) * &self.coeffs[n];
            for k in 1..n {
                acc -= rat(k as i64) * &out.coeffs[k] * &self.coeffs[n - k];
            }
            out.coeffs[n] = acc / rat(n as i64);
        }
        Ok(out)
    }

    /// The Euler operator `t d/dt`: coefficient `n` becomes `n c_n`.
    pub fn euler_derivative(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c * rat(n as i64)).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = LaurentPoly::from_terms(self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())));
        let body = poly.display_var("t").to_string();
        write!(f, "{body} + O(t^{})", self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}
