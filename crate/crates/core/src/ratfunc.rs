//! Reduced quotients of Laurent polynomials; the fraction field of the Laurent ring.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::laurent::{gcd, CanonicalGenerator, LaurentPoly, Rational};
use crate::ring::Field;
use crate::series::TruncatedSeries;

/// `numerator / denominator`, reduced, with a canonical denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: LaurentPoly,
    denominator: CanonicalGenerator,
}

impl RationalFunction {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&numerator, &denominator)?;
        let num = numerator.exact_div(&g).expect("gcd divides numerator");
        let den = denominator.exact_div(&g).expect("gcd divides denominator");
        let canon = den.canonical_associate()?;
        // den = unit * canon; move the unit into the numerator
        let unit = den.exact_div(&canon).expect("associates");
        let num = num.exact_div(&unit).expect("units divide everything");
        Ok(RationalFunction { numerator: num, denominator: canon })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction { numerator: p, denominator: CanonicalGenerator::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &CanonicalGenerator {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&LaurentPoly> {
        self.is_polynomial().then_some(&self.numerator)
    }

    /// Numerator and denominator rescaled so the denominator has constant term 1.
    pub fn normalized_at_origin(&self) -> (LaurentPoly, LaurentPoly) {
        let c = self.denominator.coeff(0);
        let inv = c.recip();
        (self.numerator.scale(&inv), self.denominator.scale(&inv))
    }

    /// Power-series expansion about 0, valid when the numerator has no negative exponents.
    pub fn to_series(&self, order: usize) -> Result<TruncatedSeries> {
        let num = TruncatedSeries::from_poly(&self.numerator, order)?;
        let den = TruncatedSeries::from_poly(&self.denominator, order)?;
        num.div(&den)
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        RatDisplay { f: self, var }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: Self) -> Self {
        let num = &(&self.numerator * rhs.denominator.as_poly()) + &(&rhs.numerator * self.denominator.as_poly());
        let den = self.denominator.as_poly() * rhs.denominator.as_poly();
        RationalFunction::new(num, den).expect("nonzero denominator")
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> Self {
        RationalFunction { numerator: -self.numerator, denominator: self.denominator }
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: Self) -> Self {
        let num = &self.numerator * &rhs.numerator;
        let den = self.denominator.as_poly() * rhs.denominator.as_poly();
        RationalFunction::new(num, den).expect("nonzero denominator")
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;

    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero rational function")
    }
}

impl Field for RationalFunction {
    fn inverse(&self) -> Option<Self> {
        if self.numerator.is_zero() {
            return None;
        }
        Some(RationalFunction::new(self.denominator.as_poly().clone(), self.numerator.clone()).expect("nonzero"))
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }
}

struct RatDisplay<'a> {
    f: &'a RationalFunction,
    var: &'a str,
}

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.f.normalized_at_origin();
        let num_s = num.display_var(self.var).to_string();
        if den.is_one() {
            return f.write_str(&num_s);
        }
        let den_s = den.display_var(self.var).to_string();
        write!(f, "({num_s}) / ({den_s})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("X").fmt(f)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_to_canonical_denominator() {
        let f = RationalFunction::new(p("X^2 - 1"), p("2*X^-1 - 2")).unwrap();
        // (X-1)(X+1) / (-2 X^-1 (X - 1)) = -(1/2) X (X+1)
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &p("-1/2*X - 1/2*X^2"));
        let g = RationalFunction::new(p("1"), p("1 - 2*X")).unwrap();
        assert_eq!(g.denominator().as_poly(), &p("X - 1/2"));
        assert_eq!(g.numerator(), &p("-1/2"));
        assert_eq!(g.normalized_at_origin(), (p("1"), p("1 - 2*X")));
        assert!(RationalFunction::new(p("1"), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(p("1"), p("X - 1")).unwrap();
        let b = RationalFunction::new(p("1"), p("X + 1")).unwrap();
        let sum = a.clone() + b.clone();
        assert_eq!(sum, RationalFunction::new(p("2*X"), p("X^2 - 1")).unwrap());
        assert_eq!(a.clone() * a.inverse().unwrap(), RationalFunction::one());
        assert!((a.clone() - a).is_zero());
        assert_eq!(sum.clone() / sum, RationalFunction::one());
    }

    #[test]
    fn series_expansion() {
        let g = RationalFunction::new(p("1"), p("1 - 2*X")).unwrap();
        let s = g.to_series(5).unwrap();
        for n in 0..=5 {
            assert_eq!(s.coeff(n), Rational::from_integer((1i64 << n).into()));
        }
        let h = RationalFunction::new(p("X^-1"), p("1")).unwrap();
        assert_eq!(h.to_series(3), Err(AlgebraError::NotAPowerSeries));
    }
}
