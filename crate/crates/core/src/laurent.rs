//! Exact Laurent polynomials `Q[X, X^-1]` and their canonical generators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Deref, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};
use crate::ring::EuclideanDomain;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An element of `Q[X, X^-1]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The generator `X`.
    pub fn x() -> Self {
        Self::x_pow(1)
    }

    pub fn x_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Builds `sum coeffs[i] * X^(low + i)` from integer coefficients.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (low + i as i64, rat(c))))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width `max_exp - min_exp`; the Euclidean size in the Laurent ring. Zero has span 0.
    pub fn span(&self) -> u64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) as u64,
            _ => 0,
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Units of the Laurent ring are exactly the nonzero monomials `c X^n`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True if no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative `d/dX`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e - 1, c * rat(e))))
    }

    /// Substitutes `X -> X^-1`.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Multiplicative inverse of a unit `c X^n`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms().next()?;
        Some(Self::monomial(c.recip(), -e))
    }

    /// Dense ascending coefficients of `X^-min_exp * self`.
    fn dense(&self) -> (i64, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let mut v = vec![Rational::zero(); self.span() as usize + 1];
        for (e, c) in self.terms() {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    /// Euclidean division in the Laurent ring, measured by [`span`](Self::span).
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!d.is_zero(), "division by the zero Laurent polynomial");
        if self.is_zero() {
            return (LaurentPoly::zero(), LaurentPoly::zero());
        }
        let (sa, mut a) = self.dense();
        let (sd, dv) = d.dense();
        let dl = dv.len() - 1;
        let lead_inv = dv[dl].recip();
        if a.len() <= dl {
            return (LaurentPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); a.len() - dl];
        for i in (0..q.len()).rev() {
            let c = &a[i + dl] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in dv.iter().enumerate() {
                a[i + j] -= &c * dj;
            }
            q[i] = c;
        }
        let quot = Self::from_terms(q.into_iter().enumerate().map(|(i, c)| (sa - sd + i as i64, c)));
        let rem = Self::from_terms(a.into_iter().take(dl).enumerate().map(|(i, c)| (sa + i as i64, c)));
        (quot, rem)
    }

    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        EuclideanDomain::exact_div(self, d)
    }

    /// The unique monic associate with nonnegative exponents and nonzero constant term.
    pub fn canonical_associate(&self) -> Result<CanonicalGenerator> {
        let (lo, lead) = match (self.min_exp(), self.leading_coeff()) {
            (Some(lo), Some(lead)) => (lo, lead.recip()),
            _ => return Err(AlgebraError::ZeroPolynomial),
        };
        Ok(CanonicalGenerator(self.shift(-lo).scale(&lead)))
    }

    pub fn evaluate(&self, z: &Rational) -> Result<Rational> {
        if z.is_zero() {
            return Err(AlgebraError::ZeroEvaluationPoint);
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            acc += c * pow_rat(z, e);
        }
        Ok(acc)
    }

    pub fn evaluate_complex(&self, z: Complex64) -> Result<Complex64> {
        if z == Complex64::new(0.0, 0.0) {
            return Err(AlgebraError::ZeroEvaluationPoint);
        }
        Ok(self.eval_complex_unchecked(z))
    }

    pub(crate) fn eval_complex_unchecked(&self, z: Complex64) -> Complex64 {
        self.terms()
            .map(|(e, c)| z.powi(e as i32) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    /// Renders with a variable name other than `X`.
    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        VarDisplay { poly: self, var }
    }
}

fn pow_rat(z: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(z.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

impl EuclideanDomain for LaurentPoly {
    type Norm = u64;

    fn norm(&self) -> u64 {
        self.span()
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        self.div_rem(d)
    }

    fn is_unit(&self) -> bool {
        LaurentPoly::is_unit(self)
    }

    fn normalizing_unit(&self) -> (Self, Self) {
        match (self.min_exp(), self.leading_coeff()) {
            (Some(lo), Some(lead)) => {
                let u = LaurentPoly::monomial(lead.recip(), -lo);
                let u_inv = LaurentPoly::monomial(lead.clone(), lo);
                (u, u_inv)
            }
            _ => (LaurentPoly::one(), LaurentPoly::one()),
        }
    }
}

/// A monic ordinary polynomial with nonzero constant term: the preferred generator
/// of a nonzero principal ideal of the Laurent ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalGenerator(LaurentPoly);

impl CanonicalGenerator {
    pub fn one() -> Self {
        CanonicalGenerator(LaurentPoly::one())
    }

    pub fn as_poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.span()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Numeric roots in the punctured plane, sorted by real then imaginary part.
    pub fn numeric_roots(&self) -> Vec<Complex64> {
        crate::roots::polynomial_roots(&self.0)
    }
}

impl Deref for CanonicalGenerator {
    type Target = LaurentPoly;

    fn deref(&self) -> &LaurentPoly {
        &self.0
    }
}

impl From<CanonicalGenerator> for LaurentPoly {
    fn from(g: CanonicalGenerator) -> Self {
        g.0
    }
}

impl fmt::Debug for CanonicalGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalGenerator({})", self.0)
    }
}

impl fmt::Display for CanonicalGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn canonical_associate(f: &LaurentPoly) -> Result<CanonicalGenerator> {
    f.canonical_associate()
}

/// Generator of the ideal `(f) + (g)`.
pub fn gcd(f: &LaurentPoly, g: &LaurentPoly) -> Result<CanonicalGenerator> {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.canonical_associate()
}

/// Generator of `(f) ∩ (g)`; both must be nonzero.
pub fn lcm(f: &LaurentPoly, g: &LaurentPoly) -> Result<CanonicalGenerator> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let d = gcd(f, g)?;
    let prod = f * g;
    prod.exact_div(&d).expect("gcd divides the product").canonical_associate()
}

/// Same zero set in `C*` as `f`, without repeated roots.
pub fn squarefree_part(f: &LaurentPoly) -> Result<CanonicalGenerator> {
    let c = f.canonical_associate()?;
    let d = gcd(&c, &c.derivative())?;
    c.exact_div(&d).expect("gcd divides f").canonical_associate()
}

/// Divides out of `d` every factor it shares with `f`.
pub fn strip_common_factors(d: &LaurentPoly, f: &LaurentPoly) -> Result<CanonicalGenerator> {
    let mut d = d.canonical_associate()?.into_poly();
    loop {
        let g = gcd(&d, f)?;
        if g.is_one() {
            return d.canonical_associate();
        }
        d = d.exact_div(&g).expect("gcd divides d");
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::int(c)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

struct VarDisplay<'a> {
    poly: &'a LaurentPoly,
    var: &'a str,
}

impl fmt::Display for VarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str(self.var)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Ascending exponents, e.g. `-1 - X + X^2` or `1/2*X^-3 + 2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        VarDisplay { poly: self, var: "X" }.fmt(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
