//! Minimal algebraic traits shared by the matrix and Smith normal form code.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring with value-semantics arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// A Euclidean domain: division with remainder strictly decreasing `norm`.
pub trait EuclideanDomain: Ring {
    type Norm: Ord + Clone;

    /// Euclidean size of a nonzero element.
    fn norm(&self) -> Self::Norm;

    /// `(q, r)` with `self = q * d + r` and `r = 0` or `norm(r) < norm(d)`. Panics if `d = 0`.
    fn div_rem_euclid(&self, d: &Self) -> (Self, Self);

    fn is_unit(&self) -> bool;

    /// Returns `(u, u_inv)` with `u` a unit such that `u * self` is the preferred associate.
    fn normalizing_unit(&self) -> (Self, Self);

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let (q, r) = self.div_rem_euclid(d);
        r.is_zero().then_some(q)
    }

    fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }
}

impl EuclideanDomain for BigInt {
    type Norm = BigUint;

    fn norm(&self) -> BigUint {
        self.magnitude().clone()
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        Integer::div_rem(self, d)
    }

    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }

    fn normalizing_unit(&self) -> (Self, Self) {
        let u = if self.sign() == Sign::Minus { -BigInt::one() } else { BigInt::one() };
        (u.clone(), u)
    }
}

