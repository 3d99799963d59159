//! Scalar traits shared by every algebraic structure in the crate.
//!
//! Sparse polynomials are generic over a [`Coeff`] ring, and the exact
//! linear algebra in [`crate::linalg`] is generic over a [`Field`].
//! `i64` and [`num_bigint::BigInt`] are coefficient rings;
//! [`num_rational::BigRational`] and [`crate::cyclotomic::Cyclotomic`]
//! are fields.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// A commutative ring with exact equality.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

/// A commutative field with exact equality.
pub trait Field: Coeff + Div<Output = Self> {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Coeff for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }
}

impl Coeff for i128 {
    fn from_i64(n: i64) -> Self {
        n as i128
    }
}

impl Coeff for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Coeff for BigRational {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }
}

impl Field for BigRational {}

impl Coeff for Ratio<i64> {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(n)
    }
}

impl Field for Ratio<i64> {}

/// Integer coefficient rings that can be checked for exact divisibility
/// and converted back to machine integers for reporting.
pub trait IntegerLike: Coeff {
    fn to_i64(&self) -> Option<i64>;
}

impl IntegerLike for i64 {
    fn to_i64(&self) -> Option<i64> {
        Some(*self)
    }
}

impl IntegerLike for i128 {
    fn to_i64(&self) -> Option<i64> {
        i64::try_from(*self).ok()
    }
}

impl IntegerLike for BigInt {
    fn to_i64(&self) -> Option<i64> {
        num_traits::ToPrimitive::to_i64(self)
    }
}

/// Returns the rational integer represented by a field element, if any.
pub trait AsInteger {
    fn as_integer(&self) -> Option<i64>;
}

impl AsInteger for BigRational {
    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            num_traits::ToPrimitive::to_i64(self.numer())
        } else {
            None
        }
    }
}
