//! Coefficient traits shared by the whole crate.
//!
//! Arithmetic, evaluation and determinants only need [`Coefficient`], so they
//! work over `f64` as well as over the rationals. Anything that eliminates
//! (standard bases, rank computations) needs exact zero tests and is bounded
//! by [`ExactField`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed};

/// A commutative ring coefficient usable inside [`crate::Polynomial`].
pub trait Coefficient: Clone + PartialEq + Debug + Display + Num + Signed + Send + Sync {
    fn from_i64(value: i64) -> Self;

    /// Parses a non-negative decimal integer literal.
    fn from_decimal(digits: &str) -> Option<Self>;
}

impl Coefficient for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_decimal(digits: &str) -> Option<Self> {
        digits.parse::<BigInt>().ok().map(BigRational::from_integer)
    }
}

impl Coefficient for f64 {
    fn from_i64(value: i64) -> Self {
        value as f64
    }

    fn from_decimal(digits: &str) -> Option<Self> {
        digits.parse().ok()
    }
}

impl Coefficient for f32 {
    fn from_i64(value: i64) -> Self {
        value as f32
    }

    fn from_decimal(digits: &str) -> Option<Self> {
        digits.parse().ok()
    }
}

/// Marker for coefficient fields where `==` against zero is exact and every
/// nonzero element is invertible. Floating point types deliberately do not
/// implement it.
pub trait ExactField: Coefficient {}

impl ExactField for BigRational {}
