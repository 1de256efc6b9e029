//! Scalar abstraction shared by the polynomial, matrix and curve types.
//!
//! Every container in this crate is generic over a [`Scalar`]. Exact paths
//! use [`crate::Q`] (arbitrary precision rationals); floating types satisfy
//! the same trait and are handy for quick numerical sanity checks, but no
//! certificate is ever produced from them.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// Ring-with-division scalar. Division is only ever used by callers that
/// know the quotient is meaningful (log/exp of curves, pivoting).
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("i64 is representable in every scalar")
    }

    /// `1/n`; panics for `n == 0`.
    fn recip_int(n: i64) -> Self {
        assert!(n != 0, "reciprocal of zero");
        Self::one() / Self::from_int(n)
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// Scalars that can answer integrality questions exactly.
pub trait ExactScalar: Scalar + Ord + Signed {
    fn from_bigint(n: BigInt) -> Self;
    fn to_bigint(&self) -> Option<BigInt>;
    fn is_integral(&self) -> bool {
        self.to_bigint().is_some()
    }
    fn denominator_big(&self) -> BigInt;
}

impl ExactScalar for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn to_bigint(&self) -> Option<BigInt> {
        if self.denom().is_one() {
            Some(self.numer().clone())
        } else {
            None
        }
    }

    fn denominator_big(&self) -> BigInt {
        self.denom().clone()
    }
}

impl ExactScalar for BigInt {
    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }

    fn denominator_big(&self) -> BigInt {
        BigInt::one()
    }
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Binomial coefficient `C(n, k)` for any integer `n` and `k >= 0`
/// (generalized: `n(n-1)...(n-k+1)/k!`).
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn binomial_i(n: i64, k: u64) -> BigInt {
    binomial(&BigInt::from(n), k)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn is_zero<S: Zero>(s: &S) -> bool {
    s.is_zero()
}
