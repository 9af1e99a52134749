use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `a + b*sqrt(d)` with rational `a`, `b`.
///
/// `d` is a positive non-square, or exactly 1. With `d = 1` the value lives in
/// `Q[x]/(x^2 - 1)` where `x` plays the part of an integer square root that
/// has been factored out; see [`QuadraticNumber::sqrt_of`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

impl QuadraticNumber {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Result<Self> {
        if !d.is_positive() || (!d.is_one() && is_square(&d)) {
            return Err(Error::InvalidRing(d));
        }
        Ok(Self { a, b, d })
    }

    pub fn from_rational(a: BigRational, d: BigInt) -> Result<Self> {
        Self::new(a, BigRational::zero(), d)
    }

    pub fn from_integer(a: impl Into<BigInt>, d: BigInt) -> Result<Self> {
        Self::from_rational(BigRational::from_integer(a.into()), d)
    }

    /// `sqrt(disc)` as a ring element.
    ///
    /// For a non-square discriminant this is `0 + 1*sqrt(disc)`. A perfect
    /// square `s^2` is normalized to `0 + s*sqrt(1)` so that conjugation
    /// still swaps the two roots of a quadratic.
    pub fn sqrt_of(disc: &BigInt) -> Result<Self> {
        if !disc.is_positive() {
            return Err(Error::InvalidRing(disc.clone()));
        }
        if is_square(disc) {
            let s = disc.sqrt();
            Self::new(BigRational::zero(), BigRational::from_integer(s), BigInt::one())
        } else {
            Self::new(BigRational::zero(), BigRational::one(), disc.clone())
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn base(&self) -> &BigInt {
        &self.d
    }

    pub fn one(&self) -> Self {
        Self {
            a: BigRational::one(),
            b: BigRational::zero(),
            d: self.d.clone(),
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::MismatchedRing {
                left: self.d.clone(),
                right: other.d.clone(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.clone(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        })
    }

    /// `(a1 + b1 sqrt d)(a2 + b2 sqrt d) = (a1 a2 + b1 b2 d) + (a1 b2 + a2 b1) sqrt d`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = BigRational::from_integer(self.d.clone());
        Self {
            a: &self.a * &other.a + &self.b * &other.b * d,
            b: &self.a * &other.b + &other.a * &self.b,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            a: &self.a * factor,
            b: &self.b * factor,
            d: self.d.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `N(a + b sqrt d) = a^2 - b^2 d`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inverse()?)
    }

    /// `self^exp` by square-and-multiply; `x^0 = 1 + 0 sqrt d`.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// The value as an integer, if the `sqrt d` part vanishes and the
    /// rational part is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }
}

/// Sums `weight * value` over all terms and returns the result as an integer.
///
/// Fails with [`Error::NonIntegerResult`] when the `sqrt d` components do not
/// cancel or the rational part is not integral; either indicates a wrong
/// closed form or wrong parameters.
pub fn combine_to_integer(terms: &[(QuadraticNumber, QuadraticNumber)]) -> Result<BigInt> {
    let mut iter = terms.iter();
    let Some((w, x)) = iter.next() else {
        return Ok(BigInt::zero());
    };
    let mut acc = w.try_mul(x)?;
    for (w, x) in iter {
        acc = acc.try_add(&w.try_mul(x)?)?;
    }
    acc.to_integer()
        .ok_or_else(|| Error::NonIntegerResult(acc.to_string()))
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, -&self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}
