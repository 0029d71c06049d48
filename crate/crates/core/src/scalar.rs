//! Exact coefficient rings.
//!
//! Every series type in this crate is generic over a [`Scalar`]: an exact
//! commutative ring with an exact-division test. The two workhorses are
//! [`BigInt`] (used on the hot construction path, where all coefficients are
//! integral after scaling) and [`BigRational`] (used wherever a change of
//! basis or a linear solve introduces denominators). [`Field`] adds inverses.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact commutative ring with unit.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// `self += a * b` without consuming the operands.
    fn add_mul(&mut self, a: &Self, b: &Self);

    fn add_assign_ref(&mut self, other: &Self);

    fn sub_assign_ref(&mut self, other: &Self);

    fn mul_ref(&self, other: &Self) -> Self;

    /// Returns `q` with `q * divisor == self` when such a `q` exists in the ring.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    /// Converts to a rational number when the value lies in ℚ.
    fn to_rational(&self) -> Option<BigRational>;

    fn pow_u32(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn inv(&self) -> Self;

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.inv())
    }

    fn from_rational(v: &BigRational) -> Self;
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }

    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    #[inline]
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    #[inline]
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }

    #[inline]
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(BigRational::from_integer(self.clone()))
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    #[inline]
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    #[inline]
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }

    #[inline]
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn from_rational(v: &BigRational) -> Self {
        v.clone()
    }
}

/// Parses `"num/den"` or `"num"` into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Formats a rational as `"num/den"` with a positive denominator.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Greatest common divisor of the values (zero for an empty or all-zero input).
pub fn content<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Integer square root.
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let q = BigRational::new(BigInt::from(-6), BigInt::from(4));
        let s = format_rational(&q);
        assert_eq!(s, "-3/2");
        assert_eq!(parse_rational(&s), Some(q));
        assert_eq!(parse_rational("7"), Some(BigRational::from_i64(7)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn exact_division_in_integers() {
        let a = BigInt::from(12);
        assert_eq!(a.exact_div(&BigInt::from(-4)), Some(BigInt::from(-3)));
        assert_eq!(a.exact_div(&BigInt::from(5)), None);
        assert_eq!(a.exact_div(&BigInt::zero()), None);
    }

    #[test]
    fn integer_square_roots() {
        for n in 0..2000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
        assert_eq!(isqrt(u64::from(u32::MAX) * u64::from(u32::MAX)), u64::from(u32::MAX));
    }
}
