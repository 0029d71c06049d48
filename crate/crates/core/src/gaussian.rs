//! Gaussian numbers `x + y·i` over an exact ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Gaussian<C> {
    pub re: C,
    pub im: C,
}

impl<C: Scalar> Gaussian<C> {
    pub fn new(re: C, im: C) -> Self {
        Gaussian { re, im }
    }

    /// `i^e` for any integer exponent.
    pub fn i_pow(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => Gaussian::new(C::one(), C::zero()),
            1 => Gaussian::new(C::zero(), C::one()),
            2 => Gaussian::new(-C::one(), C::zero()),
            _ => Gaussian::new(C::zero(), -C::one()),
        }
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> C {
        self.re.mul_ref(&self.re) + self.im.mul_ref(&self.im)
    }

    pub fn scale(&self, s: &C) -> Self {
        Gaussian::new(self.re.mul_ref(s), self.im.mul_ref(s))
    }
}

impl<C: Scalar> Zero for Gaussian<C> {
    fn zero() -> Self {
        Gaussian::new(C::zero(), C::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<C: Scalar> One for Gaussian<C> {
    fn one() -> Self {
        Gaussian::new(C::one(), C::zero())
    }
}

impl<C: Scalar> Add for Gaussian<C> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Gaussian::new(self.re + o.re, self.im + o.im)
    }
}

impl<C: Scalar> Sub for Gaussian<C> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Gaussian::new(self.re - o.re, self.im - o.im)
    }
}

impl<C: Scalar> Neg for Gaussian<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Gaussian::new(-self.re, -self.im)
    }
}

impl<C: Scalar> Mul for Gaussian<C> {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<C: Scalar> Scalar for Gaussian<C> {
    fn from_i64(v: i64) -> Self {
        Gaussian::new(C::from_i64(v), C::zero())
    }

    fn from_bigint(v: &BigInt) -> Self {
        Gaussian::new(C::from_bigint(v), C::zero())
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        self.re.add_mul(&a.re, &b.re);
        self.re.sub_assign_ref(&a.im.mul_ref(&b.im));
        self.im.add_mul(&a.re, &b.im);
        self.im.add_mul(&a.im, &b.re);
    }

    fn add_assign_ref(&mut self, other: &Self) {
        self.re.add_assign_ref(&other.re);
        self.im.add_assign_ref(&other.im);
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        self.re.sub_assign_ref(&other.re);
        self.im.sub_assign_ref(&other.im);
    }

    fn mul_ref(&self, o: &Self) -> Self {
        Gaussian::new(
            self.re.mul_ref(&o.re) - self.im.mul_ref(&o.im),
            self.re.mul_ref(&o.im) + self.im.mul_ref(&o.re),
        )
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let n = divisor.norm();
        if n.is_zero() {
            return None;
        }
        let p = self.mul_ref(&divisor.conj());
        Some(Gaussian::new(p.re.exact_div(&n)?, p.im.exact_div(&n)?))
    }

    fn to_rational(&self) -> Option<BigRational> {
        if self.im.is_zero() {
            self.re.to_rational()
        } else {
            None
        }
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for Gaussian<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}
