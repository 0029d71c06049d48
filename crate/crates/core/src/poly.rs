//! Dense univariate polynomials, resultants and small number fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Field;

/// Polynomial with coefficients listed from the constant term upwards.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Field> UPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|c| C::from_i64(*c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `x - a`.
    pub fn linear_root(a: C) -> Self {
        Self::new(vec![-a, C::one()])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul_ref(x) + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_ref(&C::from_i64(i as i64)))
                .collect(),
        )
    }

    /// `(q, r)` with `self = q·d + r` and `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.leading().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![C::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = r[top].mul_ref(&inv);
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[top - dd + i].sub_assign_ref(&dc.mul_ref(&c));
                }
                q[top - dd] = c;
            }
            r.pop();
        }
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.leading().inv();
            a.scale(&inv)
        }
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &C) -> Self {
        let lin = Self::new(vec![c.clone(), C::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| acc.mul(&lin).add(&Self::constant(a.clone())))
    }

    /// `s^{deg} · self(x / s)`: the polynomial whose roots are `s` times ours.
    pub fn scale_roots(&self, s: &C) -> Self {
        let n = self.coeffs.len();
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul_ref(&s.pow_u32((n - 1 - i) as u32)))
                .collect(),
        )
    }

    /// Resultant `Res(self, other)` via the Euclidean recursion.
    pub fn resultant(&self, other: &Self) -> C {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return C::zero();
        };
        if n == 0 {
            return other.leading().pow_u32(m as u32);
        }
        if m == 0 {
            return self.leading().pow_u32(n as u32);
        }
        if m < n {
            let sign = if m * n % 2 == 1 { -C::one() } else { C::one() };
            return sign.mul_ref(&other.resultant(self));
        }
        // Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r) with r = f mod g.
        let r = self.div_rem(other).1;
        let Some(dr) = r.degree() else {
            return C::zero();
        };
        let sign = if m * n % 2 == 1 { -C::one() } else { C::one() };
        sign.mul_ref(&other.leading().pow_u32((m - dr) as u32))
            .mul_ref(&other.resultant(&r))
    }

    /// `Res(f, f')` up to the usual sign and leading-coefficient factor.
    pub fn discriminant(&self) -> C {
        let n = self.degree().unwrap_or(0);
        let sign = if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            -C::one()
        } else {
            C::one()
        };
        sign.mul_ref(&self.resultant(&self.derivative()))
            .div_ref(&self.leading())
    }
}

impl UPoly<BigRational> {
    /// Integer coefficients, if all coefficients are integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Rational roots by the rational root test (requires integral coefficients).
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let Some(ints) = self.to_integers() else {
            let den = crate::scalar::common_denominator(&self.coeffs);
            return self
                .scale(&BigRational::from_integer(den))
                .rational_roots();
        };
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut roots = Vec::new();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if low > 0 {
            roots.push(BigRational::zero());
        }
        if low == deg {
            return roots;
        }
        let a0 = ints[low].abs();
        let an = ints[deg].abs();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                if p.gcd(&q) != BigInt::one() {
                    continue;
                }
                for s in [BigInt::one(), -BigInt::one()] {
                    let r = BigRational::new(&s * &p, q.clone());
                    if self.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots
    }

    /// Irreducibility over ℚ, decided for degree at most 3 by the rational
    /// root test; higher degrees are reported as undecided.
    pub fn check_irreducible(&self) -> Result<()> {
        match self.degree() {
            None | Some(0) => Err(Error::Degenerate("constant polynomial".into())),
            Some(1) => Ok(()),
            Some(d) => {
                if !self.rational_roots().is_empty() {
                    return Err(Error::Degenerate(format!("{self} has a rational root")));
                }
                if d <= 3 {
                    Ok(())
                } else if !self.gcd(&self.derivative()).degree().is_some_and(|g| g == 0) {
                    Err(Error::Degenerate(format!("{self} has a repeated factor")))
                } else {
                    Err(Error::Irreducibility(format!(
                        "degree {d} needs a factorization, which is not implemented"
                    )))
                }
            }
        }
    }
}

/// Positive divisors of `n` (trial division; `n` must be nonzero).
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Square-free part of a nonzero integer, sign kept.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    sign * out * m
}

impl<C: Field + fmt::Display> fmt::Display for UPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: Field + fmt::Display> fmt::Debug for UPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

/// An element of `ℚ[x]/(f)` for a monic irreducible `f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicNumber {
    modulus: UPoly<BigRational>,
    residue: UPoly<BigRational>,
}

impl AlgebraicNumber {
    /// The class of `residue` modulo `modulus`; the modulus must be monic.
    pub fn new(modulus: UPoly<BigRational>, residue: UPoly<BigRational>) -> Result<Self> {
        if !modulus.is_monic() {
            return Err(Error::NonMonic(modulus.to_string()));
        }
        let residue = residue.div_rem(&modulus).1;
        Ok(AlgebraicNumber { modulus, residue })
    }

    /// The generator `x` of `ℚ[x]/(f)`, after checking irreducibility.
    pub fn generator(modulus: UPoly<BigRational>) -> Result<Self> {
        modulus.check_irreducible()?;
        Self::new(modulus, UPoly::from_i64(&[0, 1]))
    }

    pub fn modulus(&self) -> &UPoly<BigRational> {
        &self.modulus
    }

    pub fn residue(&self) -> &UPoly<BigRational> {
        &self.residue
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "elements of different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        AlgebraicNumber {
            modulus: self.modulus.clone(),
            residue: self.residue.add(&other.residue),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        AlgebraicNumber {
            modulus: self.modulus.clone(),
            residue: self.residue.sub(&other.residue),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        AlgebraicNumber {
            modulus: self.modulus.clone(),
            residue: self.residue.mul(&other.residue).div_rem(&self.modulus).1,
        }
    }

    pub fn add_rational(&self, q: &BigRational) -> Self {
        AlgebraicNumber {
            modulus: self.modulus.clone(),
            residue: self.residue.add(&UPoly::constant(q.clone())),
        }
    }

    /// Matrix of multiplication by `self` on the power basis (rows = images).
    pub fn multiplication_matrix(&self) -> Matrix<BigRational> {
        let n = self.modulus.degree().unwrap_or(0);
        let rows = (0..n)
            .map(|i| {
                let mut basis = vec![BigRational::zero(); i + 1];
                basis[i] = BigRational::one();
                let img = UPoly::new(basis).mul(&self.residue).div_rem(&self.modulus).1;
                (0..n).map(|j| img.coeff(j)).collect()
            })
            .collect();
        Matrix::from_rows(rows)
    }

    /// Characteristic polynomial of `self` over ℚ.
    pub fn charpoly(&self) -> UPoly<BigRational> {
        self.multiplication_matrix().charpoly()
    }

    pub fn norm(&self) -> BigRational {
        self.multiplication_matrix().det()
    }

    pub fn trace(&self) -> BigRational {
        let m = self.multiplication_matrix();
        (0..m.nrows()).fold(BigRational::zero(), |acc, i| acc + m.get(i, i).clone())
    }
}

/// `Res(f, g)` for monic integer polynomials, as an exact integer.
pub fn norm_resultant(f: &UPoly<BigRational>, g: &UPoly<BigRational>) -> Result<BigInt> {
    for p in [f, g] {
        if !p.is_monic() {
            return Err(Error::NonMonic(p.to_string()));
        }
    }
    let r = f.resultant(g);
    if !r.is_integer() {
        return Err(Error::NonMonic("resultant of non-integral polynomials".into()));
    }
    Ok(r.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = UPoly<BigRational>;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn division_with_remainder() {
        let f = P::from_i64(&[1, 0, 0, 1]);
        let d = P::from_i64(&[1, 1]);
        let (quot, rem) = f.div_rem(&d);
        assert_eq!(quot, P::from_i64(&[1, -1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn resultant_of_linear_factors() {
        let f = P::linear_root(q(7));
        let g = P::linear_root(q(3));
        // Res(x - a, x - b) = a - b... up to the sign convention b - a for g(a)
        assert_eq!(f.resultant(&g), g.eval(&q(7)));
        assert_eq!(f.resultant(&g), q(4));
    }

    #[test]
    fn shift_and_scale_move_roots() {
        let f = P::from_i64(&[-6, 1, 1]); // (x - 2)(x + 3)
        assert_eq!(f.shift(&q(1)).eval(&q(1)), q(0));
        assert_eq!(f.scale_roots(&q(5)).eval(&q(10)), q(0));
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&BigInt::from(72)), BigInt::from(2));
        assert_eq!(squarefree_part(&BigInt::from(-45)), BigInt::from(-5));
    }

    #[test]
    fn quadratic_field_norms() {
        let x = AlgebraicNumber::generator(P::from_i64(&[-2, 0, 1])).unwrap();
        let y = x.add_rational(&q(1));
        assert_eq!(y.norm(), q(-1));
        assert_eq!(y.trace(), q(2));
        assert!(AlgebraicNumber::generator(P::from_i64(&[-4, 0, 1])).is_err());
    }
}
