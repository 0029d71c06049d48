//! Sparse Laurent polynomials in the single variable `R`.
//!
//! A Fourier coefficient slot `(a, b)` of a degree-2 expansion is a Laurent
//! polynomial in `R`; this is the unit of work for multiplication and exact
//! division.

use std::fmt;

use num_rational::BigRational;

use crate::scalar::{Field, Scalar};

/// Laurent polynomial `Σ c_e R^e`, stored as exponent-sorted nonzero terms.
#[derive(Clone, Debug, PartialEq)]
pub struct RPoly<C> {
    terms: Vec<(i32, C)>,
}

impl<C: Scalar> Default for RPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> RPoly<C> {
    pub fn zero() -> Self {
        RPoly { terms: Vec::new() }
    }

    pub fn monomial(exp: i32, coeff: C) -> Self {
        Self::from_terms(vec![(exp, coeff)])
    }

    /// Builds from arbitrary terms, merging repeated exponents and dropping zeros.
    pub fn from_terms(mut terms: Vec<(i32, C)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, C)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => lc.add_assign_ref(&c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        RPoly { terms: out }
    }

    /// Builds from a dense coefficient run starting at exponent `offset`.
    pub(crate) fn from_dense(offset: i32, dense: Vec<C>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (offset + i as i32, c))
            .collect();
        RPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i32, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> C {
        self.terms
            .binary_search_by_key(&exp, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn max_abs_exp(&self) -> i32 {
        self.terms.iter().map(|t| t.0.abs()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i >= self.terms.len()
                || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                out.push(other.terms[j].clone());
                j += 1;
            } else {
                let mut c = self.terms[i].1.clone();
                c.add_assign_ref(&other.terms[j].1);
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        RPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        RPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.mul_ref(s)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Multiplies every exponent by `-1` (the substitution `R -> 1/R`).
    pub fn invert_variable(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        RPoly { terms }
    }

    /// Shifts every exponent by `k` (multiplication by `R^k`).
    pub fn shift(&self, k: i32) -> Self {
        RPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (Some(lo_a), Some(hi_a), Some(lo_b), Some(hi_b)) =
            (self.min_exp(), self.max_exp(), other.min_exp(), other.max_exp())
        else {
            return Self::zero();
        };
        let lo = lo_a + lo_b;
        let mut dense = vec![C::zero(); (hi_a + hi_b - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                dense[(ea + eb - lo) as usize].add_mul(ca, cb);
            }
        }
        Self::from_dense(lo, dense)
    }

    /// `Σ_e e^m c_e`: the m-th derivative in `s` at `s = 0` of `Σ c_e e^{e s}`.
    pub fn moment(&self, m: u32) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let w = C::from_i64(*e as i64).pow_u32(m);
            acc.add_mul(&w, c);
        }
        acc
    }

    /// Exact division by `divisor`; `None` when a remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (d_lo, d_hi) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = &divisor.terms.last()?.1;
        let q_lo = self.min_exp()? - d_lo;
        let mut rem = self.clone();
        let mut quotient: Vec<(i32, C)> = Vec::new();
        while let Some((top_e, top_c)) = rem.terms.last().cloned() {
            let qe = top_e - d_hi;
            if qe < q_lo {
                return None;
            }
            let qc = top_c.exact_div(lead)?;
            let sub = divisor.shift(qe).scale(&qc);
            rem = rem.sub(&sub);
            quotient.push((qe, qc));
        }
        quotient.reverse();
        Some(RPoly { terms: quotient })
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> RPoly<D> {
        RPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))).collect())
    }
}

impl<C: Field> RPoly<C> {
    /// `Σ (e/2)^m c_e`: derivatives with respect to `t = 2s`.
    pub fn half_moment(&self, m: u32) -> C {
        let two_m = C::from_i64(2).pow_u32(m);
        self.moment(m).div_ref(&two_m)
    }
}

impl RPoly<BigRational> {
    /// Convenience constructor from `(exponent, integer coefficient)` pairs.
    pub fn from_ints(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|(e, c)| (*e, BigRational::from_i64(*c)))
                .collect(),
        )
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for RPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})R")?,
                _ => write!(f, "({c})R^{e}")?,
            }
        }
        Ok(())
    }
}
