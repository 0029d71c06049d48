use std::fmt;

use super::slots::{slot_count, slot_index, slot_keys};
use crate::scalar::Scalar;

/// Truncated series in `Q1^a Q2^b` with `a + b <= prec`: the target of a
/// restriction to `τ_12 = 0`. Stored densely in total-degree order.
#[derive(Clone, PartialEq)]
pub struct PairSeries<C> {
    prec: u32,
    coeffs: Vec<C>,
}

impl<C: Scalar> PairSeries<C> {
    pub fn zero(prec: u32) -> Self {
        PairSeries {
            prec,
            coeffs: vec![C::zero(); slot_count(prec)],
        }
    }

    /// `f(τ_1) g(τ_2)` from dense coefficient lists in Q-exponents.
    pub fn tensor(f: &[C], g: &[C], prec: u32) -> Self {
        let mut out = Self::zero(prec);
        for (a, x) in f.iter().enumerate().take(prec as usize + 1) {
            if x.is_zero() {
                continue;
            }
            for (b, y) in g.iter().enumerate().take(prec as usize + 1 - a) {
                out.coeffs[slot_index(a as u32, b as u32)] = x.mul_ref(y);
            }
        }
        out
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn get(&self, a: u32, b: u32) -> C {
        if a + b > self.prec {
            return C::zero();
        }
        self.coeffs[slot_index(a, b)].clone()
    }

    /// Sets the coefficient at `(a, b)`; ignored beyond the truncation.
    pub fn set(&mut self, a: u32, b: u32, v: C) {
        if a + b <= self.prec {
            self.coeffs[slot_index(a, b)] = v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero coefficients in total-degree order.
    pub fn terms(&self) -> Vec<(u32, u32, C)> {
        slot_keys(self.prec)
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, b), c)| (a, b, c.clone()))
            .collect()
    }

    /// All coefficients, zeros included, in total-degree order.
    pub fn dense(&self) -> &[C] {
        &self.coeffs
    }

    pub fn truncate(&self, prec: u32) -> Self {
        let prec = prec.min(self.prec);
        PairSeries {
            prec,
            coeffs: self.coeffs[..slot_count(prec)].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let n = slot_count(prec);
        PairSeries {
            prec,
            coeffs: self.coeffs[..n]
                .iter()
                .zip(&other.coeffs[..n])
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, s: &C) -> Self {
        PairSeries {
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|c| c.mul_ref(s)).collect(),
        }
    }

    /// Exchanges the two factors.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero(self.prec);
        for (a, b) in slot_keys(self.prec) {
            out.coeffs[slot_index(b, a)] = self.coeffs[slot_index(a, b)].clone();
        }
        out
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> PairSeries<D> {
        PairSeries {
            prec: self.prec,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<C: Scalar + fmt::Display> fmt::Debug for PairSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairSeries(prec={}", self.prec)?;
        for (a, b, c) in self.terms().into_iter().take(8) {
            write!(f, ", [{a},{b}]: {c}")?;
        }
        write!(f, ")")
    }
}
