//! Truncated series in two exponents `(a, b)` whose slots are Laurent
//! polynomials in a third variable. Shared by Q-unit and quarter-unit
//! expansions.

use crate::error::{Error, Result};
use crate::laurent::RPoly;
use crate::scalar::{isqrt, Scalar};

/// Position of slot `(a, b)` in the total-degree-ordered triangle.
#[inline]
pub(crate) fn slot_index(a: u32, b: u32) -> usize {
    let s = (a + b) as usize;
    s * (s + 1) / 2 + b as usize
}

#[inline]
pub(crate) fn slot_count(prec: u32) -> usize {
    let n = prec as usize;
    (n + 1) * (n + 2) / 2
}

/// All `(a, b)` with `a + b <= prec`, ordered by total degree then `b`.
pub(crate) fn slot_keys(prec: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=prec).flat_map(|s| (0..=s).map(move |b| (s - b, b)))
}

/// Largest `|c|` allowed by the semidefinite condition `c² <= 4ab`.
#[inline]
pub(crate) fn c_bound(a: u32, b: u32) -> i32 {
    isqrt(4 * a as u64 * b as u64) as i32
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct SlotSeries<C> {
    prec: u32,
    slots: Vec<RPoly<C>>,
}

impl<C: Scalar> SlotSeries<C> {
    pub fn zero(prec: u32) -> Self {
        SlotSeries {
            prec,
            slots: vec![RPoly::zero(); slot_count(prec)],
        }
    }

    pub fn one(prec: u32) -> Self {
        let mut s = Self::zero(prec);
        s.slots[0] = RPoly::monomial(0, C::one());
        s
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn slot(&self, a: u32, b: u32) -> &RPoly<C> {
        &self.slots[slot_index(a, b)]
    }

    /// Replaces slot `(a, b)`; the caller guarantees `a + b <= prec`.
    pub fn set_slot(&mut self, a: u32, b: u32, poly: RPoly<C>) -> Result<()> {
        let bound = c_bound(a, b);
        if let Some((c, _)) = poly.terms().iter().find(|(c, _)| c.abs() > bound) {
            return Err(Error::Support { a, b, c: *c });
        }
        self.slots[slot_index(a, b)] = poly;
        Ok(())
    }

    /// Replaces slot `(a, b)` without the semidefinite check; used for
    /// series whose keys have been shifted by a monomial.
    pub fn set_slot_unchecked(&mut self, a: u32, b: u32, poly: RPoly<C>) {
        self.slots[slot_index(a, b)] = poly;
    }

    pub fn nonzero_slots(&self) -> impl Iterator<Item = (u32, u32, &RPoly<C>)> {
        slot_keys(self.prec)
            .zip(self.slots.iter())
            .filter(|(_, p)| !p.is_zero())
            .map(|((a, b), p)| (a, b, p))
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(|p| p.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.slots.iter().map(|p| p.len()).sum()
    }

    pub fn truncate(&self, prec: u32) -> Self {
        let prec = prec.min(self.prec);
        SlotSeries {
            prec,
            slots: self.slots[..slot_count(prec)].to_vec(),
        }
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.nonzero_slots().next().map(|(a, b, _)| a + b)
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let n = slot_count(prec);
        SlotSeries {
            prec,
            slots: self.slots[..n]
                .iter()
                .zip(&other.slots[..n])
                .map(|(x, y)| x.add(y))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map_slots(|p| p.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map_slots(|p| p.scale(s))
    }

    pub fn map_slots(&self, f: impl Fn(&RPoly<C>) -> RPoly<C>) -> Self {
        SlotSeries {
            prec: self.prec,
            slots: self.slots.iter().map(f).collect(),
        }
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SlotSeries<D> {
        SlotSeries {
            prec: self.prec,
            slots: self.slots.iter().map(|p| p.map(&f)).collect(),
        }
    }

    /// Truncated product with the pessimistic precision `min(prec_f, prec_g)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_to(other, self.prec.min(other.prec))
    }

    /// Product keeping every pair of slots whose total degree is at most
    /// `prec`. Only meaningful when the caller knows the result is valid there.
    pub fn mul_to(&self, other: &Self, prec: u32) -> Self {
        let rhs: Vec<(u32, u32, &RPoly<C>, i32)> = other
            .nonzero_slots()
            .filter(|(a, b, _)| a + b <= prec)
            .map(|(a, b, g)| (a, b, g, g.max_abs_exp()))
            .collect();
        // Dense accumulators centred at R^0 with half-width `w`.
        let mut acc: Vec<(i32, Vec<C>)> = vec![(0, Vec::new()); slot_count(prec)];
        for (a1, b1, f) in self.nonzero_slots() {
            if a1 + b1 > prec {
                break;
            }
            let room = prec - a1 - b1;
            let wf = f.max_abs_exp();
            for &(a2, b2, g, wg) in &rhs {
                if a2 + b2 > room {
                    break;
                }
                let (a, b) = (a1 + a2, b1 + b2);
                let need = wf + wg;
                let (w, cell) = &mut acc[slot_index(a, b)];
                if cell.is_empty() || need > *w {
                    let nw = need.max(c_bound(a, b));
                    let mut grown = vec![C::zero(); (2 * nw + 1) as usize];
                    for (i, v) in cell.drain(..).enumerate() {
                        grown[i + (nw - *w) as usize] = v;
                    }
                    *w = nw;
                    *cell = grown;
                }
                let w = *w;
                for (c1, x) in f.terms() {
                    let base = c1 + w;
                    for (c2, y) in g.terms() {
                        cell[(base + c2) as usize].add_mul(x, y);
                    }
                }
            }
        }
        let slots = acc
            .into_iter()
            .map(|(w, dense)| {
                if dense.is_empty() {
                    RPoly::zero()
                } else {
                    RPoly::from_dense(-w, dense)
                }
            })
            .collect();
        SlotSeries { prec, slots }
    }

    /// Exact quotient `self / divisor` with precision `min(prec) - s0`, where
    /// `s0` is the total degree of the divisor's single lowest slot.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let prec = self.prec.min(divisor.prec);
        let lowest: Vec<(u32, u32, &RPoly<C>)> = divisor
            .nonzero_slots()
            .take_while({
                let first = divisor.lowest_degree();
                move |(a, b, _)| Some(a + b) == first
            })
            .collect();
        let (a0, b0, lead) = match lowest.as_slice() {
            [] => return Err(Error::NotDivisible("divisor vanishes to the working precision".into())),
            [single] => *single,
            _ => {
                return Err(Error::NotDivisible(
                    "divisor's lowest total degree is spread over several slots".into(),
                ))
            }
        };
        let s0 = a0 + b0;
        if prec < s0 {
            return Err(Error::NotDivisible(format!(
                "precision {prec} is below the divisor's leading degree {s0}"
            )));
        }
        let qprec = prec - s0;
        let tail: Vec<(u32, u32, &RPoly<C>)> = divisor
            .nonzero_slots()
            .filter(|(a, b, _)| a + b > s0 && a + b <= prec)
            .collect();
        let mut quotient = Self::zero(qprec);
        for (a, b) in slot_keys(qprec) {
            let mut residual = self.slot(a + a0, b + b0).clone();
            let (ta, tb) = (a + a0, b + b0);
            for &(ga, gb, g) in &tail {
                if ga + gb > s0 + (a + b) {
                    break;
                }
                if ga > ta || gb > tb {
                    continue;
                }
                let h = quotient.slot(ta - ga, tb - gb);
                if !h.is_zero() {
                    residual = residual.sub(&h.mul(g));
                }
            }
            let q = residual.exact_div(lead).ok_or_else(|| {
                Error::NotDivisible(format!("slot ({ta},{tb}) leaves a remainder"))
            })?;
            quotient.set_slot(a, b, q).map_err(|e| match e {
                Error::Support { a, b, c } => Error::NotDivisible(format!(
                    "quotient term ({a},{b},{c}) violates c^2 <= 4ab"
                )),
                other => other,
            })?;
        }
        // Slots of the dividend not reached by the recursion must also agree.
        let check = quotient.mul_to(divisor, prec);
        if check != self.truncate(prec) {
            return Err(Error::NotDivisible(
                "quotient times divisor does not reproduce the dividend".into(),
            ));
        }
        Ok(quotient)
    }
}
