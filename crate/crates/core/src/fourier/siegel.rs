use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::pair::PairSeries;
use super::slots::{c_bound, SlotSeries};
use super::{Character, Unit};
use crate::error::{Error, Result};
use crate::laurent::RPoly;
use crate::scalar::{Field, Scalar};

/// Truncated Fourier expansion of a scalar degree-2 form.
#[derive(Clone, PartialEq)]
pub struct SiegelExpansion<C> {
    series: SlotSeries<C>,
    character: Character,
}

impl<C: Scalar> SiegelExpansion<C> {
    pub fn zero(prec: u32, character: Character) -> Self {
        SiegelExpansion {
            series: SlotSeries::zero(prec),
            character,
        }
    }

    /// The constant series `1`.
    pub fn one(prec: u32) -> Self {
        SiegelExpansion {
            series: SlotSeries::one(prec),
            character: Character::Trivial,
        }
    }

    /// Builds from `(a, b, c, coeff)` terms. Terms with `a + b > prec` are
    /// truncated away; keys outside `c² <= 4ab` are rejected.
    pub fn from_terms(
        prec: u32,
        character: Character,
        terms: impl IntoIterator<Item = (u32, u32, i32, C)>,
    ) -> Result<Self> {
        let mut grouped: std::collections::BTreeMap<(u32, u32), Vec<(i32, C)>> =
            Default::default();
        for (a, b, c, v) in terms {
            if a + b > prec {
                continue;
            }
            if c.unsigned_abs() as i64 > c_bound(a, b) as i64 {
                return Err(Error::Support { a, b, c });
            }
            grouped.entry((a, b)).or_default().push((c, v));
        }
        let mut series = SlotSeries::zero(prec);
        for ((a, b), terms) in grouped {
            series.set_slot(a, b, RPoly::from_terms(terms))?;
        }
        Ok(SiegelExpansion { series, character })
    }

    pub fn prec(&self) -> u32 {
        self.series.prec()
    }

    pub fn character(&self) -> Character {
        self.character
    }

    pub fn with_character(mut self, character: Character) -> Self {
        self.character = character;
        self
    }

    /// Coefficient of `Q1^a Q2^b R^c` (zero outside the support or precision).
    pub fn coeff(&self, a: u32, b: u32, c: i32) -> C {
        if a + b > self.prec() {
            return C::zero();
        }
        self.series.slot(a, b).coeff(c)
    }

    /// The Laurent polynomial in `R` multiplying `Q1^a Q2^b`.
    pub fn slot(&self, a: u32, b: u32) -> RPoly<C> {
        if a + b > self.prec() {
            return RPoly::zero();
        }
        self.series.slot(a, b).clone()
    }

    pub fn set_slot(&mut self, a: u32, b: u32, poly: RPoly<C>) -> Result<()> {
        if a + b > self.prec() {
            return Err(Error::PrecisionFloor {
                have: self.prec(),
                need: a + b,
                context: "slot beyond the truncation".into(),
            });
        }
        self.series.set_slot(a, b, poly)
    }

    /// All nonzero terms, sorted lexicographically by `(a, b, c)`.
    pub fn terms(&self) -> Vec<(u32, u32, i32, C)> {
        let mut out: Vec<_> = self
            .series
            .nonzero_slots()
            .flat_map(|(a, b, p)| p.terms().iter().map(move |(c, v)| (a, b, *c, v.clone())))
            .collect();
        out.sort_by_key(|x| (x.0, x.1, x.2));
        out
    }

    pub fn nonzero_slots(&self) -> impl Iterator<Item = (u32, u32, &RPoly<C>)> {
        self.series.nonzero_slots()
    }

    pub fn num_terms(&self) -> usize {
        self.series.num_terms()
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }

    /// Lowest total degree `a + b` carrying a nonzero slot.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.series.lowest_degree()
    }

    pub fn truncate(&self, prec: u32) -> Self {
        SiegelExpansion {
            series: self.series.truncate(prec),
            character: self.character,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.character != self.character {
            return Ok(other.truncate(self.prec()));
        }
        if other.is_zero() && other.character != self.character {
            return Ok(self.truncate(other.prec()));
        }
        if self.character != other.character {
            return Err(Error::CharacterMismatch {
                left: self.character.bit(),
                right: other.character.bit(),
            });
        }
        Ok(SiegelExpansion {
            series: self.series.add(&other.series),
            character: self.character,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SiegelExpansion {
            series: self.series.neg(),
            character: self.character,
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        SiegelExpansion {
            series: self.series.scale(s),
            character: self.character,
        }
    }

    /// Truncated product; precision is the minimum of the two precisions.
    pub fn mul(&self, other: &Self) -> Self {
        SiegelExpansion {
            series: self.series.mul(&other.series),
            character: self.character.xor(other.character),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.prec());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient; fails with [`Error::NotDivisible`] when `self` is not
    /// a multiple of `divisor` to the working precision.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        Ok(SiegelExpansion {
            series: self.series.exact_div(&divisor.series)?,
            character: self.character.xor(divisor.character),
        })
    }

    /// Raw `m`-th derivative in `s = πiτ_12` at `τ_12 = 0`.
    pub fn restrict_diagonal_s(&self, m: u32) -> PairSeries<C> {
        let mut out = PairSeries::zero(self.prec());
        for (a, b, p) in self.series.nonzero_slots() {
            out.set(a, b, p.moment(m));
        }
        out
    }

    /// Exchanges `τ_1` and `τ_2`.
    pub fn swap_variables(&self) -> Self {
        let mut series = SlotSeries::zero(self.prec());
        for (a, b, p) in self.series.nonzero_slots() {
            series
                .set_slot(b, a, p.clone())
                .expect("swapping preserves the support");
        }
        SiegelExpansion {
            series,
            character: self.character,
        }
    }

    /// Every stored key satisfies `c² <= 4ab`.
    pub fn support_is_psd(&self) -> bool {
        self.series.nonzero_slots().all(|(a, b, p)| {
            p.terms()
                .iter()
                .all(|(c, _)| (*c as i64) * (*c as i64) <= 4 * a as i64 * b as i64)
        })
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SiegelExpansion<D> {
        SiegelExpansion {
            series: self.series.map(f),
            character: self.character,
        }
    }

    /// Exact conversion into rational coefficients.
    pub fn to_rational(&self) -> SiegelExpansion<BigRational> {
        self.map(|c| c.to_rational().expect("coefficient is rational"))
    }
}

impl<C: Field> SiegelExpansion<C> {
    /// Raw `m`-th derivative at `τ_12 = 0` in the chosen normal coordinate.
    pub fn restrict_diagonal(&self, m: u32, unit: Unit) -> PairSeries<C> {
        let mut out = PairSeries::zero(self.prec());
        for (a, b, p) in self.series.nonzero_slots() {
            let v = match unit {
                Unit::S => p.moment(m),
                Unit::T => p.half_moment(m),
            };
            out.set(a, b, v);
        }
        out
    }
}

impl SiegelExpansion<BigRational> {
    /// Clears denominators: returns `(F, d)` with `self = F / d`, `F` integral.
    pub fn to_integral(&self) -> (SiegelExpansion<BigInt>, BigInt) {
        let terms = self.terms();
        let den = crate::scalar::common_denominator(terms.iter().map(|t| &t.3));
        let f = self.map(|q| (q * BigRational::from_integer(den.clone())).to_integer());
        (f, den)
    }
}

impl<C: Scalar + fmt::Display> fmt::Debug for SiegelExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SiegelExpansion(prec={}, character={}, ",
            self.prec(),
            self.character.bit()
        )?;
        let mut first = true;
        for (a, b, p) in self.series.nonzero_slots().take(6) {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            write!(f, "[{a},{b}]: {p}")?;
        }
        if self.series.nonzero_slots().nth(6).is_some() {
            write!(f, "; ...")?;
        }
        write!(f, ")")
    }
}
