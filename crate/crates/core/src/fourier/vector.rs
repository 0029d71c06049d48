use num_rational::BigRational;

use super::pair::PairSeries;
use super::siegel::SiegelExpansion;
use super::{Character, Unit};
use crate::error::{Error, Result};
use crate::laurent::RPoly;
use crate::scalar::{Field, Scalar};

/// Truncated expansion of a form with values in `Sym^j ⊗ det^k`.
/// Entry `i` is the coefficient of `X^{j-i} Y^i`.
#[derive(Clone, PartialEq)]
pub struct VectorExpansion<C> {
    j: u32,
    k: i32,
    character: Character,
    entries: Vec<SiegelExpansion<C>>,
}

/// Bounds used when searching for the order of vanishing along `τ_12 = 0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct VanishingConfig {
    /// Largest derivative order tried before giving up.
    pub max_order: u32,
    /// Precision below which the answer is not trusted.
    pub prec_floor: u32,
}

impl Default for VanishingConfig {
    fn default() -> Self {
        VanishingConfig {
            max_order: 8,
            prec_floor: 12,
        }
    }
}

impl<C: Scalar> VectorExpansion<C> {
    /// Assembles a vector form; entries are truncated to a common precision
    /// and must all carry `character` (zero entries are relabelled).
    pub fn new(k: i32, character: Character, entries: Vec<SiegelExpansion<C>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Weight("a vector form needs at least one entry".into()));
        }
        let prec = entries.iter().map(|e| e.prec()).min().unwrap_or(0);
        let mut out = Vec::with_capacity(entries.len());
        for e in entries {
            if e.character() != character && !e.is_zero() {
                return Err(Error::CharacterMismatch {
                    left: character.bit(),
                    right: e.character().bit(),
                });
            }
            out.push(e.truncate(prec).with_character(character));
        }
        Ok(VectorExpansion {
            j: out.len() as u32 - 1,
            k,
            character,
            entries: out,
        })
    }

    /// A scalar form of weight `k` viewed as a `j = 0` vector form.
    pub fn scalar(f: SiegelExpansion<C>, k: i32) -> Self {
        VectorExpansion {
            j: 0,
            k,
            character: f.character(),
            entries: vec![f],
        }
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn character(&self) -> Character {
        self.character
    }

    pub fn prec(&self) -> u32 {
        self.entries[0].prec()
    }

    pub fn entries(&self) -> &[SiegelExpansion<C>] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &SiegelExpansion<C> {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<SiegelExpansion<C>> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn with_weight(mut self, k: i32) -> Self {
        self.k = k;
        self
    }

    /// The slot `(a, b)` of every entry: the leading Fourier vector when
    /// `(a, b)` is the lowest nonzero slot.
    pub fn slot_vector(&self, a: u32, b: u32) -> Vec<RPoly<C>> {
        self.entries.iter().map(|e| e.slot(a, b)).collect()
    }

    pub fn truncate(&self, prec: u32) -> Self {
        self.map_entries(|e| e.truncate(prec))
    }

    fn map_entries(&self, f: impl Fn(&SiegelExpansion<C>) -> SiegelExpansion<C>) -> Self {
        VectorExpansion {
            j: self.j,
            k: self.k,
            character: self.character,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.j, self.k) != (other.j, other.k) {
            return Err(Error::Weight(format!(
                "cannot add weight ({},{}) to weight ({},{})",
                self.j, self.k, other.j, other.k
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.add(y))
            .collect::<Result<Vec<_>>>()?;
        let character = if self.is_zero() {
            other.character
        } else {
            self.character
        };
        VectorExpansion::new(self.k, character, entries)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_entries(|e| e.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map_entries(|e| e.scale(s))
    }

    /// Product through `Sym^{j1} ⊗ Sym^{j2} -> Sym^{j1+j2}`: multiply the
    /// coordinate polynomials in `X, Y`.
    pub fn vv_multiply(&self, other: &Self) -> Self {
        let j = self.j + other.j;
        let prec = self.prec().min(other.prec());
        let character = self.character.xor(other.character);
        let mut entries = vec![SiegelExpansion::zero(prec, character); j as usize + 1];
        for (i1, f) in self.entries.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (i2, g) in other.entries.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let slot = &mut entries[i1 + i2];
                *slot = slot.add(&f.mul(g)).expect("characters agree");
            }
        }
        VectorExpansion {
            j,
            k: self.k + other.k,
            character,
            entries,
        }
    }

    /// Multiplies every entry by the scalar form `f` of weight `k`.
    pub fn mul_scalar(&self, f: &SiegelExpansion<C>, k: i32) -> Self {
        VectorExpansion {
            j: self.j,
            k: self.k + k,
            character: self.character.xor(f.character()),
            entries: self.entries.iter().map(|e| e.mul(f)).collect(),
        }
    }

    /// Divides every entry by the scalar form `f` of weight `k`.
    pub fn divide_scalar(&self, f: &SiegelExpansion<C>, k: i32) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.divide_exact(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorExpansion {
            j: self.j,
            k: self.k - k,
            character: self.character.xor(f.character()),
            entries,
        })
    }

    /// Raw `m`-th `s`-derivative of every entry at `τ_12 = 0`.
    pub fn restrict_s(&self, m: u32) -> Vec<PairSeries<C>> {
        self.entries.iter().map(|e| e.restrict_diagonal_s(m)).collect()
    }

    /// Order of vanishing along `τ_12 = 0`.
    pub fn vanishing_order(&self, config: &VanishingConfig) -> Result<u32> {
        if self.prec() < config.prec_floor {
            return Err(Error::PrecisionFloor {
                have: self.prec(),
                need: config.prec_floor,
                context: "order of vanishing along the diagonal".into(),
            });
        }
        for m in 0..=config.max_order {
            if self.restrict_s(m).iter().any(|p| !p.is_zero()) {
                return Ok(m);
            }
        }
        Err(Error::AllZero {
            max_order: config.max_order,
            prec: self.prec(),
        })
    }

    /// Exchanges `τ_1` and `τ_2` in every entry and reverses the entry order.
    pub fn swap_variables(&self) -> Self {
        VectorExpansion {
            j: self.j,
            k: self.k,
            character: self.character,
            entries: self.entries.iter().rev().map(|e| e.swap_variables()).collect(),
        }
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> VectorExpansion<D> {
        VectorExpansion {
            j: self.j,
            k: self.k,
            character: self.character,
            entries: self.entries.iter().map(|e| e.map(&f)).collect(),
        }
    }

    pub fn to_rational(&self) -> VectorExpansion<BigRational> {
        self.map(|c| c.to_rational().expect("coefficient is rational"))
    }
}

impl<C: Field> VectorExpansion<C> {
    pub fn restrict(&self, m: u32, unit: Unit) -> Vec<PairSeries<C>> {
        self.entries
            .iter()
            .map(|e| e.restrict_diagonal(m, unit))
            .collect()
    }
}

impl<C: Scalar + std::fmt::Display> std::fmt::Debug for VectorExpansion<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VectorExpansion")
            .field("j", &self.j)
            .field("k", &self.k)
            .field("character", &self.character.bit())
            .field("entries", &self.entries)
            .finish()
    }
}
