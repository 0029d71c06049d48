//! Exact truncated Fourier expansions of degree-2 Siegel modular forms.
//!
//! Keys are integer triples `(a, b, c)` standing for `Q1^a Q2^b R^c` with
//! `Q_i = e^{πiτ_i}` and `R = e^{πiτ_12}`. A term `q1^n q2^m r^l` in the
//! usual `q = Q²` units therefore lives at key `(2n, 2m, 2l)`. Truncation is
//! by total degree `a + b <= prec`; every stored key satisfies `c² <= 4ab`.

mod json;
mod pair;
mod siegel;
pub(crate) mod slots;
mod vector;

pub use json::{ExpansionJson, VectorJson};
pub use pair::PairSeries;
pub use siegel::SiegelExpansion;
pub use vector::{VanishingConfig, VectorExpansion};

/// Nontrivial-character parity flag of a form on `Sp(4, Z)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Character {
    Trivial,
    Epsilon,
}

impl Character {
    pub fn from_bit(bit: u8) -> Self {
        if bit.is_multiple_of(2) {
            Character::Trivial
        } else {
            Character::Epsilon
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Character::Trivial => 0,
            Character::Epsilon => 1,
        }
    }

    pub fn xor(self, other: Character) -> Character {
        Character::from_bit(self.bit() ^ other.bit())
    }
}

/// Normal coordinate used for Taylor expansion along `τ_12 = 0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Unit {
    /// `s = πiτ_12`, so `R = e^s`.
    S,
    /// `t = 2πiτ_12 = 2s`.
    T,
}
