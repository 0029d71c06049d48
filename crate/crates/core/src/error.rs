use thiserror::Error;

/// Errors raised by the expansion, covariant and Hecke machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("character mismatch: cannot add a form with character {left} to one with character {right}")]
    CharacterMismatch { left: u8, right: u8 },

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("all Taylor coefficients up to order {max_order} vanish at precision {prec}")]
    AllZero { max_order: u32, prec: u32 },

    #[error("precision {have} is below the required floor {need}: {context}")]
    PrecisionFloor { have: u32, need: u32, context: String },

    #[error("support violation: key ({a},{b},{c}) is outside the positive semidefinite cone")]
    Support { a: u32, b: u32, c: i32 },

    #[error("invalid theta characteristic: {0}")]
    Characteristic(String),

    #[error("normalization failed: {0}")]
    Normalization(String),

    #[error("weight mismatch: {0}")]
    Weight(String),

    #[error("vector is not a highest-weight vector")]
    NotHighestWeight,

    #[error("no highest-weight vectors for degree {d} and weight {lambda:?}")]
    EmptyKernel { d: u32, lambda: (u32, u32) },

    #[error("no exact solution: {0}")]
    NoMatch(String),

    #[error("underdetermined: {0}")]
    Underdetermined(String),

    #[error("singular change of basis: {0}")]
    Singular(String),

    #[error("odd weight {0} is not supported for Eisenstein series on SL2(Z)")]
    OddWeight(i32),

    #[error("polynomial is not monic: {0}")]
    NonMonic(String),

    #[error("degenerate characteristic polynomial: {0}")]
    Degenerate(String),

    #[error("irreducibility could not be decided: {0}")]
    Irreducibility(String),

    #[error("basis is not stable under the Hecke operator: {0}")]
    NotStable(String),

    #[error("unknown space {0}")]
    UnknownSpace(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
