//! Fourier expansions of vector-valued Siegel modular forms of degree 2,
//! built from covariants of binary sextics by substituting the Fourier
//! coefficients of the cusp form `χ_{6,3}`, and checked through Hecke
//! eigenvalues and congruences with elliptic eigenforms.
//!
//! Everything is exact: the series types are generic over a [`Scalar`]
//! ring and the aliases below fix the rational instantiation used at the
//! public boundary.

pub mod construct;
pub mod covariant;
pub mod elliptic;
pub mod error;
pub mod fourier;
pub mod gaussian;
pub mod harder;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod theta;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};

use num_rational::BigRational;

/// Exact rational numbers.
pub type Q = BigRational;
/// Scalar Siegel expansion with rational coefficients.
pub type Expansion = fourier::SiegelExpansion<Q>;
/// Vector-valued Siegel expansion with rational coefficients.
pub type VectorForm = fourier::VectorExpansion<Q>;
/// Restriction to `τ_12 = 0` with rational coefficients.
pub type Pair = fourier::PairSeries<Q>;
