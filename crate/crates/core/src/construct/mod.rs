//! From covariants to Fourier expansions: substitute the coefficients of
//! `χ_{6,3}` into a covariant, then divide out the powers of `χ_5` that the
//! result vanishes along `τ_12 = 0`.

mod cascade;
mod identify;
mod order;
mod spaces;
pub mod targets;

pub use cascade::{cascade, CascadeStage};
pub use identify::{combine, identify_restriction, identify_vector, normalize_to_basis, tensor_candidates};
pub use order::{filtration, Filtration};
pub use spaces::{build_space, known_spaces, Space, SpaceRecipe};

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::covariant::{CovariantPoly, Exponent};
use crate::error::{Error, Result};
use crate::fourier::{Character, SiegelExpansion, VanishingConfig, VectorExpansion};
use crate::scalar::{common_denominator, Scalar};
use crate::theta;

/// Smallest precision at which `γ` images are produced.
pub const GAMMA_PREC_FLOOR: u32 = 8;

/// `χ_5` and `χ_{6,3}` at a common precision.
#[derive(Clone, Debug)]
pub struct Seeds {
    pub chi5: SiegelExpansion<BigInt>,
    pub chi63: VectorExpansion<BigInt>,
}

impl Seeds {
    pub fn compute(prec: u32) -> Result<Self> {
        Ok(Seeds {
            chi5: theta::chi5(prec)?,
            chi63: theta::chi63(prec)?,
        })
    }

    pub fn prec(&self) -> u32 {
        self.chi5.prec().min(self.chi63.prec())
    }
}

const BINOM6: [i64; 7] = [1, 6, 15, 20, 15, 6, 1];

/// Evaluates polynomials in `a_0 … a_6` at the coefficient series of
/// `χ_{6,3}`, caching every monomial it builds.
///
/// Works with `α̃_i = (60 / binom(6,i)) · entry_i = 60 α_i`, which is
/// integral, so all products stay in `BigInt`.
pub struct GammaEvaluator {
    alpha: Vec<SiegelExpansion<BigInt>>,
    memo: HashMap<Exponent, SiegelExpansion<BigInt>>,
    prec: u32,
}

/// An integral vector form `F` together with the rational scalar `s` such
/// that the intended form is `s · F`.
#[derive(Clone, Debug)]
pub struct ScaledForm {
    pub form: VectorExpansion<BigInt>,
    pub scale: BigRational,
}

impl ScaledForm {
    pub fn to_rational(&self) -> VectorExpansion<BigRational> {
        self.form.to_rational().scale(&self.scale)
    }
}

impl GammaEvaluator {
    pub fn new(chi63: &VectorExpansion<BigInt>) -> Result<Self> {
        if chi63.j() != 6 {
            return Err(Error::Weight(format!("expected j = 6, got j = {}", chi63.j())));
        }
        if chi63.prec() < GAMMA_PREC_FLOOR {
            return Err(Error::PrecisionFloor {
                have: chi63.prec(),
                need: GAMMA_PREC_FLOOR,
                context: "substitution into covariants".into(),
            });
        }
        let alpha = (0..7)
            .map(|i| chi63.entry(i).scale(&BigInt::from(60 / BINOM6[i])))
            .collect();
        Ok(GammaEvaluator {
            alpha,
            memo: HashMap::new(),
            prec: chi63.prec(),
        })
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// `Π α̃_i^{e_i}`.
    pub fn monomial(&mut self, e: &Exponent) -> SiegelExpansion<BigInt> {
        if let Some(m) = self.memo.get(e) {
            return m.clone();
        }
        let Some(i) = e.iter().position(|&k| k > 0) else {
            return SiegelExpansion::one(self.prec);
        };
        let mut rest = *e;
        rest[i] -= 1;
        let m = self.monomial(&rest).mul(&self.alpha[i]);
        self.memo.insert(*e, m.clone());
        m
    }

    /// `Σ (den · c_e) α̃^e` for a homogeneous polynomial; `den` must clear
    /// every denominator.
    fn eval_scaled(&mut self, p: &crate::covariant::APoly, d: u32, den: &BigInt) -> SiegelExpansion<BigInt> {
        let character = Character::from_bit((d % 2) as u8);
        let mut acc = SiegelExpansion::zero(self.prec, character);
        for (e, c) in p.terms() {
            let k = c * BigRational::from_integer(den.clone());
            debug_assert!(k.is_integer());
            let m = self.monomial(e);
            acc = acc
                .add(&m.scale(&k.to_integer()))
                .expect("monomials of one degree share a character");
        }
        acc
    }

    /// `γ(h)` as an integral form and a scale.
    pub fn image(&mut self, h: &CovariantPoly) -> Result<ScaledForm> {
        let coeffs: Vec<BigRational> = h
            .entries
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>())
            .collect();
        let den = common_denominator(&coeffs);
        let character = Character::from_bit((h.d % 2) as u8);
        let entries = h
            .entries
            .iter()
            .map(|p| self.eval_scaled(p, h.d, &den))
            .collect();
        let form = VectorExpansion::new((h.q() + 3 * h.d) as i32, character, entries)?;
        let scale = BigRational::new(BigInt::one(), BigInt::from(60).pow(h.d) * den);
        Ok(ScaledForm { form, scale })
    }
}

/// `γ(h)`: substitute `α_i = entry_i(χ_{6,3}) / binom(6,i)` for `a_i`.
/// The result has weight `(p, q + 3d)` and character `d mod 2`.
pub fn gamma(h: &CovariantPoly, chi63: &VectorExpansion<BigInt>) -> Result<VectorExpansion<BigRational>> {
    Ok(GammaEvaluator::new(chi63)?.image(h)?.to_rational())
}

/// Result of dividing a form by the largest power of `χ_5` it vanishes to.
#[derive(Clone)]
pub struct Reduced<C> {
    pub form: VectorExpansion<C>,
    pub divisions: u32,
}

/// Divides `f` by `χ_5^ν`, `ν` its order along `τ_12 = 0`, one factor at a time.
pub fn reduce<C: Scalar>(
    f: &VectorExpansion<C>,
    chi5: &SiegelExpansion<C>,
    config: &VanishingConfig,
) -> Result<Reduced<C>> {
    let nu = f.vanishing_order(config)?;
    let form = divide_chi5_power(f, chi5, nu)?;
    Ok(Reduced {
        form,
        divisions: nu,
    })
}

/// Divides by `χ_5^n`, one factor at a time.
pub fn divide_chi5_power<C: Scalar>(
    f: &VectorExpansion<C>,
    chi5: &SiegelExpansion<C>,
    n: u32,
) -> Result<VectorExpansion<C>> {
    let mut form = f.clone();
    for _ in 0..n {
        form = form.divide_scalar(chi5, 5)?;
    }
    Ok(form)
}

/// Bookkeeping for a form obtained from `(d, λ)` covariants.
#[derive(Clone, Debug)]
pub struct ConstructedForm {
    pub d: u32,
    pub lambda: (u32, u32),
    /// Coefficients over the echelon highest-weight basis of `(d, λ)`.
    pub combination: Vec<BigRational>,
    pub divisions: u32,
    pub form: VectorExpansion<BigRational>,
}

impl ConstructedForm {
    /// `(p, q + 3d − 5·divisions)`.
    pub fn weight(&self) -> (u32, i32) {
        let (p, q) = (self.lambda.0 - self.lambda.1, self.lambda.1);
        (p, q as i32 + 3 * self.d as i32 - 5 * self.divisions as i32)
    }

    pub fn character(&self) -> Character {
        Character::from_bit(((self.d + self.divisions) % 2) as u8)
    }
}

/// `γ` images of the whole echelon covariant basis of `(d, λ)`.
pub fn gamma_basis(
    evaluator: &mut GammaEvaluator,
    d: u32,
    lambda: (u32, u32),
) -> Result<Vec<ScaledForm>> {
    crate::covariant::covariants(d, lambda)?
        .iter()
        .map(|h| evaluator.image(h))
        .collect()
}

/// `Σ v_k F_k` for an integral combination vector.
pub fn integral_combination(
    forms: &[VectorExpansion<BigInt>],
    v: &[BigInt],
) -> Result<VectorExpansion<BigInt>> {
    let mut acc: Option<VectorExpansion<BigInt>> = None;
    for (f, c) in forms.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let term = f.scale(c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    acc.ok_or_else(|| Error::NoMatch("zero combination".into()))
}

/// Scales a rational vector to a primitive integral one.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    crate::covariant::primitive(v)
        .into_iter()
        .map(|c| c.to_integer())
        .collect()
}

/// Vectors of `filtration` completing each `at_least(m + 1)` to
/// `at_least(m)`, tagged with their order.
pub fn adapted_basis(filt: &Filtration) -> Vec<(u32, Vec<BigRational>)> {
    let mut out = Vec::new();
    for &m in filt.distinct().iter() {
        let mut span = filt.at_least(m + 1);
        for v in filt.at_least(m) {
            let mut trial = span.clone();
            trial.push(v.clone());
            if crate::linalg::Matrix::from_rows(trial.clone()).rank() == trial.len() {
                span = trial;
                out.push((m, v));
            }
        }
    }
    out
}

/// `γ` images of every covariant of `(d, λ)`. With `reduce`, the span is
/// first split by order of vanishing and each form is divided by
/// `χ_5^{order}`.
pub fn construct_forms(
    seeds: &Seeds,
    d: u32,
    lambda: (u32, u32),
    reduce: bool,
    config: &VanishingConfig,
) -> Result<Vec<ConstructedForm>> {
    let mut evaluator = GammaEvaluator::new(&seeds.chi63)?;
    let images = gamma_basis(&mut evaluator, d, lambda)?;
    drop(evaluator);
    let n = images.len();
    let unit = |i: usize| -> Vec<BigRational> {
        (0..n)
            .map(|k| if k == i { BigRational::one() } else { BigRational::zero() })
            .collect()
    };
    let plan: Vec<(u32, Vec<BigRational>)> = if reduce {
        let forms: Vec<_> = images.iter().map(|s| s.form.clone()).collect();
        adapted_basis(&filtration(&forms, config.max_order)?)
    } else {
        (0..n).map(|i| (0, unit(i))).collect()
    };
    let forms: Vec<_> = images.iter().map(|s| s.form.clone()).collect();
    plan.into_iter()
        .map(|(nu, v)| {
            let w = clear_denominators(&v);
            let f = integral_combination(&forms, &w)?;
            let form = divide_chi5_power(&f, &seeds.chi5, nu)?.to_rational();
            let combination = w
                .iter()
                .zip(&images)
                .map(|(c, s)| BigRational::from_integer(c.clone()) / &s.scale)
                .collect();
            Ok(ConstructedForm {
                d,
                lambda,
                combination,
                divisions: nu,
                form,
            })
        })
        .collect()
}

/// Orders of vanishing of the span of the `γ` images of `(d, λ)`.
pub fn order_table(seeds: &Seeds, d: u32, lambda: (u32, u32), max_order: u32) -> Result<Filtration> {
    let mut evaluator = GammaEvaluator::new(&seeds.chi63)?;
    let forms: Vec<_> = gamma_basis(&mut evaluator, d, lambda)?
        .into_iter()
        .map(|s| s.form)
        .collect();
    filtration(&forms, max_order)
}
