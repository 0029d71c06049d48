use num_rational::BigRational;

use super::targets::{self, LeadingSpec};
use super::{
    clear_denominators, divide_chi5_power, gamma_basis, integral_combination, normalize_to_basis,
    filtration, GammaEvaluator, Seeds,
};
use crate::error::{Error, Result};
use crate::fourier::VectorExpansion;

/// How to obtain a basis of `S_{j,k}` from one covariant slot: take the
/// subspace of `γ` images vanishing to order at least `divisions` along
/// `τ_12 = 0` and divide by `χ_5^{divisions}`.
#[derive(Clone, Debug)]
pub struct SpaceRecipe {
    pub j: u32,
    pub k: i32,
    pub d: u32,
    pub lambda: (u32, u32),
    pub divisions: u32,
    pub dim: usize,
    normalization: Option<fn() -> Vec<LeadingSpec>>,
}

impl SpaceRecipe {
    pub fn normalization(&self) -> Option<Vec<LeadingSpec>> {
        self.normalization.map(|f| f())
    }
}

/// A basis of a space of cusp forms with the recipe that produced it.
#[derive(Clone, Debug)]
pub struct Space {
    pub recipe: SpaceRecipe,
    pub basis: Vec<VectorExpansion<BigRational>>,
}

impl Space {
    pub fn prec(&self) -> u32 {
        self.basis.iter().map(|f| f.prec()).min().unwrap_or(0)
    }
}

fn recipe(
    (j, k): (u32, i32),
    d: u32,
    lambda: (u32, u32),
    divisions: u32,
    dim: usize,
    normalization: Option<fn() -> Vec<LeadingSpec>>,
) -> SpaceRecipe {
    SpaceRecipe {
        j,
        k,
        d,
        lambda,
        divisions,
        dim,
        normalization,
    }
}

/// The spaces with a built-in recipe.
pub fn known_spaces() -> Vec<SpaceRecipe> {
    vec![
        recipe((8, 8), 2, (10, 2), 0, 1, Some(|| vec![targets::chi8_8()])),
        recipe((12, 6), 2, (12, 0), 0, 1, None),
        recipe((4, 10), 2, (8, 4), 0, 1, Some(|| vec![targets::chi4_10()])),
        recipe((0, 12), 2, (6, 6), 0, 1, Some(|| vec![targets::chi12()])),
        recipe((8, 10), 4, (16, 8), 2, 2, Some(targets::s8_10)),
        recipe((12, 8), 4, (18, 6), 2, 2, None),
        recipe((6, 12), 5, (18, 12), 3, 2, Some(targets::s6_12)),
        recipe((10, 10), 5, (20, 10), 3, 2, None),
        recipe((12, 9), 5, (21, 9), 3, 2, None),
        recipe((14, 8), 5, (22, 8), 3, 2, None),
        recipe((4, 16), 8, (26, 22), 6, 3, Some(targets::s4_16)),
    ]
}

/// Builds a basis of `S_{j,k}` from the seeds.
pub fn build_space(j: u32, k: i32, seeds: &Seeds) -> Result<Space> {
    let recipe = known_spaces()
        .into_iter()
        .find(|r| r.j == j && r.k == k)
        .ok_or_else(|| Error::UnknownSpace(format!("no recipe for S_{{{j},{k}}}")))?;
    let mut evaluator = GammaEvaluator::new(&seeds.chi63)?;
    let images: Vec<_> = gamma_basis(&mut evaluator, recipe.d, recipe.lambda)?
        .into_iter()
        .map(|s| s.form)
        .collect();
    drop(evaluator);
    let filt = filtration(&images, crate::fourier::VanishingConfig::default().max_order)?;
    let sub = filt.at_least(recipe.divisions);
    if sub.len() != recipe.dim {
        return Err(Error::Underdetermined(format!(
            "expected a {}-dimensional subspace of order >= {}, found {}",
            recipe.dim,
            recipe.divisions,
            sub.len()
        )));
    }
    let mut basis = Vec::with_capacity(sub.len());
    for v in &sub {
        let f = integral_combination(&images, &clear_denominators(v))?;
        basis.push(divide_chi5_power(&f, &seeds.chi5, recipe.divisions)?.to_rational());
    }
    if let Some(specs) = recipe.normalization() {
        let slot = specs[0].slot;
        let targets: Vec<_> = specs.into_iter().map(|s| s.vector).collect();
        basis = normalize_to_basis(&basis, slot, &targets)?;
    }
    Ok(Space { recipe, basis })
}
