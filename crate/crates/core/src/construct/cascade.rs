use num_bigint::BigInt;
use num_rational::BigRational;

use super::{clear_denominators, divide_chi5_power, filtration, integral_combination};
use crate::error::{Error, Result};
use crate::fourier::{PairSeries, SiegelExpansion, VectorExpansion};

/// One step of a division cascade: the forms before division and their
/// restrictions to `τ_12 = 0`.
#[derive(Clone, Debug)]
pub struct CascadeStage {
    pub weight: (u32, i32),
    pub forms: Vec<VectorExpansion<BigInt>>,
    pub restrictions: Vec<Vec<PairSeries<BigRational>>>,
}

/// Starting from `forms`, repeatedly keeps the subspace vanishing to order
/// at least `divisions[i]` and divides it by `χ_5^{divisions[i]}`. Returns
/// one stage per step plus the final space.
pub fn cascade(
    forms: &[VectorExpansion<BigInt>],
    chi5: &SiegelExpansion<BigInt>,
    divisions: &[u32],
    max_order: u32,
) -> Result<Vec<CascadeStage>> {
    let mut current = forms.to_vec();
    let mut stages = Vec::new();
    for (step, &nu) in divisions.iter().enumerate() {
        stages.push(stage(&current));
        let filt = filtration(&current, max_order)?;
        let sub = filt.at_least(nu);
        if sub.is_empty() {
            return Err(Error::NotDivisible(format!(
                "no form vanishes to order {nu} at step {step}"
            )));
        }
        current = sub
            .iter()
            .map(|v| {
                let f = integral_combination(&current, &clear_denominators(v))?;
                divide_chi5_power(&f, chi5, nu)
            })
            .collect::<Result<Vec<_>>>()?;
    }
    stages.push(stage(&current));
    Ok(stages)
}

fn stage(forms: &[VectorExpansion<BigInt>]) -> CascadeStage {
    let weight = forms.first().map_or((0, 0), |f| (f.j(), f.k()));
    CascadeStage {
        weight,
        forms: forms.to_vec(),
        restrictions: forms
            .iter()
            .map(|f| f.restrict_s(0).iter().map(|p| p.map(|c| BigRational::from_integer(c.clone()))).collect())
            .collect(),
    }
}
