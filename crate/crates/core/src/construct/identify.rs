use num_rational::BigRational;
use num_traits::Zero;

use crate::elliptic::EllipticSeries;
use crate::error::{Error, Result};
use crate::fourier::{PairSeries, VectorExpansion};
use crate::laurent::RPoly;
use crate::linalg::Matrix;

/// All `f ⊗ g` for `f` in `left`, `g` in `right`.
pub fn tensor_candidates(
    left: &[EllipticSeries],
    right: &[EllipticSeries],
    prec: u32,
) -> Vec<PairSeries<BigRational>> {
    let mut out = Vec::new();
    for f in left {
        for g in right {
            out.push(PairSeries::tensor(f.coeffs(), g.coeffs(), prec));
        }
    }
    out
}

/// Writes `target` as a combination of `candidates`, comparing all
/// coefficients below the common precision.
pub fn identify_restriction(
    target: &PairSeries<BigRational>,
    candidates: &[PairSeries<BigRational>],
) -> Result<Vec<BigRational>> {
    let prec = candidates
        .iter()
        .map(|c| c.prec())
        .chain([target.prec()])
        .min()
        .unwrap_or(0);
    let t = target.truncate(prec);
    let cols: Vec<PairSeries<BigRational>> = candidates.iter().map(|c| c.truncate(prec)).collect();
    let rows: Vec<Vec<BigRational>> = (0..t.dense().len())
        .map(|i| cols.iter().map(|c| c.dense()[i].clone()).collect())
        .collect();
    Matrix::from_rows(rows).solve(t.dense())
}

/// `Σ c_k F_k`.
pub fn combine(
    forms: &[VectorExpansion<BigRational>],
    coeffs: &[BigRational],
) -> Result<VectorExpansion<BigRational>> {
    let first = forms.first().ok_or_else(|| Error::Singular("empty basis".into()))?;
    let mut acc = first.scale(&BigRational::zero());
    for (f, c) in forms.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&f.scale(c))?;
        }
    }
    Ok(acc)
}

fn flatten_slot(v: &[RPoly<BigRational>], lo: i32, hi: i32) -> Vec<BigRational> {
    v.iter()
        .flat_map(|p| (lo..=hi).map(move |c| p.coeff(c)))
        .collect()
}

/// Changes basis so that the coefficient vectors at slot `(a, b)` become
/// `targets`. Fails with `Singular` when the forms do not pin down a
/// unique change of basis there.
pub fn normalize_to_basis(
    forms: &[VectorExpansion<BigRational>],
    slot: (u32, u32),
    targets: &[Vec<RPoly<BigRational>>],
) -> Result<Vec<VectorExpansion<BigRational>>> {
    let (a, b) = slot;
    let vectors: Vec<Vec<RPoly<BigRational>>> = forms.iter().map(|f| f.slot_vector(a, b)).collect();
    let bound = vectors
        .iter()
        .chain(targets)
        .flatten()
        .map(|p| p.max_abs_exp())
        .max()
        .unwrap_or(0);
    let cols: Vec<Vec<BigRational>> = vectors.iter().map(|v| flatten_slot(v, -bound, bound)).collect();
    let len = cols.first().map_or(0, |c| c.len());
    let matrix = Matrix::from_rows(
        (0..len)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect(),
    );
    targets
        .iter()
        .map(|t| {
            if t.len() != forms[0].j() as usize + 1 {
                return Err(Error::Weight(format!("target has {} entries", t.len())));
            }
            let x = matrix.solve(&flatten_slot(t, -bound, bound)).map_err(|e| match e {
                Error::Underdetermined(s) => Error::Singular(s),
                other => other,
            })?;
            combine(forms, &x)
        })
        .collect()
}

/// Entrywise version of [`identify_restriction`]: writes a vector of
/// restrictions as a combination of candidate vectors.
pub fn identify_vector(
    target: &[PairSeries<BigRational>],
    candidates: &[Vec<PairSeries<BigRational>>],
) -> Result<Vec<BigRational>> {
    let prec = candidates
        .iter()
        .flatten()
        .chain(target)
        .map(|c| c.prec())
        .min()
        .unwrap_or(0);
    let flat = |v: &[PairSeries<BigRational>]| -> Vec<BigRational> {
        v.iter().flat_map(|p| p.truncate(prec).dense().to_vec()).collect()
    };
    let t = flat(target);
    let cols: Vec<Vec<BigRational>> = candidates.iter().map(|c| flat(c)).collect();
    if cols.iter().any(|c| c.len() != t.len()) {
        return Err(Error::Weight("candidate vectors of the wrong length".into()));
    }
    let rows: Vec<Vec<BigRational>> = (0..t.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    Matrix::from_rows(rows).solve(&t)
}
