use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fourier::VectorExpansion;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Orders of vanishing along `τ_12 = 0` across the span of a list of forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Filtration {
    /// One entry per dimension, sorted.
    pub orders: Vec<u32>,
    /// `subspaces[m]` spans the combinations of order at least `m`.
    subspaces: Vec<Vec<Vec<BigRational>>>,
}

impl Filtration {
    /// Basis (coefficient vectors over the input forms) of the subspace of
    /// order at least `m`.
    pub fn at_least(&self, m: u32) -> Vec<Vec<BigRational>> {
        self.subspaces.get(m as usize).cloned().unwrap_or_default()
    }

    pub fn distinct(&self) -> Vec<u32> {
        let mut v = self.orders.clone();
        v.dedup();
        v
    }

    pub fn multiplicity(&self, m: u32) -> usize {
        self.orders.iter().filter(|&&o| o == m).count()
    }
}

fn flatten<C: Scalar>(f: &VectorExpansion<C>, m: u32) -> Vec<BigRational> {
    f.restrict_s(m)
        .iter()
        .flat_map(|p| p.dense().iter().map(|c| c.to_rational().expect("rational coefficients")).collect::<Vec<_>>())
        .collect()
}

/// Peels off the span of `forms` by order of vanishing: at each `m` the
/// `m`-th derivatives of the remaining subspace are computed and their
/// kernel becomes the next subspace.
pub fn filtration<C: Scalar>(forms: &[VectorExpansion<C>], max_order: u32) -> Result<Filtration> {
    let n = forms.len();
    let mut current: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|k| if i == k { BigRational::from_integer(1.into()) } else { BigRational::zero() }).collect())
        .collect();
    let mut orders = Vec::new();
    let mut subspaces = vec![current.clone()];
    let mut m = 0;
    while !current.is_empty() {
        if m > max_order {
            return Err(Error::AllZero {
                max_order,
                prec: forms.iter().map(|f| f.prec()).min().unwrap_or(0),
            });
        }
        let restrictions: Vec<Vec<BigRational>> = forms.iter().map(|f| flatten(f, m)).collect();
        let len = restrictions.first().map_or(0, |r| r.len());
        let mut rows = Vec::new();
        for pos in 0..len {
            let row: Vec<BigRational> = current
                .iter()
                .map(|v| {
                    let mut acc = BigRational::zero();
                    for (c, r) in v.iter().zip(&restrictions) {
                        if !c.is_zero() && !r[pos].is_zero() {
                            acc += c * &r[pos];
                        }
                    }
                    acc
                })
                .collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
        let next: Vec<Vec<BigRational>> = if rows.is_empty() {
            current.clone()
        } else {
            Matrix::from_rows(rows)
                .kernel()
                .iter()
                .map(|w| {
                    (0..n)
                        .map(|k| {
                            let mut acc = BigRational::zero();
                            for (c, v) in w.iter().zip(&current) {
                                acc += c * &v[k];
                            }
                            acc
                        })
                        .collect()
                })
                .collect()
        };
        orders.extend(std::iter::repeat_n(m, current.len() - next.len()));
        current = next;
        subspaces.push(current.clone());
        m += 1;
    }
    Ok(Filtration { orders, subspaces })
}
