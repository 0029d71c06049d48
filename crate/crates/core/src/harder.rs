//! Congruences `λ(p) ≡ p^{k−2} + a(p) + p^{j+k−1} mod ℓ` between Hecke
//! eigenvalues of Siegel cusp forms of weight `(j, k)` and elliptic cusp
//! forms of weight `j + 2k − 2`, checked through resultants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::elliptic::elliptic_charpoly;
use crate::error::{Error, Result};
use crate::poly::{norm_resultant, UPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceCase {
    pub j: u32,
    pub k: u32,
    pub ell: u64,
    pub primes: Vec<u32>,
}

impl CongruenceCase {
    pub fn new(j: u32, k: u32, ell: u64, primes: Vec<u32>) -> Self {
        CongruenceCase { j, k, ell, primes }
    }

    /// Weight of the elliptic cusp forms involved.
    pub fn elliptic_weight(&self) -> i32 {
        (self.j + 2 * self.k - 2) as i32
    }

    /// `(k − 2, j + k − 1)`.
    pub fn exponents(&self) -> (u32, u32) {
        (self.k - 2, self.j + self.k - 1)
    }
}

/// Known congruence primes: the four spaces `S_{j,k}` of dimension 2 paired
/// with weight 28, and `S_{4,16}` paired with weight 34.
pub fn known_cases() -> Vec<CongruenceCase> {
    [(6, 12, 823), (10, 10, 157), (12, 9, 4057), (14, 8, 647), (4, 16, 1571)]
        .into_iter()
        .map(|(j, k, ell)| CongruenceCase::new(j, k, ell, vec![2, 3]))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub p: u32,
    pub resultant: BigInt,
    pub divisible: bool,
}

fn check_squarefree(f: &UPoly<BigRational>, what: &str) -> Result<()> {
    if f.discriminant().is_zero() {
        return Err(Error::Degenerate(format!("{what} has a repeated root")));
    }
    Ok(())
}

/// Minimal-polynomial data for `p^{k−2} + a(p) + p^{j+k−1}`: the elliptic
/// characteristic polynomial with its variable shifted.
pub fn shifted_elliptic_charpoly(case: &CongruenceCase, p: u32) -> Result<UPoly<BigRational>> {
    let h = elliptic_charpoly(case.elliptic_weight(), p)?;
    let (e1, e2) = case.exponents();
    let pb = BigInt::from(p);
    let shift = BigRational::from_integer(pb.pow(e1) + pb.pow(e2));
    Ok(h.shift(&-shift))
}

/// `Res(f_λ, g)` with `f_λ` the characteristic polynomial of the Siegel
/// `T(p)` and `g` the shifted elliptic one, and whether `ℓ` divides it.
pub fn check_congruence(
    case: &CongruenceCase,
    p: u32,
    siegel_charpoly: &UPoly<BigRational>,
) -> Result<CongruenceCheck> {
    check_squarefree(siegel_charpoly, "Siegel characteristic polynomial")?;
    let g = shifted_elliptic_charpoly(case, p)?;
    check_squarefree(&g, "elliptic characteristic polynomial")?;
    let resultant = norm_resultant(siegel_charpoly, &g)?;
    let divisible = resultant.is_multiple_of(&BigInt::from(case.ell));
    Ok(CongruenceCheck {
        p,
        resultant,
        divisible,
    })
}
