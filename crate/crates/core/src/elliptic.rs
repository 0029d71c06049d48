//! Modular and quasi-modular forms in one variable.
//!
//! Expansions are stored in `Q = q^{1/2}` units so that `δ = Q ∏(1 − Q^{2n})^{12}`
//! fits the same format as forms on `SL2(Z)`, whose exponents are even.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::UPoly;
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Level {
    Sl2z,
    /// `Γ_1(2)`, home of `δ`.
    Gamma1Of2,
}

/// Truncated expansion `Σ_{m <= prec} c_m Q^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticSeries {
    prec: u32,
    coeffs: Vec<BigRational>,
    weight: i32,
    quasi_depth: u32,
    level: Level,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Bernoulli numbers `B_0 … B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / q(m as i64 + 1));
    }
    b
}

/// `σ_r(n) = Σ_{d | n} d^r`.
pub fn sigma(r: u32, n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += BigInt::from(d).pow(r);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(r);
            }
        }
        d += 1;
    }
    acc
}

impl EllipticSeries {
    pub fn new(
        prec: u32,
        mut coeffs: Vec<BigRational>,
        weight: i32,
        quasi_depth: u32,
        level: Level,
    ) -> Self {
        coeffs.resize(prec as usize + 1, BigRational::zero());
        EllipticSeries {
            prec,
            coeffs,
            weight,
            quasi_depth,
            level,
        }
    }

    /// A form on `SL2(Z)` from its `q`-expansion `a(0), a(1), …`.
    pub fn from_q_expansion(prec: u32, a: &[BigRational], weight: i32, depth: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); prec as usize + 1];
        for (n, v) in a.iter().enumerate() {
            if 2 * n <= prec as usize {
                coeffs[2 * n] = v.clone();
            }
        }
        Self::new(prec, coeffs, weight, depth, Level::Sl2z)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_q_expansion(prec, &[BigRational::one()], 0, 0)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn weight(&self) -> i32 {
        self.weight
    }

    pub fn quasi_depth(&self) -> u32 {
        self.quasi_depth
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// Coefficient of `Q^m`.
    pub fn coeff(&self, m: u32) -> BigRational {
        self.coeffs
            .get(m as usize)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `q^n = Q^{2n}`.
    pub fn q_coeff(&self, n: u32) -> BigRational {
        self.coeff(2 * n)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<u32> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|m| m as u32)
    }

    pub fn truncate(&self, prec: u32) -> Self {
        let prec = prec.min(self.prec);
        Self::new(
            prec,
            self.coeffs[..=prec as usize].to_vec(),
            self.weight,
            self.quasi_depth,
            self.level,
        )
    }

    fn combine_level(&self, other: &Self) -> Level {
        if self.level == Level::Sl2z {
            other.level
        } else {
            self.level
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::Weight(format!(
                "cannot add weight {} to weight {}",
                self.weight, other.weight
            )));
        }
        let prec = self.prec.min(other.prec);
        let coeffs = (0..=prec)
            .map(|m| self.coeff(m) + other.coeff(m))
            .collect();
        Ok(Self::new(
            prec,
            coeffs,
            self.weight,
            self.quasi_depth.max(other.quasi_depth),
            self.combine_level(other),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(
            self.prec,
            self.coeffs.iter().map(|c| c * s).collect(),
            self.weight,
            self.quasi_depth,
            self.level,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec) as usize;
        let mut out = vec![BigRational::zero(); prec + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(prec + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(prec + 1 - i) {
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(
            prec as u32,
            out,
            self.weight + other.weight,
            self.quasi_depth + other.quasi_depth,
            self.combine_level(other),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.prec);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `e_k = 1 − (2k/B_k) Σ σ_{k−1}(n) q^n` to `Q`-precision `prec`.
pub fn eisenstein(k: i32, prec: u32) -> Result<EllipticSeries> {
    if k % 2 != 0 || k < 2 {
        return Err(Error::OddWeight(k));
    }
    let bk = bernoulli(k as usize)[k as usize].clone();
    let factor = -q(2 * k as i64) / bk;
    let a: Vec<BigRational> = (0..=prec / 2)
        .map(|n| {
            if n == 0 {
                BigRational::one()
            } else {
                &factor * BigRational::from_integer(sigma(k as u32 - 1, n as u64))
            }
        })
        .collect();
    Ok(EllipticSeries::from_q_expansion(
        prec,
        &a,
        k,
        u32::from(k == 2),
    ))
}

/// `x^shift ∏_{n >= 1} (1 − x^n)^e` truncated at `x^len`.
fn eta_power(len: usize, shift: usize, e: u32) -> Vec<BigRational> {
    let mut prod = vec![BigInt::zero(); len + 1];
    if shift <= len {
        prod[shift] = BigInt::one();
    }
    for n in 1..=len {
        for _ in 0..e {
            for m in (n..=len).rev() {
                let v = prod[m - n].clone();
                prod[m] -= v;
            }
        }
    }
    prod.into_iter().map(BigRational::from_integer).collect()
}

/// `Δ = q ∏(1 − q^n)^{24}`.
pub fn delta(prec: u32) -> EllipticSeries {
    let a = eta_power(prec as usize / 2, 1, 24);
    EllipticSeries::from_q_expansion(prec, &a, 12, 0)
}

/// `δ = q^{1/2} ∏(1 − q^n)^{12}`, weight 6 on `Γ_1(2)`.
pub fn little_delta(prec: u32) -> EllipticSeries {
    let a = eta_power(prec as usize / 2, 0, 12);
    let mut coeffs = vec![BigRational::zero(); prec as usize + 1];
    for (n, v) in a.into_iter().enumerate() {
        if 2 * n < prec as usize {
            coeffs[2 * n + 1] = v;
        }
    }
    EllipticSeries::new(prec, coeffs, 6, 0, Level::Gamma1Of2)
}

/// `D = q d/dq`: multiplies the `Q^m` coefficient by `m/2`.
pub fn d_op(f: &EllipticSeries) -> EllipticSeries {
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| c * BigRational::new(BigInt::from(m), BigInt::from(2)))
        .collect();
    EllipticSeries::new(f.prec, coeffs, f.weight + 2, f.quasi_depth + 1, f.level)
}

/// Exponents `(i, a, b)` of the basis `Δ^i e_4^a e_6^b` of `M_k(SL2(Z))`.
fn basis_exponents(k: i32) -> Vec<(u32, u32, u32)> {
    if k < 0 || k % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut i = 0;
    while 12 * i <= k {
        let r = k - 12 * i;
        if r != 2 {
            // r = 4a + 6b with b ∈ {0, 1}
            let b = if r % 4 == 0 { 0 } else { 1 };
            let a = (r - 6 * b) / 4;
            out.push((i as u32, a as u32, b as u32));
        }
        i += 1;
    }
    out
}

/// Dimension of `M_k(SL2(Z))`.
pub fn dim_modular(k: i32) -> usize {
    basis_exponents(k).len()
}

/// Dimension of `S_k(SL2(Z))`.
pub fn dim_cusp(k: i32) -> usize {
    basis_exponents(k).iter().filter(|e| e.0 >= 1).count()
}

/// The basis `Δ^i e_4^a e_6^b` of `M_k(SL2(Z))`, ordered by `i`.
pub fn modular_basis(k: i32, prec: u32) -> Vec<EllipticSeries> {
    let (e4, e6, d) = (
        eisenstein(4, prec).expect("even weight"),
        eisenstein(6, prec).expect("even weight"),
        delta(prec),
    );
    basis_exponents(k)
        .into_iter()
        .map(|(i, a, b)| d.pow(i).mul(&e4.pow(a)).mul(&e6.pow(b)))
        .collect()
}

/// Echelon basis `f_i = q^i + O(q^{dim+1})` of `S_k(SL2(Z))`.
pub fn cusp_echelon_basis(k: i32, prec: u32) -> Result<Vec<EllipticSeries>> {
    let cusp: Vec<EllipticSeries> = modular_basis(k, prec)
        .into_iter()
        .filter(|f| f.q_coeff(0).is_zero())
        .collect();
    let dim = cusp.len();
    if prec / 2 < dim as u32 {
        return Err(Error::PrecisionFloor {
            have: prec,
            need: 2 * dim as u32,
            context: format!("echelon basis of S_{k}"),
        });
    }
    // Leading block in q^1..q^dim is unitriangular up to scaling; invert it.
    let block = Matrix::from_rows(
        cusp.iter()
            .map(|f| (1..=dim as u32).map(|n| f.q_coeff(n)).collect())
            .collect(),
    );
    let inv = block.inverse()?;
    Ok((0..dim)
        .map(|i| {
            let mut acc = EllipticSeries::new(prec, Vec::new(), k, 0, Level::Sl2z);
            for (j, f) in cusp.iter().enumerate() {
                acc = acc.add(&f.scale(inv.get(i, j))).expect("same weight");
            }
            acc
        })
        .collect())
}

/// A spanning set of quasi-modular forms of weight `k`:
/// `⊕_{i} D^i M_{k−2i} ⊕ ⟨D^{k/2−1} e_2⟩` on `SL2(Z)`, and `δ` times the
/// weight-`(k−6)` set on `Γ_1(2)` (forms with odd `Q`-exponents).
pub fn quasi_basis(k: i32, level: Level, prec: u32) -> Vec<EllipticSeries> {
    match level {
        Level::Sl2z => {
            let mut out = Vec::new();
            if k < 0 || k % 2 != 0 {
                return out;
            }
            if k == 0 {
                return vec![EllipticSeries::one(prec)];
            }
            for i in 0..k / 2 {
                for f in modular_basis(k - 2 * i, prec) {
                    let mut g = f;
                    for _ in 0..i {
                        g = d_op(&g);
                    }
                    out.push(g);
                }
            }
            let mut e2 = eisenstein(2, prec).expect("even weight");
            for _ in 0..k / 2 - 1 {
                e2 = d_op(&e2);
            }
            out.push(e2);
            out
        }
        Level::Gamma1Of2 => {
            let d = little_delta(prec);
            quasi_basis(k - 6, Level::Sl2z, prec)
                .iter()
                .map(|f| d.mul(f))
                .collect()
        }
    }
}

/// Matrix of `T_p` on the echelon basis of `S_k(SL2(Z))`; row `i` holds the
/// coordinates of `T_p f_i`.
pub fn elliptic_hecke(k: i32, p: u32, prec: u32) -> Result<Matrix<BigRational>> {
    let basis = cusp_echelon_basis(k, prec)?;
    let dim = basis.len() as u32;
    if prec / 2 < p * (dim + 1) {
        return Err(Error::PrecisionFloor {
            have: prec,
            need: 2 * p * (dim + 1),
            context: format!("T_{p} on S_{k}"),
        });
    }
    let pk = q(p as i64).pow(k - 1);
    let rows = basis
        .iter()
        .map(|f| {
            (1..=dim)
                .map(|n| {
                    let mut v = f.q_coeff(n * p);
                    if n % p == 0 {
                        v += &pk * f.q_coeff(n / p);
                    }
                    v
                })
                .collect()
        })
        .collect();
    Ok(Matrix::from_rows(rows))
}

/// Characteristic polynomial of `T_p` on `S_k(SL2(Z))`.
pub fn elliptic_charpoly(k: i32, p: u32) -> Result<UPoly<BigRational>> {
    let dim = dim_cusp(k) as u32;
    let prec = 2 * p * (dim + 1);
    Ok(elliptic_hecke(k, p, prec)?.charpoly())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli(12);
        assert_eq!(b[2], BigRational::new(1.into(), 6.into()));
        assert_eq!(b[4], BigRational::new((-1).into(), 30.into()));
        assert_eq!(b[12], BigRational::new((-691).into(), 2730.into()));
    }

    #[test]
    fn e4_starts_with_240() {
        let e4 = eisenstein(4, 10).unwrap();
        assert_eq!(e4.q_coeff(1), q(240));
        assert_eq!(e4.coeff(1), q(0));
        assert!(matches!(eisenstein(3, 10), Err(Error::OddWeight(3))));
    }

    #[test]
    fn constants_are_killed_by_d() {
        assert!(d_op(&EllipticSeries::one(10)).is_zero());
        assert_eq!(d_op(&delta(10)).q_coeff(1), q(1));
    }

    #[test]
    fn tau_of_two() {
        let m = elliptic_hecke(12, 2, 12).unwrap();
        assert_eq!(m.get(0, 0), &q(-24));
    }

    #[test]
    fn modular_dimensions() {
        let dims: Vec<usize> = (0..=14).step_by(2).map(dim_modular).collect();
        assert_eq!(dims, vec![1, 0, 1, 1, 1, 1, 2, 1]);
    }
}
