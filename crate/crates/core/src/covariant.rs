//! Covariants of binary sextics `f = Σ binom(6,i) a_i x_1^{6−i} x_2^i`.
//!
//! Covariants are computed weight space by weight space: a highest-weight
//! vector is a polynomial in `a_0 … a_6` killed by the raising operator, and
//! the full covariant is its orbit under the lowering operator.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{common_denominator, content, format_rational, Scalar};

/// Exponent vector `(e_0, …, e_6)` of a monomial in `a_0 … a_6`.
pub type Exponent = [u8; 7];

/// `sl_2`-weight `Σ (6 − 2i) e_i` of a monomial.
pub fn monomial_weight(e: &Exponent) -> i32 {
    e.iter()
        .enumerate()
        .map(|(i, &k)| (6 - 2 * i as i32) * k as i32)
        .sum()
}

/// Polynomial in `a_0 … a_6` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct APoly {
    terms: BTreeMap<Exponent, BigRational>,
}

impl APoly {
    pub fn zero() -> Self {
        APoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, BigRational)>) -> Self {
        let mut p = APoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Monomial `a_i`.
    pub fn variable(i: usize) -> Self {
        let mut e = [0u8; 7];
        e[i] = 1;
        APoly::from_terms([(e, BigRational::one())])
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exponent) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms with the lexicographically largest exponent (largest `e_0`) first.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&k| k as u32).sum());
        let d = degs.next()?;
        degs.all(|x: u32| x == d).then_some(d)
    }

    /// `sl_2`-weight, if weight-homogeneous and nonzero.
    pub fn weight(&self) -> Option<i32> {
        let mut ws = self.terms.keys().map(monomial_weight);
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return APoly::zero();
        }
        APoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = APoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = *e1;
                for i in 0..7 {
                    e[i] += e2[i];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Applies `Σ_j coeff(j) · a_{target(j)} ∂/∂a_j`.
    fn derivation(&self, target: impl Fn(usize) -> Option<(usize, i64)>) -> Self {
        let mut out = APoly::zero();
        for (e, c) in &self.terms {
            for j in 0..7 {
                if e[j] == 0 {
                    continue;
                }
                let Some((t, k)) = target(j) else { continue };
                let mut ne = *e;
                ne[j] -= 1;
                ne[t] += 1;
                out.add_term(ne, c * BigRational::from_integer(BigInt::from(k * e[j] as i64)));
            }
        }
        out
    }

    /// `Σ_{j=1}^{6} j a_{j−1} ∂/∂a_j`; raises the weight by 2.
    pub fn raising(&self) -> Self {
        self.derivation(|j| (j >= 1).then(|| (j - 1, j as i64)))
    }

    /// `Σ_{j=0}^{5} (6 − j) a_{j+1} ∂/∂a_j`; lowers the weight by 2.
    pub fn lowering(&self) -> Self {
        self.derivation(|j| (j <= 5).then(|| (j + 1, 6 - j as i64)))
    }

    /// Evaluates the polynomial with `a_i ↦ values[i]`.
    pub fn eval<C: Scalar>(&self, values: &[C; 7], from: impl Fn(&BigRational) -> C) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut m = from(c);
            for i in 0..7 {
                if e[i] > 0 {
                    m = m.mul_ref(&values[i].pow_u32(e[i] as u32));
                }
            }
            acc.add_assign_ref(&m);
        }
        acc
    }
}

impl fmt::Display for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*a{i}")?,
                    _ => write!(f, "*a{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "APoly({self})")
    }
}

/// All degree-`d` monomials of weight `w`, lexicographically descending.
pub fn monomials(d: u32, w: i32) -> Vec<Exponent> {
    fn rec(i: usize, left: u32, w_left: i32, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if i == 6 {
            if (6 - 12) * left as i32 == w_left {
                cur[6] = left as u8;
                out.push(*cur);
                cur[6] = 0;
            }
            return;
        }
        let wi = 6 - 2 * i as i32;
        for k in (0..=left).rev() {
            let rest = w_left - wi * k as i32;
            // remaining variables have weights in [-6, wi - 2]
            let r = (left - k) as i32;
            if rest > (wi - 2) * r || rest < -6 * r {
                continue;
            }
            cur[i] = k as u8;
            rec(i + 1, left - k, rest, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, w, &mut [0u8; 7], &mut out);
    out
}

fn check_lambda(d: u32, lambda: (u32, u32)) -> Result<i32> {
    if lambda.0 + lambda.1 != 6 * d || lambda.0 < lambda.1 {
        return Err(Error::Weight(format!(
            "λ = {lambda:?} is not a dominant weight with λ1 + λ2 = {}",
            6 * d
        )));
    }
    Ok((lambda.0 - lambda.1) as i32)
}

/// Multiplicity of `Sym^{λ1−λ2} ⊗ det^{λ2}` in `Sym^d(Sym^6)`.
pub fn multiplicity(d: u32, lambda: (u32, u32)) -> Result<usize> {
    let w = check_lambda(d, lambda)?;
    Ok(monomials(d, w).len() - monomials(d, w + 2).len())
}

/// All `(λ, multiplicity)` with positive multiplicity, largest `λ1` first.
pub fn decomposition(d: u32) -> Vec<((u32, u32), usize)> {
    (0..=3 * d)
        .map(|l2| (6 * d - l2, l2))
        .filter(|(l1, l2)| l1 >= l2)
        .map(|lambda| (lambda, multiplicity(d, lambda).expect("valid weight")))
        .filter(|(_, m)| *m > 0)
        .collect()
}

/// Scales a rational vector to a primitive integral one with positive
/// first nonzero entry.
pub fn primitive(v: &[BigRational]) -> Vec<BigRational> {
    let den = common_denominator(v);
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let g = content(&ints);
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = match ints.iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter()
        .map(|c| BigRational::from_integer(c * &sign / &g))
        .collect()
}

/// Basis of the highest-weight vectors of weight `λ1 − λ2` in degree `d`,
/// in reduced echelon form (lexicographic order, `a_0` largest) with
/// primitive integral rows and positive leading coefficients.
pub fn highest_weight_basis(d: u32, lambda: (u32, u32)) -> Result<Vec<APoly>> {
    let w = check_lambda(d, lambda)?;
    let source = monomials(d, w);
    let target = monomials(d, w + 2);
    let index: BTreeMap<Exponent, usize> =
        target.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let mut m = Matrix::<BigRational>::zeros(target.len(), source.len());
    for (j, e) in source.iter().enumerate() {
        let img = APoly::from_terms([(*e, BigRational::one())]).raising();
        for (te, c) in img.terms() {
            m.set(index[te], j, c.clone());
        }
    }
    let kernel = m.kernel();
    if kernel.is_empty() {
        return Err(Error::EmptyKernel { d, lambda });
    }
    let mut k = Matrix::from_rows(kernel);
    let pivots = k.rref();
    Ok((0..pivots.len())
        .map(|i| {
            let row = primitive(k.row(i));
            APoly::from_terms(source.iter().copied().zip(row))
        })
        .collect())
}

/// A covariant: entry `k` is the coefficient of `x_1^{p−k} x_2^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CovariantPoly {
    pub d: u32,
    pub lambda: (u32, u32),
    pub entries: Vec<APoly>,
}

impl CovariantPoly {
    pub fn p(&self) -> u32 {
        self.lambda.0 - self.lambda.1
    }

    pub fn q(&self) -> u32 {
        self.lambda.1
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        CovariantPoly {
            d: self.d,
            lambda: self.lambda,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }
}

/// The covariant generated by a highest-weight vector: `lowering^k(v)/k!`.
pub fn covariant_from_hw(v: &APoly) -> Result<CovariantPoly> {
    if v.is_zero() || !v.raising().is_zero() {
        return Err(Error::NotHighestWeight);
    }
    let (Some(d), Some(w)) = (v.degree(), v.weight()) else {
        return Err(Error::NotHighestWeight);
    };
    let p = w as u32;
    let mut entries = vec![v.clone()];
    for k in 1..=p {
        let next = entries[k as usize - 1]
            .lowering()
            .scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
        entries.push(next);
    }
    Ok(CovariantPoly {
        d,
        lambda: ((6 * d + p) / 2, (6 * d - p) / 2),
        entries,
    })
}

/// All covariants of type `λ` in degree `d`, one per echelon basis vector.
pub fn covariants(d: u32, lambda: (u32, u32)) -> Result<Vec<CovariantPoly>> {
    highest_weight_basis(d, lambda)?
        .iter()
        .map(covariant_from_hw)
        .collect()
}

/// The invariant `A = a_0 a_6 − 6 a_1 a_5 + 15 a_2 a_4 − 10 a_3²` of degree 2.
pub fn invariant_a() -> APoly {
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    APoly::from_terms([
        ([1, 0, 0, 0, 0, 0, 1], q(1)),
        ([0, 1, 0, 0, 0, 1, 0], q(-6)),
        ([0, 0, 1, 0, 1, 0, 0], q(15)),
        ([0, 0, 0, 2, 0, 0, 0], q(-10)),
    ])
}

/// Serialized covariant: `{"d", "lambda", "entries": [[[e0..e6], "num/den"], ...] per entry}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovariantJson {
    pub d: u32,
    pub lambda: [u32; 2],
    pub entries: Vec<Vec<(Exponent, String)>>,
}

impl From<&CovariantPoly> for CovariantJson {
    fn from(c: &CovariantPoly) -> Self {
        CovariantJson {
            d: c.d,
            lambda: [c.lambda.0, c.lambda.1],
            entries: c
                .entries
                .iter()
                .map(|p| p.terms().map(|(e, v)| (*e, format_rational(v))).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn monomial_counts_match_the_dimension() {
        for d in 0..=4u32 {
            let total: usize = (-6 * d as i32..=6 * d as i32)
                .map(|w| monomials(d, w).len())
                .sum();
            let expect = (1..=6).fold(1usize, |acc, i| acc * (d as usize + i) / i);
            assert_eq!(total, expect);
        }
    }

    #[test]
    fn tautological_covariant_has_binomial_entries() {
        let c = covariant_from_hw(&APoly::variable(0)).unwrap();
        let binom = [1, 6, 15, 20, 15, 6, 1];
        for (k, e) in c.entries.iter().enumerate() {
            assert_eq!(*e, APoly::variable(k).scale(&q(binom[k])));
        }
    }

    #[test]
    fn commutator_is_the_weight() {
        let e: Exponent = [1, 0, 2, 0, 0, 1, 0];
        let m = APoly::from_terms([(e, q(1))]);
        let comm = m.lowering().raising().sub(&m.raising().lowering());
        assert_eq!(comm, m.scale(&q(monomial_weight(&e) as i64)));
    }

    #[test]
    fn wrong_weight_sum_is_rejected() {
        assert!(matches!(multiplicity(2, (10, 1)), Err(Error::Weight(_))));
    }
}
