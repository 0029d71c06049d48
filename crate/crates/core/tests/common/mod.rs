#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use siegel_core::covariant::{APoly, Exponent};
use siegel_core::elliptic::{self, EllipticSeries};
use siegel_core::fourier::PairSeries;
use siegel_core::laurent::RPoly;

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Laurent polynomial in `R` from `(exponent, coefficient)` pairs.
pub fn rp(terms: &[(i32, i64)]) -> RPoly<BigRational> {
    RPoly::from_ints(terms)
}

/// Laurent polynomial in `r = R²`.
pub fn rp_r(terms: &[(i32, i64)]) -> RPoly<BigRational> {
    let doubled: Vec<(i32, i64)> = terms.iter().map(|&(e, c)| (2 * e, c)).collect();
    RPoly::from_ints(&doubled)
}

pub fn rp_int(terms: &[(i32, i64)]) -> RPoly<BigInt> {
    RPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))).collect())
}

/// Polynomial in `a_0 … a_6`: each term is a coefficient and the list of
/// variable indices in the monomial.
pub fn apoly(terms: &[(i64, &[usize])]) -> APoly {
    APoly::from_terms(terms.iter().map(|(c, vars)| {
        let mut e: Exponent = [0; 7];
        for &v in vars.iter() {
            e[v] += 1;
        }
        (e, q(*c))
    }))
}

/// Elliptic building blocks at a common precision (Q-units).
pub struct Ell {
    pub prec: u32,
    pub e2: EllipticSeries,
    pub e4: EllipticSeries,
    pub e6: EllipticSeries,
    pub delta: EllipticSeries,
    pub little: EllipticSeries,
}

impl Ell {
    pub fn new(prec: u32) -> Self {
        Ell {
            prec,
            e2: elliptic::eisenstein(2, prec).unwrap(),
            e4: elliptic::eisenstein(4, prec).unwrap(),
            e6: elliptic::eisenstein(6, prec).unwrap(),
            delta: elliptic::delta(prec),
            little: elliptic::little_delta(prec),
        }
    }

    pub fn one(&self) -> EllipticSeries {
        EllipticSeries::one(self.prec)
    }
}

pub fn prod(fs: &[&EllipticSeries]) -> EllipticSeries {
    let mut acc = EllipticSeries::one(fs[0].prec());
    for f in fs {
        acc = acc.mul(f);
    }
    acc
}

pub fn tensor(f: &EllipticSeries, g: &EllipticSeries, prec: u32) -> PairSeries<BigRational> {
    PairSeries::tensor(f.coeffs(), g.coeffs(), prec)
}

/// A vector of restrictions with zeros except at the given entries.
pub fn sparse_vector(
    len: usize,
    prec: u32,
    entries: &[(usize, PairSeries<BigRational>)],
) -> Vec<PairSeries<BigRational>> {
    let mut out = vec![PairSeries::zero(prec); len];
    for (i, p) in entries {
        out[*i] = p.clone();
    }
    out
}

pub fn truncate_all(v: &[PairSeries<BigRational>], prec: u32) -> Vec<PairSeries<BigRational>> {
    v.iter().map(|p| p.truncate(prec)).collect()
}

/// The `c` with `actual = c · target`, if there is one (`target` nonzero).
pub fn multiple_of(
    actual: &[PairSeries<BigRational>],
    target: &[PairSeries<BigRational>],
) -> Option<BigRational> {
    let prec = actual.iter().chain(target).map(|p| p.prec()).min()?;
    let a = truncate_all(actual, prec);
    let t = truncate_all(target, prec);
    let mut ratio: Option<BigRational> = None;
    for (x, y) in a.iter().zip(&t) {
        for (u, v) in x.dense().iter().zip(y.dense()) {
            if v.is_zero() {
                if !u.is_zero() {
                    return None;
                }
                continue;
            }
            let r = u / v;
            match &ratio {
                None => ratio = Some(r),
                Some(s) if *s != r => return None,
                _ => {}
            }
        }
    }
    ratio
}

/// The `c` with `a = c · b` for coefficient vectors of Laurent polynomials.
pub fn proportional(a: &[RPoly<BigRational>], b: &[RPoly<BigRational>]) -> Option<BigRational> {
    if a.len() != b.len() {
        return None;
    }
    let mut ratio: Option<BigRational> = None;
    for (x, y) in a.iter().zip(b) {
        let lo = x.min_exp().unwrap_or(0).min(y.min_exp().unwrap_or(0));
        let hi = x.max_exp().unwrap_or(0).max(y.max_exp().unwrap_or(0));
        for e in lo..=hi {
            let (u, v) = (x.coeff(e), y.coeff(e));
            if v.is_zero() {
                if !u.is_zero() {
                    return None;
                }
                continue;
            }
            let r = u / v;
            match &ratio {
                None => ratio = Some(r),
                Some(s) if *s != r => return None,
                _ => {}
            }
        }
    }
    ratio.filter(|r| !r.is_zero())
}
