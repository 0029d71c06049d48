//! Values recomputed by independent means: divisor sums, product formulas,
//! Jacobi forms and direct convolution.

mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::q;
use siegel_core::elliptic::{self, bernoulli, sigma};
use siegel_core::fourier::{Character, SiegelExpansion};
use siegel_core::theta::{self, ThetaCharacteristic};

fn brute_sigma(r: u32, n: u64) -> BigInt {
    (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(r)).sum()
}

fn convolve(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let len = f.len().min(g.len());
    let mut out = vec![BigInt::zero(); len];
    for i in 0..len {
        for j in 0..len - i {
            out[i + j] += &f[i] * &g[j];
        }
    }
    out
}

/// `1 + c Σ σ_{k−1}(n) q^n` from brute-force divisor sums.
fn eisenstein_q(k: u32, c: i64, len: usize) -> Vec<BigInt> {
    (0..len)
        .map(|n| if n == 0 { BigInt::one() } else { BigInt::from(c) * brute_sigma(k - 1, n as u64) })
        .collect()
}

/// `Δ = (E4³ − E6²)/1728` as integer `q`-coefficients.
fn delta_q(len: usize) -> Vec<BigInt> {
    let e4 = eisenstein_q(4, 240, len);
    let e6 = eisenstein_q(6, -504, len);
    let e4c = convolve(&convolve(&e4, &e4), &e4);
    let e6s = convolve(&e6, &e6);
    e4c.iter().zip(&e6s).map(|(a, b)| (a - b) / 1728).collect()
}

/// Bernoulli numbers by the Akiyama–Tanigawa algorithm (`B_1 = +1/2`).
fn akiyama_tanigawa(n: usize) -> BigRational {
    let mut a: Vec<BigRational> = (0..=n).map(|m| BigRational::new(1.into(), BigInt::from(m + 1))).collect();
    for m in 0..=n {
        a[m] = BigRational::new(1.into(), BigInt::from(m + 1));
        for j in (1..=m).rev() {
            a[j - 1] = BigRational::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
        }
    }
    a[0].clone()
}

#[test]
fn sigma_matches_divisor_sums() {
    for r in 0..6 {
        for n in 1..60 {
            assert_eq!(sigma(r, n), brute_sigma(r, n), "sigma_{r}({n})");
        }
    }
}

#[test]
fn bernoulli_numbers() {
    let b = bernoulli(16);
    for n in [0, 2, 4, 6, 8, 10, 12, 14, 16] {
        assert_eq!(b[n], akiyama_tanigawa(n), "B_{n}");
    }
}

#[test]
fn eisenstein_series_from_divisor_sums() {
    let prec = 40;
    for (k, c) in [(4, 240), (6, -504), (8, 480), (10, -264)] {
        let e = elliptic::eisenstein(k as i32, prec).unwrap();
        let oracle = eisenstein_q(k, c, prec as usize / 2 + 1);
        for (n, v) in oracle.iter().enumerate() {
            assert_eq!(e.q_coeff(n as u32), BigRational::from_integer(v.clone()), "E{k} q^{n}");
            assert!(e.coeff(2 * n as u32 + 1).is_zero());
        }
    }
}

#[test]
fn delta_from_eisenstein_series() {
    let prec = 60;
    let d = elliptic::delta(prec);
    for (n, v) in delta_q(prec as usize / 2 + 1).iter().enumerate() {
        assert_eq!(d.q_coeff(n as u32), BigRational::from_integer(v.clone()), "tau({n})");
    }
}

#[test]
fn little_delta_squares_to_delta() {
    let prec = 40;
    let d = elliptic::little_delta(prec);
    assert_eq!(d.mul(&d).coeffs(), elliptic::delta(prec).coeffs());
}

/// `T_2` on `S_24` from the basis `{Δ E4³, Δ²}` built here, with the
/// characteristic polynomial read off the 2×2 matrix.
#[test]
fn weight_24_hecke_polynomial() {
    let len = 16;
    let e4 = eisenstein_q(4, 240, len);
    let d = delta_q(len);
    let f1 = convolve(&d, &convolve(&e4, &convolve(&e4, &e4)));
    let f2 = convolve(&d, &d);
    let p = 2usize;
    let pk = BigInt::from(2).pow(23);
    let tp = |f: &[BigInt], n: usize| -> BigInt {
        let mut v = f[n * p].clone();
        if n % p == 0 {
            v += &pk * &f[n / p];
        }
        v
    };
    // coordinates in {f1, f2}: f1 = q + .., f2 = q² + .., and f1 has a q² term
    let coords = |g1: BigInt, g2: BigInt| -> (BigRational, BigRational) {
        let x = BigRational::from_integer(g1);
        let y = BigRational::from_integer(g2) - &x * BigRational::from_integer(f1[2].clone());
        (x, y)
    };
    let (a, b) = coords(tp(&f1, 1), tp(&f1, 2));
    let (c, e) = coords(tp(&f2, 1), tp(&f2, 2));
    let trace = &a + &e;
    let det = &a * &e - &b * &c;
    let charpoly = elliptic::elliptic_charpoly(24, 2).unwrap();
    assert_eq!(charpoly.coeffs(), &[det, -trace, BigRational::one()]);
}

#[test]
fn ramanujan_tau_is_multiplicative() {
    let t = delta_q(40);
    assert_eq!(&t[2] * &t[3], t[6]);
    assert_eq!(&t[3] * &t[7], t[21]);
    // τ(4) = τ(2)² − 2^11
    assert_eq!(&t[2] * &t[2] - BigInt::from(2048), t[4]);
}

/// Jacobi triple products in `x = e^{πiτ}`, indexed by quarter units.
fn one_variable_theta(kind: u8, qprec: usize) -> Vec<BigInt> {
    let n_max = qprec / 4 + 1;
    let mut x = vec![BigInt::zero(); n_max + 1];
    x[0] = BigInt::one();
    let mul_lin = |v: &mut Vec<BigInt>, e: usize, sign: i64| {
        for m in (e..v.len()).rev() {
            let t = v[m - e].clone();
            v[m] += t * sign;
        }
    };
    let (offset, scale) = if kind == 2 { (1, 2) } else { (0, 1) };
    for n in 1..=n_max {
        mul_lin(&mut x, 2 * n, -1);
        match kind {
            3 => {
                mul_lin(&mut x, 2 * n - 1, 1);
                mul_lin(&mut x, 2 * n - 1, 1);
            }
            4 => {
                mul_lin(&mut x, 2 * n - 1, -1);
                mul_lin(&mut x, 2 * n - 1, -1);
            }
            _ => {
                mul_lin(&mut x, 2 * n, 1);
                mul_lin(&mut x, 2 * n, 1);
            }
        }
    }
    let mut out = vec![BigInt::zero(); qprec + 1];
    for (m, v) in x.into_iter().enumerate() {
        if 4 * m + offset <= qprec {
            out[4 * m + offset] = v * scale;
        }
    }
    out
}

#[test]
fn theta_constants_on_the_diagonal() {
    let n = 10;
    let qprec = 4 * n as usize;
    let kind = |mp: u8, mpp: u8| match (mp, mpp) {
        (0, 0) => 3,
        (0, 1) => 4,
        _ => 2,
    };
    for ch in ThetaCharacteristic::even() {
        if ch.m_prime.iter().zip(&ch.m_double_prime).any(|(a, b)| a & b == 1) {
            // only characteristics that split into θ2, θ3, θ4 factors on the diagonal
            continue;
        }
        let t = theta::even_theta_constant(ch, n).unwrap();
        let f = one_variable_theta(kind(ch.m_prime[0], ch.m_double_prime[0]), qprec);
        let g = one_variable_theta(kind(ch.m_prime[1], ch.m_double_prime[1]), qprec);
        let mut diag: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for (a, b, _, v) in t.terms() {
            assert!(v.im.is_zero());
            *diag.entry((a, b)).or_insert_with(BigRational::zero) += v.re;
        }
        for a in 0..=qprec {
            for b in 0..=qprec - a {
                let want = BigRational::from_integer(&f[a] * &g[b]);
                let got = diag.get(&(a as u32, b as u32)).cloned().unwrap_or_else(BigRational::zero);
                assert_eq!(got, want, "{ch:?} at ({a},{b})");
            }
        }
    }
}

/// `φ_{10,1} = η^{18} θ_1²` as a map `(n, l) ↦ c(n, l)`, the coefficient of
/// `q^n ζ^l`.
fn phi10(n_max: i64) -> BTreeMap<(i64, i64), BigInt> {
    // θ_1² = Σ (−1)^{n1+n2} q^{((2n1+1)² + (2n2+1)²)/8} ζ^{n1+n2+1}, shifted by q^{3/4} from η^{18}
    let len = n_max as usize + 1;
    let mut eta = vec![BigInt::zero(); len];
    eta[0] = BigInt::one();
    for k in 1..len {
        for _ in 0..18 {
            for m in (k..len).rev() {
                let t = eta[m - k].clone();
                eta[m] -= t;
            }
        }
    }
    let mut theta: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
    let reach = 2 * ((n_max as f64).sqrt() as i64 + 3);
    for n1 in -reach..=reach {
        for n2 in -reach..=reach {
            let e8 = (2 * n1 + 1).pow(2) + (2 * n2 + 1).pow(2) + 6;
            assert_eq!(e8 % 8, 0);
            let e = e8 / 8;
            if e > n_max {
                continue;
            }
            let sign = if (n1 + n2).rem_euclid(2) == 0 { 1 } else { -1 };
            *theta.entry((e, n1 + n2 + 1)).or_insert_with(BigInt::zero) += sign;
        }
    }
    let mut out: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
    for (&(e, l), v) in &theta {
        for (k, c) in eta.iter().enumerate() {
            let n = e + k as i64;
            if n <= n_max {
                *out.entry((n, l)).or_insert_with(BigInt::zero) += v * c;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The first two Fourier–Jacobi coefficients of `χ10` agree with the Maass
/// lift of `φ_{10,1}`: `A(n, l, m) = Σ_{d | (n, l, m)} d^9 c(nm/d², l/d)`.
#[test]
fn chi10_is_the_maass_lift_of_phi10() {
    let prec = 24;
    let chi10 = theta::chi10(prec).unwrap();
    let phi = phi10(prec as i64);
    let c = |n: i64, l: i64| phi.get(&(n, l)).cloned().unwrap_or_else(BigInt::zero);
    let lift = |n: i64, l: i64, m: i64| -> BigInt {
        let g = num_integer::gcd(num_integer::gcd(n, l.abs()), m);
        (1..=g)
            .filter(|d| g % d == 0)
            .map(|d| BigInt::from(d).pow(9) * c(n * m / (d * d), l / d))
            .sum()
    };
    let scale = chi10.coeff(2, 2, 0);
    assert!(!scale.is_zero());
    let unit = lift(1, 0, 1);
    let mut compared = 0;
    for m in [1i64, 2] {
        for n in 1..=(prec as i64 / 2 - m) {
            for l in -2 * n..=2 * n {
                let got = chi10.coeff(2 * n as u32, 2 * m as u32, 2 * l as i32);
                assert_eq!(&got * &unit, lift(n, l, m) * &scale, "q1^{n} q2^{m} r^{l}");
                compared += 1;
            }
        }
    }
    assert!(compared > 100);
}

fn rational_map(f: &SiegelExpansion<BigRational>) -> BTreeMap<(u32, u32, i32), BigRational> {
    f.terms().into_iter().map(|(a, b, c, v)| ((a, b, c), v)).collect()
}

fn psd_terms(max: u32) -> impl Strategy<Value = Vec<(u32, u32, i32, i64)>> {
    prop::collection::vec((0..=max, 0..=max, -1.0f64..=1.0, -5i64..=5), 0..12).prop_map(|raw| {
        raw.into_iter()
            .map(|(a, b, t, v)| {
                let bound = (4.0 * a as f64 * b as f64).sqrt().floor();
                (a, b, (t * bound).round() as i32, v)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_the_truncated_convolution(f in psd_terms(6), g in psd_terms(6)) {
        let prec = 8;
        let build = |t: &[(u32, u32, i32, i64)]| {
            SiegelExpansion::from_terms(prec, Character::Trivial, t.iter().map(|&(a, b, c, v)| (a, b, c, q(v)))).unwrap()
        };
        let (x, y) = (build(&f), build(&g));
        let mut want: BTreeMap<(u32, u32, i32), BigRational> = BTreeMap::new();
        for ((a1, b1, c1), v1) in rational_map(&x) {
            for ((a2, b2, c2), v2) in rational_map(&y) {
                if a1 + a2 + b1 + b2 <= prec {
                    *want.entry((a1 + a2, b1 + b2, c1 + c2)).or_insert_with(BigRational::zero) += &v1 * &v2;
                }
            }
        }
        want.retain(|_, v| !v.is_zero());
        prop_assert_eq!(rational_map(&x.mul(&y)), want);
    }
}
