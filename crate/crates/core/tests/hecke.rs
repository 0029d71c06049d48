mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::q;
use siegel_core::harder::{self, CongruenceCase};
use siegel_core::hecke::{reduce_index, sym_power, target_indices, Mat2};
use siegel_core::poly::UPoly;
use siegel_core::Error;

fn matmul(x: &[Vec<BigInt>], y: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = x.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &x[i][k] * &y[k][j]).sum()).collect())
        .collect()
}

fn mat2_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `P(aX + cY, bX + dY)` for `P = X^{j−i} Y^i`, expanded by the binomial theorem.
fn substituted_monomial(g: &Mat2, j: i64, i: i64) -> Vec<BigInt> {
    let [[a, b], [c, d]] = *g;
    let mut out = vec![BigInt::zero(); j as usize + 1];
    for s in 0..=(j - i) {
        for t in 0..=i {
            // (aX + cY)^{j−i}: choose s factors of cY; (bX + dY)^i: choose t factors of dY
            let coef = BigInt::from(binom(j - i, s) * binom(i, t))
                * BigInt::from(a).pow((j - i - s) as u32)
                * BigInt::from(c).pow(s as u32)
                * BigInt::from(b).pow((i - t) as u32)
                * BigInt::from(d).pow(t as u32);
            out[(s + t) as usize] += coef;
        }
    }
    out
}

fn small_mat() -> impl Strategy<Value = Mat2> {
    prop::array::uniform2(prop::array::uniform2(-3i64..=3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sym_power_columns_are_substitutions(g in small_mat(), j in 0i64..7) {
        let s = sym_power(&g, j as u32);
        for i in 0..=j {
            let col: Vec<BigInt> = s.iter().map(|row| row[i as usize].clone()).collect();
            prop_assert_eq!(col, substituted_monomial(&g, j, i));
        }
    }

    #[test]
    fn sym_power_is_multiplicative(g in small_mat(), h in small_mat(), j in 0u32..6) {
        prop_assert_eq!(matmul(&sym_power(&g, j), &sym_power(&h, j)), sym_power(&mat2_mul(&g, &h), j));
    }

    #[test]
    fn reduced_index_is_equivalent(n in 0i64..40, m in 0i64..40, t in -1.0f64..=1.0) {
        let l = (t * ((4 * n * m) as f64).sqrt()).floor() as i64;
        let ((rn, rm, rl), w) = reduce_index((n, m, l));
        prop_assert!(rl.abs() <= rn && rn <= rm);
        prop_assert_eq!((w[0][0] * w[1][1] - w[0][1] * w[1][0]).abs(), 1);
        // W T Wᵗ on the doubled matrix [[2n, l], [l, 2m]]
        let t2 = [[2 * n, l], [l, 2 * m]];
        let wt = [[w[0][0], w[1][0]], [w[0][1], w[1][1]]];
        let r = mat2_mul(&mat2_mul(&w, &t2), &wt);
        prop_assert_eq!(r, [[2 * rn, rl], [rl, 2 * rm]]);
        prop_assert_eq!(4 * rn * rm - rl * rl, 4 * n * m - l * l);
    }
}

#[test]
fn sym_power_of_scalars() {
    let id: Mat2 = [[1, 0], [0, 1]];
    let minus: Mat2 = [[-1, 0], [0, -1]];
    for j in 0..8u32 {
        let s = sym_power(&id, j);
        let m = sym_power(&minus, j);
        for r in 0..=j as usize {
            for c in 0..=j as usize {
                let e = if r == c { BigInt::one() } else { BigInt::zero() };
                assert_eq!(s[r][c], e);
                assert_eq!(m[r][c], if j % 2 == 0 { e.clone() } else { -e.clone() });
            }
        }
    }
}

#[test]
fn target_indices_are_reduced_and_definite() {
    for p in [2i64, 3] {
        let bound = 14;
        let ts = target_indices(p, bound);
        assert!(!ts.is_empty());
        for &(n, m, l) in &ts {
            assert!(l.abs() <= n && n <= m && l * l < 4 * n * m);
            assert!(p * (n + m) <= bound);
        }
        let mut sorted = ts.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), ts.len());
    }
    assert!(target_indices(3, 5).is_empty());
}

/// A Siegel polynomial whose root is the elliptic side shifted by `ℓ·t`
/// has resultant `±ℓ·t` against the shifted elliptic polynomial.
#[test]
fn synthetic_congruence() {
    // S_22 is one-dimensional, so the shifted polynomial is linear
    let case = CongruenceCase::new(4, 10, 41, vec![2]);
    assert_eq!(case.elliptic_weight(), 22);
    let g = harder::shifted_elliptic_charpoly(&case, 2).unwrap();
    assert_eq!(g.degree(), Some(1));
    let root = -g.coeff(0);
    let tau22 = &root - q(256) - q(8192);
    assert!(tau22.is_integer());

    let siegel = UPoly::new(vec![-(&root + q(41 * 7)), BigRational::one()]);
    let check = harder::check_congruence(&case, 2, &siegel).unwrap();
    assert_eq!(check.resultant.magnitude(), BigInt::from(41 * 7).magnitude());
    assert!(check.divisible);

    let off = UPoly::new(vec![-(&root + q(43)), BigRational::one()]);
    let check = harder::check_congruence(&case, 2, &off).unwrap();
    assert!(!check.divisible);
}

#[test]
fn repeated_roots_are_rejected() {
    let case = CongruenceCase::new(4, 10, 41, vec![2]);
    let square = UPoly::<BigRational>::from_i64(&[1, -2, 1]);
    assert!(matches!(harder::check_congruence(&case, 2, &square), Err(Error::Degenerate(_))));
}

#[test]
fn known_cases_pair_weight_28_and_34() {
    for c in harder::known_cases() {
        let w = c.elliptic_weight();
        assert!(w == 28 || w == 34, "{c:?}");
        assert_eq!(c.primes, vec![2, 3]);
    }
}
