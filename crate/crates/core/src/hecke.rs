//! Hecke operators `T(p)` on vector-valued Siegel modular forms of degree 2.
//!
//! Fourier indices are half-integral matrices `T = [[n, l/2], [l/2, m]]`,
//! written `(n, m, l)` in `q`-units. Coefficients of forms with trivial
//! character are looked up after reducing `T` under `GL2(Z)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fourier::{Character, VectorExpansion};
use crate::linalg::Matrix;
use crate::poly::UPoly;

/// Integral 2×2 matrix `[[a, b], [c, d]]`.
pub type Mat2 = [[i64; 2]; 2];

fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn det(x: &Mat2) -> i64 {
    x[0][0] * x[1][1] - x[0][1] * x[1][0]
}

fn adjugate(x: &Mat2) -> Mat2 {
    [[x[1][1], -x[0][1]], [-x[1][0], x[0][0]]]
}

/// `Sym^j(g)` on coordinate vectors: entry `i` of the input is the
/// coefficient of `X^{j−i} Y^i` in `P`, and the output holds the
/// coefficients of `P(aX + cY, bX + dY)`.
pub fn sym_power(g: &Mat2, j: u32) -> Vec<Vec<BigInt>> {
    let j = j as usize;
    let lin = |x: i64, y: i64| vec![BigInt::from(x), BigInt::from(y)];
    let mul = |p: &[BigInt], q: &[BigInt]| {
        let mut out = vec![BigInt::zero(); p.len() + q.len() - 1];
        for (i, x) in p.iter().enumerate() {
            for (k, y) in q.iter().enumerate() {
                out[i + k] += x * y;
            }
        }
        out
    };
    let first = lin(g[0][0], g[1][0]);
    let second = lin(g[0][1], g[1][1]);
    let mut cols = Vec::with_capacity(j + 1);
    for i in 0..=j {
        let mut p = vec![BigInt::one()];
        for _ in 0..j - i {
            p = mul(&p, &first);
        }
        for _ in 0..i {
            p = mul(&p, &second);
        }
        cols.push(p);
    }
    (0..=j)
        .map(|row| (0..=j).map(|col| cols[col][row].clone()).collect())
        .collect()
}

fn apply(m: &[Vec<BigInt>], v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| {
            let mut acc = BigRational::zero();
            for (c, x) in row.iter().zip(v) {
                if !c.is_zero() && !x.is_zero() {
                    acc += BigRational::from_integer(c.clone()) * x;
                }
            }
            acc
        })
        .collect()
}

/// Half-integral index `(n, m, l)` of `[[n, l/2], [l/2, m]]`.
pub type Index = (i64, i64, i64);

fn conjugate(t: Index, w: &Mat2) -> Index {
    let (n, m, l) = t;
    let [[a, b], [c, d]] = *w;
    (
        a * a * n + a * b * l + b * b * m,
        c * c * n + c * d * l + d * d * m,
        2 * a * c * n + (a * d + b * c) * l + 2 * b * d * m,
    )
}

/// Returns a reduced `T' = W T Wᵗ` (`|l| ≤ n ≤ m`) together with `W`.
pub fn reduce_index(t: Index) -> (Index, Mat2) {
    let mut cur = t;
    let mut w: Mat2 = [[1, 0], [0, 1]];
    loop {
        let (n, m, l) = cur;
        if n > m {
            let e = [[0, 1], [1, 0]];
            cur = conjugate(cur, &e);
            w = mat_mul(&e, &w);
            continue;
        }
        if n > 0 && l.abs() > n {
            let s = -(Integer::div_floor(&l, &(2 * n)) + if Integer::mod_floor(&l, &(2 * n)) > n { 1 } else { 0 });
            let e = [[1, 0], [s, 1]];
            cur = conjugate(cur, &e);
            w = mat_mul(&e, &w);
            continue;
        }
        return (cur, w);
    }
}

/// Fourier coefficients of a form with trivial character at arbitrary
/// half-integral indices.
pub struct CoefficientTable<'a> {
    form: &'a VectorExpansion<BigRational>,
    cache: HashMap<Mat2, Vec<Vec<BigInt>>>,
}

impl<'a> CoefficientTable<'a> {
    pub fn new(form: &'a VectorExpansion<BigRational>) -> Result<Self> {
        if form.character() != Character::Trivial {
            return Err(Error::Characteristic(
                "Hecke operators are implemented for trivial character".into(),
            ));
        }
        Ok(CoefficientTable {
            form,
            cache: HashMap::new(),
        })
    }

    /// Largest `n + m` of a reduced index whose coefficient is known.
    pub fn trace_bound(&self) -> i64 {
        self.form.prec() as i64 / 2
    }

    fn sym(&mut self, g: &Mat2) -> &Vec<Vec<BigInt>> {
        let j = self.form.j();
        self.cache.entry(*g).or_insert_with(|| sym_power(g, j))
    }

    /// `a(T)`; `None` when the reduced index lies beyond the precision.
    pub fn get(&mut self, t: Index) -> Option<Vec<BigRational>> {
        let j = self.form.j() as usize;
        let (n, m, l) = t;
        if n < 0 || m < 0 || l * l > 4 * n * m {
            return Some(vec![BigRational::zero(); j + 1]);
        }
        let (r, w) = reduce_index(t);
        if r.0 + r.1 > self.trace_bound() {
            return None;
        }
        let base: Vec<BigRational> = self
            .form
            .entries()
            .iter()
            .map(|e| e.coeff(2 * r.0 as u32, 2 * r.1 as u32, 2 * r.2 as i32))
            .collect();
        // a(W T Wᵗ) = det(W)^k Sym^j(W) a(T)
        let inv = adjugate(&w);
        let dw = det(&w);
        let inv = if dw == 1 { inv } else { inv.map(|row| row.map(|x| -x)) };
        let mut v = apply(self.sym(&inv), &base);
        if det(&inv) < 0 && self.form.k() % 2 != 0 {
            v.iter_mut().for_each(|x| *x = -x.clone());
        }
        Some(v)
    }
}

fn pow(p: i64, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::from(p).pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), BigInt::from(p).pow((-e) as u32))
    }
}

/// Global exponent shift of the normalization of `T(p)`; zero puts
/// `λ_2(χ_{12,6}) = −240`.
pub const NORMALIZATION_SHIFT: i64 = 0;

/// The matrices `D` of the middle term.
fn middle_cosets(p: i64) -> Vec<Mat2> {
    let mut out = vec![[[p, 0], [0, 1]]];
    out.extend((0..p).map(|x| [[1, x], [0, p]]));
    out
}

/// `a(T; F | T(p))`:
///
/// `a(pT) + p^{k−2} Σ_D Sym^j(adj D) a(D T Dᵗ / p) + p^{2k+j−3} a(T/p)`
///
/// with `D` over `[[p, 0], [0, 1]]` and `[[1, x], [0, p]]`, `0 ≤ x < p`.
/// `None` when a needed coefficient is beyond precision.
pub fn hecke_coefficient(table: &mut CoefficientTable, p: i64, t: Index) -> Option<Vec<BigRational>> {
    let j = table.form.j() as i64;
    let k = table.form.k() as i64;
    let (n, m, l) = t;
    let mut acc = table.get((p * n, p * m, p * l))?;
    let mid = pow(p, k - 2 + NORMALIZATION_SHIFT);
    for dmat in middle_cosets(p) {
        let (a, b, c) = conjugate(t, &dmat);
        if a % p != 0 || b % p != 0 || c % p != 0 {
            continue;
        }
        let v = table.get((a / p, b / p, c / p))?;
        let g = adjugate(&dmat);
        let w = apply(table.sym(&g), &v);
        for (x, y) in acc.iter_mut().zip(w) {
            *x += &mid * y;
        }
    }
    if n % p == 0 && m % p == 0 && l % p == 0 {
        let v = table.get((n / p, m / p, l / p))?;
        let s = pow(p, 2 * k + j - 3 + 2 * NORMALIZATION_SHIFT);
        for (x, y) in acc.iter_mut().zip(v) {
            *x += &s * y;
        }
    }
    Some(acc)
}

/// Reduced positive-definite indices `(n, m, l)` with `p (n + m)` within
/// the trace bound.
pub fn target_indices(p: i64, trace_bound: i64) -> Vec<Index> {
    let mut out = Vec::new();
    for n in 1..=trace_bound {
        for m in n..=trace_bound - n {
            if p * (n + m) > trace_bound {
                continue;
            }
            for l in -n..=n {
                if l * l < 4 * n * m {
                    out.push((n, m, l));
                }
            }
        }
    }
    out
}

/// Matrix of `T(p)` on a space of cusp forms.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeMatrix {
    pub j: u32,
    pub k: i32,
    pub p: u32,
    /// Row `i` holds the coordinates of `F_i | T(p)`.
    pub matrix: Matrix<BigRational>,
}

impl HeckeMatrix {
    pub fn charpoly(&self) -> UPoly<BigRational> {
        self.matrix.charpoly()
    }
}

/// `T(p)` on the span of `basis`, found by matching the coefficients of
/// each image against the basis at every usable index.
pub fn siegel_hecke(p: u32, basis: &[VectorExpansion<BigRational>]) -> Result<HeckeMatrix> {
    let first = basis.first().ok_or_else(|| Error::Singular("empty basis".into()))?;
    let (j, k) = (first.j(), first.k());
    if basis.iter().any(|f| f.j() != j || f.k() != k) {
        return Err(Error::Weight("basis elements of different weights".into()));
    }
    let p = p as i64;
    let mut tables = basis
        .iter()
        .map(CoefficientTable::new)
        .collect::<Result<Vec<_>>>()?;
    let bound = tables.iter().map(|t| t.trace_bound()).min().unwrap_or(0);
    let targets = target_indices(p, bound);
    if targets.is_empty() {
        return Err(Error::PrecisionFloor {
            have: first.prec(),
            need: (4 * p) as u32,
            context: format!("T({p})"),
        });
    }
    let mut columns: Vec<Vec<BigRational>> = vec![Vec::new(); basis.len()];
    for t in &targets {
        for (col, table) in columns.iter_mut().zip(tables.iter_mut()) {
            col.extend(table.get(*t).expect("target within precision"));
        }
    }
    let rows_of = |i: usize| -> Vec<BigRational> { columns.iter().map(|c| c[i].clone()).collect() };
    let system = Matrix::from_rows((0..columns[0].len()).map(rows_of).collect());
    let mut rows = Vec::with_capacity(basis.len());
    for table in tables.iter_mut() {
        let mut image = Vec::new();
        for t in &targets {
            image.extend(hecke_coefficient(table, p, *t).ok_or_else(|| Error::PrecisionFloor {
                have: first.prec(),
                need: first.prec() + 2,
                context: format!("T({p}) at index {t:?}"),
            })?);
        }
        let x = system.solve(&image).map_err(|e| match e {
            Error::NoMatch(s) => Error::NotStable(s),
            Error::Underdetermined(s) => Error::Underdetermined(format!("T({p}): {s}")),
            other => other,
        })?;
        rows.push(x);
    }
    Ok(HeckeMatrix {
        j,
        k,
        p: p as u32,
        matrix: Matrix::from_rows(rows),
    })
}
