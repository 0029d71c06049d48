//! Dense exact linear algebra over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Field> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| C::from_i64(*v)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<C>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx].add_mul(a, other.get(k, j));
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.mul_ref(s)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).mul_ref(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(r, j).mul_ref(&factor);
                    self.data[i * self.cols + j].sub_assign_ref(&v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<C>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![C::zero(); self.cols];
                v[f] = C::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    /// The unique `x` with `self · x = b`. Overdetermined systems are fine
    /// as long as they are consistent.
    pub fn solve(&self, b: &[C]) -> Result<Vec<C>> {
        assert_eq!(b.len(), self.rows, "right-hand side has the wrong length");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoMatch("inconsistent linear system".into()));
        }
        if pivots.len() < self.cols {
            return Err(Error::Underdetermined(format!(
                "rank {} for {} unknowns",
                pivots.len(),
                self.cols
            )));
        }
        Ok((0..self.cols).map(|i| aug.get(i, self.cols).clone()).collect())
    }

    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, C::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular("matrix is not invertible".into()));
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> C {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = C::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return C::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = det.mul_ref(&pivot);
            let inv = pivot.inv();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).mul_ref(&inv);
                for j in c..n {
                    let v = m.get(c, j).mul_ref(&factor);
                    m.data[i * n + j].sub_assign_ref(&v);
                }
            }
        }
        det
    }

    /// `det(x·I − self)` by the Faddeev–LeVerrier recursion.
    pub fn charpoly(&self) -> UPoly<C> {
        assert_eq!(self.rows, self.cols, "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[n] = C::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
            let mut next = self.mul(&m);
            for i in 0..n {
                let v = next.get(i, i).clone() + coeffs[n - k + 1].clone();
                next.set(i, i, v);
            }
            m = next;
            let am = self.mul(&m);
            let mut tr = C::zero();
            for i in 0..n {
                tr.add_assign_ref(am.get(i, i));
            }
            coeffs[n - k] = -tr.div_ref(&C::from_i64(k as i64));
        }
        UPoly::new(coeffs)
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<C: Field + fmt::Display> fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use num_rational::BigRational;

    type M = Matrix<BigRational>;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = M::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            for i in 0..m.nrows() {
                let mut acc = q(0);
                for j in 0..m.ncols() {
                    acc.add_mul(m.get(i, j), &v[j]);
                }
                assert_eq!(acc, q(0));
            }
        }
    }

    #[test]
    fn overdetermined_consistent_solve() {
        let m = M::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(m.solve(&[q(2), q(3), q(5)]).unwrap(), vec![q(2), q(3)]);
        assert!(matches!(m.solve(&[q(2), q(3), q(6)]), Err(Error::NoMatch(_))));
        let thin = M::from_i64(&[&[1, 1]]);
        assert!(matches!(thin.solve(&[q(1)]), Err(Error::Underdetermined(_))));
    }

    #[test]
    fn charpoly_of_a_companion_matrix() {
        // x^3 - 2x^2 + 3x - 5
        let m = M::from_i64(&[&[0, 0, 5], &[1, 0, -3], &[0, 1, 2]]);
        let cp = m.charpoly();
        assert_eq!(cp.coeffs(), &[q(-5), q(3), q(-2), q(1)]);
        assert_eq!(m.det(), q(5));
    }

    #[test]
    fn inverse_round_trip() {
        let m = M::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.mul(&m.inverse().unwrap()), M::identity(2));
        assert!(M::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }
}
