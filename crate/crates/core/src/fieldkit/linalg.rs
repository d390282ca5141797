use alloc::vec;
use alloc::vec::Vec;

use super::{Field, FieldElement};

/// Dense row-major matrix over a finite field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<FieldElement>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn push_row(&mut self, row: &[FieldElement]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// Keep only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m.set(i, k, self.get(i, j));
            }
        }
        m
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j));
            }
        }
        m
    }

    /// `self` stacked above `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// `x · self` for a row vector `x` of length `rows`.
    pub fn left_mul(&self, x: &[FieldElement], f: &Field) -> Vec<FieldElement> {
        let mut out = vec![0; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row = self.row(i);
            for (o, &a) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(xi, a));
            }
        }
        out
    }

    /// `self · y` for a column vector `y` of length `cols`.
    pub fn mul_vec(&self, y: &[FieldElement], f: &Field) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.row(i).iter().zip(y).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut m = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let r = other.left_mul(self.row(i), f);
            m.data[i * other.cols..(i + 1) * other.cols].copy_from_slice(&r);
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Matrix, f: &Field) -> Matrix {
        let mut m = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        m
    }

    /// Reduce in place to reduced row echelon form, dropping zero rows.
    /// Returns the pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.data.truncate(r * self.cols);
        self.rows = r;
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Basis (as rows, in RREF) of `{x : self · x^T = 0}`.
    pub fn nullspace(&self, f: &Field) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(0, self.cols);
        for &fc in &free {
            let mut v = vec![0; self.cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(i, fc));
            }
            out.push_row(&v);
        }
        out.rref(f);
        out
    }

    /// Whether `v` lies in the row space of `self` (assumed in RREF with
    /// the given pivots).
    pub fn rref_contains(&self, pivots: &[usize], v: &[FieldElement], f: &Field) -> bool {
        let mut w = v.to_vec();
        for (i, &pc) in pivots.iter().enumerate() {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            for (wj, &a) in w.iter_mut().zip(self.row(i)) {
                *wj = f.sub(*wj, f.mul(c, a));
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hamming_parity() -> Matrix {
        let cols: Vec<Vec<u8>> = (1..8u8).map(|c| vec![c & 1, (c >> 1) & 1, (c >> 2) & 1]).collect();
        Matrix::from_rows(3, &cols).transpose()
    }

    #[test]
    fn hamming_nullspace_has_dimension_four() {
        let f = Field::gf(2).unwrap();
        let h = hamming_parity();
        assert_eq!(h.rank(&f), 3);
        let g = h.nullspace(&f);
        assert_eq!(g.rows(), 4);
        let prod = g.mul(&h.transpose(), &f);
        assert!(prod.row_vecs().iter().flatten().all(|&x| x == 0));
    }

    proptest! {
        #[test]
        fn rank_nullity(seed in proptest::collection::vec(0u8..9, 12..=12), rows in 1usize..4) {
            let f = Field::gf(9).unwrap();
            let cols = 12 / rows;
            let m = Matrix::from_rows(cols, &seed.chunks(cols).take(rows).map(|c| c.to_vec()).collect::<Vec<_>>());
            let rank = m.rank(&f);
            let ns = m.nullspace(&f);
            prop_assert_eq!(rank + ns.rows(), cols);
            for i in 0..ns.rows() {
                prop_assert!(m.mul_vec(ns.row(i), &f).iter().all(|&x| x == 0));
            }
        }
    }
}
