//! Dense matrices over GF(p^e): row reduction, rank, kernels and Gram products.

use crate::galois::{Elem, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    cols: usize,
    rows: Vec<Vec<Elem>>,
}

impl Matrix {
    pub fn new(cols: usize, rows: Vec<Vec<Elem>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { cols, rows }
    }

    pub fn zero_rows(cols: usize) -> Self {
        Matrix { cols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![Elem::ZERO; n];
                r[i] = Elem::ONE;
                r
            })
            .collect();
        Matrix { cols: n, rows }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<Vec<Elem>> {
        self.rows
    }

    pub fn push_row(&mut self, row: Vec<Elem>) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix { cols: self.cols, rows }
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        Matrix { cols: self.rows.len(), rows }
    }

    /// Reduced row echelon form in place; zero rows are dropped.
    /// Returns the pivot columns.
    pub fn rref(&mut self, f: &FieldSpec) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows.len() {
                break;
            }
            let Some(pr) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, pr);
            let inv = f.inv(self.rows[r][c]);
            if inv != Elem::ONE {
                for x in self.rows[r][c..].iter_mut() {
                    *x = f.mul(*x, inv);
                }
            }
            let pivot_row = std::mem::take(&mut self.rows[r]);
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = f.neg(row[c]);
                axpy(f, row, factor, &pivot_row, c);
            }
            self.rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        self.rows.truncate(r);
        pivots
    }

    pub fn rank(&self, f: &FieldSpec) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis (as rows) of `{x : self * x^T = 0}`.
    pub fn null_space(&self, f: &FieldSpec) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (row, &p) in m.rows.iter().zip(&pivots) {
                v[p] = f.neg(row[free]);
            }
            basis.push(v);
        }
        Matrix { cols: self.cols, rows: basis }
    }

    /// Whether the two row spaces coincide.
    pub fn same_row_space(&self, other: &Matrix, f: &FieldSpec) -> bool {
        let a = self.rank(f);
        a == other.rank(f) && a == self.stack(other).rank(f)
    }

    /// Applies `x -> x^power` entrywise.
    pub fn map_pow(&self, f: &FieldSpec, power: u64) -> Matrix {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| f.pow(x, power)).collect())
            .collect();
        Matrix { cols: self.cols, rows }
    }
}

/// `row[from..] += factor * src[from..]`
#[inline]
pub fn axpy(f: &FieldSpec, row: &mut [Elem], factor: Elem, src: &[Elem], from: usize) {
    for (x, &s) in row[from..].iter_mut().zip(&src[from..]) {
        if !s.is_zero() {
            *x = f.add(*x, f.mul(factor, s));
        }
    }
}

/// `sum_i a_i^conj * b_i`. `conj = 1` is the plain bilinear product.
pub fn inner(f: &FieldSpec, a: &[Elem], b: &[Elem], conj: u64) -> Elem {
    a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            f.add(acc, f.mul(f.pow(x, conj), y))
        }
    })
}

/// `conj(A) * B^T` with `conj(x) = x^conj`.
pub fn gram(f: &FieldSpec, a: &Matrix, b: &Matrix, conj: u64) -> Matrix {
    assert_eq!(a.cols, b.cols);
    let ac = if conj == 1 { a.clone() } else { a.map_pow(f, conj) };
    let rows = ac
        .rows
        .iter()
        .map(|ra| b.rows.iter().map(|rb| inner(f, ra, rb, 1)).collect())
        .collect();
    Matrix { cols: b.nrows(), rows }
}
