//! Dense linear algebra over a [`FieldCtx`].

use crate::field::{FieldCtx, Gf};

/// Row-major dense matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Gf::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Gf::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Gf>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Gf>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Gf] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Gf] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Gf>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Gf> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, f: &FieldCtx, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out[(i, j)], f.mul(a, other[(l, j)]));
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &FieldCtx, v: &[Gf]) -> Vec<Gf> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(f, self.row(i), v)).collect()
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        let mut buf = self.data.clone();
        rank_in_place(f, &mut buf, self.rows, self.cols)
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &FieldCtx) -> Vec<usize> {
        rref_in_place(f, &mut self.data, self.rows, self.cols)
    }

    /// Basis of `{x : A x = 0}`, as RREF rows.
    pub fn nullspace(&self, f: &FieldCtx) -> Vec<Vec<Gf>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Gf::ZERO; self.cols];
            v[fc] = Gf::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[(r, fc)]);
            }
            basis.push(v);
        }
        let mut out = Matrix::from_rows(&basis, self.cols);
        let piv = out.rref(f);
        out.row_vecs().into_iter().take(piv.len()).collect()
    }

    pub fn inverse(&self, f: &FieldCtx) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = Gf::ONE;
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Gf;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Gf {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Gf {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(f: &FieldCtx, a: &[Gf], b: &[Gf]) -> Gf {
    a.iter().zip(b).fold(Gf::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `a + c*b`, elementwise.
pub fn axpy(f: &FieldCtx, a: &mut [Gf], c: Gf, b: &[Gf]) {
    if c.is_zero() {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = f.add(*x, f.mul(c, y));
    }
}

/// Rank by forward elimination; destroys `buf`.
pub fn rank_in_place(f: &FieldCtx, buf: &mut [Gf], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !buf[r * cols + c].is_zero()) else {
            continue;
        };
        if pr != rank {
            for j in c..cols {
                buf.swap(pr * cols + j, rank * cols + j);
            }
        }
        let inv = f.inv(buf[rank * cols + c]).expect("pivot is nonzero");
        for r in rank + 1..rows {
            let x = buf[r * cols + c];
            if x.is_zero() {
                continue;
            }
            let factor = f.neg(f.mul(x, inv));
            for j in c..cols {
                let v = buf[rank * cols + j];
                if !v.is_zero() {
                    buf[r * cols + j] = f.add(buf[r * cols + j], f.mul(factor, v));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// In-place RREF with zero rows moved to the bottom. Returns pivot columns.
pub fn rref_in_place(f: &FieldCtx, buf: &mut [Gf], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !buf[i * cols + c].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                buf.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(buf[r * cols + c]).expect("pivot is nonzero");
        for j in 0..cols {
            buf[r * cols + j] = f.mul(buf[r * cols + j], inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let x = buf[i * cols + c];
            if x.is_zero() {
                continue;
            }
            let factor = f.neg(x);
            for j in 0..cols {
                let v = buf[r * cols + j];
                if !v.is_zero() {
                    buf[i * cols + j] = f.add(buf[i * cols + j], f.mul(factor, v));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
