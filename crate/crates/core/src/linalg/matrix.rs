use std::fmt;

use num::rational::BigRational;
use num::Zero;

use super::field::{Field, Scalar};
use super::fp;
use super::subspace::Subspace;

/// Dense row-major matrix over a fixed [`Field`]. Storage is split per
/// field so the prime-field elimination kernel can run on raw `u64` rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    store: Store,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Store {
    Fp { p: u64, v: Vec<u64> },
    Rat(Vec<BigRational>),
}

/// Result of [`Matrix::solve_right`].
pub struct Solution {
    /// One particular solution, `a * particular = b`.
    pub particular: Matrix,
    /// Basis of the right kernel of `a`, as a subspace of `k^cols`.
    pub null_basis: Subspace,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        let store = match field {
            Field::Prime(p) => Store::Fp { p, v: vec![0; rows * cols] },
            Field::Rationals => Store::Rat(vec![BigRational::zero(); rows * cols]),
        };
        Matrix { rows, cols, store }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build from integer literals, mostly for tests and fixtures.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        match &self.store {
            Store::Fp { p, .. } => Field::Prime(*p),
            Store::Rat(_) => Field::Rationals,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        match &self.store {
            Store::Fp { v, .. } => Scalar::Fp(v[i * self.cols + j]),
            Store::Rat(v) => Scalar::Rat(v[i * self.cols + j].clone()),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        let cols = self.cols;
        match (&mut self.store, s) {
            (Store::Fp { p, v }, Scalar::Fp(x)) => v[i * cols + j] = x % *p,
            (Store::Rat(v), Scalar::Rat(x)) => v[i * cols + j] = x,
            _ => panic!("scalar field does not match matrix field"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Fp { v, .. } => v.iter().all(|x| *x == 0),
            Store::Rat(v) => v.iter().all(|x| x.is_zero()),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field();
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, f.neg(&self.get(i, j)));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let f = self.field();
        Matrix::from_fn(f, self.rows, self.cols, |i, j| f.mul(&self.get(i, j), s))
    }

    fn zip_with(&self, other: &Matrix, op: impl Fn(&Field, &Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let f = self.field();
        assert_eq!(f, other.field(), "field mismatch");
        Matrix::from_fn(f, self.rows, self.cols, |i, j| op(&f, &self.get(i, j), &other.get(i, j)))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ: {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        match (&self.store, &other.store) {
            (Store::Fp { p, v: a }, Store::Fp { v: b, .. }) => {
                let (m, n, k) = (self.rows, self.cols, other.cols);
                let mut out = vec![0u64; m * k];
                for i in 0..m {
                    for l in 0..n {
                        let x = a[i * n + l];
                        if x == 0 {
                            continue;
                        }
                        let brow = &b[l * k..(l + 1) * k];
                        let orow = &mut out[i * k..(i + 1) * k];
                        for (o, &y) in orow.iter_mut().zip(brow) {
                            *o = (*o + x * y) % p;
                        }
                    }
                }
                Matrix { rows: m, cols: k, store: Store::Fp { p: *p, v: out } }
            }
            _ => {
                let f = self.field();
                Matrix::from_fn(f, self.rows, other.cols, |i, j| {
                    let mut acc = f.zero();
                    for l in 0..self.cols {
                        acc = f.add(&acc, &f.mul(&self.get(i, l), &other.get(l, j)));
                    }
                    acc
                })
            }
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field(), self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        Matrix::from_fn(self.field(), self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        Matrix::from_fn(self.field(), self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j)
            } else {
                other.get(i - self.rows, j)
            }
        })
    }

    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field(), idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field(), self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn col_range(&self, lo: usize, hi: usize) -> Matrix {
        Matrix::from_fn(self.field(), self.rows, hi - lo, |i, j| self.get(i, lo + j))
    }

    /// Reduced row echelon form. Returns `(rref, rank, pivot_columns)`.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let (rank, pivots) = m.rref_in_place();
        (m, rank, pivots)
    }

    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        match &mut self.store {
            Store::Fp { p, v } => {
                let e = fp::rref_in_place(v, self.rows, self.cols, *p);
                (e.rank, e.pivots)
            }
            Store::Rat(v) => rref_rat(v, self.rows, self.cols),
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right kernel `{x : self * x = 0}`, one basis vector per
    /// row of the returned matrix, derived from the RREF free columns in
    /// column order (deterministic).
    pub fn kernel(&self) -> Matrix {
        let f = self.field();
        let (r, _, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set[*c]).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, f.one());
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(&r.get(row, fc)));
            }
        }
        out
    }

    /// Solve `self * x = b` for a matrix of right-hand sides. `None` when
    /// inconsistent. The particular solution puts zero on free variables.
    pub fn solve_right(&self, b: &Matrix) -> Option<Solution> {
        assert_eq!(self.rows, b.rows, "solve_right: row counts differ");
        let f = self.field();
        let aug = self.hstack(b);
        let (r, _, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut particular = Matrix::zeros(f, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                particular.set(pc, j, r.get(row, self.cols + j));
            }
        }
        let null_basis = Subspace::from_spanning_rows(&self.kernel());
        Some(Solution { particular, null_basis })
    }

    /// Row space as a canonical subspace of `k^cols`.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_spanning_rows(self)
    }

    /// Column space, as a subspace of `k^rows` (rows of the transpose).
    pub fn col_space(&self) -> Subspace {
        self.transpose().row_space()
    }
}

fn rref_rat(v: &mut [BigRational], rows: usize, cols: usize) -> (usize, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|i| !v[i * cols + col].is_zero()) else { continue };
        if pr != r {
            for j in 0..cols {
                v.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = v[r * cols + col].clone().recip();
        for j in col..cols {
            let x = &v[r * cols + j] * &inv;
            v[r * cols + j] = x;
        }
        for i in 0..rows {
            if i == r || v[i * cols + col].is_zero() {
                continue;
            }
            let f = v[i * cols + col].clone();
            for j in col..cols {
                let x = &v[i * cols + j] - &f * &v[r * cols + j];
                v[i * cols + j] = x;
            }
        }
        pivots.push(col);
        r += 1;
    }
    (pivots.len(), pivots)
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f101() -> Field {
        Field::prime(101)
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(f101(), 2);
        let (r, rank, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_single_pivot_over_f2() {
        let f = Field::prime(2);
        let m = Matrix::from_i64(f, &[&[0, 0], &[1, 0]]);
        let (r, rank, _) = m.rref();
        assert_eq!(r, Matrix::from_i64(f, &[&[1, 0], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn solve_identity_and_zero() {
        let f = f101();
        let b = Matrix::from_i64(f, &[&[3], &[5], &[7]]);
        let sol = Matrix::identity(f, 3).solve_right(&b).unwrap();
        assert_eq!(sol.particular, b);
        assert_eq!(sol.null_basis.dim(), 0);

        let z = Matrix::zeros(f, 2, 2);
        let sol = z.solve_right(&Matrix::zeros(f, 2, 1)).unwrap();
        assert!(sol.particular.is_zero());
        assert_eq!(sol.null_basis.dim(), 2);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let f = f101();
        let a = Matrix::from_i64(f, &[&[1, 1], &[0, 0]]);
        let b = Matrix::from_i64(f, &[&[1], &[1]]);
        assert!(a.solve_right(&b).is_none());
    }

    #[test]
    fn kernel_dimension_rank_nullity() {
        let f = f101();
        let a = Matrix::from_i64(f, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(a.rank() + k.rows(), a.cols());
        // substitute back
        assert!(a.mul(&k.transpose()).is_zero());
    }

    #[test]
    fn rational_rref_matches_prime_field_on_integer_matrix() {
        let a_q = Matrix::from_i64(Field::Rationals, &[&[2, 4], &[1, 3]]);
        let (_, rank, _) = a_q.rref();
        assert_eq!(rank, 2);
    }
}
