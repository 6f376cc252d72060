use std::fmt;

use super::field::Field;
use super::matrix::Matrix;

/// A subspace of `k^n` in canonical form: the basis matrix is the RREF of
/// any spanning set, zero rows dropped. Equality of subspaces is literal
/// equality of the canonical bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, field, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::from_spanning_rows(&Matrix::identity(field, ambient))
    }

    /// Canonicalize a spanning set given as matrix rows.
    pub fn from_spanning_rows(rows: &Matrix) -> Subspace {
        let (r, rank, pivots) = rows.rref();
        let keep: Vec<usize> = (0..rank).collect();
        Subspace {
            ambient: rows.cols(),
            field: rows.field(),
            basis: r.select_rows(&keep),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The canonical (RREF) basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership test for a row vector.
    pub fn contains_row(&self, v: &Matrix) -> bool {
        assert_eq!(v.cols(), self.ambient);
        assert_eq!(v.rows(), 1);
        if self.dim() == 0 {
            return v.is_zero();
        }
        self.basis.vstack(v).rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        if other.dim() == 0 {
            return true;
        }
        self.basis.vstack(&other.basis).rank() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_spanning_rows(&self.basis.vstack(&other.basis))
    }

    /// Coset representatives completing the subspace to the ambient space:
    /// the standard basis vectors at the non-pivot coordinates, in
    /// coordinate order. Together with the basis they span `k^n`, and there
    /// are exactly `n - dim` of them.
    pub fn quotient_basis(&self) -> Matrix {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.ambient).filter(|c| !is_pivot[*c]).collect();
        let mut out = Matrix::zeros(self.field, free.len(), self.ambient);
        for (i, &c) in free.iter().enumerate() {
            out.set(i, c, self.field.one());
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of k^{}) basis {:?}", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::prime(101)
    }

    #[test]
    fn quotient_of_full_subspace_is_empty() {
        let s = Subspace::full(f(), 3);
        assert_eq!(s.quotient_basis().rows(), 0);
    }

    #[test]
    fn quotient_of_zero_subspace_is_standard_basis() {
        let s = Subspace::zero(f(), 3);
        assert_eq!(s.quotient_basis(), Matrix::identity(f(), 3));
    }

    #[test]
    fn quotient_of_line_in_plane() {
        let s = Subspace::from_spanning_rows(&Matrix::from_i64(f(), &[&[1, 1]]));
        let q = s.quotient_basis();
        assert_eq!(q.rows(), 1);
        // representative is independent from (1,1)
        assert_eq!(s.basis().vstack(&q).rank(), 2);
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_spanning_rows(&Matrix::from_i64(f(), &[&[1, 2], &[2, 4]]));
        let b = Subspace::from_spanning_rows(&Matrix::from_i64(f(), &[&[50, 100]]));
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
    }
}
