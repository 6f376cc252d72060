//! Stable Hom spaces: morphisms modulo those factoring through a
//! projective module.
//!
//! The projectively-trivial subspace is computed as the image of
//! `Hom(x, P(y)) -> Hom(x, y)`, postcomposition with the projective cover
//! of the target; any map factoring through some projective also factors
//! through the cover epi.

use crate::error::Result;
use crate::linalg::{Matrix, Subspace};

use super::{build, Hom, HomSpace, Rep};

pub struct StableHomSpace {
    pub hom: HomSpace,
    /// Subspace of hom-basis coordinates spanned by maps factoring through
    /// a projective.
    pub proj_subspace: Subspace,
    /// Representatives of a basis of the stable quotient.
    pub coset_reps: Vec<Hom>,
    /// hom coords -> [proj part; stable part] coefficients
    to_parts: Matrix,
}

pub fn stable_hom(x: &Rep, y: &Rep) -> Result<StableHomSpace> {
    let hom = HomSpace::new(x, y)?;
    let f = x.field();
    let (cover, epi) = build::projective_cover(y);
    let through = HomSpace::new(x, &cover)?;
    let mut rows = Matrix::zeros(f, through.dim(), hom.dim());
    for (i, h) in through.basis.iter().enumerate() {
        let composed = epi.compose(h);
        let c = hom.coords(&composed);
        for j in 0..hom.dim() {
            rows.set(i, j, c.get(0, j));
        }
    }
    let proj_subspace = Subspace::from_spanning_rows(&rows);
    let reps = proj_subspace.quotient_basis();
    let coset_reps: Vec<Hom> = (0..reps.rows()).map(|r| hom.from_coords(&reps.select_rows(&[r]))).collect();
    let to_parts = if hom.dim() == 0 {
        Matrix::zeros(f, 0, 0)
    } else {
        proj_subspace
            .basis()
            .vstack(&reps)
            .transpose()
            .solve_right(&Matrix::identity(f, hom.dim()))
            .expect("basis completion invertible")
            .particular
    };
    Ok(StableHomSpace { hom, proj_subspace, coset_reps, to_parts })
}

impl StableHomSpace {
    pub fn dim(&self) -> usize {
        self.coset_reps.len()
    }

    /// Canonical coordinates of a morphism in the stable quotient.
    pub fn stable_coords(&self, h: &Hom) -> Matrix {
        let f = self.hom.source.field();
        if self.hom.dim() == 0 {
            return Matrix::zeros(f, 1, 0);
        }
        let c = self.hom.coords(h);
        let parts = self.to_parts.mul(&c.transpose());
        let p = self.proj_subspace.dim();
        Matrix::from_fn(f, 1, self.dim(), |_, k| parts.get(p + k, 0))
    }

    pub fn is_stably_zero(&self, h: &Hom) -> bool {
        self.stable_coords(h).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::Field;
    use crate::rep::{projective, regular_left, simple};
    use std::sync::Arc;

    #[test]
    fn stable_hom_from_projective_vanishes() {
        let l = Arc::new(fixtures::lambda(Field::prime(101)));
        let p = projective(&l, 0);
        let reg = regular_left(&l);
        let st = stable_hom(&p, &reg).unwrap();
        assert_eq!(st.dim(), 0);
        assert!(st.hom.dim() > 0);
    }

    #[test]
    fn identity_of_simple_is_stably_nonzero_over_sigma() {
        let s = Arc::new(fixtures::sigma(Field::prime(101)));
        let k = simple(&s, 0);
        let st = stable_hom(&k, &k).unwrap();
        assert_eq!(st.hom.dim(), 1);
        assert_eq!(st.dim(), 1);
        assert!(!st.is_stably_zero(&Hom::identity(&k)));
    }
}
