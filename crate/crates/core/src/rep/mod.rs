//! Finite-dimensional modules as quiver representations.
//!
//! A [`Rep`] is a dimension vector plus one matrix per arrow, constrained
//! to kill every relation of its algebra. Morphisms are vertexwise
//! matrices intertwining the arrow actions; [`hom_basis`] solves the
//! intertwining equations exactly. Bimodules are representations of tensor
//! algebras and can be restricted to either side.

mod build;
mod endo;
mod stable;
mod tensor;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, ArrowOrigin, LinComb};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::quiver::Path;

pub use build::{
    cokernel, direct_sum, direct_sum_with_witnesses, dual, image, kernel, projective, projective_columns,
    projective_cover, radical, regular_left, restrict, semisimple_top, simple, submodule_generated, top, Side,
};
pub use endo::{decompose, is_isomorphic, is_projective, split_off_summand, strip_projectives, EndoAlgebra};
pub use stable::{stable_hom, StableHomSpace};
pub use tensor::{associator, tensor_over, Block, TensorContext};

#[derive(Clone, PartialEq)]
pub struct Rep {
    pub algebra: Arc<Algebra>,
    pub dims: Vec<usize>,
    pub arrow_maps: Vec<Matrix>,
    offsets: Vec<usize>,
}

impl Rep {
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, arrow_maps: Vec<Matrix>) -> Result<Rep> {
        let rep = Rep::new_unchecked(algebra, dims, arrow_maps);
        rep.validate()?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dims: Vec<usize>, arrow_maps: Vec<Matrix>) -> Rep {
        assert_eq!(dims.len(), algebra.n_vertices());
        assert_eq!(arrow_maps.len(), algebra.quiver.arrows.len());
        let mut offsets = Vec::with_capacity(dims.len() + 1);
        let mut acc = 0;
        for &d in &dims {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);
        Rep { algebra, dims, arrow_maps, offsets }
    }

    pub fn zero(algebra: Arc<Algebra>) -> Rep {
        let f = algebra.field;
        let dims = vec![0; algebra.n_vertices()];
        let maps = algebra.quiver.arrows.iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Rep::new_unchecked(algebra, dims, maps)
    }

    fn validate(&self) -> Result<()> {
        let q = &self.algebra.quiver;
        for (i, a) in q.arrows.iter().enumerate() {
            let m = &self.arrow_maps[i];
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(Error::Invalid(format!(
                    "map for arrow `{}` is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    self.dims[a.target],
                    self.dims[a.source]
                )));
            }
            if m.field() != self.algebra.field {
                return Err(Error::FieldMismatch(m.field().to_string(), self.algebra.field.to_string()));
            }
        }
        for rel in &self.algebra.relations {
            let (_, first) = &rel.terms[0];
            let (src, tgt) = (first.source, first.target(q));
            let f = self.algebra.field;
            let mut acc = Matrix::zeros(f, self.dims[tgt], self.dims[src]);
            for (c, p) in &rel.terms {
                acc = acc.add(&self.act_path(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::Invalid(format!(
                    "relation {} does not vanish on the representation",
                    rel.terms.iter().map(|(_, p)| p.display(q)).collect::<Vec<_>>().join(" + ")
                )));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.algebra.field
    }

    pub fn total_dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn offset(&self, v: usize) -> usize {
        self.offsets[v]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of the action of a raw path (not necessarily a normal form):
    /// the composite of the arrow matrices along the word.
    pub fn act_path(&self, p: &Path) -> Matrix {
        let q = &self.algebra.quiver;
        let mut m = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.word {
            m = self.arrow_maps[a].mul(&m);
        }
        debug_assert_eq!(m.rows(), self.dims[p.target(q)]);
        m
    }

    /// Global action matrix (total x total) of a linear combination of
    /// algebra basis elements.
    pub fn act_elem(&self, elem: &LinComb) -> Matrix {
        let f = self.field();
        let t = self.total_dim();
        let mut out = Matrix::zeros(f, t, t);
        let q = &self.algebra.quiver;
        for (k, c) in elem {
            let p = &self.algebra.basis[*k];
            let block = self.act_path(p).scale(c);
            let (ro, co) = (self.offset(p.target(q)), self.offset(p.source));
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    let old = out.get(ro + i, co + j);
                    out.set(ro + i, co + j, f.add(&old, &block.get(i, j)));
                }
            }
        }
        out
    }

    /// Split a global column vector into vertex components.
    pub fn split_global(&self, v: &Matrix) -> Vec<Matrix> {
        assert_eq!(v.rows(), self.total_dim());
        (0..self.dims.len())
            .map(|w| Matrix::from_fn(self.field(), self.dims[w], v.cols(), |i, j| v.get(self.offset(w) + i, j)))
            .collect()
    }

    pub fn same_algebra(&self, other: &Rep) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    /// Vertex pair decomposition when the algebra is a tensor algebra.
    pub fn product_info(&self) -> Result<&crate::algebra::ProductInfo> {
        self.algebra.product.as_ref().ok_or(Error::NotTensorAlgebra)
    }
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep(dims {:?} over {:?})", self.dims, self.algebra)
    }
}

/// A morphism of representations: one matrix per vertex, intertwining all
/// arrow actions.
#[derive(Clone, PartialEq)]
pub struct Hom {
    pub source: Rep,
    pub target: Rep,
    pub vertex_maps: Vec<Matrix>,
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom({:?} -> {:?})", self.source.dims, self.target.dims)
    }
}

impl Hom {
    pub fn new(source: Rep, target: Rep, vertex_maps: Vec<Matrix>) -> Result<Hom> {
        let h = Hom { source, target, vertex_maps };
        h.validate()?;
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: Rep, target: Rep, vertex_maps: Vec<Matrix>) -> Hom {
        debug_assert!(Hom { source: source.clone(), target: target.clone(), vertex_maps: vertex_maps.clone() }
            .validate()
            .is_ok());
        Hom { source, target, vertex_maps }
    }

    fn validate(&self) -> Result<()> {
        if !self.source.same_algebra(&self.target) {
            return Err(Error::AlgebraMismatch("hom between modules over different algebras".into()));
        }
        for v in 0..self.vertex_maps.len() {
            let m = &self.vertex_maps[v];
            if m.rows() != self.target.dims[v] || m.cols() != self.source.dims[v] {
                return Err(Error::Invalid(format!("vertex map {v} has wrong shape")));
            }
        }
        for (i, a) in self.source.algebra.quiver.arrows.iter().enumerate() {
            let lhs = self.vertex_maps[a.target].mul(&self.source.arrow_maps[i]);
            let rhs = self.target.arrow_maps[i].mul(&self.vertex_maps[a.source]);
            if lhs != rhs {
                return Err(Error::Invalid(format!("map does not intertwine arrow `{}`", a.name)));
            }
        }
        Ok(())
    }

    pub fn identity(x: &Rep) -> Hom {
        let maps = (0..x.dims.len()).map(|v| Matrix::identity(x.field(), x.dims[v])).collect();
        Hom::new_unchecked(x.clone(), x.clone(), maps)
    }

    pub fn zero(x: &Rep, y: &Rep) -> Hom {
        let maps = (0..x.dims.len()).map(|v| Matrix::zeros(x.field(), y.dims[v], x.dims[v])).collect();
        Hom::new_unchecked(x.clone(), y.clone(), maps)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Hom) -> Hom {
        assert!(self.source.same_algebra(&first.target) && self.source.dims == first.target.dims, "homs not composable");
        let maps = (0..self.vertex_maps.len()).map(|v| self.vertex_maps[v].mul(&first.vertex_maps[v])).collect();
        Hom::new_unchecked(first.source.clone(), self.target.clone(), maps)
    }

    pub fn add(&self, other: &Hom) -> Hom {
        let maps = (0..self.vertex_maps.len()).map(|v| self.vertex_maps[v].add(&other.vertex_maps[v])).collect();
        Hom::new_unchecked(self.source.clone(), self.target.clone(), maps)
    }

    pub fn sub(&self, other: &Hom) -> Hom {
        let maps = (0..self.vertex_maps.len()).map(|v| self.vertex_maps[v].sub(&other.vertex_maps[v])).collect();
        Hom::new_unchecked(self.source.clone(), self.target.clone(), maps)
    }

    pub fn scale(&self, s: &Scalar) -> Hom {
        let maps = self.vertex_maps.iter().map(|m| m.scale(s)).collect();
        Hom::new_unchecked(self.source.clone(), self.target.clone(), maps)
    }

    pub fn is_zero(&self) -> bool {
        self.vertex_maps.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.vertex_maps.iter().map(|m| m.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims == self.target.dims && self.vertex_maps.iter().all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Hom {
        assert!(self.is_isomorphism(), "inverse of a non-isomorphism");
        let maps = self
            .vertex_maps
            .iter()
            .map(|m| {
                let id = Matrix::identity(m.field(), m.rows());
                m.solve_right(&id).expect("invertible").particular
            })
            .collect();
        Hom::new_unchecked(self.target.clone(), self.source.clone(), maps)
    }

    /// Stack the vertex maps into one `total(target) x total(source)`
    /// block-diagonal matrix.
    pub fn global_matrix(&self) -> Matrix {
        let blocks: Vec<&Matrix> = self.vertex_maps.iter().collect();
        Matrix::block_diag(self.source.field(), &blocks)
    }
}

/// The full Hom space between two representations, with a fixed coordinate
/// system (vertexwise row-major entries) and a deterministic basis.
pub struct HomSpace {
    pub source: Rep,
    pub target: Rep,
    pub basis: Vec<Hom>,
    var_offsets: Vec<usize>,
    var_count: usize,
    /// Basis vectors as rows, in hom coordinates.
    basis_rows: Matrix,
}

impl HomSpace {
    pub fn new(x: &Rep, y: &Rep) -> Result<HomSpace> {
        if !x.same_algebra(y) {
            return Err(Error::AlgebraMismatch("hom space between modules over different algebras".into()));
        }
        let f = x.field();
        let nv = x.dims.len();
        let mut var_offsets = Vec::with_capacity(nv + 1);
        let mut acc = 0usize;
        for v in 0..nv {
            var_offsets.push(acc);
            acc += y.dims[v] * x.dims[v];
        }
        var_offsets.push(acc);
        let vars = acc;

        let mut rows = 0usize;
        for a in &x.algebra.quiver.arrows {
            rows += y.dims[a.target] * x.dims[a.source];
        }
        let mut sys = Matrix::zeros(f, rows, vars);
        let mut r0 = 0usize;
        for (ai, a) in x.algebra.quiver.arrows.iter().enumerate() {
            let (u, w) = (a.source, a.target);
            let xa = &x.arrow_maps[ai];
            let ya = &y.arrow_maps[ai];
            for i in 0..y.dims[w] {
                for j in 0..x.dims[u] {
                    let row = r0 + i * x.dims[u] + j;
                    // + F_w[i,k] * Xa[k,j]
                    for k in 0..x.dims[w] {
                        let var = var_offsets[w] + i * x.dims[w] + k;
                        let old = sys.get(row, var);
                        sys.set(row, var, f.add(&old, &xa.get(k, j)));
                    }
                    // - Ya[i,k] * F_u[k,j]
                    for k in 0..y.dims[u] {
                        let var = var_offsets[u] + k * x.dims[u] + j;
                        let old = sys.get(row, var);
                        sys.set(row, var, f.sub(&old, &ya.get(i, k)));
                    }
                }
            }
            r0 += y.dims[w] * x.dims[u];
        }
        let basis_rows = sys.kernel();
        let mut basis = Vec::new();
        for b in 0..basis_rows.rows() {
            let mut maps = Vec::with_capacity(nv);
            for v in 0..nv {
                maps.push(Matrix::from_fn(f, y.dims[v], x.dims[v], |i, j| {
                    basis_rows.get(b, var_offsets[v] + i * x.dims[v] + j)
                }));
            }
            basis.push(Hom::new_unchecked(x.clone(), y.clone(), maps));
        }
        Ok(HomSpace { source: x.clone(), target: y.clone(), basis, var_offsets, var_count: vars, basis_rows })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    /// Flatten a hom into the coordinate row vector of this space.
    pub fn flatten(&self, h: &Hom) -> Matrix {
        let f = self.source.field();
        let mut row = Matrix::zeros(f, 1, self.var_count);
        for v in 0..self.source.dims.len() {
            let m = &h.vertex_maps[v];
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    row.set(0, self.var_offsets[v] + i * m.cols() + j, m.get(i, j));
                }
            }
        }
        row
    }

    /// Coordinates of a hom with respect to the computed basis.
    pub fn coords(&self, h: &Hom) -> Matrix {
        let row = self.flatten(h);
        let sol = self
            .basis_rows
            .transpose()
            .solve_right(&row.transpose())
            .expect("hom must lie in the hom space");
        sol.particular.transpose()
    }

    /// Hom from basis coordinates (a `1 x dim` row).
    pub fn from_coords(&self, coords: &Matrix) -> Hom {
        assert_eq!(coords.cols(), self.dim());
        let f = self.source.field();
        let mut h = Hom::zero(&self.source, &self.target);
        for b in 0..self.dim() {
            let c = coords.get(0, b);
            if !f.is_zero(&c) {
                h = h.add(&self.basis[b].scale(&c));
            }
        }
        h
    }

    /// A deterministic pseudo-random element.
    pub fn random_element(&self, rng: &mut crate::rng::Rng) -> Hom {
        let f = self.source.field();
        let mut h = Hom::zero(&self.source, &self.target);
        for b in &self.basis {
            h = h.add(&b.scale(&f.random(rng)));
        }
        h
    }
}

/// Basis of `Hom(x, y)` as a list of morphisms.
pub fn hom_basis(x: &Rep, y: &Rep) -> Result<Vec<Hom>> {
    Ok(HomSpace::new(x, y)?.basis)
}

pub use build::ArrowOriginExt;

#[allow(unused_imports)]
pub(crate) use build::induced_map_into_subrep;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn f() -> Field {
        Field::prime(101)
    }

    #[test]
    fn simple_and_top_dimensions() {
        let l = Arc::new(fixtures::lambda(f()));
        let s1 = simple(&l, 0);
        assert_eq!(s1.dims, vec![1, 0]);
        let t = semisimple_top(&l);
        assert_eq!(t.dims, vec![1, 1]);
    }

    #[test]
    fn projectives_of_lambda_and_sigma() {
        let l = Arc::new(fixtures::lambda(f()));
        let p1 = projective(&l, 0);
        assert_eq!(p1.dims, vec![2, 1]);
        let p2 = projective(&l, 1);
        assert_eq!(p2.dims, vec![0, 1]);
        let s = Arc::new(fixtures::sigma(f()));
        let p3 = projective(&s, 0);
        assert_eq!(p3.total_dim(), 2);
    }

    #[test]
    fn hom_dims_between_simples() {
        let l = Arc::new(fixtures::lambda(f()));
        let s1 = simple(&l, 0);
        let s2 = simple(&l, 1);
        assert_eq!(hom_basis(&s1, &s1).unwrap().len(), 1);
        assert_eq!(hom_basis(&s1, &s2).unwrap().len(), 0);
    }

    #[test]
    fn hom_from_projective_counts_weight_space() {
        // Hom(P(v), X) has the dimension of e_v X
        let l = Arc::new(fixtures::lambda(f()));
        let reg = regular_left(&l);
        let p1 = projective(&l, 0);
        let h = hom_basis(&p1, &reg).unwrap();
        // e_1 (Lambda as left module) = paths ending at 1 = {e1, a}
        assert_eq!(h.len(), 2);
        let p2 = projective(&l, 1);
        assert_eq!(hom_basis(&p2, &reg).unwrap().len(), 2);
    }

    #[test]
    fn relation_violation_rejected() {
        let l = Arc::new(fixtures::lambda(f()));
        // a acting as identity on k at vertex 1 violates a^2 = 0
        let maps = vec![Matrix::identity(f(), 1), Matrix::zeros(f(), 1, 1)];
        let err = Rep::new(Arc::clone(&l), vec![1, 1], maps).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn hom_space_coords_roundtrip() {
        let s = Arc::new(fixtures::sigma(f()));
        let reg = regular_left(&s);
        let hs = HomSpace::new(&reg, &reg).unwrap();
        assert_eq!(hs.dim(), 2);
        let mut rng = crate::rng::Rng::new(3);
        let h = hs.random_element(&mut rng);
        let c = hs.coords(&h);
        let back = hs.from_coords(&c);
        assert!(back.sub(&h).is_zero());
    }
}
