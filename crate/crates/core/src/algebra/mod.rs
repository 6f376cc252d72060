//! Finite-dimensional bound quiver algebras.
//!
//! An [`Algebra`] is a path algebra modulo an admissible ideal, carrying a
//! canonical normal-form path basis (irreducible words under the completed
//! rewriting system) and a full structure-constant table. Tensor algebras
//! remember their factors so representations over them can be restricted
//! and contracted.

mod rewrite;
mod tensor;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::quiver::{Path, Quiver};

pub use rewrite::{Rewriter, Rule};
pub use tensor::{tensor_algebra, ArrowOrigin, ProductInfo};

/// Default bound on path length during basis enumeration.
pub const DEFAULT_PATH_CAP: usize = 32;

/// One admissible relation: a linear combination of parallel paths of
/// length at least two.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

/// Linear combination of basis elements, sparse by basis index.
pub type LinComb = Vec<(usize, Scalar)>;

#[derive(Clone)]
pub struct Algebra {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub field: Field,
    /// Normal-form paths in deglex order; trivial paths come first.
    pub basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    rewriter: Rewriter,
    /// `table[i][j]` expands `basis[i] * basis[j]` (apply `j` first).
    table: Vec<Vec<LinComb>>,
    /// Set when the algebra was built as a tensor product of two algebras.
    pub product: Option<ProductInfo>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.quiver == other.quiver && self.basis == other.basis && self.table == other.table
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, {} vertices, {} arrows, over {})", self.dim(), self.quiver.n_vertices(), self.quiver.arrows.len(), self.field)
    }
}

/// Build the bound quiver algebra `kQ / <relations>`.
///
/// The relations are completed into a confluent rewriting system; the basis
/// is the set of irreducible paths. Fails with `NotFiniteDimensional` if an
/// irreducible path of length `path_cap` survives.
pub fn build_algebra(quiver: Quiver, relations: Vec<Relation>, field: Field, path_cap: usize) -> Result<Algebra> {
    for rel in &relations {
        if rel.terms.is_empty() {
            return Err(Error::Invalid("empty relation".into()));
        }
        let (_, first) = &rel.terms[0];
        let (src, tgt) = (first.source, first.target(&quiver));
        for (_, p) in &rel.terms {
            if p.len() < 2 {
                return Err(Error::NonAdmissible { term: p.display(&quiver), len: p.len() });
            }
            if p.source != src || p.target(&quiver) != tgt {
                return Err(Error::Invalid(format!("relation terms are not parallel: `{}`", p.display(&quiver))));
            }
        }
    }
    let rel_terms: Vec<Vec<(Scalar, Path)>> = relations.iter().map(|r| r.terms.clone()).collect();
    let rewriter = Rewriter::complete(&quiver, field, &rel_terms, 2 * path_cap)?;

    // Breadth-first enumeration of irreducible words.
    let mut basis: Vec<Path> = (0..quiver.n_vertices()).map(Path::trivial).collect();
    let mut frontier = basis.clone();
    for len in 1..=path_cap {
        let mut next = Vec::new();
        for p in &frontier {
            let at = p.target(&quiver);
            for (ai, arrow) in quiver.arrows.iter().enumerate() {
                if arrow.source != at {
                    continue;
                }
                let mut word = p.word.clone();
                word.push(ai);
                if !rewriter.tail_reducible(&word) {
                    next.push(Path { source: p.source, word });
                }
            }
        }
        if len == path_cap && !next.is_empty() {
            return Err(Error::NotFiniteDimensional { cap: path_cap });
        }
        basis.extend(next.iter().cloned());
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    basis.sort_by(|a, b| a.cmp_deglex(b));
    let basis_index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    let dim = basis.len();
    let mut table = vec![vec![LinComb::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if let Some(prod) = basis[i].compose_after(&quiver, &basis[j]) {
                let reduced = rewriter.reduce_terms(&[(field.one(), prod)]);
                table[i][j] = reduced
                    .into_iter()
                    .map(|(s, p)| (*basis_index.get(&p).expect("normal form missing from basis"), s))
                    .collect();
                table[i][j].sort_by_key(|(k, _)| *k);
            }
        }
    }

    Ok(Algebra { quiver, relations, field, basis, basis_index, rewriter, table, product: None })
}

impl Algebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    /// Basis index of the trivial path at a vertex. Trivial paths sort
    /// first, in vertex order.
    pub fn trivial_index(&self, v: usize) -> usize {
        debug_assert!(self.basis[v].is_trivial() && self.basis[v].source == v);
        v
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// One plus the longest normal-form path: every path of this length
    /// reduces to zero.
    pub fn loewy_bound(&self) -> usize {
        self.basis.iter().map(|p| p.len()).max().unwrap_or(0) + 1
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &LinComb {
        &self.table[i][j]
    }

    /// Reduce an arbitrary combination of paths to basis coordinates.
    pub fn reduce_to_basis(&self, terms: &[(Scalar, Path)]) -> LinComb {
        let mut out: Vec<(usize, Scalar)> = self
            .rewriter
            .reduce_terms(terms)
            .into_iter()
            .map(|(s, p)| (self.basis_index[&p], s))
            .collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    pub fn rewriter(&self) -> &Rewriter {
        &self.rewriter
    }

    /// Product of sparse elements, `x * y` with `y` applied first.
    pub fn mul_elems(&self, x: &LinComb, y: &LinComb) -> LinComb {
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let c = self.field.mul(a, b);
                for (k, s) in &self.table[*i][*j] {
                    let v = self.field.mul(&c, s);
                    let e = acc.entry(*k).or_insert_with(|| self.field.zero());
                    *e = self.field.add(e, &v);
                }
            }
        }
        let mut out: LinComb = acc.into_iter().filter(|(_, s)| !self.field.is_zero(s)).collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// Matrix of left multiplication by `basis[k]` on the algebra.
    pub fn left_mult_matrix(&self, k: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field, d, d);
        for j in 0..d {
            for (i, s) in &self.table[k][j] {
                m.set(*i, j, s.clone());
            }
        }
        m
    }

    /// Matrix of right multiplication by `basis[k]` on the algebra.
    pub fn right_mult_matrix(&self, k: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field, d, d);
        for j in 0..d {
            for (i, s) in &self.table[j][k] {
                m.set(*i, j, s.clone());
            }
        }
        m
    }

    /// Pointer-or-content equality; representations over structurally equal
    /// algebras are interoperable.
    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

/// The opposite algebra: arrows reversed, relation words reversed. Arrow
/// indices correspond one-to-one.
pub fn opposite(a: &Algebra) -> Result<Algebra> {
    let quiver = a.quiver.reversed();
    let relations = a
        .relations
        .iter()
        .map(|r| Relation {
            terms: r
                .terms
                .iter()
                .map(|(s, p)| {
                    let word: Vec<usize> = p.word.iter().rev().copied().collect();
                    let source = p.target(&a.quiver);
                    (s.clone(), Path { source, word })
                })
                .collect(),
        })
        .collect();
    build_algebra(quiver, relations, a.field, DEFAULT_PATH_CAP.max(a.loewy_bound() + 1))
}

/// The enveloping algebra `A (x) A^op`.
pub fn enveloping(a: &Arc<Algebra>) -> Result<Algebra> {
    let op = Arc::new(opposite(a)?);
    tensor_algebra(a, &op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lambda_basis_is_the_four_paths() {
        let l = fixtures::lambda(Field::prime(101));
        assert_eq!(l.dim(), 4);
        let names: Vec<String> = l.basis.iter().map(|p| p.display(&l.quiver)).collect();
        assert_eq!(names, vec!["e1", "e2", "a", "b"]);
    }

    #[test]
    fn sigma_basis() {
        let s = fixtures::sigma(Field::prime(101));
        assert_eq!(s.dim(), 2);
        let names: Vec<String> = s.basis.iter().map(|p| p.display(&s.quiver)).collect();
        assert_eq!(names, vec!["e3", "g"]);
    }

    #[test]
    fn free_loop_is_infinite_dimensional() {
        let q = Quiver::new(vec!["1".into()], vec![("x".into(), "1".into(), "1".into())]).unwrap();
        let err = build_algebra(q, vec![], Field::prime(101), 10).unwrap_err();
        assert_eq!(err, Error::NotFiniteDimensional { cap: 10 });
    }

    #[test]
    fn non_admissible_relation_rejected() {
        let q = Quiver::new(vec!["1".into()], vec![("x".into(), "1".into(), "1".into())]).unwrap();
        let f = Field::prime(101);
        let rel = Relation { terms: vec![(f.one(), Path { source: 0, word: vec![0] })] };
        let err = build_algebra(q, vec![rel], f, 10).unwrap_err();
        assert!(matches!(err, Error::NonAdmissible { len: 1, .. }));
    }

    #[test]
    fn associativity_on_all_basis_triples() {
        let f = Field::prime(101);
        for alg in [fixtures::lambda(f), fixtures::sigma(f), fixtures::nakayama(f, 2, 2), fixtures::arrow_algebra(f)] {
            let d = alg.dim();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let ij = alg.mul_basis(i, j).clone();
                        let jk = alg.mul_basis(j, k).clone();
                        let left = alg.mul_elems(&ij, &vec![(k, f.one())]);
                        let right = alg.mul_elems(&vec![(i, f.one())], &jk);
                        assert_eq!(left, right, "({i}{j}){k} != {i}({j}{k}) in {alg:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn loewy_bound_kills_long_paths() {
        let f = Field::prime(101);
        let l = fixtures::lambda(f);
        let bound = l.loewy_bound();
        assert_eq!(bound, 2);
        // every product of `bound` arrows vanishes
        let n_arrows = l.quiver.arrows.len();
        let mut words = vec![vec![]];
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &words {
                for a in 0..n_arrows {
                    let mut v: Vec<usize> = (*w).clone();
                    v.push(a);
                    next.push(v);
                }
            }
            words = next;
        }
        for w in words {
            // only consider composable words
            let ok = w.windows(2).all(|pair| l.quiver.arrows[pair[0]].target == l.quiver.arrows[pair[1]].source);
            if !ok {
                continue;
            }
            let p = Path { source: l.quiver.arrows[w[0]].source, word: w };
            assert!(l.reduce_to_basis(&[(f.one(), p)]).is_empty());
        }
    }

    #[test]
    fn opposite_is_an_involution_on_lambda() {
        let f = Field::prime(101);
        let l = fixtures::lambda(f);
        let op = opposite(&l).unwrap();
        assert_eq!(op.dim(), 4);
        let back = opposite(&op).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn opposite_of_commutative_sigma_is_itself() {
        let f = Field::prime(101);
        let s = fixtures::sigma(f);
        let op = opposite(&s).unwrap();
        assert_eq!(op, s);
    }

    #[test]
    fn opposite_lambda_relations_reflect() {
        // relations of Lambda^op are a^2 and a*b read in reversed-arrow form
        let f = Field::prime(101);
        let l = fixtures::lambda(f);
        let op = opposite(&l).unwrap();
        let rels: Vec<String> = op
            .relations
            .iter()
            .map(|r| r.terms.iter().map(|(_, p)| p.display(&op.quiver)).collect::<Vec<_>>().join("+"))
            .collect();
        assert_eq!(rels, vec!["a*a", "a*b"]);
    }

    /// Independent oracle: dimension of kQ/I up to a length cap by plain
    /// linear algebra in the free path space, no rewriting involved.
    fn dim_by_enumeration(quiver: &Quiver, relations: &[Relation], field: Field, cap: usize) -> usize {
        // enumerate all paths of length < cap
        let mut paths: Vec<Path> = (0..quiver.n_vertices()).map(Path::trivial).collect();
        let mut frontier = paths.clone();
        for _ in 1..cap {
            let mut next = Vec::new();
            for p in &frontier {
                for (ai, arrow) in quiver.arrows.iter().enumerate() {
                    if arrow.source == p.target(quiver) {
                        let mut w = p.word.clone();
                        w.push(ai);
                        next.push(Path { source: p.source, word: w });
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        // span of q * rel * p over all sandwiching paths, truncated at cap
        let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for rel in relations {
            for left in &paths {
                for right in &paths {
                    let mut row = Vec::new();
                    let mut ok = false;
                    for (s, mid) in &rel.terms {
                        if let Some(mp) = mid.compose_after(quiver, right) {
                            if let Some(full) = left.compose_after(quiver, &mp) {
                                if full.len() < cap {
                                    row.push((index[&full], s.clone()));
                                    ok = true;
                                }
                            }
                        }
                    }
                    if ok {
                        rows.push(row);
                    }
                }
            }
        }
        let mut m = Matrix::zeros(field, rows.len(), paths.len());
        for (i, row) in rows.iter().enumerate() {
            for (j, s) in row {
                let old = m.get(i, *j);
                m.set(i, *j, field.add(&old, s));
            }
        }
        paths.len() - m.rank()
    }

    #[test]
    fn dimensions_match_enumeration_oracle() {
        let f = Field::prime(101);
        let l = fixtures::lambda(f);
        assert_eq!(l.dim(), dim_by_enumeration(&l.quiver, &l.relations, f, 10));
        let s = fixtures::sigma(f);
        assert_eq!(s.dim(), dim_by_enumeration(&s.quiver, &s.relations, f, 10));
        let n = fixtures::nakayama(f, 3, 2);
        assert_eq!(n.dim(), dim_by_enumeration(&n.quiver, &n.relations, f, 10));
    }

    #[test]
    fn reduction_is_confluent_under_rule_shuffles() {
        // reduce products of random path pairs through the completed system
        // twice, the second time with terms fed in reversed order
        let f = Field::prime(101);
        let l = fixtures::example7_tensor_lambda_sigma_op(f);
        let mut rng = crate::rng::Rng::new(11);
        for _ in 0..50 {
            let i = rng.below(l.dim() as u64) as usize;
            let j = rng.below(l.dim() as u64) as usize;
            if let Some(p) = l.basis[i].compose_after(&l.quiver, &l.basis[j]) {
                let once = l.reduce_to_basis(&[(f.one(), p.clone())]);
                let twice = l.reduce_to_basis(&[(f.from_i64(2), p.clone()), (f.from_i64(-1), p)]);
                assert_eq!(once, twice);
            }
        }
    }
}
