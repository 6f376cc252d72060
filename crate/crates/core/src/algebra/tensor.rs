//! Tensor products of bound quiver algebras.
//!
//! The product quiver has vertex set `V(A) x V(B)`; each arrow of `A` is
//! lifted once per vertex of `B` and vice versa. Relations are the lifted
//! relations of both factors plus the commutativity of the two kinds of
//! arrows. The commutators are oriented by the monomial order so that the
//! normal form of a mixed path applies the `A`-side arrows first.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::quiver::{Path, Quiver};

use super::{build_algebra, Algebra, Relation, DEFAULT_PATH_CAP};

/// Where an arrow of a product quiver came from.
#[derive(Clone, Debug, PartialEq)]
pub enum ArrowOrigin {
    /// `a x j`: arrow `a` of the left factor at right vertex `j`.
    Left { arrow: usize, right_vertex: usize },
    /// `i x b`: arrow `b` of the right factor at left vertex `i`.
    Right { left_vertex: usize, arrow: usize },
}

/// Factor data of a tensor algebra.
#[derive(Clone, Debug)]
pub struct ProductInfo {
    pub left: Arc<Algebra>,
    pub right: Arc<Algebra>,
    /// product vertex -> (left vertex, right vertex); the inverse map is
    /// `i * right.n_vertices() + j`.
    pub vertex_pairs: Vec<(usize, usize)>,
    pub arrow_origin: Vec<ArrowOrigin>,
}

impl ProductInfo {
    pub fn vertex_of(&self, i: usize, j: usize) -> usize {
        i * self.right.n_vertices() + j
    }
}

impl PartialEq for ProductInfo {
    fn eq(&self, other: &Self) -> bool {
        *self.left == *other.left && *self.right == *other.right
    }
}

/// `A (x)_k B` as a bound quiver algebra.
pub fn tensor_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<Algebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field.to_string(), b.field.to_string()));
    }
    let (qa, qb) = (&a.quiver, &b.quiver);
    let nb = qb.n_vertices();

    let mut vertices = Vec::new();
    let mut vertex_pairs = Vec::new();
    for (i, vi) in qa.vertices.iter().enumerate() {
        for (j, vj) in qb.vertices.iter().enumerate() {
            vertices.push(format!("{vi}x{vj}"));
            vertex_pairs.push((i, j));
        }
    }

    let mut arrows = Vec::new();
    let mut arrow_origin = Vec::new();
    for (k, arr) in qa.arrows.iter().enumerate() {
        for j in 0..nb {
            arrows.push((
                format!("{}x{}", arr.name, qb.vertices[j]),
                vertices[arr.source * nb + j].clone(),
                vertices[arr.target * nb + j].clone(),
            ));
            arrow_origin.push(ArrowOrigin::Left { arrow: k, right_vertex: j });
        }
    }
    for i in 0..qa.n_vertices() {
        for (k, arr) in qb.arrows.iter().enumerate() {
            arrows.push((
                format!("{}x{}", qa.vertices[i], arr.name),
                vertices[i * nb + arr.source].clone(),
                vertices[i * nb + arr.target].clone(),
            ));
            arrow_origin.push(ArrowOrigin::Right { left_vertex: i, arrow: k });
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;

    // arrow index helpers matching the construction order above
    let left_arrow = |k: usize, j: usize| k * nb + j;
    let right_arrow_base = qa.arrows.len() * nb;
    let right_arrow = |i: usize, k: usize| right_arrow_base + i * qb.arrows.len() + k;

    let mut relations = Vec::new();
    // lifted relations of the left factor, one copy per right vertex
    for rel in &a.relations {
        for j in 0..nb {
            let terms: Vec<(Scalar, Path)> = rel
                .terms
                .iter()
                .map(|(s, p)| {
                    let word: Vec<usize> = p.word.iter().map(|&w| left_arrow(w, j)).collect();
                    (s.clone(), Path { source: p.source * nb + j, word })
                })
                .collect();
            relations.push(Relation { terms });
        }
    }
    // lifted relations of the right factor
    for rel in &b.relations {
        for i in 0..qa.n_vertices() {
            let terms: Vec<(Scalar, Path)> = rel
                .terms
                .iter()
                .map(|(s, p)| {
                    let word: Vec<usize> = p.word.iter().map(|&w| right_arrow(i, w)).collect();
                    (s.clone(), Path { source: i * nb + p.source, word })
                })
                .collect();
            relations.push(Relation { terms });
        }
    }
    // commutativity of the two kinds of arrows
    let one = a.field.one();
    let minus_one = a.field.neg(&one);
    for (ka, arr_a) in qa.arrows.iter().enumerate() {
        for (kb, arr_b) in qb.arrows.iter().enumerate() {
            let src = arr_a.source * nb + arr_b.source;
            let via_left_first = Path { source: src, word: vec![left_arrow(ka, arr_b.source), right_arrow(arr_a.target, kb)] };
            let via_right_first = Path { source: src, word: vec![right_arrow(arr_a.source, kb), left_arrow(ka, arr_b.target)] };
            relations.push(Relation { terms: vec![(one.clone(), via_right_first), (minus_one.clone(), via_left_first)] });
        }
    }

    let cap = DEFAULT_PATH_CAP.max(a.loewy_bound() + b.loewy_bound() + 1);
    let mut alg = build_algebra(quiver, relations, a.field, cap)?;
    alg.product = Some(ProductInfo { left: Arc::clone(a), right: Arc::clone(b), vertex_pairs, arrow_origin });
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enveloping, opposite};
    use crate::fixtures;
    use crate::linalg::Field;

    #[test]
    fn lambda_tensor_sigma_op_matches_displayed_presentation() {
        let f = Field::prime(101);
        let t = fixtures::example7_tensor_lambda_sigma_op(f);
        assert_eq!(t.quiver.n_vertices(), 2);
        assert_eq!(t.quiver.arrows.len(), 4);
        assert_eq!(t.relations.len(), 6);
        assert_eq!(t.dim(), 8);
    }

    #[test]
    fn sigma_enveloping_presentation() {
        let f = Field::prime(101);
        let s = Arc::new(fixtures::sigma(f));
        let e = enveloping(&s).unwrap();
        assert_eq!(e.quiver.n_vertices(), 1);
        assert_eq!(e.quiver.arrows.len(), 2);
        assert_eq!(e.relations.len(), 3);
        assert_eq!(e.dim(), 4);
    }

    #[test]
    fn lambda_enveloping_matches_displayed_presentation() {
        let f = Field::prime(101);
        let l = Arc::new(fixtures::lambda(f));
        let e = enveloping(&l).unwrap();
        assert_eq!(e.quiver.n_vertices(), 4);
        assert_eq!(e.quiver.arrows.len(), 8);
        assert_eq!(e.relations.len(), 12);
        assert_eq!(e.dim(), 16);
    }

    #[test]
    fn tensor_dimension_is_product_of_dimensions() {
        let f = Field::prime(101);
        let cases = [
            (fixtures::lambda(f), fixtures::sigma(f)),
            (fixtures::sigma(f), fixtures::sigma(f)),
            (fixtures::nakayama(f, 2, 2), fixtures::arrow_algebra(f)),
        ];
        for (x, y) in cases {
            let (dx, dy) = (x.dim(), y.dim());
            let t = tensor_algebra(&Arc::new(x), &Arc::new(y)).unwrap();
            assert_eq!(t.dim(), dx * dy);
        }
    }

    #[test]
    fn one_point_algebra_is_a_tensor_unit() {
        let f = Field::prime(101);
        let k = Arc::new(fixtures::one_point(f));
        let a = Arc::new(fixtures::lambda(f));
        let t = tensor_algebra(&k, &a).unwrap();
        assert_eq!(t.dim(), a.dim());
        // same quiver shape and same structure constants under the evident
        // bijection (vertex ix -> x, arrows correspond in order)
        assert_eq!(t.quiver.n_vertices(), a.quiver.n_vertices());
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                let ta: Vec<usize> = t.mul_basis(i, j).iter().map(|(k, _)| *k).collect();
                let aa: Vec<usize> = a.mul_basis(i, j).iter().map(|(k, _)| *k).collect();
                assert_eq!(ta, aa);
            }
        }
        let e = enveloping(&k).unwrap();
        assert_eq!(e.dim(), 1);
    }

    #[test]
    fn mixed_paths_normalize_with_left_factor_applied_first() {
        let f = Field::prime(101);
        let t = fixtures::example7_tensor_lambda_sigma_op(f);
        // basis words must never apply a right-factor arrow before a
        // left-factor arrow
        let info = t.product.as_ref().unwrap();
        for p in &t.basis {
            let mut seen_right = false;
            for &w in &p.word {
                match info.arrow_origin[w] {
                    ArrowOrigin::Left { .. } => assert!(!seen_right, "left-factor arrow after right-factor arrow in normal form"),
                    ArrowOrigin::Right { .. } => seen_right = true,
                }
            }
        }
    }

    #[test]
    fn opposite_tensor_relations_of_sigma_lambda_op() {
        // the R x Q^op presentation: 4 arrows, 6 relations, dim 8
        let f = Field::prime(101);
        let s = Arc::new(fixtures::sigma(f));
        let lop = Arc::new(opposite(&fixtures::lambda(f)).unwrap());
        let t = tensor_algebra(&s, &lop).unwrap();
        assert_eq!(t.quiver.n_vertices(), 2);
        assert_eq!(t.quiver.arrows.len(), 4);
        assert_eq!(t.relations.len(), 6);
        assert_eq!(t.dim(), 8);
    }
}
