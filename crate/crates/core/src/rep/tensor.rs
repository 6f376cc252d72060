//! Tensor products of representations over a middle algebra.
//!
//! `tensor_over(x, y)` computes `x (x)_B y` where `x` carries a right
//! `B`-structure (as a bimodule over `A (x) B^op`, or a plain module over
//! `B^op`) and `y` carries a left `B`-structure. The result is the
//! coequalizer of the two middle actions on the vertexwise tensor product:
//! the generator space at an output vertex is the direct sum over middle
//! vertices `j` of `X_(.,j) (x) Y_(j,.)`, modulo the relations
//! `x.b (x) y - x (x) b.y` for all middle arrows `b`.
//!
//! The returned [`TensorContext`] keeps the projection/section pair for
//! each output vertex so induced maps (`f (x) id`, `id (x) g`) and
//! multiplication-style contractions can be transported through the
//! quotient coordinates.

use std::sync::Arc;

use crate::algebra::{opposite, tensor_algebra, Algebra, ArrowOrigin, ProductInfo};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

use super::{Hom, Rep};

#[derive(Clone, Copy, PartialEq, Debug)]
enum Shape {
    /// bimodule (x) bimodule -> bimodule over `left(x) (x) right(y)`
    BiBi,
    /// bimodule (x) left module -> left module over `left(x)`
    BiMod,
    /// right module (x) bimodule -> module over `right(y)`
    ModBi,
}

/// One direct summand of a generator space: the block
/// `X_(x_vertex) (x) Y_(y_vertex)` sitting over middle vertex `middle`.
#[derive(Clone, Debug)]
pub struct Block {
    pub middle: usize,
    pub x_vertex: usize,
    pub y_vertex: usize,
    pub offset: usize,
    pub x_dim: usize,
    pub y_dim: usize,
}

pub struct TensorContext {
    pub first: Rep,
    pub second: Rep,
    result: Rep,
    shape: Shape,
    blocks: Vec<Vec<Block>>,
    gen_dims: Vec<usize>,
    /// generator space -> quotient coordinates, per output vertex
    proj: Vec<Matrix>,
    /// quotient coordinates -> generator space
    sect: Vec<Matrix>,
}

fn middle_of_first(x: &Rep) -> (Option<ProductInfo>, Arc<Algebra>) {
    match &x.algebra.product {
        Some(info) => (Some(info.clone()), Arc::clone(&info.right)),
        None => (None, Arc::clone(&x.algebra)),
    }
}

fn middle_of_second(y: &Rep) -> (Option<ProductInfo>, Arc<Algebra>) {
    match &y.algebra.product {
        Some(info) => (Some(info.clone()), Arc::clone(&info.left)),
        None => (None, Arc::clone(&y.algebra)),
    }
}

/// `x (x)_B y`. See the module docs for the accepted shapes.
pub fn tensor_over(x: &Rep, y: &Rep) -> Result<TensorContext> {
    let (info_x, x_middle_op) = middle_of_first(x);
    let (info_y, y_middle) = middle_of_second(y);
    // the middle algebra seen from x is B^op, seen from y it is B
    let expected = opposite(&y_middle)?;
    if *x_middle_op != expected {
        return Err(Error::AlgebraMismatch("middle algebras of the tensor factors do not match".into()));
    }
    let b = y_middle;
    let shape = match (&info_x, &info_y) {
        (Some(_), Some(_)) => Shape::BiBi,
        (Some(_), None) => Shape::BiMod,
        (None, Some(_)) => Shape::ModBi,
        (None, None) => {
            return Err(Error::Invalid("tensor of two one-sided modules has no remaining action".into()));
        }
    };
    let f = x.field();

    // output algebra
    let out_alg: Arc<Algebra> = match shape {
        Shape::BiBi => {
            let a = Arc::clone(&info_x.as_ref().unwrap().left);
            let c = Arc::clone(&info_y.as_ref().unwrap().right);
            Arc::new(tensor_algebra(&a, &c)?)
        }
        Shape::BiMod => Arc::clone(&info_x.as_ref().unwrap().left),
        Shape::ModBi => Arc::clone(&info_y.as_ref().unwrap().right),
    };
    let out_n = out_alg.n_vertices();
    let nb = b.n_vertices();

    // outer indices (a, c) of each output vertex; dummy 0 for missing sides
    let outer: Vec<(usize, usize)> = match shape {
        Shape::BiBi => out_alg.product.as_ref().unwrap().vertex_pairs.clone(),
        Shape::BiMod => (0..out_n).map(|a| (a, 0)).collect(),
        Shape::ModBi => (0..out_n).map(|c| (0, c)).collect(),
    };
    let x_vertex = |a: usize, j: usize| -> usize {
        match shape {
            Shape::BiBi | Shape::BiMod => info_x.as_ref().unwrap().vertex_of(a, j),
            Shape::ModBi => j,
        }
    };
    let y_vertex = |j: usize, c: usize| -> usize {
        match shape {
            Shape::BiBi | Shape::ModBi => info_y.as_ref().unwrap().vertex_of(j, c),
            Shape::BiMod => j,
        }
    };
    // right action of middle arrow kb on x, and left action on y
    let x_right_action = |a: usize, kb: usize| -> &Matrix {
        match shape {
            Shape::BiBi | Shape::BiMod => {
                let info = info_x.as_ref().unwrap();
                let idx = info
                    .arrow_origin
                    .iter()
                    .position(|o| matches!(o, ArrowOrigin::Right { left_vertex, arrow } if *left_vertex == a && *arrow == kb))
                    .expect("missing right-action arrow");
                &x.arrow_maps[idx]
            }
            Shape::ModBi => &x.arrow_maps[kb],
        }
    };
    let y_left_action = |kb: usize, c: usize| -> &Matrix {
        match shape {
            Shape::BiBi | Shape::ModBi => {
                let info = info_y.as_ref().unwrap();
                let idx = info
                    .arrow_origin
                    .iter()
                    .position(|o| matches!(o, ArrowOrigin::Left { arrow, right_vertex } if *arrow == kb && *right_vertex == c))
                    .expect("missing left-action arrow");
                &y.arrow_maps[idx]
            }
            Shape::BiMod => &y.arrow_maps[kb],
        }
    };

    // generator spaces and relation subspaces per output vertex
    let mut blocks: Vec<Vec<Block>> = Vec::with_capacity(out_n);
    let mut gen_dims = Vec::with_capacity(out_n);
    for &(a, c) in &outer {
        let mut list = Vec::new();
        let mut off = 0usize;
        for j in 0..nb {
            let xv = x_vertex(a, j);
            let yv = y_vertex(j, c);
            let (dx, dy) = (x.dims[xv], y.dims[yv]);
            list.push(Block { middle: j, x_vertex: xv, y_vertex: yv, offset: off, x_dim: dx, y_dim: dy });
            off += dx * dy;
        }
        blocks.push(list);
        gen_dims.push(off);
    }

    let mut proj = Vec::with_capacity(out_n);
    let mut sect = Vec::with_capacity(out_n);
    let mut dims = Vec::with_capacity(out_n);
    for (v, &(a, c)) in outer.iter().enumerate() {
        let gd = gen_dims[v];
        let mut rows = Matrix::zeros(f, 0, gd);
        for (kb, arr_b) in b.quiver.arrows.iter().enumerate() {
            let (j, j2) = (arr_b.source, arr_b.target);
            let xb = x_right_action(a, kb); // X_(a,j2) -> X_(a,j)
            let yb = y_left_action(kb, c); // Y_(j,c) -> Y_(j2,c)
            let blk_j = &blocks[v][j];
            let blk_j2 = &blocks[v][j2];
            let dy_j = blk_j.y_dim;
            let dy_j2 = blk_j2.y_dim;
            let dx_j2 = blk_j2.x_dim;
            for xi in 0..dx_j2 {
                for yi in 0..dy_j {
                    let mut row = Matrix::zeros(f, 1, gd);
                    // (x.b) (x) y lands in block j
                    for i in 0..blk_j.x_dim {
                        let val = xb.get(i, xi);
                        if !f.is_zero(&val) {
                            let idx = blk_j.offset + i * dy_j + yi;
                            let old = row.get(0, idx);
                            row.set(0, idx, f.add(&old, &val));
                        }
                    }
                    // minus x (x) (b.y) in block j2
                    for l in 0..dy_j2 {
                        let val = yb.get(l, yi);
                        if !f.is_zero(&val) {
                            let idx = blk_j2.offset + xi * dy_j2 + l;
                            let old = row.get(0, idx);
                            row.set(0, idx, f.sub(&old, &val));
                        }
                    }
                    if !row.is_zero() {
                        rows = rows.vstack(&row);
                    }
                }
            }
        }
        let rel = Subspace::from_spanning_rows(&rows);
        let comp = rel.quotient_basis();
        let q = comp.rows();
        dims.push(q);
        if gd == 0 {
            proj.push(Matrix::zeros(f, 0, 0));
            sect.push(Matrix::zeros(f, 0, 0));
            continue;
        }
        let full = rel.basis().vstack(&comp).transpose();
        let inv = full.solve_right(&Matrix::identity(f, gd)).expect("basis completion invertible").particular;
        let keep: Vec<usize> = (rel.dim()..rel.dim() + q).collect();
        proj.push(inv.select_rows(&keep));
        sect.push(comp.transpose());
    }

    // induced arrow maps on the quotient
    let mut maps = Vec::with_capacity(out_alg.quiver.arrows.len());
    for (oi, oarr) in out_alg.quiver.arrows.iter().enumerate() {
        let (sv, tv) = (oarr.source, oarr.target);
        let gen_map = gen_level_arrow(
            shape,
            &blocks[sv],
            &blocks[tv],
            gen_dims[sv],
            gen_dims[tv],
            x,
            y,
            info_x.as_ref(),
            info_y.as_ref(),
            &out_alg,
            oi,
            outer[sv],
            outer[tv],
        );
        maps.push(proj[tv].mul(&gen_map).mul(&sect[sv]));
    }
    let result = Rep::new(Arc::clone(&out_alg), dims, maps)?;
    Ok(TensorContext { first: x.clone(), second: y.clone(), result, shape, blocks, gen_dims, proj, sect })
}

#[allow(clippy::too_many_arguments)]
fn gen_level_arrow(
    shape: Shape,
    src_blocks: &[Block],
    tgt_blocks: &[Block],
    src_dim: usize,
    tgt_dim: usize,
    x: &Rep,
    y: &Rep,
    info_x: Option<&ProductInfo>,
    info_y: Option<&ProductInfo>,
    out_alg: &Algebra,
    out_arrow: usize,
    _src_outer: (usize, usize),
    _tgt_outer: (usize, usize),
) -> Matrix {
    let f = x.field();
    let mut m = Matrix::zeros(f, tgt_dim, src_dim);
    // which side of the output product does the arrow act on?
    enum Act<'m> {
        XSide(Vec<&'m Matrix>), // per middle vertex: map X_(s,j) -> X_(t,j)
        YSide(Vec<&'m Matrix>),
    }
    let nb = src_blocks.len();
    let action = match shape {
        Shape::BiMod => {
            // output algebra is left(x); its arrow ka lifts to (ka x j)
            let info = info_x.unwrap();
            let per: Vec<&Matrix> = (0..nb)
                .map(|j| {
                    let idx = info
                        .arrow_origin
                        .iter()
                        .position(|o| matches!(o, ArrowOrigin::Left { arrow, right_vertex } if *arrow == out_arrow && *right_vertex == j))
                        .expect("missing lifted arrow");
                    &x.arrow_maps[idx]
                })
                .collect();
            Act::XSide(per)
        }
        Shape::ModBi => {
            let info = info_y.unwrap();
            let per: Vec<&Matrix> = (0..nb)
                .map(|j| {
                    let idx = info
                        .arrow_origin
                        .iter()
                        .position(|o| matches!(o, ArrowOrigin::Right { left_vertex, arrow } if *left_vertex == j && *arrow == out_arrow))
                        .expect("missing lifted arrow");
                    &y.arrow_maps[idx]
                })
                .collect();
            Act::YSide(per)
        }
        Shape::BiBi => match &out_alg.product.as_ref().unwrap().arrow_origin[out_arrow] {
            ArrowOrigin::Left { arrow: ka, .. } => {
                let info = info_x.unwrap();
                let per: Vec<&Matrix> = (0..nb)
                    .map(|j| {
                        let idx = info
                            .arrow_origin
                            .iter()
                            .position(|o| matches!(o, ArrowOrigin::Left { arrow, right_vertex } if arrow == ka && *right_vertex == j))
                            .expect("missing lifted arrow");
                        &x.arrow_maps[idx]
                    })
                    .collect();
                Act::XSide(per)
            }
            ArrowOrigin::Right { arrow: kc, .. } => {
                let info = info_y.unwrap();
                let per: Vec<&Matrix> = (0..nb)
                    .map(|j| {
                        let idx = info
                            .arrow_origin
                            .iter()
                            .position(|o| matches!(o, ArrowOrigin::Right { left_vertex, arrow } if *left_vertex == j && arrow == kc))
                            .expect("missing lifted arrow");
                        &y.arrow_maps[idx]
                    })
                    .collect();
                Act::YSide(per)
            }
        },
    };
    for j in 0..nb {
        let (sb, tb) = (&src_blocks[j], &tgt_blocks[j]);
        match &action {
            Act::XSide(per) => {
                let xm = per[j]; // X_(sb.x_vertex) -> X_(tb.x_vertex)
                debug_assert_eq!(sb.y_dim, tb.y_dim);
                for i in 0..tb.x_dim {
                    for k in 0..sb.x_dim {
                        let v = xm.get(i, k);
                        if f.is_zero(&v) {
                            continue;
                        }
                        for yi in 0..sb.y_dim {
                            m.set(tb.offset + i * tb.y_dim + yi, sb.offset + k * sb.y_dim + yi, v.clone());
                        }
                    }
                }
            }
            Act::YSide(per) => {
                let ym = per[j];
                debug_assert_eq!(sb.x_dim, tb.x_dim);
                for l in 0..tb.y_dim {
                    for mm in 0..sb.y_dim {
                        let v = ym.get(l, mm);
                        if f.is_zero(&v) {
                            continue;
                        }
                        for xi in 0..sb.x_dim {
                            m.set(tb.offset + xi * tb.y_dim + l, sb.offset + xi * sb.y_dim + mm, v.clone());
                        }
                    }
                }
            }
        }
    }
    m
}

impl TensorContext {
    pub fn result(&self) -> &Rep {
        &self.result
    }

    pub fn into_result(self) -> Rep {
        self.result
    }

    pub fn blocks(&self, out_vertex: usize) -> &[Block] {
        &self.blocks[out_vertex]
    }

    pub fn section(&self, out_vertex: usize) -> &Matrix {
        &self.sect[out_vertex]
    }

    pub fn projection(&self, out_vertex: usize) -> &Matrix {
        &self.proj[out_vertex]
    }

    pub fn gen_dim(&self, out_vertex: usize) -> usize {
        self.gen_dims[out_vertex]
    }

    /// Transport `f (x) id` through the quotients: `f` maps the first
    /// factor of `self` to the first factor of `other`.
    pub fn map_first(&self, f: &Hom, other: &TensorContext) -> Hom {
        assert_eq!(self.shape, other.shape);
        let field = self.result.field();
        let nv = self.result.dims.len();
        let mut maps = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut gen = Matrix::zeros(field, other.gen_dims[v], self.gen_dims[v]);
            for (sb, tb) in self.blocks[v].iter().zip(other.blocks[v].iter()) {
                debug_assert_eq!(sb.y_dim, tb.y_dim);
                let fm = &f.vertex_maps[sb.x_vertex];
                for i in 0..tb.x_dim {
                    for k in 0..sb.x_dim {
                        let val = fm.get(i, k);
                        if field.is_zero(&val) {
                            continue;
                        }
                        for yi in 0..sb.y_dim {
                            gen.set(tb.offset + i * tb.y_dim + yi, sb.offset + k * sb.y_dim + yi, val.clone());
                        }
                    }
                }
            }
            maps.push(other.proj[v].mul(&gen).mul(&self.sect[v]));
        }
        Hom::new_unchecked(self.result.clone(), other.result.clone(), maps)
    }

    /// Transport `id (x) g` through the quotients.
    pub fn map_second(&self, g: &Hom, other: &TensorContext) -> Hom {
        assert_eq!(self.shape, other.shape);
        let field = self.result.field();
        let nv = self.result.dims.len();
        let mut maps = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut gen = Matrix::zeros(field, other.gen_dims[v], self.gen_dims[v]);
            for (sb, tb) in self.blocks[v].iter().zip(other.blocks[v].iter()) {
                debug_assert_eq!(sb.x_dim, tb.x_dim);
                let gm = &g.vertex_maps[sb.y_vertex];
                for l in 0..tb.y_dim {
                    for mm in 0..sb.y_dim {
                        let val = gm.get(l, mm);
                        if field.is_zero(&val) {
                            continue;
                        }
                        for xi in 0..sb.x_dim {
                            gen.set(tb.offset + xi * tb.y_dim + l, sb.offset + xi * sb.y_dim + mm, val.clone());
                        }
                    }
                }
            }
            maps.push(other.proj[v].mul(&gen).mul(&self.sect[v]));
        }
        Hom::new_unchecked(self.result.clone(), other.result.clone(), maps)
    }
}

/// Canonical associativity isomorphism `(x (x) y) (x) z -> x (x) (y (x) z)`
/// built from the four quotient contexts by reshuffling pure tensors.
pub fn associator(xy: &TensorContext, xy_z: &TensorContext, yz: &TensorContext, x_yz: &TensorContext) -> Hom {
    let f = xy_z.result.field();
    let lhs = xy_z.result();
    let rhs = x_yz.result();
    assert_eq!(lhs.dims.len(), rhs.dims.len(), "associator endpoints live over the same product quiver");
    let nv = lhs.dims.len();
    let mut maps = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut gen = Matrix::zeros(f, x_yz.gen_dims[v], xy_z.gen_dims[v]);
        for b2 in &xy_z.blocks[v] {
            let w = b2.x_vertex; // vertex of (x (x) y)
            let sect_xy = &xy.sect[w];
            for b1 in &xy.blocks[w] {
                // locate the matching blocks on the right-hand side
                let b1r = x_yz.blocks[v]
                    .iter()
                    .find(|b| b.middle == b1.middle)
                    .expect("matching outer block");
                assert_eq!(b1r.x_vertex, b1.x_vertex);
                let y2 = b1r.y_vertex; // vertex of (y (x) z)
                let byz = yz.blocks[y2]
                    .iter()
                    .find(|b| b.middle == b2.middle)
                    .expect("matching inner block");
                assert_eq!(byz.x_vertex, b1.y_vertex);
                assert_eq!(byz.y_vertex, b2.y_vertex);
                let proj_yz = &yz.proj[y2];
                for u in 0..b2.x_dim {
                    for zi in 0..b2.y_dim {
                        let col = b2.offset + u * b2.y_dim + zi;
                        for xi in 0..b1.x_dim {
                            for yi in 0..b1.y_dim {
                                let amp = sect_xy.get(b1.offset + xi * b1.y_dim + yi, u);
                                if f.is_zero(&amp) {
                                    continue;
                                }
                                for wi in 0..b1r.y_dim {
                                    let contraction = proj_yz.get(wi, byz.offset + yi * byz.y_dim + zi);
                                    if f.is_zero(&contraction) {
                                        continue;
                                    }
                                    let row = b1r.offset + xi * b1r.y_dim + wi;
                                    let old = gen.get(row, col);
                                    gen.set(row, col, f.add(&old, &f.mul(&amp, &contraction)));
                                }
                            }
                        }
                    }
                }
            }
        }
        maps.push(x_yz.proj[v].mul(&gen).mul(&xy_z.sect[v]));
    }
    let h = Hom::new(lhs.clone(), rhs.clone(), maps).expect("associator is a module map");
    assert!(h.is_isomorphism(), "associator must be invertible");
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::Field;
    use crate::rep::{restrict, Side};

    fn f() -> Field {
        Field::prime(101)
    }

    #[test]
    fn example_m_tensor_n_has_the_displayed_dimension_vector() {
        let m = fixtures::example7_m(f());
        let n = fixtures::example7_n(f());
        let t = tensor_over(&m, &n).unwrap();
        let r = t.result();
        let q = &r.algebra.quiver;
        let get = |name: &str| r.dims[q.vertex_index(name).unwrap()];
        assert_eq!(get("1x1"), 2);
        assert_eq!(get("1x2"), 0);
        assert_eq!(get("2x1"), 2);
        assert_eq!(get("2x2"), 0);
    }

    #[test]
    fn example_n_tensor_m_is_two_dimensional() {
        let m = fixtures::example7_m(f());
        let n = fixtures::example7_n(f());
        let t = tensor_over(&n, &m).unwrap();
        assert_eq!(t.result().total_dim(), 2);
    }

    #[test]
    fn tensor_with_module_gives_module() {
        // N (x)_Lambda (simple at 1) over Sigma
        let n = fixtures::example7_n(f());
        let lambda = Arc::new(fixtures::lambda(f()));
        let s1 = crate::rep::simple(&lambda, 0);
        let t = tensor_over(&n, &s1).unwrap();
        assert_eq!(t.result().algebra.n_vertices(), 1);
        // N e_1 (x) S_1 = k^2 (x) k modulo a, which acts by zero on S_1 but
        // nontrivially on N: relation (n.a (x) s) identifies the two basis
        // vectors' images; dim = 2 - 1 = 1
        assert_eq!(t.result().total_dim(), 1);
    }

    #[test]
    fn associator_exists_for_the_example_triple() {
        let m = fixtures::example7_m(f());
        let n = fixtures::example7_n(f());
        let mn = tensor_over(&m, &n).unwrap();
        let mn_m = tensor_over(mn.result(), &m).unwrap();
        let nm = tensor_over(&n, &m).unwrap();
        let m_nm = tensor_over(&m, nm.result()).unwrap();
        // construction asserts invertibility and the module-map property
        let a = associator(&mn, &mn_m, &nm, &m_nm);
        assert_eq!(a.source.total_dim(), a.target.total_dim());
    }

    #[test]
    fn regular_bimodule_is_a_left_unit_up_to_dimension() {
        let s = Arc::new(fixtures::sigma(f()));
        let env = Arc::new(crate::algebra::enveloping(&s).unwrap());
        let reg = crate::hochschild::regular_bimodule(&s, &env);
        let y = crate::rep::regular_left(&s);
        let t = tensor_over(&reg, &y).unwrap();
        assert_eq!(t.result().total_dim(), y.total_dim());
        // right restriction of the regular bimodule is the regular module
        let rr = restrict(&reg, Side::Right).unwrap();
        assert_eq!(rr.total_dim(), 2);
    }
}
