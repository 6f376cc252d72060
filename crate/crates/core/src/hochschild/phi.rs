//! The module-structure map from Hochschild cohomology into self-extension
//! rings: tensor a bimodule extension with a module and compare against
//! the module's own minimal resolution.

use std::sync::Arc;

use crate::algebra::{Algebra, ArrowOrigin};
use crate::error::Result;
use crate::homology::{conjugate_class, min_resolution, transport_class, ExtClass, FunctorSide, Resolution, TensorResolution};
use crate::linalg::Matrix;
use crate::quiver::Path;
use crate::rep::{Block, Hom, Rep, TensorContext};

use super::HochschildRing;

/// Contraction `reg (x)_A y -> y`, where `reg` is the regular bimodule of
/// `alg` with its path-basis column labels: a generator `p (x) v` maps to
/// the action of the path `p` on `v`. Works for `y` a left module (plain
/// path action) or a bimodule (the path acts through its lift at the
/// block's right vertex).
pub fn left_unitor(ctx: &TensorContext, columns: &[Vec<usize>], alg: &Algebra) -> Hom {
    let y = ctx.second.clone();
    let f = y.field();
    let out = ctx.result();
    let nv = out.dims.len();
    let mut maps = Vec::with_capacity(nv);
    for v in 0..nv {
        let rows = y.dims[v];
        let mut gen = Matrix::zeros(f, rows, ctx.gen_dim(v));
        for b in ctx.blocks(v) {
            for (pi, &pb) in columns[b.x_vertex].iter().enumerate() {
                let path = &alg.basis[pb];
                let act = action_on(&y, path, b);
                debug_assert_eq!(act.cols(), b.y_dim);
                debug_assert_eq!(act.rows(), rows);
                for xi in 0..b.y_dim {
                    for r in 0..rows {
                        let val = act.get(r, xi);
                        if !f.is_zero(&val) {
                            let col = b.offset + pi * b.y_dim + xi;
                            let old = gen.get(r, col);
                            gen.set(r, col, f.add(&old, &val));
                        }
                    }
                }
            }
        }
        maps.push(gen.mul(ctx.section(v)));
    }
    let h = Hom::new(out.clone(), y, maps).expect("unitor is a module map");
    assert!(h.is_isomorphism(), "unitor must be invertible");
    h
}

/// Action of a base-algebra path on `y` out of a block's y-component: for
/// a left module the plain path action, for a bimodule the action of the
/// path lifted along the left factor at the block's right vertex.
fn action_on(y: &Rep, path: &Path, block: &Block) -> Matrix {
    match &y.algebra.product {
        None => {
            debug_assert_eq!(block.y_vertex, path.source);
            y.act_path(path)
        }
        Some(info) => {
            let (_, c) = info.vertex_pairs[block.y_vertex];
            let word: Vec<usize> = path
                .word
                .iter()
                .map(|&a| {
                    info.arrow_origin
                        .iter()
                        .position(|o| matches!(o, ArrowOrigin::Left { arrow, right_vertex } if *arrow == a && *right_vertex == c))
                        .expect("lifted arrow")
                })
                .collect();
            let lifted = Path { source: block.y_vertex, word };
            y.act_path(&lifted)
        }
    }
}

/// The graded ring map from Hochschild cohomology to the self-extension
/// ring of a module: tensor the bimodule resolution with the module,
/// transport the cocycle, and compare with the module's own resolution.
pub struct Phi {
    pub module: Rep,
    pub module_res: Arc<Resolution>,
    tres: TensorResolution,
    t_res: Arc<Resolution>,
    mu: Hom,
}

impl Phi {
    pub fn new(ring: &HochschildRing, x: &Rep, upto: usize) -> Result<Phi> {
        assert!(ring.res.length() >= upto + 1, "Hochschild resolution too short");
        let tres = TensorResolution::new(x, FunctorSide::FixedRight, &ring.res, upto + 1)?;
        let t_res = Arc::new(min_resolution(tres.result_module(), upto + 1));
        let mu0 = left_unitor(&tres.module_ctx, &ring.columns, &ring.alg);
        // retarget onto the literal module value
        let mu = Hom::new_unchecked(mu0.source.clone(), x.clone(), mu0.vertex_maps.clone());
        let module_res = Arc::new(min_resolution(x, upto + 1));
        Ok(Phi { module: x.clone(), module_res, tres, t_res, mu })
    }

    /// Apply to a Hochschild class (a class over the bimodule resolution
    /// with the regular bimodule as target).
    pub fn apply(&self, class: &ExtClass) -> Result<ExtClass> {
        let transported = transport_class(&self.tres, &self.t_res, &self.tres.module_ctx, class)?;
        Ok(conjugate_class(&transported, &self.mu, &self.module_res))
    }
}
