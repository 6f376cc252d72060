//! Transport of extension classes along exact tensor functors.
//!
//! For a bimodule `F` that is projective on the appropriate sides, the
//! functor `F (x)_B -` (or `- (x)_B F`) is exact and preserves
//! projectives, so applying it to a projective resolution yields a
//! (generally non-minimal) projective resolution of the image module. A
//! class is transported by applying the functor to its cocycle and then
//! comparing the image resolution with the minimal resolution of the image
//! module via a chain lift.

use std::sync::Arc;

use crate::error::Result;
use crate::rep::{tensor_over, Hom, HomSpace, Rep, TensorContext};

use super::ext::{solve_through, ExtClass};
use super::Resolution;

/// Which slot of `tensor_over` the fixed bimodule occupies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FunctorSide {
    /// `F(y) = fixed (x)_B y`
    FixedLeft,
    /// `F(x) = x (x)_B fixed`
    FixedRight,
}

/// The image of a resolution under an exact tensor functor.
pub struct TensorResolution {
    pub side: FunctorSide,
    pub fixed: Rep,
    pub base: Arc<Resolution>,
    /// context of `F(module)`
    pub module_ctx: TensorContext,
    /// contexts of `F(P_k)`
    pub term_ctxs: Vec<TensorContext>,
    /// `F(d_k) : F(P_k) -> F(P_{k-1})`
    pub diffs: Vec<Hom>,
    /// `F(aug) : F(P_0) -> F(module)`
    pub aug: Hom,
}

impl TensorResolution {
    pub fn new(fixed: &Rep, side: FunctorSide, base: &Arc<Resolution>, upto: usize) -> Result<TensorResolution> {
        assert!(base.length() >= upto);
        let apply = |y: &Rep| -> Result<TensorContext> {
            match side {
                FunctorSide::FixedLeft => tensor_over(fixed, y),
                FunctorSide::FixedRight => tensor_over(y, fixed),
            }
        };
        let module_ctx = apply(&base.module)?;
        let mut term_ctxs = Vec::with_capacity(upto + 1);
        for k in 0..=upto {
            term_ctxs.push(apply(base.term(k))?);
        }
        let map = |src: &TensorContext, h: &Hom, dst: &TensorContext| -> Hom {
            match side {
                FunctorSide::FixedLeft => src.map_second(h, dst),
                FunctorSide::FixedRight => src.map_first(h, dst),
            }
        };
        let aug = map(&term_ctxs[0], base.augmentation(), &module_ctx);
        let mut diffs = Vec::with_capacity(upto);
        for k in 1..=upto {
            diffs.push(map(&term_ctxs[k], &base.diff(k), &term_ctxs[k - 1]));
        }
        Ok(TensorResolution { side, fixed: fixed.clone(), base: Arc::clone(base), module_ctx, term_ctxs, diffs, aug })
    }

    pub fn result_module(&self) -> &Rep {
        self.module_ctx.result()
    }

    pub fn term(&self, k: usize) -> &Rep {
        self.term_ctxs[k].result()
    }

    /// `F(d_k)` for `k >= 1`.
    pub fn diff(&self, k: usize) -> &Hom {
        &self.diffs[k - 1]
    }

    /// Apply the functor to a map into an arbitrary target, given the
    /// target's context.
    pub fn apply_to_map(&self, src_ctx: &TensorContext, h: &Hom, dst_ctx: &TensorContext) -> Hom {
        match self.side {
            FunctorSide::FixedLeft => src_ctx.map_second(h, dst_ctx),
            FunctorSide::FixedRight => src_ctx.map_first(h, dst_ctx),
        }
    }

    /// Chain comparison: lift the identity of `F(module)` to maps
    /// `target_res.term(k) -> F(P_k)`. `target_res` must resolve exactly
    /// the rep produced by `module_ctx`.
    pub fn compare_from(&self, target_res: &Resolution, upto: usize) -> Vec<Hom> {
        assert!(target_res.module == *self.result_module(), "resolution does not resolve the functor image");
        let mut out: Vec<Hom> = Vec::with_capacity(upto + 1);
        for k in 0..=upto {
            let (post, rhs) = if k == 0 {
                (self.aug.clone(), target_res.augmentation().clone())
            } else {
                (self.diff(k).clone(), out[k - 1].compose(&target_res.diff(k)))
            };
            let hom_ab = HomSpace::new(target_res.term(k), self.term(k)).expect("hom space");
            out.push(solve_through(&post, &rhs, &hom_ab));
        }
        out
    }
}

/// Transport an extension class along the functor: apply it to the cocycle
/// and pull back along the chain comparison with the minimal resolution of
/// the image. `target_res` must resolve `F(source)` as produced by the
/// functor, and `target_ctx` must be the context of `F(class.target)`.
pub fn transport_class(
    tres: &TensorResolution,
    target_res: &Arc<Resolution>,
    target_ctx: &TensorContext,
    class: &ExtClass,
) -> Result<ExtClass> {
    let n = class.degree;
    let f_cocycle = tres.apply_to_map(&tres.term_ctxs[n], &class.cocycle, target_ctx);
    let cmp = tres.compare_from(target_res, n);
    let cocycle = f_cocycle.compose(&cmp[n]);
    Ok(ExtClass { degree: n, res: Arc::clone(target_res), target: target_ctx.result().clone(), cocycle })
}
