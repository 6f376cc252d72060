//! Hochschild cohomology via the enveloping algebra, the independent
//! bar-cochain oracle, the module-structure map into self-extension rings,
//! graded rng slices, syzygy tensor transfers and the truncated finite
//! generation checker.

mod bar;
mod fg;
mod phi;
mod slice;
mod transfer;

use std::sync::Arc;

use crate::algebra::{enveloping, Algebra, ArrowOrigin};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::quiver::Path;
use crate::rep::Rep;

pub use bar::{bar_cochain_oracle, DEFAULT_BAR_BUDGET};
pub use fg::{fg_check, FgReport, FgVerdict};
pub use phi::Phi;
pub use slice::{graded_slice, GradedRngSlice, SliceSource};
pub use transfer::{tensor_transfer_check, TransferCheckReport};

/// The algebra as a module over its enveloping algebra, together with the
/// algebra-basis labels of each vertex component: component `(i, j)` is
/// `e_i A e_j` with columns the normal-form paths from `j` to `i`.
pub fn regular_bimodule_with_columns(alg: &Arc<Algebra>, env: &Arc<Algebra>) -> (Rep, Vec<Vec<usize>>) {
    let f = alg.field;
    let info = env.product.as_ref().expect("enveloping algebra is a tensor algebra");
    let q = &alg.quiver;
    let nv = env.n_vertices();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (b, p) in alg.basis.iter().enumerate() {
        let (i, j) = (p.target(q), p.source);
        columns[info.vertex_of(i, j)].push(b);
    }
    let dims: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    let pos = |v: usize, b: usize| -> usize { columns[v].iter().position(|&x| x == b).expect("basis column") };
    let mut maps = Vec::with_capacity(env.quiver.arrows.len());
    for (ai, arr) in env.quiver.arrows.iter().enumerate() {
        let mut m = Matrix::zeros(f, dims[arr.target], dims[arr.source]);
        match &info.arrow_origin[ai] {
            ArrowOrigin::Left { arrow, .. } => {
                // left multiplication by the arrow
                let ab = alg.basis_index(&Path::arrow(q, *arrow)).expect("arrow basis");
                for (col, &b) in columns[arr.source].iter().enumerate() {
                    for (k, s) in alg.mul_basis(ab, b) {
                        m.set(pos(arr.target, *k), col, s.clone());
                    }
                }
            }
            ArrowOrigin::Right { arrow, .. } => {
                // right multiplication by the arrow of the opposite factor
                // (same index in the original algebra)
                let ab = alg.basis_index(&Path::arrow(q, *arrow)).expect("arrow basis");
                for (col, &b) in columns[arr.source].iter().enumerate() {
                    for (k, s) in alg.mul_basis(b, ab) {
                        m.set(pos(arr.target, *k), col, s.clone());
                    }
                }
            }
        }
        maps.push(m);
    }
    let rep = Rep::new(Arc::clone(env), dims, maps).expect("regular bimodule");
    (rep, columns)
}

pub fn regular_bimodule(alg: &Arc<Algebra>, env: &Arc<Algebra>) -> Rep {
    regular_bimodule_with_columns(alg, env).0
}

/// Dimension of the center, solving `za = az` for all basis elements.
pub fn center_dim(alg: &Algebra) -> usize {
    let f = alg.field;
    let d = alg.dim();
    let mut sys = Matrix::zeros(f, 0, d);
    for k in 0..d {
        let l = alg.left_mult_matrix(k);
        let r = alg.right_mult_matrix(k);
        sys = sys.vstack(&l.sub(&r));
    }
    sys.kernel().rows()
}

/// Hochschild cohomology in one degree, from scratch. For degree sweeps
/// build the resolution once and use [`HochschildRing`].
pub fn hh(alg: &Arc<Algebra>, n: usize) -> Result<crate::homology::ExtGroup> {
    let ring = HochschildRing::new(alg, n)?;
    ring.group(n)
}

/// The Hochschild setup of an algebra: the enveloping algebra, the regular
/// bimodule and its minimal resolution out to a chosen degree.
pub struct HochschildRing {
    pub alg: Arc<Algebra>,
    pub env: Arc<Algebra>,
    pub bimodule: Rep,
    pub columns: Vec<Vec<usize>>,
    pub res: Arc<crate::homology::Resolution>,
    pub upto: usize,
}

impl HochschildRing {
    pub fn new(alg: &Arc<Algebra>, upto: usize) -> Result<HochschildRing> {
        let env = Arc::new(enveloping(alg)?);
        let (bimodule, columns) = regular_bimodule_with_columns(alg, &env);
        let res = Arc::new(crate::homology::min_resolution(&bimodule, upto + 1));
        Ok(HochschildRing { alg: Arc::clone(alg), env, bimodule, columns, res, upto })
    }

    pub fn group(&self, n: usize) -> Result<crate::homology::ExtGroup> {
        crate::homology::ext_from_resolution(&self.res, &self.bimodule, n)
    }

    pub fn dims(&self) -> Result<Vec<usize>> {
        (0..=self.upto).map(|n| Ok(self.group(n)?.dim())).collect()
    }
}

#[cfg(test)]
mod tests;
