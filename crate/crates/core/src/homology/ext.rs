//! Ext groups as cocycles on a minimal resolution, Yoneda products via
//! chain lifts, rotation maps, and the stable-Hom bridge.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rep::{stable_hom, Hom, HomSpace, Rep, StableHomSpace};

use super::{min_resolution, Resolution};

/// A degree-`n` extension class: a cocycle `P_n -> target` over the stored
/// resolution of the source, considered modulo coboundaries. Canonical
/// coordinates come from the owning [`ExtGroup`].
#[derive(Clone)]
pub struct ExtClass {
    pub degree: usize,
    pub res: Arc<Resolution>,
    pub target: Rep,
    pub cocycle: Hom,
}

/// `Ext^n(source, target)` with a fixed basis of cocycle representatives.
pub struct ExtGroup {
    pub degree: usize,
    pub res: Arc<Resolution>,
    pub target: Rep,
    pub hom_n: HomSpace,
    cocycles: Subspace,
    coboundaries: Subspace,
    /// rows: basis of a complement of the coboundaries inside the cocycles,
    /// in hom-space coordinates
    class_rows: Matrix,
    pub basis: Vec<ExtClass>,
}

/// Compute `Ext^n(x, y)` from scratch.
pub fn ext(x: &Rep, y: &Rep, n: usize) -> Result<ExtGroup> {
    let res = Arc::new(min_resolution(x, n + 1));
    ext_from_resolution(&res, y, n)
}

/// Compute `Ext^n` over an already-built resolution (length >= n+1).
pub fn ext_from_resolution(res: &Arc<Resolution>, y: &Rep, n: usize) -> Result<ExtGroup> {
    assert!(res.length() >= n + 1, "resolution too short for degree {n}");
    let f = y.field();
    let hom_n = HomSpace::new(res.term(n), y)?;
    let hom_next = HomSpace::new(res.term(n + 1), y)?;
    // cocycles: kernel of precomposition with d_{n+1}
    let d_next = res.diff(n + 1);
    let mut delta = Matrix::zeros(f, hom_n.dim(), hom_next.dim());
    for (i, b) in hom_n.basis.iter().enumerate() {
        let img = b.compose(&d_next);
        let c = hom_next.coords(&img);
        for j in 0..hom_next.dim() {
            delta.set(i, j, c.get(0, j));
        }
    }
    let cocycles = Subspace::from_spanning_rows(&delta.transpose().kernel());
    // coboundaries: image of precomposition with d_n
    let coboundaries = if n == 0 {
        Subspace::zero(f, hom_n.dim())
    } else {
        let d_n = res.diff(n);
        let hom_prev = HomSpace::new(res.term(n - 1), y)?;
        let mut rows = Matrix::zeros(f, hom_prev.dim(), hom_n.dim());
        for (i, b) in hom_prev.basis.iter().enumerate() {
            let img = b.compose(&d_n);
            let c = hom_n.coords(&img);
            for j in 0..hom_n.dim() {
                rows.set(i, j, c.get(0, j));
            }
        }
        Subspace::from_spanning_rows(&rows)
    };
    // complement of the coboundaries inside the cocycles, greedily from the
    // canonical cocycle basis
    let mut class_rows = Matrix::zeros(f, 0, hom_n.dim());
    let mut span = coboundaries.clone();
    for r in 0..cocycles.dim() {
        let row = cocycles.basis().select_rows(&[r]);
        if !span.contains_row(&row) {
            span = span.sum(&row.row_space());
            class_rows = class_rows.vstack(&row);
        }
    }
    let basis: Vec<ExtClass> = (0..class_rows.rows())
        .map(|r| ExtClass {
            degree: n,
            res: Arc::clone(res),
            target: y.clone(),
            cocycle: hom_n.from_coords(&class_rows.select_rows(&[r])),
        })
        .collect();
    Ok(ExtGroup { degree: n, res: Arc::clone(res), target: y.clone(), hom_n, cocycles, coboundaries, class_rows, basis })
}

impl ExtGroup {
    pub fn dim(&self) -> usize {
        self.class_rows.rows()
    }

    /// Canonical coordinates of a cocycle modulo coboundaries; panics if
    /// the hom is not a cocycle for this group.
    pub fn coords(&self, cocycle: &Hom) -> Matrix {
        let f = self.target.field();
        let c = self.hom_n.coords(cocycle);
        assert!(self.cocycles.contains_row(&c), "not a cocycle");
        if self.dim() == 0 {
            return Matrix::zeros(f, 1, 0);
        }
        // solve c = cob-part + class-part
        let basis = self.coboundaries.basis().vstack(&self.class_rows);
        let sol = basis.transpose().solve_right(&c.transpose()).expect("cocycle decomposes").particular;
        Matrix::from_fn(f, 1, self.dim(), |_, k| sol.get(self.coboundaries.dim() + k, 0))
    }

    pub fn class_coords(&self, class: &ExtClass) -> Matrix {
        assert_eq!(class.degree, self.degree);
        self.coords(&class.cocycle)
    }

    pub fn class_from_coords(&self, coords: &Matrix) -> ExtClass {
        let f = self.target.field();
        let mut h = Hom::zero(self.res.term(self.degree), &self.target);
        for (k, b) in self.basis.iter().enumerate() {
            let c = coords.get(0, k);
            if !f.is_zero(&c) {
                h = h.add(&b.cocycle.scale(&c));
            }
        }
        ExtClass { degree: self.degree, res: Arc::clone(&self.res), target: self.target.clone(), cocycle: h }
    }

    pub fn zero_class(&self) -> ExtClass {
        ExtClass {
            degree: self.degree,
            res: Arc::clone(&self.res),
            target: self.target.clone(),
            cocycle: Hom::zero(self.res.term(self.degree), &self.target),
        }
    }

    pub fn classes_equal(&self, a: &ExtClass, b: &ExtClass) -> bool {
        self.class_coords(a) == self.class_coords(b)
    }
}

/// Solve `post . h = rhs` for `h` in `Hom(A, B)`, where `post : B -> C`
/// and `rhs : A -> C`. Exists whenever `A` is projective and `rhs` lands
/// in the image of `post` on the relevant degrees; deterministic via the
/// canonical pivoting of the linear solver.
pub fn solve_through(post: &Hom, rhs: &Hom, hom_ab: &HomSpace) -> Hom {
    let f = rhs.source.field();
    let hom_ac = HomSpace::new(&rhs.source, &post.target).expect("hom space");
    let mut cols = Matrix::zeros(f, hom_ac.dim(), hom_ab.dim());
    for (j, b) in hom_ab.basis.iter().enumerate() {
        let c = hom_ac.coords(&post.compose(b));
        for i in 0..hom_ac.dim() {
            cols.set(i, j, c.get(0, i));
        }
    }
    let rhs_coords = hom_ac.coords(rhs).transpose();
    let sol = cols.solve_right(&rhs_coords).expect("lifting problem must be solvable").particular;
    hom_ab.from_coords(&sol.transpose())
}

/// Lift a module map `f : X -> Y` to a chain map between resolutions,
/// degrees `0..=upto`.
pub fn lift_chain_map(f: &Hom, rx: &Resolution, ry: &Resolution, upto: usize) -> Vec<Hom> {
    let mut out: Vec<Hom> = Vec::with_capacity(upto + 1);
    for k in 0..=upto {
        let (post, rhs) = if k == 0 {
            (ry.augmentation().clone(), f.compose(rx.augmentation()))
        } else {
            (ry.diff(k), out[k - 1].compose(&rx.diff(k)))
        };
        let hom_ab = HomSpace::new(rx.term(k), ry.term(k)).expect("hom space");
        out.push(solve_through(&post, &rhs, &hom_ab));
    }
    out
}

/// Lift a cocycle-style map `g : P_start -> B` through the resolution of
/// `B`: returns `g_k : P_{start+k} -> Q_k` with `aug . g_0 = g` and
/// `d_k . g_k = g_{k-1} . d_{start+k}`.
pub fn lift_cocycle_through(g: &Hom, res_a: &Resolution, start: usize, res_b: &Resolution, upto: usize) -> Vec<Hom> {
    let mut out: Vec<Hom> = Vec::with_capacity(upto + 1);
    for k in 0..=upto {
        let (post, rhs) = if k == 0 {
            (res_b.augmentation().clone(), g.clone())
        } else {
            (res_b.diff(k), out[k - 1].compose(&res_a.diff(start + k)))
        };
        let hom_ab = HomSpace::new(res_a.term(start + k), res_b.term(k)).expect("hom space");
        out.push(solve_through(&post, &rhs, &hom_ab));
    }
    out
}

/// Yoneda product `x . y` for `x` in `Ext^m(B, C)` and `y` in
/// `Ext^n(A, B)`: lift the cocycle of `y` to a chain map into the
/// resolution of `B` and compose with the cocycle of `x`.
pub fn yoneda(x: &ExtClass, y: &ExtClass) -> Result<ExtClass> {
    if x.res.module != y.target {
        return Err(Error::NotComposable("source of the left factor differs from the target of the right factor".into()));
    }
    let (m, n) = (x.degree, y.degree);
    assert!(y.res.length() >= n + m + 1, "resolution of the right factor too short for the product degree");
    let lifts = lift_cocycle_through(&y.cocycle, &y.res, n, &x.res, m);
    let cocycle = x.cocycle.compose(&lifts[m]);
    Ok(ExtClass { degree: m + n, res: Arc::clone(&y.res), target: x.target.clone(), cocycle })
}

/// Rotation `Ext^n(U, V) -> Ext^n(syzygy^i U, syzygy^i V)`: splice with the
/// truncation class of the resolution of `V` (its cocycle is the cover
/// `Q_i ->> syzygy(i)`), then reread the degree-(n+i) cocycle over the
/// shifted resolution of `U`.
pub fn rotation(x: &ExtClass, i: usize, res_v: &Resolution) -> Result<ExtClass> {
    let n = x.degree;
    if i >= n {
        return Err(Error::RotationIndex { shift: i, degree: n });
    }
    if i == 0 {
        return Ok(x.clone());
    }
    assert!(x.res.length() >= n + i + 1, "resolution of the source too short for the rotation");
    assert!(res_v.module == x.target, "resolution does not resolve the class target");
    let lifts = lift_cocycle_through(&x.cocycle, &x.res, n, res_v, i);
    let cocycle = res_v.cover(i).compose(&lifts[i]);
    let shifted = Arc::new(x.res.shift(i));
    Ok(ExtClass { degree: n, res: shifted, target: res_v.syzygy(i).clone(), cocycle })
}

/// Conjugate a self-extension class along an isomorphism `w : X -> Y`:
/// `Ext^n(X, X) -> Ext^n(Y, Y)` by lifting `w^{-1}` to a chain map and
/// composing on both sides.
pub fn conjugate_class(class: &ExtClass, w: &Hom, res_y: &Arc<Resolution>) -> ExtClass {
    let n = class.degree;
    let lifts = lift_chain_map(&w.inverse(), res_y, &class.res, n);
    let cocycle = w.compose(&class.cocycle).compose(&lifts[n]);
    ExtClass { degree: n, res: Arc::clone(res_y), target: res_y.module.clone(), cocycle }
}

/// The stable-Hom-to-Ext bridge in degree `n`, defined when
/// `Ext^n(c, A) = 0` for the regular module: sends a stable class
/// `g : K_n -> a` to the cocycle `g . (P_n ->> K_n)`.
pub struct SthomExtBridge {
    pub stable: StableHomSpace,
    pub ext: ExtGroup,
    /// stable basis -> ext coordinates
    pub matrix: Matrix,
}

pub fn sthom_to_ext(c: &Rep, a: &Rep, n: usize) -> Result<SthomExtBridge> {
    assert!(n >= 1);
    let reg = crate::rep::regular_left(&c.algebra);
    let res = Arc::new(min_resolution(c, n + 1));
    let hyp = ext_from_resolution(&res, &reg, n)?;
    if hyp.dim() != 0 {
        return Err(Error::HypothesisFailed(format!("Ext^{n}(C, A) does not vanish on the regular module (dim {})", hyp.dim())));
    }
    let k_n = res.syzygy(n).clone();
    let stable = stable_hom(&k_n, a)?;
    let ext = ext_from_resolution(&res, a, n)?;
    let f = a.field();
    let mut matrix = Matrix::zeros(f, stable.dim(), ext.dim());
    for (r, g) in stable.coset_reps.iter().enumerate() {
        let cocycle = g.compose(res.cover(n));
        let coords = ext.coords(&cocycle);
        for j in 0..ext.dim() {
            matrix.set(r, j, coords.get(0, j));
        }
    }
    Ok(SthomExtBridge { stable, ext, matrix })
}

impl SthomExtBridge {
    pub fn is_bijective(&self) -> bool {
        self.stable.dim() == self.ext.dim() && self.matrix.rank() == self.ext.dim()
    }
}
