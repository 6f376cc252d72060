//! Minimal projective resolutions, syzygies, Ext groups, Yoneda products,
//! rotation maps, injective/Gorenstein dimension and maximal
//! Cohen-Macaulay detection.

mod ext;
mod transport;

use std::sync::Arc;

use crate::algebra::{opposite, Algebra};
use crate::error::{Error, Result};
use crate::rep::{self, Hom, Rep};
use crate::rng::SearchOpts;

pub use ext::{
    conjugate_class, ext, ext_from_resolution, lift_chain_map, lift_cocycle_through, rotation, solve_through,
    sthom_to_ext, yoneda, ExtClass, ExtGroup, SthomExtBridge,
};
pub use transport::{transport_class, FunctorSide, TensorResolution};

/// A minimal projective resolution, built cover by cover.
///
/// `covers[i] : P_i ->> syzygy(i)` is the projective cover epi (with
/// `covers[0]` the augmentation onto the module) and `kernels[i]` holds
/// `syzygy(i+1)` with its inclusion into `P_i`. Once a syzygy vanishes the
/// resolution is padded with zero terms and the projective dimension is
/// recorded.
pub struct Resolution {
    pub module: Rep,
    terms: Vec<Rep>,
    covers: Vec<Hom>,
    kernels: Vec<(Rep, Hom)>,
    pd: Option<usize>,
}

/// Build the minimal resolution of `x` out to homological degree `n`
/// (terms `P_0..P_n` all computed).
pub fn min_resolution(x: &Rep, n: usize) -> Resolution {
    let mut terms = Vec::with_capacity(n + 1);
    let mut covers = Vec::with_capacity(n + 1);
    let mut kernels = Vec::with_capacity(n + 1);
    let mut pd = None;
    let mut cur = x.clone();
    for i in 0..=n {
        let (p, epi) = rep::projective_cover(&cur);
        if pd.is_none() && cur.is_zero() && i > 0 {
            pd = Some(i - 1);
        }
        let (k, incl) = rep::kernel(&epi);
        terms.push(p);
        covers.push(epi);
        kernels.push((k.clone(), incl));
        cur = k;
    }
    if pd.is_none() && cur.is_zero() {
        // the kernel after P_n vanished: pd = n exactly when P_n != 0
        pd = Some(terms.iter().rposition(|t| !t.is_zero()).map_or(0, |p| p));
    }
    if x.is_zero() {
        pd = Some(0);
    }
    Resolution { module: x.clone(), terms, covers, kernels, pd }
}

impl Resolution {
    /// Assemble a resolution from explicit data. The caller is responsible
    /// for exactness; used to realize non-minimal resolutions (tensored
    /// ones, padded ones) as first-class values.
    pub(crate) fn from_parts(module: Rep, terms: Vec<Rep>, covers: Vec<Hom>, kernels: Vec<(Rep, Hom)>, pd: Option<usize>) -> Resolution {
        assert_eq!(terms.len(), covers.len());
        assert_eq!(terms.len(), kernels.len());
        Resolution { module, terms, covers, kernels, pd }
    }

    /// Number of computed terms minus one (the largest valid degree).
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, i: usize) -> &Rep {
        &self.terms[i]
    }

    /// The cover epi `P_i ->> syzygy(i)`; for `i = 0` the augmentation.
    pub fn cover(&self, i: usize) -> &Hom {
        &self.covers[i]
    }

    pub fn augmentation(&self) -> &Hom {
        &self.covers[0]
    }

    /// Differential `d_i : P_i -> P_{i-1}`, for `1 <= i <= length`.
    pub fn diff(&self, i: usize) -> Hom {
        assert!(i >= 1 && i <= self.length());
        self.kernels[i - 1].1.compose(&self.covers[i])
    }

    /// The `i`-th syzygy; `syzygy(0)` is the module itself.
    pub fn syzygy(&self, i: usize) -> &Rep {
        if i == 0 {
            &self.module
        } else {
            &self.kernels[i - 1].0
        }
    }

    /// Inclusion `syzygy(i) -> P_{i-1}`, for `i >= 1`.
    pub fn syzygy_inclusion(&self, i: usize) -> &Hom {
        assert!(i >= 1);
        &self.kernels[i - 1].1
    }

    /// Projective dimension when the resolution terminated within the
    /// computed range.
    pub fn pd(&self) -> Option<usize> {
        self.pd
    }

    /// The resolution of the `i`-th syzygy obtained by shifting: terms and
    /// covers are shared, the `i`-th cover becomes the augmentation. For a
    /// minimal resolution the shift is again minimal.
    pub fn shift(&self, i: usize) -> Resolution {
        assert!(i <= self.length(), "shift beyond computed length");
        Resolution {
            module: self.syzygy(i).clone(),
            terms: self.terms[i..].to_vec(),
            covers: self.covers[i..].to_vec(),
            kernels: self.kernels[i..].to_vec(),
            pd: self.pd.map(|p| p.saturating_sub(i)),
        }
    }
}

/// The `i`-th syzygy of a module along its minimal resolution.
pub fn syzygy(x: &Rep, i: usize) -> Rep {
    if i == 0 {
        return x.clone();
    }
    min_resolution(x, i).syzygy(i).clone()
}

/// Outcome of a bounded injective-dimension computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdResult {
    Finite(usize),
    ExceedsBound(usize),
}

impl IdResult {
    pub fn finite(&self) -> Option<usize> {
        match self {
            IdResult::Finite(d) => Some(*d),
            IdResult::ExceedsBound(_) => None,
        }
    }
}

impl std::fmt::Display for IdResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdResult::Finite(d) => write!(f, "{d}"),
            IdResult::ExceedsBound(b) => write!(f, "exceeds {b}"),
        }
    }
}

/// Injective dimension via duality: `id(x) = pd of the dual module over
/// the opposite algebra`, exact for finite-dimensional algebras.
pub fn injective_dimension(x: &Rep, bound: usize) -> Result<IdResult> {
    let op = Arc::new(opposite(&x.algebra)?);
    let d = rep::dual(x, &op);
    let res = min_resolution(&d, bound + 1);
    match res.pd() {
        Some(p) if p <= bound => Ok(IdResult::Finite(p)),
        _ => Ok(IdResult::ExceedsBound(bound)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GorensteinVerdict {
    Yes(usize),
    NoEvidence(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct GorensteinReport {
    pub left_id: IdResult,
    pub right_id: IdResult,
    pub verdict: GorensteinVerdict,
}

impl GorensteinReport {
    pub fn dimension(&self) -> Option<usize> {
        match self.verdict {
            GorensteinVerdict::Yes(d) => Some(d),
            GorensteinVerdict::NoEvidence(_) => None,
        }
    }
}

impl std::fmt::Display for GorensteinVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GorensteinVerdict::Yes(d) => write!(f, "yes({d})"),
            GorensteinVerdict::NoEvidence(b) => write!(f, "no_evidence({b})"),
        }
    }
}

/// Bounded two-sided injective dimension check. `yes(d)` requires both
/// one-sided injective dimensions to terminate within the bound; an
/// unfinished resolution is reported as `no_evidence`, never as a proof of
/// infinitude.
pub fn gorenstein_report(alg: &Arc<Algebra>, bound: usize) -> Result<GorensteinReport> {
    let op = Arc::new(opposite(alg)?);
    // id of the left regular module: pd over the opposite of its dual
    let left_id = {
        let reg = rep::regular_left(alg);
        let d = rep::dual(&reg, &op);
        match min_resolution(&d, bound + 1).pd() {
            Some(p) if p <= bound => IdResult::Finite(p),
            _ => IdResult::ExceedsBound(bound),
        }
    };
    let right_id = {
        let reg = rep::regular_left(&op);
        let d = rep::dual(&reg, alg);
        match min_resolution(&d, bound + 1).pd() {
            Some(p) if p <= bound => IdResult::Finite(p),
            _ => IdResult::ExceedsBound(bound),
        }
    };
    let verdict = match (left_id, right_id) {
        (IdResult::Finite(l), IdResult::Finite(r)) if l == r => GorensteinVerdict::Yes(l),
        _ => GorensteinVerdict::NoEvidence(bound),
    };
    Ok(GorensteinReport { left_id, right_id, verdict })
}

/// Maximal Cohen-Macaulay test over a Gorenstein algebra with certificate
/// `d`: Ext^i(c, A) must vanish on the window `1..=max(2d, 1)` (the upper
/// half is a conservative guard; a d-th-syzygy criterion makes the lower
/// half sufficient).
pub fn is_mcm(c: &Rep, report: &GorensteinReport, window_override: Option<usize>) -> Result<bool> {
    let d = report
        .dimension()
        .ok_or_else(|| Error::NoGorensteinCertificate(report.verdict.to_string()))?;
    let upper = window_override.unwrap_or_else(|| (2 * d).max(1));
    let reg = rep::regular_left(&c.algebra);
    let res = Arc::new(min_resolution(c, upper + 1));
    for i in 1..=upper {
        if ext::ext_from_resolution(&res, &reg, i)?.dim() != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience wrapper for tests: strip-then-compare stable isomorphism.
pub fn stably_isomorphic(x: &Rep, y: &Rep, opts: &SearchOpts) -> Result<bool> {
    let sx = rep::strip_projectives(x, opts)?;
    let sy = rep::strip_projectives(y, opts)?;
    Ok(rep::is_isomorphic(&sx, &sy, opts)?.is_some())
}

#[cfg(test)]
mod tests;
