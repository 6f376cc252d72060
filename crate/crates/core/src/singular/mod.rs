//! Verification of singular equivalences of Morita type (with level):
//! the four defining conditions, level lifting and bumping, transfer of
//! extension classes along the tensor functors, and the degreewise
//! isomorphism checks between extension groups and Hochschild cohomology
//! of the two algebras.

mod diagram;

use std::sync::Arc;

use crate::algebra::{enveloping, opposite, tensor_algebra, Algebra};
use crate::error::{Error, Result};
use crate::hochschild::regular_bimodule;
use crate::homology::{
    ext_from_resolution, gorenstein_report, min_resolution, syzygy, transport_class, ExtClass, FunctorSide,
    GorensteinReport, Resolution, TensorResolution,
};
use crate::linalg::Matrix;
use crate::rep::{
    is_isomorphic, is_projective, restrict, split_off_summand, strip_projectives, tensor_over, Hom, Rep, Side,
    TensorContext,
};
use crate::rng::SearchOpts;

pub use diagram::{verify_fg_diagram, verify_hh_transfer, FgDiagramReport, HhTransferReport};

/// Bimodule data for a singular equivalence of Morita type with level:
/// `m` over `lambda (x) sigma^op`, `n` over `sigma (x) lambda^op`.
#[derive(Clone)]
pub struct EquivalenceData {
    pub lambda: Arc<Algebra>,
    pub sigma: Arc<Algebra>,
    pub m: Rep,
    pub n: Rep,
    pub level: usize,
}

impl EquivalenceData {
    pub fn new(lambda: Arc<Algebra>, sigma: Arc<Algebra>, m: Rep, n: Rep, level: usize) -> Result<EquivalenceData> {
        let lam_sig = tensor_algebra(&lambda, &Arc::new(opposite(&sigma)?))?;
        let sig_lam = tensor_algebra(&sigma, &Arc::new(opposite(&lambda)?))?;
        if *m.algebra != lam_sig {
            return Err(Error::AlgebraMismatch("m is not a module over lambda (x) sigma^op".into()));
        }
        if *n.algebra != sig_lam {
            return Err(Error::AlgebraMismatch("n is not a module over sigma (x) lambda^op".into()));
        }
        Ok(EquivalenceData { lambda, sigma, m, n, level })
    }
}

#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug)]
pub struct LevelCheckReport {
    pub level: usize,
    pub conditions: Vec<ConditionReport>,
    pub pass: bool,
    /// dimension vector of `m (x) n` and of the stripped comparison pair
    pub mn_dims: Vec<usize>,
    pub nm_dims: Vec<usize>,
}

fn projectivity_condition(x: &Rep, name: &str) -> Result<ConditionReport> {
    let left = restrict(x, Side::Left)?;
    let right = restrict(x, Side::Right)?;
    let left_ok = is_projective(&left);
    let right_ok = is_projective(&right);
    Ok(ConditionReport {
        ok: left_ok && right_ok,
        detail: format!(
            "{name}: left restriction dim {} {}, right restriction dim {} {}",
            left.total_dim(),
            if left_ok { "projective" } else { "not projective" },
            right.total_dim(),
            if right_ok { "projective" } else { "not projective" },
        ),
    })
}

fn stable_syzygy_condition(
    product: &Rep,
    alg: &Arc<Algebra>,
    level: usize,
    name: &str,
    opts: &SearchOpts,
) -> Result<(ConditionReport, Option<Hom>)> {
    let env = Arc::new(enveloping(alg)?);
    let reg = regular_bimodule(alg, &env);
    let omega = syzygy(&reg, level);
    let stripped_prod = strip_projectives(product, opts)?;
    let stripped_omega = strip_projectives(&omega, opts)?;
    let witness = is_isomorphic(&stripped_prod, &stripped_omega, opts)?;
    let ok = witness.is_some();
    Ok((
        ConditionReport {
            ok,
            detail: format!(
                "{name}: stripped product dims {:?}, stripped syzygy dims {:?}, {}",
                stripped_prod.dims,
                stripped_omega.dims,
                if ok { "isomorphic" } else { "not isomorphic" }
            ),
        },
        witness,
    ))
}

/// Check all four conditions of a singular equivalence of Morita type with
/// level.
pub fn check_level_equivalence(data: &EquivalenceData, opts: &SearchOpts) -> Result<LevelCheckReport> {
    let c1 = projectivity_condition(&data.m, "condition 1 (m one-sided projective)")?;
    let c2 = projectivity_condition(&data.n, "condition 2 (n one-sided projective)")?;
    let mn = tensor_over(&data.m, &data.n)?;
    let nm = tensor_over(&data.n, &data.m)?;
    let (c3, _) = stable_syzygy_condition(mn.result(), &data.lambda, data.level, "condition 3 (m (x) n)", opts)?;
    let (c4, _) = stable_syzygy_condition(nm.result(), &data.sigma, data.level, "condition 4 (n (x) m)", opts)?;
    let pass = c1.ok && c2.ok && c3.ok && c4.ok;
    Ok(LevelCheckReport {
        level: data.level,
        conditions: vec![c1, c2, c3, c4],
        pass,
        mn_dims: mn.result().dims.clone(),
        nm_dims: nm.result().dims.clone(),
    })
}

#[derive(Debug)]
pub struct MoritaTypeReport {
    pub conditions: Vec<ConditionReport>,
    pub pass: bool,
    pub pd_x: Option<usize>,
    pub pd_y: Option<usize>,
}

/// Check the four conditions of a singular equivalence of Morita type:
/// one-sided projectivity, `m (x) n = lambda (+) x` with `pd x` finite,
/// and symmetrically for `y`.
pub fn check_morita_type(
    lambda: &Arc<Algebra>,
    sigma: &Arc<Algebra>,
    m: &Rep,
    n: &Rep,
    x: &Rep,
    y: &Rep,
    pd_cap: usize,
    opts: &SearchOpts,
) -> Result<MoritaTypeReport> {
    let data = EquivalenceData::new(Arc::clone(lambda), Arc::clone(sigma), m.clone(), n.clone(), 0)?;
    let c1 = projectivity_condition(&data.m, "condition 1 (m one-sided projective)")?;
    let c2 = projectivity_condition(&data.n, "condition 2 (n one-sided projective)")?;

    let split_condition = |product: &Rep, alg: &Arc<Algebra>, complement: &Rep, name: &str| -> Result<(ConditionReport, Option<usize>)> {
        let env = Arc::new(enveloping(alg)?);
        let reg = regular_bimodule(alg, &env);
        let comp = split_off_summand(product, &reg, opts)?;
        let Some(comp) = comp else {
            return Ok((
                ConditionReport { ok: false, detail: format!("{name}: no split copy of the regular bimodule") },
                None,
            ));
        };
        if is_isomorphic(&comp, complement, opts)?.is_none() {
            return Ok((
                ConditionReport {
                    ok: false,
                    detail: format!("{name}: complement dims {:?} differ from the supplied module", comp.dims),
                },
                None,
            ));
        }
        let res = min_resolution(complement, pd_cap + 1);
        match res.pd() {
            Some(p) => Ok((
                ConditionReport { ok: true, detail: format!("{name}: splits with complement of projective dimension {p}") },
                Some(p),
            )),
            None => Err(Error::PdBoundExceeded(pd_cap)),
        }
    };

    let mn = tensor_over(m, n)?;
    let nm = tensor_over(n, m)?;
    let (c3, pd_x) = split_condition(mn.result(), lambda, x, "condition 3 (m (x) n = lambda (+) x)")?;
    let (c4, pd_y) = split_condition(nm.result(), sigma, y, "condition 4 (n (x) m = sigma (+) y)")?;
    let pass = c1.ok && c2.ok && c3.ok && c4.ok;
    Ok(MoritaTypeReport { conditions: vec![c1, c2, c3, c4], pass, pd_x, pd_y })
}

/// Lift Morita-type data to Morita type with level
/// `l = max(pd x, pd y)`, replacing `m` by its l-th bimodule syzygy.
pub fn lift_to_level(
    lambda: &Arc<Algebra>,
    sigma: &Arc<Algebra>,
    m: &Rep,
    n: &Rep,
    x: &Rep,
    y: &Rep,
    pd_cap: usize,
    opts: &SearchOpts,
) -> Result<EquivalenceData> {
    let report = check_morita_type(lambda, sigma, m, n, x, y, pd_cap, opts)?;
    if !report.pass {
        return Err(Error::HypothesisFailed("Morita-type conditions fail; nothing to lift".into()));
    }
    let level = report.pd_x.unwrap_or(0).max(report.pd_y.unwrap_or(0));
    let m_shifted = syzygy(m, level);
    EquivalenceData::new(Arc::clone(lambda), Arc::clone(sigma), m_shifted, n.clone(), level)
}

/// Replace `m` by its first bimodule syzygy, raising the level by one.
pub fn increase_level(data: &EquivalenceData) -> Result<EquivalenceData> {
    let m_shifted = syzygy(&data.m, 1);
    EquivalenceData::new(
        Arc::clone(&data.lambda),
        Arc::clone(&data.sigma),
        m_shifted,
        data.n.clone(),
        data.level + 1,
    )
}

/// Transfer of extension classes along `n (x)_lambda -`: from
/// `Ext^k(a, b)` over `lambda` to `Ext^k(n (x) a, n (x) b)` over `sigma`.
pub struct ExtTransfer {
    pub source_res: Arc<Resolution>,
    pub target_res: Arc<Resolution>,
    tres: TensorResolution,
    target_ctx: TensorContext,
    pub na: Rep,
    pub nb: Rep,
}

impl ExtTransfer {
    /// `bimod` must carry the right structure over the algebra of `a`.
    pub fn new(bimod: &Rep, a: &Rep, b: &Rep, upto: usize) -> Result<ExtTransfer> {
        let source_res = Arc::new(min_resolution(a, upto + 1));
        let tres = TensorResolution::new(bimod, FunctorSide::FixedLeft, &source_res, upto + 1)?;
        let target_ctx = tensor_over(bimod, b)?;
        let target_res = Arc::new(min_resolution(tres.result_module(), upto + 1));
        let na = tres.result_module().clone();
        let nb = target_ctx.result().clone();
        Ok(ExtTransfer { source_res, target_res, tres, target_ctx, na, nb })
    }

    pub fn apply(&self, class: &ExtClass) -> Result<ExtClass> {
        transport_class(&self.tres, &self.target_res, &self.target_ctx, class)
    }

    /// Matrix of the transfer in degree `k` and the two dimensions.
    pub fn matrix(&self, b: &Rep, k: usize) -> Result<(usize, usize, Matrix)> {
        let src = ext_from_resolution(&self.source_res, b, k)?;
        let tgt = ext_from_resolution(&self.target_res, &self.nb, k)?;
        let f = b.field();
        let mut m = Matrix::zeros(f, src.dim(), tgt.dim());
        for (i, cls) in src.basis.iter().enumerate() {
            let img = self.apply(cls)?;
            let c = tgt.class_coords(&img);
            for j in 0..tgt.dim() {
                m.set(i, j, c.get(0, j));
            }
        }
        Ok((src.dim(), tgt.dim(), m))
    }
}

#[derive(Debug)]
pub struct ExtIsoRow {
    pub degree: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    pub bijective: bool,
    pub in_window: bool,
}

#[derive(Debug)]
pub struct ExtIsoReport {
    pub d: usize,
    pub rows: Vec<ExtIsoRow>,
    pub pass: bool,
}

/// Degreewise bijectivity of the transfer `Ext^k(a, b) ->
/// Ext^k(n (x) a, n (x) b)` for `d < k <= cap`, with `d` the larger of the
/// two one-sided injective dimensions. Lower degrees are reported
/// informationally.
pub fn verify_ext_transfer(data: &EquivalenceData, a: &Rep, b: &Rep, cap: usize, bound: usize) -> Result<ExtIsoReport> {
    let gl = gorenstein_report(&data.lambda, bound)?;
    let gs = gorenstein_report(&data.sigma, bound)?;
    let d = require_gorenstein(&gl)?.max(require_gorenstein(&gs)?);
    let transfer = ExtTransfer::new(&data.n, a, b, cap)?;
    let mut rows = Vec::new();
    let mut pass = true;
    for k in 1..=cap {
        let (ds, dt, mat) = transfer.matrix(b, k)?;
        let bij = ds == dt && mat.rank() == ds;
        let in_window = k > d;
        if in_window && !bij {
            pass = false;
        }
        rows.push(ExtIsoRow { degree: k, dim_source: ds, dim_target: dt, bijective: bij, in_window });
    }
    Ok(ExtIsoReport { d, rows, pass })
}

pub(crate) fn require_gorenstein(report: &GorensteinReport) -> Result<usize> {
    report
        .dimension()
        .ok_or_else(|| Error::NoGorensteinCertificate(report.verdict.to_string()))
}

#[cfg(test)]
mod tests;
