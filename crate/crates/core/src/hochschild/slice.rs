//! Graded rng slices: dimensions and full multiplication tables of a
//! self-extension ring over a degree window, with exact associativity
//! checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::homology::{ext_from_resolution, min_resolution, yoneda, ExtGroup, Resolution};
use crate::linalg::Matrix;
use crate::rep::Rep;

use super::HochschildRing;

pub enum SliceSource {
    /// Hochschild cohomology of an algebra.
    Hochschild(Arc<Algebra>),
    /// Self-extension ring of a module.
    ExtRing(Rep),
}

pub struct GradedRngSlice {
    pub lo: usize,
    pub hi: usize,
    /// `dims[k]` is the dimension in degree `lo + 1 + k`.
    pub dims: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    groups: BTreeMap<usize, ExtGroup>,
    /// `(m, n) -> coords[i][j]`: coordinates of `e^m_i . e^n_j` in degree
    /// `m + n`, for all in-window composable pairs.
    pub products: BTreeMap<(usize, usize), Vec<Vec<Matrix>>>,
}

pub fn graded_slice(source: &SliceSource, lo: usize, hi: usize) -> Result<GradedRngSlice> {
    assert!(lo < hi, "empty or inverted window");
    let (res, module): (Arc<Resolution>, Rep) = match source {
        SliceSource::Hochschild(alg) => {
            let ring = HochschildRing::new(alg, hi)?;
            (Arc::clone(&ring.res), ring.bimodule.clone())
        }
        SliceSource::ExtRing(x) => (Arc::new(min_resolution(x, hi + 1)), x.clone()),
    };
    slice_from_resolution(&res, &module, lo, hi)
}

pub fn slice_from_resolution(res: &Arc<Resolution>, module: &Rep, lo: usize, hi: usize) -> Result<GradedRngSlice> {
    let mut groups = BTreeMap::new();
    for n in lo + 1..=hi {
        groups.insert(n, ext_from_resolution(res, module, n)?);
    }
    let dims: Vec<usize> = (lo + 1..=hi).map(|n| groups[&n].dim()).collect();
    let labels: Vec<Vec<String>> = (lo + 1..=hi)
        .map(|n| (0..groups[&n].dim()).map(|i| format!("e{n}_{i}")).collect())
        .collect();
    let mut products = BTreeMap::new();
    for m in lo + 1..=hi {
        for n in lo + 1..=hi {
            if m + n > hi {
                continue;
            }
            let gm = &groups[&m];
            let gn = &groups[&n];
            let gout = &groups[&(m + n)];
            let mut table = Vec::with_capacity(gm.dim());
            for a in &gm.basis {
                let mut row = Vec::with_capacity(gn.dim());
                for b in &gn.basis {
                    let prod = yoneda(a, b)?;
                    row.push(gout.class_coords(&prod));
                }
                table.push(row);
            }
            products.insert((m, n), table);
        }
    }
    Ok(GradedRngSlice { lo, hi, dims, labels, groups, products })
}

impl GradedRngSlice {
    pub fn dim_in_degree(&self, n: usize) -> usize {
        assert!(n > self.lo && n <= self.hi);
        self.dims[n - self.lo - 1]
    }

    pub fn group(&self, n: usize) -> &ExtGroup {
        &self.groups[&n]
    }

    /// All in-window triple products associate (exact check).
    pub fn is_associative(&self) -> bool {
        for m in self.lo + 1..=self.hi {
            for n in self.lo + 1..=self.hi {
                for k in self.lo + 1..=self.hi {
                    if m + n + k > self.hi {
                        continue;
                    }
                    let ga = self.group(m);
                    let gb = self.group(n);
                    let gc = self.group(k);
                    let gout = self.group(m + n + k);
                    for a in &ga.basis {
                        for b in &gb.basis {
                            for c in &gc.basis {
                                let ab = yoneda(a, b).unwrap();
                                let bc = yoneda(b, c).unwrap();
                                let left = yoneda(&ab, c).unwrap();
                                let right = yoneda(a, &bc).unwrap();
                                if gout.class_coords(&left) != gout.class_coords(&right) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// True when every in-window product table is entirely zero.
    pub fn products_all_nonzero(&self) -> bool {
        self.products.values().all(|table| table.iter().all(|row| row.iter().all(|c| !c.is_zero())))
    }
}
