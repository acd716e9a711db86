use serde::Serialize;

use super::hull::{affine_dim, straddles, supporting_sets};
use super::PointConfig;
use crate::error::{Error, Result};
use crate::lattice::build_lattice;
use crate::{FacetList, VertexSet};

/// Outcome of checking the last point of a configuration against the three
/// conditions for extending a periodically-cyclic sequence with period `k`.
///
/// With `n` points in 0-based indices, the reference sets are
/// `A = {0, n-k, n-2}` and `B = {0, n-k, n-k+1, n-2}`. PC1 asks the last
/// point to lie in the affine hull of `B`. For a facet `F` of the hull of the
/// first `n-1` points, PC2 applies when `F ∩ A = {0, n-2}` and asks the
/// hyperplane of `F` to separate the points; PC3 applies otherwise when
/// `B ⊄ F` and asks `F` to remain a facet.
#[derive(Clone, Debug, Serialize)]
pub struct PcReport {
    pub k: usize,
    pub n: usize,
    /// No step to check: `n <= k`.
    pub vacuous: bool,
    pub pc1: bool,
    pub pc2_facets: Vec<VertexSet>,
    pub pc2_violations: Vec<VertexSet>,
    pub pc3_facets: Vec<VertexSet>,
    pub pc3_violations: Vec<VertexSet>,
    /// Whether `A` and `B` are faces of the `n-1` point hull; the conditions
    /// are tested on vertex sets either way.
    pub a_is_face: bool,
    pub b_is_face: bool,
}

impl PcReport {
    pub fn pc2(&self) -> bool {
        self.pc2_violations.is_empty()
    }

    pub fn pc3(&self) -> bool {
        self.pc3_violations.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.vacuous || (self.pc1 && self.pc2() && self.pc3())
    }
}

pub fn verify_pc_step(pc: &PointConfig, k: usize) -> Result<PcReport> {
    if k < 4 {
        return Err(Error::InvalidArgument(format!("period must be at least 4, got {k}")));
    }
    let n = pc.len();
    let mut report = PcReport {
        k,
        n,
        vacuous: n <= k,
        pc1: true,
        pc2_facets: Vec::new(),
        pc2_violations: Vec::new(),
        pc3_facets: Vec::new(),
        pc3_violations: Vec::new(),
        a_is_face: false,
        b_is_face: false,
    };
    if report.vacuous {
        return Ok(report);
    }
    let (b1, b2, prev) = (n - k, n - k + 1, n - 2);
    let a = VertexSet::from([0, b1, prev]);
    let b = VertexSet::from([0, b1, b2, prev]);
    let base: Vec<usize> = b.to_vec();
    let mut with_last = base.clone();
    with_last.push(n - 1);
    report.pc1 = affine_dim(pc, &with_last)? == affine_dim(pc, &base)?;

    let head = pc.window(0, n - 1)?;
    let head_facets = FacetList::new(pc.dim(), n - 1, supporting_sets(&head)?)?;
    if let Ok(lat) = build_lattice(&head_facets) {
        report.a_is_face = lat.is_face(&a);
        report.b_is_face = lat.is_face(&b);
    }
    let full = supporting_sets(pc)?;
    let ends = VertexSet::from([0, prev]);
    for f in head_facets.facets() {
        if f.intersection(&a) == ends {
            report.pc2_facets.push(f.clone());
            if !straddles(pc, f)? {
                report.pc2_violations.push(f.clone());
            }
        } else if !b.is_subset(f) {
            report.pc3_facets.push(f.clone());
            if full.binary_search(f).is_err() {
                report.pc3_violations.push(f.clone());
            }
        }
    }
    Ok(report)
}
