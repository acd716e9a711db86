use std::collections::BTreeMap;

use serde::Serialize;

use super::cyclicity::detect_period;
use super::hull::hull_facets;
use super::{sigma_points, FloatSettings};
use crate::error::{Error, Result};
use crate::gale::is_gale;
use crate::VertexSet;

/// Summary of the bi-cyclic polytope `B(p, q, n)`.
#[derive(Clone, Debug, Serialize)]
pub struct BicyclicReport {
    pub p: u32,
    pub q: u32,
    pub n: usize,
    pub gale: bool,
    /// Present when the configuration is Gale and periodically-cyclic.
    pub period: Option<usize>,
    pub period_ratio: Option<f64>,
    /// Number of facets with each vertex count.
    pub facet_size_census: BTreeMap<usize, usize>,
    pub num_facets: usize,
    /// Whether the facet set is closed under `i -> i + 1 mod n`.
    pub rotation_invariant: bool,
    pub precision_bits: u32,
}

pub fn bicyclic_report(p: u32, q: u32, n: usize, settings: FloatSettings) -> Result<BicyclicReport> {
    let pc = sigma_points(p, q, n, settings)?;
    let fl = hull_facets(&pc)?;
    let gale = is_gale(&fl);
    let mut facet_size_census = BTreeMap::new();
    for f in fl.facets() {
        *facet_size_census.entry(f.len()).or_insert(0) += 1;
    }
    let shift: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let rotation_invariant = fl
        .facets()
        .iter()
        .all(|f: &VertexSet| fl.contains_facet(&f.relabel(&shift)));
    let period = if gale {
        match detect_period(&pc) {
            Ok(r) => Some(r.period),
            Err(Error::NotPeriodicallyCyclic(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(BicyclicReport {
        p,
        q,
        n,
        gale,
        period,
        period_ratio: period.map(|k| k as f64 / n as f64),
        facet_size_census,
        num_facets: fl.num_facets(),
        rotation_invariant,
        precision_bits: settings.precision_bits,
    })
}
