use std::cmp::Ordering;
use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::numeric::{affine_rank, spanned_plane, Approx, Exact, Field, Plane};
use super::{Coords, Point, PointConfig};
use crate::error::{Error, Result};
use crate::{FacetList, VertexSet};

/// Position of a point relative to a facet hyperplane, with the polytope on
/// the beneath side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Beneath,
    Beyond,
    On,
}

/// Facets of the convex hull of `pc`, as vertex sets in the index order.
///
/// Every `d`-subset spanning a hyperplane is tested; supporting hyperplanes
/// contribute all points lying on them, so non-simplicial facets appear once.
/// Fails with [`Error::NonVertices`] when some point is not a vertex.
pub fn hull_facets(pc: &PointConfig) -> Result<FacetList> {
    let facets = supporting_sets(pc)?;
    let n = pc.len();
    let d = pc.dim();
    let mut degree = vec![0usize; n];
    for f in &facets {
        for v in f {
            degree[v] += 1;
        }
    }
    let missing: Vec<usize> = (0..n).filter(|&v| degree[v] < d).collect();
    if !missing.is_empty() {
        return Err(Error::NonVertices(missing));
    }
    FacetList::new(d, n, facets)
}

/// Vertex sets of all facets of the hull, without the vertex check; float
/// configurations are confirmed at refined precision.
pub(crate) fn supporting_sets(pc: &PointConfig) -> Result<Vec<VertexSet>> {
    match pc.coords() {
        Coords::Exact(ps) => raw_hull(&Exact, ps, pc.dim()),
        Coords::Float(ps) => {
            let s = pc.settings();
            let first = raw_hull(&Approx::new(s.precision_bits, s.eps), ps, pc.dim())?;
            let fine = pc.refined().expect("float configuration");
            let r = fine.settings();
            let Coords::Float(fps) = fine.coords() else {
                unreachable!()
            };
            let second = raw_hull(&Approx::new(r.precision_bits, r.eps), fps, pc.dim())?;
            if first != second {
                return Err(Error::PrecisionAmbiguous(format!(
                    "facets change at {} bits ({} vs {})",
                    r.precision_bits,
                    first.len(),
                    second.len()
                )));
            }
            Ok(first)
        }
    }
}

fn raw_hull<K: Field>(k: &K, ps: &[Vec<K::S>], d: usize) -> Result<Vec<VertexSet>> {
    let refs: Vec<&[K::S]> = ps.iter().map(Vec::as_slice).collect();
    if affine_rank(k, &refs)? < d {
        return Err(Error::DegenerateInput(format!(
            "{} points do not affinely span R^{d}",
            ps.len()
        )));
    }
    let combos: Vec<Vec<usize>> = (0..ps.len()).combinations(d).collect();
    let found = combos
        .par_iter()
        .map(|c| {
            let sub: Vec<&[K::S]> = c.iter().map(|&i| refs[i]).collect();
            match spanned_plane(k, &sub)? {
                Some(plane) => supported_set(k, &plane, &refs),
                None => Ok(None),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let set: BTreeSet<VertexSet> = found.into_iter().flatten().collect();
    Ok(set.into_iter().collect())
}

/// Points on `plane` if every point lies weakly on one side of it.
fn supported_set<K: Field>(k: &K, plane: &Plane<K::S>, ps: &[&[K::S]]) -> Result<Option<VertexSet>> {
    let mut pos = false;
    let mut neg = false;
    let mut ambiguous = None;
    let mut on = VertexSet::new();
    for (i, p) in ps.iter().enumerate() {
        match k.sign(&plane.eval(k, p)) {
            Ok(Ordering::Greater) => pos = true,
            Ok(Ordering::Less) => neg = true,
            Ok(Ordering::Equal) => on.insert(i),
            Err(e) => ambiguous = Some(e),
        }
        if pos && neg {
            return Ok(None);
        }
    }
    match ambiguous {
        Some(e) => Err(e),
        None => Ok(Some(on)),
    }
}

/// Classifies `x` against the affine hull of facet `f` of `fl = hull_facets(pc)`.
pub fn beneath_beyond(x: &Point, f: &VertexSet, pc: &PointConfig, fl: &FacetList) -> Result<Side> {
    if !fl.contains_facet(f) {
        return Err(Error::NotAFacet(f.clone()));
    }
    if x.dim() != pc.dim() {
        return Err(Error::InvalidArgument(format!(
            "point has {} coordinates, configuration lives in R^{}",
            x.dim(),
            pc.dim()
        )));
    }
    match (pc.coords(), x) {
        (Coords::Exact(ps), Point::Exact(x)) => side(&Exact, ps, f, x),
        (Coords::Float(ps), Point::Float(x)) => {
            let s = pc.settings();
            side(&Approx::new(s.precision_bits, s.eps), ps, f, x)
        }
        _ => Err(Error::InvalidArgument("point mode differs from configuration".into())),
    }
}

fn side<K: Field>(k: &K, ps: &[Vec<K::S>], f: &VertexSet, x: &[K::S]) -> Result<Side> {
    let plane = oriented_plane(k, ps, f)?;
    Ok(match k.sign(&plane.eval(k, x))? {
        Ordering::Less => Side::Beneath,
        Ordering::Greater => Side::Beyond,
        Ordering::Equal => Side::On,
    })
}

/// The hyperplane through the points of `f`, oriented so that the other
/// points evaluate non-positive.
pub(crate) fn oriented_plane<K: Field>(k: &K, ps: &[Vec<K::S>], f: &VertexSet) -> Result<Plane<K::S>> {
    let pts: Vec<&[K::S]> = f.iter().map(|i| ps[i].as_slice()).collect();
    let mut plane = spanned_plane(k, &pts)?.ok_or_else(|| {
        Error::SelfConsistency(format!("{f} does not span a hyperplane"))
    })?;
    for p in ps {
        match k.sign(&plane.eval(k, p))? {
            Ordering::Equal => continue,
            Ordering::Greater => plane.flip(k),
            Ordering::Less => {}
        }
        break;
    }
    Ok(plane)
}

/// Sign pattern of all points of `pc` against the hyperplane through `f`:
/// whether some point is strictly on the positive and on the negative side.
pub(crate) fn straddles(pc: &PointConfig, f: &VertexSet) -> Result<bool> {
    fn inner<K: Field>(k: &K, ps: &[Vec<K::S>], f: &VertexSet) -> Result<bool> {
        let plane = oriented_plane(k, ps, f)?;
        let mut pos = false;
        let mut neg = false;
        for p in ps {
            match k.sign(&plane.eval(k, p))? {
                Ordering::Greater => pos = true,
                Ordering::Less => neg = true,
                Ordering::Equal => {}
            }
        }
        Ok(pos && neg)
    }
    match pc.coords() {
        Coords::Exact(ps) => inner(&Exact, ps, f),
        Coords::Float(ps) => {
            let s = pc.settings();
            inner(&Approx::new(s.precision_bits, s.eps), ps, f)
        }
    }
}

/// Dimension of the affine hull of the points with the given indices.
pub(crate) fn affine_dim(pc: &PointConfig, indices: &[usize]) -> Result<usize> {
    match pc.coords() {
        Coords::Exact(ps) => {
            let refs: Vec<&[_]> = indices.iter().map(|&i| ps[i].as_slice()).collect();
            affine_rank(&Exact, &refs)
        }
        Coords::Float(ps) => {
            let s = pc.settings();
            let refs: Vec<&[_]> = indices.iter().map(|&i| ps[i].as_slice()).collect();
            affine_rank(&Approx::new(s.precision_bits, s.eps), &refs)
        }
    }
}
