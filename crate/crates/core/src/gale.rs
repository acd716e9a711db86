//! Gale's evenness condition, cyclic facet enumeration, and properties of a
//! vertex array: the Gale property and the characteristic.
//!
//! A vertex array is always the index order of a [`FacetList`]; other arrays
//! are expressed as explicit permutations.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lattice::{build_lattice, FacetList};
use crate::VertexSet;

/// Default cap on the number of vertices for [`find_gale_order`].
pub const DEFAULT_MAX_ORDER_SEARCH: usize = 10;

/// A `d`-subset of `{0, ..., n-1}` to be tested against the evenness condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GecQuery {
    n: usize,
    d: usize,
    candidate: VertexSet,
}

impl GecQuery {
    pub fn new(n: usize, d: usize, candidate: VertexSet) -> Result<Self> {
        if candidate.len() != d {
            return Err(Error::InvalidArgument(format!(
                "candidate {candidate} does not have {d} elements"
            )));
        }
        if let Some(m) = candidate.last() {
            if m >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: m,
                    num_vertices: n,
                });
            }
        }
        Ok(Self { n, d, candidate })
    }

    pub fn candidate(&self) -> &VertexSet {
        &self.candidate
    }
}

/// Number of members of `set` strictly between `i` and `k`.
pub fn separation_count(i: usize, k: usize, set: &VertexSet) -> Result<usize> {
    if i >= k {
        return Err(Error::InvalidArgument(format!(
            "separation needs i < k, got i = {i}, k = {k}"
        )));
    }
    Ok(set.count_between(i, k))
}

/// Whether every two vertices of `0..n` outside `set` are separated by an
/// even number of members of `set`.
///
/// It suffices to look at consecutive outside vertices, since separations
/// of farther pairs are sums of those.
fn evenly_separated(n: usize, set: &VertexSet) -> bool {
    let mut inside_run = 0usize;
    let mut seen_outside = false;
    for v in 0..n {
        if set.contains(v) {
            inside_run += 1;
        } else {
            if seen_outside && inside_run % 2 == 1 {
                return false;
            }
            seen_outside = true;
            inside_run = 0;
        }
    }
    true
}

/// Gale's evenness condition for the candidate facet.
pub fn gec_is_facet(q: &GecQuery) -> bool {
    evenly_separated(q.n, &q.candidate)
}

/// Facets of the cyclic polytope `C(n, d)`: all `d`-subsets of `0..n`
/// satisfying the evenness condition.
pub fn cyclic_facets(n: usize, d: usize) -> Result<FacetList> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("dimension {d} < 2")));
    }
    if n <= d {
        return Err(Error::InvalidArgument(format!(
            "a cyclic {d}-polytope needs more than {d} vertices, got {n}"
        )));
    }
    let facets = (0..n)
        .combinations(d)
        .map(VertexSet::from_iter)
        .filter(|x| evenly_separated(n, x))
        .collect();
    Ok(FacetList::from_parts(d, n, facets))
}

/// Whether every facet satisfies the necessary half of the evenness
/// condition in the index order. Facets may be non-simplicial.
pub fn is_gale(fl: &FacetList) -> bool {
    fl.facets()
        .iter()
        .all(|f| evenly_separated(fl.num_vertices(), f))
}

/// Searches for a vertex array in which `fl` is Gale.
///
/// Returns `order` with `order[p]` the vertex placed at position `p`, so
/// `fl.reorder(&order)` is Gale. Arrays and their reversals are equivalent,
/// so only arrays whose first vertex is smaller than the last are tried.
pub fn find_gale_order(fl: &FacetList, max_n: usize) -> Result<Option<Vec<usize>>> {
    let n = fl.num_vertices();
    if n > max_n {
        return Err(Error::TooLarge {
            num_vertices: n,
            max: max_n,
        });
    }
    let mut search = OrderSearch {
        facets: fl.facets(),
        n,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        // per facet: members placed since the last placed outside vertex,
        // or None before any outside vertex
        runs: vec![None; fl.num_facets()],
    };
    Ok(search.extend().then_some(search.order))
}

struct OrderSearch<'a> {
    facets: &'a [VertexSet],
    n: usize,
    order: Vec<usize>,
    used: Vec<bool>,
    runs: Vec<Option<usize>>,
}

impl OrderSearch<'_> {
    fn extend(&mut self) -> bool {
        if self.order.len() == self.n {
            return self.order[0] < self.order[self.n - 1];
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let saved = self.runs.clone();
            let mut ok = true;
            for (i, f) in self.facets.iter().enumerate() {
                if f.contains(v) {
                    if let Some(r) = self.runs[i].as_mut() {
                        *r += 1;
                    }
                } else {
                    if matches!(self.runs[i], Some(r) if r % 2 == 1) {
                        ok = false;
                        break;
                    }
                    self.runs[i] = Some(0);
                }
            }
            if ok {
                self.used[v] = true;
                self.order.push(v);
                if self.extend() {
                    return true;
                }
                self.order.pop();
                self.used[v] = false;
            }
            self.runs = saved;
        }
        false
    }
}

/// The characteristic `k` of the vertex array: `{x_0, x_i}` is an edge
/// exactly for `i = 1..=k`, and symmetrically `{x_{m-i}, x_m}` with `m` the
/// last index. Requires `d <= k <= m`.
pub fn characteristic(fl: &FacetList) -> Result<usize> {
    let lat = build_lattice(fl)?;
    let last = fl.num_vertices() - 1;
    let front: Vec<usize> = (1..=last).filter(|&i| lat.is_edge(0, i)).collect();
    let k = front.len();
    if front != (1..=k).collect::<Vec<_>>() {
        return Err(Error::PatternViolation(format!(
            "edges at the first vertex reach {front:?}, not an initial segment"
        )));
    }
    let back: Vec<usize> = (1..=last).filter(|&i| lat.is_edge(last - i, last)).collect();
    if back != front {
        return Err(Error::PatternViolation(format!(
            "edges at the last vertex reach back {back:?}, but the first vertex reaches {front:?}"
        )));
    }
    if k < fl.dim() || k > last {
        return Err(Error::PatternViolation(format!(
            "characteristic {k} outside [{}, {last}]",
            fl.dim()
        )));
    }
    Ok(k)
}
