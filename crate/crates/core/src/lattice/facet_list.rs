use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::VertexSet;

/// A polytope given combinatorially by the vertex sets of its facets.
///
/// Vertices are `0..num_vertices` and the index order is the vertex array.
/// Facets are kept sorted lexicographically, which makes equality of two
/// facet lists equality of facet sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFacetList")]
pub struct FacetList {
    // declaration order is alphabetical so serialized keys come out sorted
    dim: usize,
    facets: Vec<VertexSet>,
    num_vertices: usize,
}

#[derive(Deserialize)]
struct RawFacetList {
    dim: usize,
    num_vertices: usize,
    facets: Vec<VertexSet>,
}

impl TryFrom<RawFacetList> for FacetList {
    type Error = Error;

    fn try_from(raw: RawFacetList) -> Result<Self> {
        FacetList::new(raw.dim, raw.num_vertices, raw.facets)
    }
}

impl FacetList {
    /// Validates and canonicalizes a facet list.
    ///
    /// Every facet needs at least `dim` vertices, facets must be pairwise
    /// incomparable, and every vertex must lie in at least `dim` facets.
    pub fn new(dim: usize, num_vertices: usize, facets: Vec<VertexSet>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidFacetList(msg));
        if dim == 0 {
            return invalid("dimension must be at least 1".into());
        }
        let mut facets = facets;
        facets.sort();
        for f in &facets {
            if let Some(m) = f.last() {
                if m >= num_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: m,
                        num_vertices,
                    });
                }
            }
            if f.len() < dim {
                return invalid(format!("facet {f} has fewer than {dim} vertices"));
            }
        }
        for (i, a) in facets.iter().enumerate() {
            for b in &facets[i + 1..] {
                if a == b {
                    return invalid(format!("facet {a} listed twice"));
                }
                if a.is_subset(b) || b.is_subset(a) {
                    return invalid(format!("facets {a} and {b} are nested"));
                }
            }
        }
        let mut degree = vec![0usize; num_vertices];
        for f in &facets {
            for v in f {
                degree[v] += 1;
            }
        }
        if let Some(v) = degree.iter().position(|&k| k < dim) {
            return invalid(format!(
                "vertex {v} lies in {} facets, need at least {dim}",
                degree[v]
            ));
        }
        Ok(Self {
            dim,
            facets,
            num_vertices,
        })
    }

    /// Canonicalizing constructor for lists produced by trusted generators.
    pub(crate) fn from_parts(dim: usize, num_vertices: usize, facets: Vec<VertexSet>) -> Self {
        let mut facets: Vec<VertexSet> = facets
            .into_iter()
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        facets.sort();
        Self {
            dim,
            facets,
            num_vertices,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.dim)
    }

    pub fn contains_facet(&self, f: &VertexSet) -> bool {
        self.facets.binary_search(f).is_ok()
    }

    /// Renames vertex `i` to `map[i]`; `map` must be a permutation.
    pub fn relabel(&self, map: &[usize]) -> Self {
        debug_assert_eq!(map.len(), self.num_vertices);
        let facets = self.facets.iter().map(|f| f.relabel(map)).collect();
        Self::from_parts(self.dim, self.num_vertices, facets)
    }

    /// Reorders the vertex array so that position `p` holds old vertex `order[p]`.
    pub fn reorder(&self, order: &[usize]) -> Self {
        self.relabel(&inverse_permutation(order))
    }

    /// The same polytope with the vertex array read backwards.
    pub fn reversed(&self) -> Self {
        let n = self.num_vertices;
        let map: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
        self.relabel(&map)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("facet list serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

pub(crate) fn inverse_permutation(order: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        inv[v] = pos;
    }
    inv
}

/// The `g`-gon with vertices in cyclic order.
pub fn polygon(g: usize) -> Result<FacetList> {
    if g < 3 {
        return Err(Error::InvalidArgument(format!(
            "a polygon needs at least 3 vertices, got {g}"
        )));
    }
    let facets = (0..g).map(|i| VertexSet::from([i, (i + 1) % g])).collect();
    Ok(FacetList::from_parts(2, g, facets))
}

/// Pyramid over `fl` with the apex appended as vertex `num_vertices`.
pub fn pyramid(fl: &FacetList) -> FacetList {
    let apex = fl.num_vertices;
    let mut facets: Vec<VertexSet> = fl
        .facets
        .iter()
        .map(|f| {
            let mut g = f.clone();
            g.insert(apex);
            g
        })
        .collect();
    facets.push(VertexSet::full(apex));
    FacetList::from_parts(fl.dim + 1, apex + 1, facets)
}

/// The `d`-simplex on vertices `0..=d`.
pub fn simplex(d: usize) -> FacetList {
    let facets = (0..=d)
        .map(|skip| (0..=d).filter(|&v| v != skip).collect())
        .collect();
    FacetList::from_parts(d, d + 1, facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(list: &[&[usize]]) -> Vec<VertexSet> {
        list.iter().map(|s| VertexSet::from(*s)).collect()
    }

    #[test]
    fn polygon_edges() {
        let tri = polygon(3).unwrap();
        assert_eq!(tri.facets(), sets(&[&[0, 1], &[0, 2], &[1, 2]]).as_slice());
        assert_eq!(polygon(4).unwrap().num_facets(), 4);
        assert!(polygon(2).is_err());
    }

    #[test]
    fn pyramid_over_square() {
        let p = pyramid(&polygon(4).unwrap());
        let expected = FacetList::new(
            3,
            5,
            sets(&[&[0, 1, 2, 3], &[0, 1, 4], &[1, 2, 4], &[2, 3, 4], &[0, 3, 4]]),
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn pyramid_over_simplex_is_simplex() {
        assert_eq!(pyramid(&simplex(3)), simplex(4));
    }

    #[test]
    fn rejects_malformed_lists() {
        assert!(matches!(
            FacetList::new(2, 3, sets(&[&[0, 1], &[1, 2], &[0, 3]])),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(FacetList::new(3, 4, sets(&[&[0, 1, 2], &[0, 1, 2, 3]])).is_err());
        assert!(FacetList::new(2, 3, sets(&[&[0, 1], &[1, 2]])).is_err());
        assert!(FacetList::new(3, 4, sets(&[&[0, 1], &[1, 2, 3]])).is_err());
    }

    #[test]
    fn json_is_canonical() {
        let fl = FacetList::new(2, 3, sets(&[&[1, 2], &[0, 2], &[0, 1]])).unwrap();
        assert_eq!(
            fl.to_json(),
            r#"{"dim":2,"facets":[[0,1],[0,2],[1,2]],"num_vertices":3}"#
        );
        let back = FacetList::from_json(r#"{"num_vertices":3,"dim":2,"facets":[[2,1],[0,2],[0,1]]}"#)
            .unwrap();
        assert_eq!(back, fl);
        assert!(FacetList::from_json(r#"{"dim":2,"num_vertices":3,"facets":[[0,1]]}"#).is_err());
    }

    #[test]
    fn reorder_and_reverse() {
        let fl = FacetList::new(2, 4, sets(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])).unwrap();
        let rev = fl.reversed();
        assert_eq!(rev, fl);
        let order = [0, 2, 1, 3];
        let re = fl.reorder(&order);
        assert!(re.contains_facet(&VertexSet::from([0, 2])));
        assert!(re.contains_facet(&VertexSet::from([1, 3])));
    }
}
