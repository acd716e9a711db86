use std::collections::HashSet;

use crate::lattice::{dual_lattice, f_vector, FaceLattice};
use crate::VertexSet;

/// A lattice isomorphism, recorded by where it sends each vertex.
///
/// The lattices handled here are atomic and coatomic, so a vertex bijection
/// that carries facets onto facets extends uniquely to the whole lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
}

impl Isomorphism {
    pub fn image(&self, face: &VertexSet) -> VertexSet {
        face.relabel(&self.vertex_map)
    }
}

/// Whether `map` carries the facets of `a` exactly onto the facets of `b`.
pub fn is_isomorphism(a: &FaceLattice, b: &FaceLattice, map: &[usize]) -> bool {
    if a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || map.len() != a.num_vertices() {
        return false;
    }
    let mut seen = vec![false; map.len()];
    for &m in map {
        if m >= seen.len() || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    let target: HashSet<&VertexSet> = b.facets().iter().collect();
    a.facets().len() == b.facets().len()
        && a.facets().iter().all(|f| target.contains(&f.relabel(map)))
}

/// Searches for a graded lattice isomorphism `a -> b`.
///
/// Differing f-vectors short-circuit to `None`. Otherwise a backtracking
/// search over vertex bijections runs, restricted to vertices with equal
/// (facet degree, facet-size multiset) signatures, and pruned whenever a
/// facet's partial image cannot be completed to a facet of `b`.
pub fn is_isomorphic(a: &FaceLattice, b: &FaceLattice) -> Option<Isomorphism> {
    if a.dim() != b.dim() || f_vector(a) != f_vector(b) {
        return None;
    }
    Search::new(a, b).run()
}

/// Whether the lattice is isomorphic to its own dual; returns the witness,
/// a map from vertices of `lat` to facet indices of `lat`.
pub fn self_duality(lat: &FaceLattice) -> Option<Isomorphism> {
    is_isomorphic(lat, &dual_lattice(lat))
}

pub fn is_self_dual(lat: &FaceLattice) -> bool {
    self_duality(lat).is_some()
}

struct Side<'a> {
    facets: &'a [VertexSet],
    incident: Vec<Vec<usize>>,
    signature: Vec<(usize, Vec<usize>)>,
}

impl<'a> Side<'a> {
    fn new(lat: &'a FaceLattice) -> Self {
        let facets = lat.facets();
        let mut incident = vec![Vec::new(); lat.num_vertices()];
        for (i, f) in facets.iter().enumerate() {
            for v in f {
                incident[v].push(i);
            }
        }
        let signature = incident
            .iter()
            .map(|fs| {
                let mut sizes: Vec<usize> = fs.iter().map(|&i| facets[i].len()).collect();
                sizes.sort_unstable();
                (fs.len(), sizes)
            })
            .collect();
        Self {
            facets,
            incident,
            signature,
        }
    }
}

struct Search<'a> {
    a: Side<'a>,
    b: Side<'a>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    assigned_a: VertexSet,
    image_b: VertexSet,
}

impl<'a> Search<'a> {
    fn new(la: &'a FaceLattice, lb: &'a FaceLattice) -> Self {
        let a = Side::new(la);
        let b = Side::new(lb);
        let n = la.num_vertices();
        // visit vertices so that each one shares as many facets as possible
        // with those already placed
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut touched = vec![0usize; la.facets().len()];
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let overlap: usize = a.incident[v].iter().map(|&f| touched[f]).sum();
                    (overlap, a.incident[v].len(), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            for &f in &a.incident[next] {
                touched[f] += 1;
            }
            order.push(next);
        }
        Self {
            a,
            b,
            order,
            map: vec![usize::MAX; n],
            used: vec![false; n],
            assigned_a: VertexSet::new(),
            image_b: VertexSet::new(),
        }
    }

    fn run(mut self) -> Option<Isomorphism> {
        let mut sig_a = self.a.signature.clone();
        let mut sig_b = self.b.signature.clone();
        sig_a.sort();
        sig_b.sort();
        if sig_a != sig_b {
            return None;
        }
        if self.extend(0) {
            Some(Isomorphism {
                vertex_map: self.map,
            })
        } else {
            None
        }
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.complete();
        }
        let v = self.order[depth];
        for w in 0..self.map.len() {
            if self.used[w] || self.a.signature[v] != self.b.signature[w] {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            self.assigned_a.insert(v);
            self.image_b.insert(w);
            if self.consistent(v, w) && self.extend(depth + 1) {
                return true;
            }
            self.assigned_a.remove(v);
            self.image_b.remove(w);
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    /// Every facet of `a` through `v` must have a same-size facet of `b`
    /// through `w` that meets the current image exactly in its partial image.
    fn consistent(&self, v: usize, w: usize) -> bool {
        self.a.incident[v].iter().all(|&fa| {
            let f = &self.a.facets[fa];
            let partial = f.intersection(&self.assigned_a).relabel(&self.map);
            self.b.incident[w].iter().any(|&fb| {
                let g = &self.b.facets[fb];
                g.len() == f.len() && g.intersection(&self.image_b) == partial
            })
        })
    }

    fn complete(&self) -> bool {
        let target: HashSet<&VertexSet> = self.b.facets.iter().collect();
        self.a
            .facets
            .iter()
            .all(|f| target.contains(&f.relabel(&self.map)))
    }
}
