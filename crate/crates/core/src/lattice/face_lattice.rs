use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::FacetList;
use crate::VertexSet;

/// All faces of a polytope, graded by dimension, with Hasse-diagram covers.
///
/// Faces are identified with their vertex sets. Rank `r` holds the faces of
/// dimension `r - 1`, so rank 0 is the empty face and rank `dim + 1` is the
/// polytope itself.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    dim: usize,
    num_vertices: usize,
    ranks: Vec<Vec<VertexSet>>,
    // below[r][i]: indices into ranks[r - 1] covered by ranks[r][i]
    below: Vec<Vec<Vec<usize>>>,
    index: HashMap<VertexSet, (usize, usize)>,
}

impl FaceLattice {
    /// Assembles a lattice from faces already sorted into ranks and computes
    /// the covering relation between consecutive ranks.
    pub(crate) fn from_graded(dim: usize, num_vertices: usize, mut ranks: Vec<Vec<VertexSet>>) -> Self {
        debug_assert_eq!(ranks.len(), dim + 2);
        for r in &mut ranks {
            r.sort();
        }
        let mut below = vec![Vec::new(); ranks.len()];
        for r in 1..ranks.len() {
            below[r] = ranks[r]
                .iter()
                .map(|g| {
                    ranks[r - 1]
                        .iter()
                        .enumerate()
                        .filter(|(_, f)| f.is_subset(g))
                        .map(|(i, _)| i)
                        .collect()
                })
                .collect();
        }
        let mut index = HashMap::new();
        for (r, faces) in ranks.iter().enumerate() {
            for (i, f) in faces.iter().enumerate() {
                index.insert(f.clone(), (r, i));
            }
        }
        Self {
            dim,
            num_vertices,
            ranks,
            below,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Faces of dimension `j`, for `-1 <= j <= dim`.
    pub fn faces(&self, j: isize) -> &[VertexSet] {
        let r = j + 1;
        if r < 0 || r as usize >= self.ranks.len() {
            return &[];
        }
        &self.ranks[r as usize]
    }

    pub fn facets(&self) -> &[VertexSet] {
        self.faces(self.dim as isize - 1)
    }

    pub fn edges(&self) -> &[VertexSet] {
        self.faces(1)
    }

    pub fn num_faces(&self) -> usize {
        self.ranks.iter().map(Vec::len).sum()
    }

    /// Dimension of the face with exactly this vertex set, if it is one.
    pub fn face_dim(&self, set: &VertexSet) -> Option<isize> {
        self.index.get(set).map(|&(r, _)| r as isize - 1)
    }

    pub fn is_face(&self, set: &VertexSet) -> bool {
        self.index.contains_key(set)
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.face_dim(&VertexSet::from([a, b])) == Some(1)
    }

    /// Faces of dimension `j - 1` covered by the `i`-th face of dimension `j`.
    pub fn covered_by(&self, j: isize, i: usize) -> impl Iterator<Item = &VertexSet> {
        let r = (j + 1) as usize;
        self.below[r][i].iter().map(move |&k| &self.ranks[r - 1][k])
    }

    /// Every face with its dimension, from the empty face upwards.
    pub fn iter(&self) -> impl Iterator<Item = (isize, &VertexSet)> {
        self.ranks
            .iter()
            .enumerate()
            .flat_map(|(r, faces)| faces.iter().map(move |f| (r as isize - 1, f)))
    }

    /// Vertex neighbours of `v` along edges, in array order.
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.edges()
            .iter()
            .filter(|e| e.contains(v))
            .flat_map(|e| e.iter())
            .filter(|&w| w != v)
            .collect()
    }

    /// The face with vertex set `face` as a polytope of its own: its facets
    /// are the faces it covers, relabeled by the induced vertex array.
    pub fn face_facet_list(&self, face: &VertexSet) -> Option<FacetList> {
        let &(r, i) = self.index.get(face)?;
        let j = r as isize - 1;
        if j < 1 {
            return None;
        }
        let members = face.to_vec();
        let mut map = vec![usize::MAX; self.num_vertices];
        for (pos, &v) in members.iter().enumerate() {
            map[v] = pos;
        }
        let facets = self.covered_by(j, i).map(|g| g.relabel(&map)).collect();
        Some(FacetList::from_parts(j as usize, members.len(), facets))
    }
}

/// Builds the face lattice of `fl` by closing its facets under intersection.
///
/// Faces are graded by the length of the longest chain up to the full
/// polytope. Fails with [`Error::NotAPolytopeLattice`] when that grading is
/// inconsistent, the atoms are not the vertices, or Euler's relation fails.
pub fn build_lattice(fl: &FacetList) -> Result<FaceLattice> {
    let dim = fl.dim();
    let n = fl.num_vertices();
    let not_polytope = |msg: String| Err(Error::NotAPolytopeLattice(msg));

    let mut seen: HashSet<VertexSet> = fl.facets().iter().cloned().collect();
    let mut frontier: Vec<VertexSet> = fl.facets().to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for f in fl.facets() {
                let x = a.intersection(f);
                if !seen.contains(&x) {
                    seen.insert(x.clone());
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    seen.insert(VertexSet::new());
    let top = VertexSet::full(n);
    seen.insert(top.clone());

    let mut all: Vec<VertexSet> = seen.into_iter().collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    // all[0] is the top; supersets always precede subsets
    let mut height = vec![0usize; all.len()];
    for g in 1..all.len() {
        let supers: Vec<usize> = (0..g)
            .filter(|&h| all[h].len() > all[g].len() && all[g].is_subset(&all[h]))
            .collect();
        let covers: Vec<usize> = supers
            .iter()
            .copied()
            .filter(|&h| {
                !supers
                    .iter()
                    .any(|&k| k != h && all[k].is_proper_subset(&all[h]))
            })
            .collect();
        let heights: HashSet<usize> = covers.iter().map(|&h| height[h]).collect();
        if heights.len() != 1 {
            return not_polytope(format!("face {} is not graded", all[g]));
        }
        height[g] = heights.into_iter().next().unwrap() + 1;
    }

    let mut ranks = vec![Vec::new(); dim + 2];
    for (face, h) in all.into_iter().zip(height) {
        if h > dim + 1 {
            return not_polytope(format!("chain above {face} is longer than {}", dim + 1));
        }
        ranks[dim + 1 - h].push(face);
    }
    if ranks[0] != [VertexSet::new()] {
        return not_polytope("the empty face is not the unique bottom".into());
    }
    if ranks[1].len() != n || ranks[1].iter().any(|v| v.len() != 1) {
        return not_polytope("the rank-one faces are not the vertices".into());
    }
    if ranks[dim].len() != fl.num_facets() {
        return not_polytope("facets are not all of the same rank".into());
    }
    let lattice = FaceLattice::from_graded(dim, n, ranks);
    let fv = f_vector(&lattice);
    if !fv.satisfies_euler() {
        return not_polytope(format!("f-vector {fv} violates Euler's relation"));
    }
    Ok(lattice)
}

/// Face counts `f_{-1}, f_0, ..., f_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    dim: usize,
    // counts[j + 1] = f_j
    counts: Vec<u64>,
}

impl FVector {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `f_j` for `-1 <= j <= dim`; zero outside that range.
    pub fn get(&self, j: isize) -> u64 {
        if j == self.dim as isize {
            return 1;
        }
        let r = j + 1;
        if r < 0 {
            return 0;
        }
        self.counts.get(r as usize).copied().unwrap_or(0)
    }

    /// `(f_0, ..., f_{d-1})`.
    pub fn proper(&self) -> &[u64] {
        &self.counts[1..]
    }

    pub fn euler_sum(&self) -> i64 {
        self.proper()
            .iter()
            .enumerate()
            .map(|(j, &f)| if j % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// `sum (-1)^j f_j = 1 - (-1)^d` over `0 <= j < d`.
    pub fn satisfies_euler(&self) -> bool {
        let rhs = if self.dim.is_multiple_of(2) { 0 } else { 2 };
        self.euler_sum() == rhs
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.proper().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn f_vector(lat: &FaceLattice) -> FVector {
    let counts = lat.ranks[..=lat.dim].iter().map(|r| r.len() as u64).collect();
    FVector {
        dim: lat.dim,
        counts,
    }
}

/// The order-reversed lattice. Vertices of the dual are the facet indices of
/// `lat` (positions in [`FaceLattice::facets`]).
pub fn dual_lattice(lat: &FaceLattice) -> FaceLattice {
    let d = lat.dim;
    let facets = lat.facets();
    let mut ranks = vec![Vec::new(); d + 2];
    for (j, face) in lat.iter() {
        let dual: VertexSet = facets
            .iter()
            .enumerate()
            .filter(|(_, f)| face.is_subset(f))
            .map(|(i, _)| i)
            .collect();
        // dimension j maps to d - 1 - j, i.e. rank d - j
        ranks[(d as isize - j) as usize].push(dual);
    }
    FaceLattice::from_graded(d, facets.len(), ranks)
}

/// Combinatorial vertex figure of `fl` at `v`.
///
/// Vertices of the figure are the edge-neighbours of `v` in array order;
/// each facet through `v` contributes its set of neighbours of `v`.
pub fn vertex_figure(fl: &FacetList, v: usize) -> Result<FacetList> {
    if v >= fl.num_vertices() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            num_vertices: fl.num_vertices(),
        });
    }
    if fl.dim() < 2 {
        return Err(Error::InvalidArgument(
            "vertex figures need dimension at least 2".into(),
        ));
    }
    let lat = build_lattice(fl)?;
    let nbrs = lat.neighbours(v);
    let mut map = vec![usize::MAX; fl.num_vertices()];
    for (pos, w) in nbrs.iter().enumerate() {
        map[w] = pos;
    }
    let facets = fl
        .facets()
        .iter()
        .filter(|f| f.contains(v))
        .map(|f| f.intersection(&nbrs).relabel(&map))
        .collect();
    FacetList::new(fl.dim() - 1, nbrs.len(), facets)
}

/// Edges `E` such that `E ∪ {v}` is the vertex set of a face for every vertex `v`.
pub fn universal_edges(lat: &FaceLattice) -> Vec<VertexSet> {
    lat.edges()
        .iter()
        .filter(|e| {
            (0..lat.num_vertices).all(|v| {
                let mut s = (*e).clone();
                s.insert(v);
                lat.is_face(&s)
            })
        })
        .cloned()
        .collect()
}

/// Whether every `⌊d/2⌋`-subset of vertices is the vertex set of a face.
pub fn is_neighbourly(lat: &FaceLattice) -> bool {
    let k = lat.dim / 2;
    let n = lat.num_vertices;
    if k <= 1 {
        return true;
    }
    let expected = binomial(n, k);
    let found = lat
        .iter()
        .filter(|(j, f)| *j == k as isize - 1 && f.len() == k)
        .count() as u64;
    found == expected
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
