//! Test-side oracles, written independently of the library so that the
//! integration tests compare two implementations rather than one.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use polycyclic::{FacetList, VertexSet};
use rug::Integer;

pub type Face = BTreeSet<usize>;

pub fn to_faces(fl: &FacetList) -> BTreeSet<Face> {
    fl.facets().iter().map(|f| f.iter().collect()).collect()
}

pub fn from_faces(dim: usize, n: usize, faces: &BTreeSet<Face>) -> FacetList {
    let facets = faces.iter().map(|f| f.iter().copied().collect::<VertexSet>()).collect();
    FacetList::new(dim, n, facets).unwrap()
}

/// Facets of C(n, d) straight from the evenness definition: every pair of
/// outside vertices is separated by an even number of members.
pub fn gale_facets(n: usize, d: usize) -> BTreeSet<Face> {
    (0..n)
        .combinations(d)
        .filter(|s| satisfies_gec(n, s))
        .map(|s| s.into_iter().collect())
        .collect()
}

pub fn satisfies_gec(n: usize, s: &[usize]) -> bool {
    let outside: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
    outside
        .iter()
        .tuple_combinations()
        .all(|(&i, &k)| s.iter().filter(|&&y| i < y && y < k).count() % 2 == 0)
}

/// Gale in the index order: every facet's vertex set is evenly separated.
pub fn is_gale_oracle(fl: &FacetList) -> bool {
    fl.facets()
        .iter()
        .all(|f| satisfies_gec(fl.num_vertices(), &f.to_vec()))
}

/// Multiplex facets by the clamped-window rule: facet i collects the indices
/// within distance d-1 of i, skipping i itself, then clamps into [0, n].
pub fn multiplex_oracle(n: usize, d: usize) -> BTreeSet<Face> {
    (0..=n as isize)
        .map(|i| {
            (i - d as isize + 1..=i + d as isize - 1)
                .filter(|&j| j != i)
                .map(|j| j.clamp(0, n as isize) as usize)
                .collect()
        })
        .collect()
}

pub fn polygon_oracle(g: usize) -> BTreeSet<Face> {
    (0..g).map(|i| Face::from([i, (i + 1) % g])).collect()
}

/// Pyramid with the apex appended as the last vertex.
pub fn pyramid_oracle(facets: &BTreeSet<Face>, n: usize) -> BTreeSet<Face> {
    let mut out: BTreeSet<Face> = facets
        .iter()
        .map(|f| {
            let mut g = f.clone();
            g.insert(n);
            g
        })
        .collect();
    out.insert((0..n).collect());
    out
}

/// Face lattice by brute-force intersection closure with dimensions from
/// longest chains.
pub struct Lattice {
    pub n: usize,
    pub dim: usize,
    pub faces: BTreeMap<Face, isize>,
}

impl Lattice {
    pub fn new(facets: &BTreeSet<Face>, n: usize) -> Self {
        let mut all: BTreeSet<Face> = facets.clone();
        let mut frontier: Vec<Face> = facets.iter().cloned().collect();
        while let Some(f) = frontier.pop() {
            for g in facets {
                let h: Face = f.intersection(g).copied().collect();
                if all.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        all.insert(Face::new());
        let top: Face = (0..n).collect();
        all.insert(top.clone());
        let mut by_size: Vec<Face> = all.into_iter().collect();
        by_size.sort_by_key(|f| f.len());
        let mut faces: BTreeMap<Face, isize> = BTreeMap::new();
        for f in by_size {
            let d = faces
                .iter()
                .filter(|(g, _)| g.len() < f.len() && g.is_subset(&f))
                .map(|(_, &d)| d + 1)
                .max()
                .unwrap_or(-1);
            faces.insert(f, d);
        }
        let dim = faces[&top] as usize;
        Lattice { n, dim, faces }
    }

    pub fn of(fl: &FacetList) -> Self {
        let l = Self::new(&to_faces(fl), fl.num_vertices());
        assert_eq!(l.dim, fl.dim(), "oracle dimension disagrees");
        l
    }

    pub fn with_dim(&self, j: isize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |(_, &d)| d == j).map(|(f, _)| f)
    }

    pub fn f_vector(&self) -> Vec<u64> {
        (0..self.dim as isize).map(|j| self.with_dim(j).count() as u64).collect()
    }

    pub fn satisfies_euler(&self) -> bool {
        let f = self.f_vector();
        let sum: i64 = f
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        sum == 1 - (-1i64).pow(self.dim as u32)
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.faces.get(&Face::from([a, b])) == Some(&1)
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.is_edge(u, v)).collect()
    }

    /// Facets of a face, relabelled into the face's induced order.
    pub fn face_facets(&self, face: &Face) -> BTreeSet<Face> {
        let d = self.faces[face];
        let map: Vec<usize> = face.iter().copied().collect();
        self.with_dim(d - 1)
            .filter(|g| g.is_subset(face))
            .map(|g| g.iter().map(|v| map.binary_search(v).unwrap()).collect())
            .collect()
    }

    /// Vertex figure at v: facets through v cut down to v's neighbours,
    /// relabelled in increasing order.
    pub fn vertex_figure(&self, v: usize) -> (usize, BTreeSet<Face>) {
        let nbrs = self.neighbours(v);
        let figure = self
            .with_dim(self.dim as isize - 1)
            .filter(|f| f.contains(&v))
            .map(|f| {
                f.iter()
                    .filter_map(|u| nbrs.binary_search(u).ok())
                    .collect()
            })
            .collect();
        (nbrs.len(), figure)
    }

    /// Flag counts keyed by the set of dimensions, chains counted by dynamic
    /// programming over faces ordered by dimension.
    pub fn flag_vector(&self) -> BTreeMap<Vec<usize>, u64> {
        let d = self.dim;
        let mut out = BTreeMap::new();
        for mask in 0u32..(1 << d) {
            let dims: Vec<usize> = (0..d).filter(|j| mask >> j & 1 == 1).collect();
            let mut counts: BTreeMap<&Face, u64> =
                self.with_dim(-1).map(|f| (f, 1)).collect();
            let mut prev_faces: Vec<&Face> = self.with_dim(-1).collect();
            for &j in &dims {
                let next: BTreeMap<&Face, u64> = self
                    .with_dim(j as isize)
                    .map(|g| {
                        let c = prev_faces
                            .iter()
                            .filter(|f| f.is_subset(g))
                            .map(|f| counts[f])
                            .sum();
                        (g, c)
                    })
                    .collect();
                prev_faces = next.keys().copied().collect();
                counts = next;
            }
            out.insert(dims, counts.values().sum());
        }
        out
    }
}

/// Exact convex hull of integer points by orientation determinants: a
/// d-subset spans a facet when every point lies weakly on one side.
pub fn integer_hull(points: &[Vec<Integer>]) -> BTreeSet<Face> {
    let n = points.len();
    let d = points[0].len();
    let mut out = BTreeSet::new();
    for base in (0..n).combinations(d) {
        let signs: Vec<i32> = (0..n).map(|k| orientation(points, &base, k)).collect();
        let pos = signs.iter().any(|&s| s > 0);
        let neg = signs.iter().any(|&s| s < 0);
        if (pos || neg) && !(pos && neg) {
            out.insert((0..n).filter(|&k| signs[k] == 0).collect());
        }
    }
    out
}

fn orientation(points: &[Vec<Integer>], base: &[usize], k: usize) -> i32 {
    let p0 = &points[base[0]];
    let mut rows: Vec<Vec<Integer>> = base[1..]
        .iter()
        .chain(std::iter::once(&k))
        .map(|&i| points[i].iter().zip(p0).map(|(a, b)| Integer::from(a - b)).collect())
        .collect();
    bareiss_sign(&mut rows)
}

fn bareiss_sign(m: &mut [Vec<Integer>]) -> i32 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = Integer::from(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| m[r][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = Integer::from(&m[i][j] * &m[k][k]) - Integer::from(&m[i][k] * &m[k][j]);
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].cmp0() as i32
}

pub fn moment_integer_points(n: usize, d: usize) -> Vec<Vec<Integer>> {
    (1..=n as u32)
        .map(|t| (1..=d as u32).map(|k| Integer::from((t as u64).pow(k))).collect())
        .collect()
}
