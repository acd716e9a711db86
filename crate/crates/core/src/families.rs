//! Multiplexes, braxtopes, and the polytope classes built from them:
//! multiplicial, ordinary, braxial, and the classification of Gale and
//! braxial polytopes by the edges at the last vertex.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gale::is_gale;
use crate::lattice::{build_lattice, simplex, FaceLattice, FacetList};
use crate::VertexSet;

/// Index windows over a vertex array `y_0 < ... < y_last` where indices
/// below 0 read as `y_0` and indices above `last` read as `y_last`.
#[derive(Clone, Copy, Debug)]
pub struct ClampedIndexScheme {
    last: usize,
}

impl ClampedIndexScheme {
    pub fn new(last: usize) -> Self {
        Self { last }
    }

    pub fn clamp(&self, j: isize) -> usize {
        j.clamp(0, self.last as isize) as usize
    }

    /// `{y_j : lo <= j <= hi, j != skip}` with clamping, as a set.
    pub fn window(&self, lo: isize, hi: isize, skip: Option<isize>) -> VertexSet {
        (lo..=hi)
            .filter(|&j| Some(j) != skip)
            .map(|j| self.clamp(j))
            .collect()
    }
}

/// How far down the face lattice a heredity check goes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strictness {
    /// Check the facets only; lower faces follow from the facets being
    /// multiplexes (braxtopes).
    #[default]
    Facets,
    /// Check every proper face of dimension at least one.
    AllFaces,
}

/// Facets of the `d`-multiplex on `y_0 < ... < y_n`: for each `i`, the
/// clamped window `y_{i-d+1}, ..., y_{i+d-1}` with `y_i` left out.
pub fn multiplex_facets(n: usize, d: usize) -> Result<FacetList> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("multiplex dimension {d} < 2")));
    }
    if n < d {
        return Err(Error::InvalidArgument(format!(
            "a {d}-multiplex needs n >= {d}, got n = {n}"
        )));
    }
    Ok(FacetList::from_parts(d, n + 1, multiplex_windows(n, d)))
}

fn multiplex_windows(n: usize, d: usize) -> Vec<VertexSet> {
    let scheme = ClampedIndexScheme::new(n);
    let (d, n) = (d as isize, n as isize);
    (0..=n)
        .map(|i| scheme.window(i - d + 1, i + d - 1, Some(i)))
        .collect()
}

/// Facets of an ordinary `d`-polytope of characteristic `d` on
/// `x_0 < ... < x_n`, for odd `d >= 5`. The formula coincides with the
/// multiplex formula.
pub fn ordinary_char_d_facets(n: usize, d: usize) -> Result<FacetList> {
    if d < 5 || d.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "characteristic-d ordinary polytopes need odd d >= 5, got {d}"
        )));
    }
    if n < d {
        return Err(Error::InvalidArgument(format!("need n >= d, got n = {n}, d = {d}")));
    }
    let scheme = ClampedIndexScheme::new(n);
    let facets = (0..=n as isize)
        .map(|i| scheme.window(i - d as isize + 1, i + d as isize - 1, Some(i)))
        .collect();
    Ok(FacetList::from_parts(d, n + 1, facets))
}

/// Facets of the `e`-braxtope on `y_0 < ... < y_v`: the simplices
/// `T_i = [y_i, ..., y_{i+e-1}]` and the clamped sets
/// `E_j = [y_0, y_{j-e+2}, ..., y_{j-1}, y_{j+1}, ..., y_{j+e-2}]`.
/// For `e <= 2` the braxtope is the `e`-simplex.
pub fn braxtope_facets(v: usize, e: usize) -> Result<FacetList> {
    if e == 0 {
        return Err(Error::InvalidArgument("braxtope dimension must be positive".into()));
    }
    if v < e {
        return Err(Error::InvalidArgument(format!(
            "an {e}-braxtope needs v >= {e}, got v = {v}"
        )));
    }
    if e <= 2 {
        if v != e {
            return Err(Error::InvalidArgument(format!(
                "an {e}-braxtope is a simplex with {} vertices",
                e + 1
            )));
        }
        return Ok(simplex(e));
    }
    Ok(FacetList::from_parts(e, v + 1, braxtope_windows(v, e)))
}

fn braxtope_windows(v: usize, e: usize) -> Vec<VertexSet> {
    let scheme = ClampedIndexScheme::new(v);
    let (vi, ei) = (v as isize, e as isize);
    let mut facets: Vec<VertexSet> = (0..=vi - ei + 1)
        .map(|i| scheme.window(i, i + ei - 1, None))
        .collect();
    for j in 2..=vi {
        let mut f = scheme.window(j - ei + 2, j + ei - 2, Some(j));
        f.insert(0);
        facets.push(f);
    }
    facets
}

fn facet_set_matches(fl: &FacetList, expected: Vec<VertexSet>) -> bool {
    FacetList::from_parts(fl.dim(), fl.num_vertices(), expected).facets() == fl.facets()
}

/// Whether `fl` is a multiplex with its own vertex array.
pub fn is_multiplex(fl: &FacetList) -> bool {
    let d = fl.dim();
    let n = fl.num_vertices();
    if n < d + 1 {
        return false;
    }
    if d < 2 {
        return n == d + 1;
    }
    facet_set_matches(fl, multiplex_windows(n - 1, d))
}

/// Whether `fl` is a braxtope with its own vertex array.
pub fn is_braxtope(fl: &FacetList) -> bool {
    let e = fl.dim();
    let n = fl.num_vertices();
    if n < e + 1 {
        return false;
    }
    if e <= 2 {
        return n == e + 1 && fl.num_facets() == e + 1;
    }
    facet_set_matches(fl, braxtope_windows(n - 1, e))
}

fn proper_faces_satisfy(
    lat: &FaceLattice,
    strictness: Strictness,
    test: impl Fn(&FacetList) -> bool,
) -> bool {
    let d = lat.dim() as isize;
    let lowest = match strictness {
        Strictness::Facets => d - 1,
        Strictness::AllFaces => 1,
    };
    (lowest..d).all(|j| {
        lat.faces(j).iter().all(|face| {
            lat.face_facet_list(face)
                .is_none_or(|sub| test(&sub))
        })
    })
}

/// Whether every facet (every proper face under [`Strictness::AllFaces`])
/// is a multiplex with the induced vertex array.
pub fn is_multiplicial(fl: &FacetList, strictness: Strictness) -> Result<bool> {
    let lat = build_lattice(fl)?;
    Ok(proper_faces_satisfy(&lat, strictness, is_multiplex))
}

/// Gale and multiplicial in the index order.
pub fn is_ordinary(fl: &FacetList, strictness: Strictness) -> Result<bool> {
    Ok(is_gale(fl) && is_multiplicial(fl, strictness)?)
}

/// Whether every facet (every proper face under [`Strictness::AllFaces`])
/// is a braxtope with the induced vertex array.
pub fn is_braxial(fl: &FacetList, strictness: Strictness) -> Result<bool> {
    let lat = build_lattice(fl)?;
    Ok(proper_faces_satisfy(&lat, strictness, is_braxtope))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum BraxialKind {
    Cyclic,
    PeriodicallyCyclic { period: usize },
    Braxtope,
}

impl fmt::Display for BraxialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic => write!(f, "cyclic"),
            Self::PeriodicallyCyclic { period } => write!(f, "periodically_cyclic({period})"),
            Self::Braxtope => write!(f, "braxtope"),
        }
    }
}

/// Where a Gale and braxial polytope sits between cyclic and braxtope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraxialClassification {
    /// Smallest positive `j` from which `{x_j, x_m}` is an edge for every
    /// `j <= i < m`, where `x_m` is the last vertex.
    pub s: usize,
    pub kind: BraxialKind,
    /// Whether `{x_0, x_m}` is an edge as well.
    pub first_vertex_adjacent: bool,
}

/// Classifies a Gale and braxial polytope by the edges at its last vertex.
///
/// With the array `x_0 < ... < x_m` (`m = num_vertices - 1`), the
/// neighbours of `x_m` among `x_1, ..., x_{m-1}` must be exactly
/// `x_s, ..., x_{m-1}`. Then `s = 1` means cyclic, `2 <= s <= m - d`
/// means periodically-cyclic with period `m - s + 2`, and `s = m - d + 1`
/// means braxtope. The vertex `x_0` is reported separately and does not
/// enter `s`.
pub fn classify_gale_braxial(fl: &FacetList) -> Result<BraxialClassification> {
    if !is_gale(fl) {
        return Err(Error::NotGaleBraxial("not Gale in the index order".into()));
    }
    if !is_braxial(fl, Strictness::Facets)? {
        return Err(Error::NotGaleBraxial("a facet is not a braxtope".into()));
    }
    let lat = build_lattice(fl)?;
    let m = fl.num_vertices() - 1;
    let d = fl.dim();
    let nbrs: Vec<usize> = (1..m).filter(|&j| lat.is_edge(j, m)).collect();
    let s = nbrs.first().copied().unwrap_or(m);
    if nbrs != (s..m).collect::<Vec<_>>() {
        return Err(Error::EdgePatternViolation(format!(
            "neighbours of the last vertex: {nbrs:?}"
        )));
    }
    let kind = if s == 1 {
        BraxialKind::Cyclic
    } else if s + d <= m {
        BraxialKind::PeriodicallyCyclic { period: m - s + 2 }
    } else if s == m + 1 - d {
        BraxialKind::Braxtope
    } else {
        return Err(Error::EdgePatternViolation(format!(
            "s = {s} outside 1..={}",
            m + 1 - d
        )));
    };
    Ok(BraxialClassification {
        s,
        kind,
        first_vertex_adjacent: lat.is_edge(0, m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gale::{characteristic, cyclic_facets};
    use crate::lattice::{f_vector, polygon, pyramid, vertex_figure};

    fn sets(list: &[&[usize]]) -> Vec<VertexSet> {
        list.iter().map(|s| VertexSet::from(*s)).collect()
    }

    fn cube() -> FacetList {
        let mut facets = Vec::new();
        for b in 0..3 {
            for val in 0..2 {
                facets.push((0..8).filter(|v| (v >> b) & 1 == val).collect());
            }
        }
        FacetList::new(3, 8, facets).unwrap()
    }

    #[test]
    fn clamped_windows() {
        let s = ClampedIndexScheme::new(4);
        assert_eq!(s.window(-2, 2, Some(0)), VertexSet::from([0, 1, 2]));
        assert_eq!(s.window(3, 7, Some(5)), VertexSet::from([3, 4]));
    }

    #[test]
    fn multiplex_4_3_expansion() {
        let m = multiplex_facets(4, 3).unwrap();
        let expected = FacetList::new(
            3,
            5,
            sets(&[&[0, 1, 2], &[0, 2, 3], &[0, 1, 3, 4], &[1, 2, 4], &[2, 3, 4]]),
        )
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn multiplex_small_cases() {
        for d in 2..7 {
            assert_eq!(multiplex_facets(d, d).unwrap(), simplex(d));
        }
        let m53 = multiplex_facets(5, 3).unwrap();
        assert_eq!(m53.num_facets(), 6);
        assert_eq!(f_vector(&build_lattice(&m53).unwrap()).proper(), &[6, 10, 6]);
        assert!(multiplex_facets(2, 3).is_err());
    }

    #[test]
    fn multiplex_recognition() {
        assert!(is_multiplex(&multiplex_facets(6, 4).unwrap()));
        assert!(!is_multiplex(&cyclic_facets(7, 4).unwrap()));
        assert!(is_multiplex(&simplex(5)));
        assert!(!is_multiplex(&cube()));
    }

    #[test]
    fn multiplicial_examples() {
        assert!(is_multiplicial(&cyclic_facets(8, 4).unwrap(), Strictness::Facets).unwrap());
        let m65 = multiplex_facets(6, 5).unwrap();
        assert!(is_multiplicial(&m65, Strictness::Facets).unwrap());
        assert!(is_multiplicial(&m65, Strictness::AllFaces).unwrap());
        let cube_pyramid = pyramid(&cube());
        assert!(!is_multiplicial(&cube_pyramid, Strictness::Facets).unwrap());
    }

    #[test]
    fn ordinary_examples() {
        assert!(is_ordinary(&cyclic_facets(9, 4).unwrap(), Strictness::Facets).unwrap());
        assert!(is_ordinary(&multiplex_facets(7, 5).unwrap(), Strictness::Facets).unwrap());
        let mut oct = Vec::new();
        for mask in 0..8usize {
            oct.push((0..3).map(|i| i + 3 * ((mask >> i) & 1)).collect());
        }
        let oct = FacetList::new(3, 6, oct).unwrap();
        assert!(!is_ordinary(&oct, Strictness::Facets).unwrap());
    }

    #[test]
    fn ordinary_characteristic_d() {
        assert_eq!(
            ordinary_char_d_facets(6, 5).unwrap(),
            multiplex_facets(6, 5).unwrap()
        );
        let o55 = ordinary_char_d_facets(5, 5).unwrap();
        assert_eq!(o55.num_facets(), 6);
        assert!(o55.facets().iter().all(|f| f.len() <= 2 * 5 - 2));
        assert_eq!(characteristic(&ordinary_char_d_facets(8, 5).unwrap()).unwrap(), 5);
        assert!(ordinary_char_d_facets(8, 4).is_err());
        assert!(ordinary_char_d_facets(8, 3).is_err());
    }

    #[test]
    fn braxtope_4_3_expansion() {
        let b = braxtope_facets(4, 3).unwrap();
        let expected = FacetList::new(
            3,
            5,
            sets(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[0, 1, 3], &[0, 2, 4], &[0, 3, 4]]),
        )
        .unwrap();
        assert_eq!(b, expected);
        assert_eq!(f_vector(&build_lattice(&b).unwrap()).proper(), &[5, 9, 6]);
    }

    #[test]
    fn braxtope_simplex_cases() {
        for e in 1..7 {
            assert_eq!(braxtope_facets(e, e).unwrap(), simplex(e));
        }
    }

    #[test]
    fn braxtope_recognition() {
        assert!(is_braxtope(&braxtope_facets(7, 4).unwrap()));
        assert!(!is_braxtope(&multiplex_facets(5, 4).unwrap()));
        assert!(is_braxtope(&simplex(4)));
        assert!(!is_braxtope(&polygon(4).unwrap()));
    }

    #[test]
    fn braxial_examples() {
        assert!(is_braxial(&braxtope_facets(6, 4).unwrap(), Strictness::Facets).unwrap());
        assert!(is_braxial(&braxtope_facets(6, 4).unwrap(), Strictness::AllFaces).unwrap());
        assert!(is_braxial(&cyclic_facets(8, 4).unwrap(), Strictness::Facets).unwrap());
        assert!(!is_braxial(&pyramid(&cube()), Strictness::Facets).unwrap());
    }

    #[test]
    fn braxtope_vertex_figure_is_multiplex() {
        let vf = vertex_figure(&braxtope_facets(6, 4).unwrap(), 0).unwrap();
        assert_eq!(vf.dim(), 3);
        assert!(is_multiplex(&vf));
    }

    #[test]
    fn classify_examples() {
        let b = classify_gale_braxial(&braxtope_facets(8, 6).unwrap()).unwrap();
        assert_eq!(b.kind, BraxialKind::Braxtope);
        assert_eq!(b.s, 8 - 6 + 1);
        let c = classify_gale_braxial(&cyclic_facets(10, 6).unwrap()).unwrap();
        assert_eq!(c.kind, BraxialKind::Cyclic);
        assert_eq!(c.s, 1);
        assert!(matches!(
            classify_gale_braxial(&braxtope_facets(4, 3).unwrap()),
            Err(Error::NotGaleBraxial(_))
        ));
    }
}
