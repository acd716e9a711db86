use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::hull::hull_facets;
use super::PointConfig;
use crate::error::{Error, Result};
use crate::gale::{cyclic_facets, is_gale};
use crate::lattice::{build_lattice, universal_edges};
use crate::FacetList;

/// Largest vertex count for the exhaustive vertex-array search.
pub const EXHAUSTIVE_LIMIT: usize = 8;

/// Which stage of the search produced a cyclic vertex array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchPath {
    IndexOrder,
    Reversed,
    UniversalEdgeCycle,
    Exhaustive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicityReport {
    pub cyclic: bool,
    /// `order[p]` is the point at position `p` of a cyclic vertex array.
    pub order: Option<Vec<usize>>,
    pub path: Option<SearchPath>,
    pub reason: Option<String>,
}

impl CyclicityReport {
    /// Whether the index order (or its reversal) was already a cyclic array.
    pub fn induced_order_sufficed(&self) -> bool {
        matches!(self.path, Some(SearchPath::IndexOrder | SearchPath::Reversed))
    }

    fn negative(reason: impl Into<String>) -> Self {
        Self {
            cyclic: false,
            order: None,
            path: None,
            reason: Some(reason.into()),
        }
    }
}

pub fn is_cyclic_polytope(pc: &PointConfig) -> Result<bool> {
    Ok(cyclicity(pc)?.cyclic)
}

/// Decides whether the hull of `pc` is combinatorially a cyclic polytope
/// with all points as vertices, and records how the vertex array was found.
pub fn cyclicity(pc: &PointConfig) -> Result<CyclicityReport> {
    let fl = match hull_facets(pc) {
        Ok(fl) => fl,
        Err(Error::NonVertices(v)) => {
            return Ok(CyclicityReport::negative(format!("points {v:?} are not vertices")))
        }
        Err(e) => return Err(e),
    };
    if !fl.is_simplicial() {
        return Ok(CyclicityReport::negative("hull is not simplicial"));
    }
    Ok(match find_cyclic_order(&fl)? {
        Some((order, path)) => CyclicityReport {
            cyclic: true,
            order: Some(order),
            path: Some(path),
            reason: None,
        },
        None => CyclicityReport::negative("no vertex array satisfies Gale's evenness condition"),
    })
}

/// Searches a vertex array under which `fl` is exactly `C(n, d)`: the index
/// order and its reversal, then linearizations of the universal-edge cycle
/// (even `d`), then all arrays for small `n`.
pub fn find_cyclic_order(fl: &FacetList) -> Result<Option<(Vec<usize>, SearchPath)>> {
    let n = fl.num_vertices();
    let d = fl.dim();
    if d < 2 || n <= d || !fl.is_simplicial() {
        return Ok(None);
    }
    let target = cyclic_facets(n, d)?;
    if target.num_facets() != fl.num_facets() {
        return Ok(None);
    }
    let identity: Vec<usize> = (0..n).collect();
    if *fl == target {
        return Ok(Some((identity, SearchPath::IndexOrder)));
    }
    if fl.reversed() == target {
        return Ok(Some((identity.into_iter().rev().collect(), SearchPath::Reversed)));
    }
    if d.is_multiple_of(2) {
        let lat = build_lattice(fl)?;
        if let Some(cycle) = hamiltonian_cycle(n, &universal_edges(&lat)) {
            for start in 0..n {
                for dir in [1, n - 1] {
                    let order: Vec<usize> = (0..n).map(|i| cycle[(start + dir * i) % n]).collect();
                    if fl.reorder(&order) == target {
                        return Ok(Some((order, SearchPath::UniversalEdgeCycle)));
                    }
                }
            }
        }
    }
    if n <= EXHAUSTIVE_LIMIT {
        let found = (0..n)
            .permutations(n)
            .find(|order| order[0] < order[n - 1] && fl.reorder(order) == target);
        return Ok(found.map(|o| (o, SearchPath::Exhaustive)));
    }
    Ok(None)
}

/// The cycle through all `n` vertices formed by `edges`, if they form one.
fn hamiltonian_cycle(n: usize, edges: &[crate::VertexSet]) -> Option<Vec<usize>> {
    if edges.len() != n {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        let v = e.to_vec();
        adj[v[0]].push(v[1]);
        adj[v[1]].push(v[0]);
    }
    if adj.iter().any(|a| a.len() != 2) {
        return None;
    }
    let mut cycle = vec![0];
    let mut prev = 0;
    let mut cur = adj[0][0];
    while cur != 0 {
        cycle.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    (cycle.len() == n).then_some(cycle)
}

/// Cyclicity of every window of one size.
#[derive(Clone, Debug, Serialize)]
pub struct WindowLevel {
    pub size: usize,
    /// `cyclic[i]` is the verdict for points `i..i + size`.
    pub cyclic: Vec<bool>,
}

impl WindowLevel {
    pub fn all_cyclic(&self) -> bool {
        self.cyclic.iter().all(|&c| c)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodReport {
    pub period: usize,
    pub levels: Vec<WindowLevel>,
}

/// Why a configuration has no period.
#[derive(Clone, Debug, Serialize)]
pub struct PeriodDiagnostics {
    /// Largest window size at which every window is cyclic, if any.
    pub max_all_cyclic: Option<usize>,
    /// `(start, size)` of windows that break the definition.
    pub violating_windows: Vec<(usize, usize)>,
    pub levels: Vec<WindowLevel>,
}

impl fmt::Display for PeriodDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max_all_cyclic {
            Some(k) => write!(f, "all {k}-windows are cyclic")?,
            None => write!(f, "some smallest window is not cyclic")?,
        }
        if !self.violating_windows.is_empty() {
            write!(f, "; violating windows (start, size):")?;
            for (s, k) in &self.violating_windows {
                write!(f, " ({s}, {k})")?;
            }
        }
        Ok(())
    }
}

/// The period `k` of a Gale configuration: every window of `k` consecutive
/// points spans a cyclic polytope and no window of `k + 1` does.
///
/// Windows are taken over the linear array. The check that cyclic windows
/// have cyclic subwindows runs on every call and raises
/// [`Error::SelfConsistency`] if it ever fails.
pub fn detect_period(pc: &PointConfig) -> Result<PeriodReport> {
    let fl = hull_facets(pc)?;
    if !is_gale(&fl) {
        return Err(Error::NotGale);
    }
    let n = pc.len();
    let d = pc.dim();
    let mut levels: Vec<WindowLevel> = Vec::new();
    for size in d + 2..=n {
        let cyclic = (0..=n - size)
            .into_par_iter()
            .map(|start| is_cyclic_polytope(&pc.window(start, size)?))
            .collect::<Result<Vec<bool>>>()?;
        let level = WindowLevel { size, cyclic };
        let done = !level.all_cyclic();
        levels.push(level);
        if done {
            break;
        }
    }
    resolve_period(levels, n, d)
}

/// Applies the definition of the period to window verdicts computed up to
/// the first size at which some window is not cyclic.
fn resolve_period(levels: Vec<WindowLevel>, n: usize, d: usize) -> Result<PeriodReport> {
    check_monotone(&levels)?;
    let Some(last) = levels.last() else {
        return Err(Error::InvalidArgument(format!("need at least {} points", d + 2)));
    };
    if last.all_cyclic() {
        return Ok(PeriodReport { period: n, levels });
    }
    let period = last.size - 1;
    let (cyclic, not_cyclic): (Vec<usize>, Vec<usize>) =
        (0..last.cyclic.len()).partition(|&i| last.cyclic[i]);
    if period >= d + 2 && cyclic.is_empty() {
        return Ok(PeriodReport { period, levels });
    }
    let culprits = if period < d + 2 { not_cyclic } else { cyclic };
    let size = last.size;
    Err(Error::NotPeriodicallyCyclic(Box::new(PeriodDiagnostics {
        max_all_cyclic: (period >= d + 2).then_some(period),
        violating_windows: culprits.into_iter().map(|i| (i, size)).collect(),
        levels,
    })))
}

fn check_monotone(levels: &[WindowLevel]) -> Result<()> {
    for pair in levels.windows(2) {
        let (lo, hi) = (&pair[0], &pair[1]);
        for (i, &c) in hi.cyclic.iter().enumerate() {
            if c && !(lo.cyclic[i] && lo.cyclic[i + 1]) {
                return Err(Error::SelfConsistency(format!(
                    "window ({i}, {}) is cyclic but a subwindow of size {} is not",
                    hi.size, lo.size
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use rug::Rational;

    use super::*;
    use crate::realization::moment_points;

    fn moment(n: i64, d: usize) -> PointConfig {
        moment_points(&(1..=n).map(Rational::from).collect::<Vec<_>>(), d).unwrap()
    }

    #[test]
    fn moment_curve_is_cyclic_in_index_order() {
        let r = cyclicity(&moment(8, 4)).unwrap();
        assert!(r.cyclic && r.induced_order_sufficed());
        assert_eq!(r.path, Some(SearchPath::IndexOrder));
    }

    #[test]
    fn shuffled_points_found_via_universal_edges() {
        let pc = moment(9, 4);
        let order = [4, 0, 7, 2, 8, 1, 5, 3, 6];
        let shuffled = pc.subset(&order).unwrap();
        let r = cyclicity(&shuffled).unwrap();
        assert!(r.cyclic);
        assert_eq!(r.path, Some(SearchPath::UniversalEdgeCycle));
        assert!(!r.induced_order_sufficed());
        let fl = hull_facets(&shuffled).unwrap();
        assert_eq!(fl.reorder(r.order.as_ref().unwrap()), cyclic_facets(9, 4).unwrap());
    }

    #[test]
    fn odd_dimension_falls_back_to_exhaustive() {
        let pc = moment(7, 3);
        let shuffled = pc.subset(&[3, 0, 6, 1, 5, 2, 4]).unwrap();
        let r = cyclicity(&shuffled).unwrap();
        assert_eq!(r.path, Some(SearchPath::Exhaustive));
    }

    #[test]
    fn non_simplicial_hull_is_not_cyclic() {
        let q = |v: i64| Rational::from(v);
        let pts = (0..8)
            .map(|m: i64| vec![q(m & 1), q((m >> 1) & 1), q((m >> 2) & 1)])
            .collect();
        let r = cyclicity(&PointConfig::exact(3, pts).unwrap()).unwrap();
        assert!(!r.cyclic);
    }

    #[test]
    fn moment_curve_period_is_n() {
        let r = detect_period(&moment(9, 4)).unwrap();
        assert_eq!(r.period, 9);
        assert!(r.levels.iter().all(WindowLevel::all_cyclic));
    }

    fn level(size: usize, verdicts: &[bool]) -> WindowLevel {
        WindowLevel {
            size,
            cyclic: verdicts.to_vec(),
        }
    }

    #[test]
    fn period_definition_on_window_verdicts() {
        // n = 9, d = 4: all 7-windows cyclic, one of two 8-windows cyclic
        let mixed = vec![
            level(6, &[true; 4]),
            level(7, &[true; 3]),
            level(8, &[true, false]),
        ];
        match resolve_period(mixed, 9, 4) {
            Err(Error::NotPeriodicallyCyclic(diag)) => {
                assert_eq!(diag.max_all_cyclic, Some(7));
                assert_eq!(diag.violating_windows, vec![(0, 8)]);
            }
            other => panic!("{other:?}"),
        }
        let clean = vec![level(6, &[true; 4]), level(7, &[true; 3]), level(8, &[false, false])];
        assert_eq!(resolve_period(clean, 9, 4).unwrap().period, 7);
        let none = vec![level(6, &[true, false, true, true])];
        assert!(matches!(
            resolve_period(none, 9, 4),
            Err(Error::NotPeriodicallyCyclic(d)) if d.max_all_cyclic.is_none()
        ));
    }

    #[test]
    fn non_monotone_verdicts_fire_the_self_check() {
        let broken = vec![level(6, &[true, false, true, true]), level(7, &[true, true, true])];
        assert!(matches!(resolve_period(broken, 9, 4), Err(Error::SelfConsistency(_))));
    }
}
