//! The checkable claims as a scripted suite, shared by `repro all`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rug::Rational;

use crate::error::{Error, Result};
use crate::families::{
    braxtope_facets, classify_gale_braxial, is_braxial, is_multiplex, is_ordinary,
    multiplex_facets, BraxialKind, Strictness,
};
use crate::gale::{characteristic, cyclic_facets, is_gale};
use crate::lattice::{
    build_lattice, dual_lattice, f_vector, flag_vector, is_isomorphic, is_isomorphism,
    is_self_dual, polygon, pyramid, universal_edges, vertex_figure, FaceLattice,
};
use crate::realization::{
    bicyclic_report, detect_period, hull_facets, moment_points, trig_moment4_points,
    FloatSettings,
};
use crate::FacetList;

pub const ORACLE_GRID: [(usize, usize); 8] =
    [(6, 3), (7, 3), (7, 4), (8, 4), (9, 4), (8, 5), (9, 6), (10, 6)];

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub anchor: &'static str,
    check: fn() -> Result<Outcome>,
}

pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let (passed, detail) = match (self.check)() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        CriterionResult {
            id: self.id,
            name: self.name,
            anchor: self.anchor,
            passed,
            detail,
            elapsed: start.elapsed(),
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "oracle equivalence",
            anchor: "moment-curve hulls realize Gale's evenness condition",
            check: oracle_equivalence,
        },
        Criterion {
            id: 2,
            name: "B(2,3,30)",
            anchor: "B(2,3,30) is Gale and periodically-cyclic with k = 12",
            check: bicyclic_30,
        },
        Criterion {
            id: 3,
            name: "Gale divisibility",
            anchor: "B(p,q,n) is Gale iff q divides n",
            check: gale_divisibility,
        },
        Criterion {
            id: 4,
            name: "multiplex suite",
            anchor: "multiplex facets and vertex figures are multiplexes; self-dual; char d",
            check: multiplex_suite,
        },
        Criterion {
            id: 5,
            name: "flag-vector identity",
            anchor: "M(n,d) shares its flag vector with a (d-2)-fold pyramid over a polygon",
            check: flag_identity,
        },
        Criterion {
            id: 6,
            name: "braxtope suite",
            anchor: "braxtopes are braxial with multiplex vertex figures",
            check: braxtope_suite,
        },
        Criterion {
            id: 7,
            name: "cyclic-polytope properties",
            anchor: "C(n,d) is ordinary, reversible, and has n universal edges for d = 4",
            check: cyclic_properties,
        },
        Criterion {
            id: 8,
            name: "trigonometric moment curve",
            anchor: "evenly spaced points on the trigonometric moment curve span C(n,4)",
            check: trig_hulls,
        },
        Criterion {
            id: 9,
            name: "property suite",
            anchor: "Euler relation, dual of dual, period self-check, precision",
            check: property_suite,
        },
    ]
}

pub fn run_all() -> Vec<CriterionResult> {
    criteria().iter().map(Criterion::run).collect()
}

fn outcome(failures: Vec<String>, ok: impl Into<String>) -> Result<Outcome> {
    Ok(if failures.is_empty() {
        Outcome {
            passed: true,
            detail: ok.into(),
        }
    } else {
        Outcome {
            passed: false,
            detail: failures.join("; "),
        }
    })
}

fn moment(n: usize, d: usize) -> Result<crate::realization::PointConfig> {
    let ts: Vec<Rational> = (1..=n as i64).map(Rational::from).collect();
    moment_points(&ts, d)
}

fn oracle_equivalence() -> Result<Outcome> {
    let mut failures = Vec::new();
    for (n, d) in ORACLE_GRID {
        if hull_facets(&moment(n, d)?)? != cyclic_facets(n, d)? {
            failures.push(format!("C({n},{d}) differs from its moment-curve hull"));
        }
    }
    outcome(failures, format!("{} cases equal", ORACLE_GRID.len()))
}

fn bicyclic_30() -> Result<Outcome> {
    let r = bicyclic_report(2, 3, 30, FloatSettings::default())?;
    let mut failures = Vec::new();
    if !r.gale {
        failures.push("not Gale".to_string());
    }
    if r.period != Some(12) {
        failures.push(format!("period {:?}, expected 12", r.period));
    }
    let sizes: BTreeSet<usize> = r.facet_size_census.keys().copied().collect();
    if !sizes.is_subset(&BTreeSet::from([4, 6])) {
        failures.push(format!("facet sizes {sizes:?}"));
    }
    if !r.rotation_invariant {
        failures.push("not rotation invariant".to_string());
    }
    outcome(failures, "gale, period 12, sizes {4,6}, rotation invariant")
}

fn gale_divisibility() -> Result<Outcome> {
    let s = FloatSettings::default();
    let g12 = bicyclic_report(2, 3, 12, s)?.gale;
    let g13 = bicyclic_report(2, 3, 13, s)?.gale;
    let mut failures = Vec::new();
    if !g12 {
        failures.push("B(2,3,12) not Gale".to_string());
    }
    if g13 {
        failures.push("B(2,3,13) Gale".to_string());
    }
    outcome(failures, "B(2,3,12) Gale, B(2,3,13) not")
}

pub(crate) fn multiplex_grid() -> impl Iterator<Item = (usize, usize)> {
    (3..=6).flat_map(|d| (d + 1..=d + 5).map(move |n| (n, d)))
}

fn multiplex_suite() -> Result<Outcome> {
    let mut failures = Vec::new();
    for (n, d) in multiplex_grid() {
        let fl = multiplex_facets(n, d)?;
        let lat = build_lattice(&fl)?;
        let tag = format!("M({n},{d})");
        if fl.num_facets() != n + 1 {
            failures.push(format!("{tag}: {} facets", fl.num_facets()));
        }
        for f in lat.facets() {
            let ok = lat.face_facet_list(f).is_some_and(|sub| is_multiplex(&sub));
            if !ok {
                failures.push(format!("{tag}: facet {f} is not a multiplex"));
            }
        }
        for v in 0..fl.num_vertices() {
            if !is_multiplex(&vertex_figure(&fl, v)?) {
                failures.push(format!("{tag}: vertex figure at {v} is not a multiplex"));
            }
        }
        if !is_self_dual(&lat) {
            failures.push(format!("{tag}: not self-dual"));
        }
        if d == 5 {
            if !is_ordinary(&fl, Strictness::Facets)? {
                failures.push(format!("{tag}: not ordinary"));
            }
            let k = characteristic(&fl)?;
            if k != 5 {
                failures.push(format!("{tag}: characteristic {k}"));
            }
        }
    }
    outcome(failures, "20 multiplexes checked")
}

pub(crate) fn iterated_pyramid(base: FacetList, times: usize) -> FacetList {
    (0..times).fold(base, |p, _| pyramid(&p))
}

fn flag_identity() -> Result<Outcome> {
    let mut failures = Vec::new();
    for (n, d) in multiplex_grid() {
        let m = flag_vector(&build_lattice(&multiplex_facets(n, d)?)?);
        let p = iterated_pyramid(polygon(n - d + 3)?, d - 2);
        if m != flag_vector(&build_lattice(&p)?) {
            failures.push(format!("M({n},{d})"));
        }
    }
    outcome(failures, "20 flag vectors equal")
}

pub(crate) fn braxtope_grid() -> impl Iterator<Item = (usize, usize)> {
    (3..=5).flat_map(|e| (e + 1..=e + 4).map(move |v| (v, e)))
}

fn braxtope_suite() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut classified = 0;
    for (v, e) in braxtope_grid() {
        let fl = braxtope_facets(v, e)?;
        let tag = format!("B({v},{e})");
        if !is_braxial(&fl, Strictness::AllFaces)? {
            failures.push(format!("{tag}: not braxial"));
        }
        let fig = vertex_figure(&fl, 0)?;
        if fig.dim() != e - 1 || !is_multiplex(&fig) {
            failures.push(format!("{tag}: vertex figure at 0 is not an {}-multiplex", e - 1));
        }
        if !f_vector(&build_lattice(&fl)?).satisfies_euler() {
            failures.push(format!("{tag}: Euler relation fails"));
        }
        if is_gale(&fl) {
            classified += 1;
            let c = classify_gale_braxial(&fl)?;
            if c.kind != BraxialKind::Braxtope || c.s != v - e + 1 {
                failures.push(format!("{tag}: classified {} with s = {}", c.kind, c.s));
            }
        }
    }
    outcome(failures, format!("12 braxtopes checked, {classified} Gale and classified"))
}

fn cyclic_properties() -> Result<Outcome> {
    let mut failures = Vec::new();
    for (n, d) in ORACLE_GRID {
        let fl = cyclic_facets(n, d)?;
        let tag = format!("C({n},{d})");
        if !is_ordinary(&fl, Strictness::Facets)? {
            failures.push(format!("{tag}: not ordinary"));
        }
        let k = characteristic(&fl)?;
        if k != n - 1 {
            failures.push(format!("{tag}: characteristic {k}"));
        }
        let lat = build_lattice(&fl)?;
        let rev: Vec<usize> = (0..n).rev().collect();
        if !is_isomorphism(&lat, &lat, &rev) {
            failures.push(format!("{tag}: reversal is not an automorphism"));
        }
    }
    for n in 7..=10 {
        let u = universal_edges(&build_lattice(&cyclic_facets(n, 4)?)?).len();
        if u != n {
            failures.push(format!("C({n},4): {u} universal edges"));
        }
    }
    outcome(failures, "ordinary, char n-1, reversal, u = n")
}

fn trig_hulls() -> Result<Outcome> {
    let mut failures = Vec::new();
    for n in 6..=10 {
        let fl = hull_facets(&trig_moment4_points(n, FloatSettings::default())?)?;
        if fl != cyclic_facets(n, 4)? {
            failures.push(format!("n = {n}"));
        }
    }
    outcome(failures, "n = 6..10 equal C(n,4)")
}

fn property_suite() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut lattices: Vec<(String, FaceLattice)> = Vec::new();
    for (n, d) in multiplex_grid() {
        lattices.push((format!("M({n},{d})"), build_lattice(&multiplex_facets(n, d)?)?));
    }
    for (v, e) in braxtope_grid() {
        lattices.push((format!("B({v},{e})"), build_lattice(&braxtope_facets(v, e)?)?));
    }
    for (n, d) in ORACLE_GRID {
        lattices.push((format!("C({n},{d})"), build_lattice(&cyclic_facets(n, d)?)?));
    }
    for (tag, lat) in &lattices {
        if !f_vector(lat).satisfies_euler() {
            failures.push(format!("{tag}: Euler relation fails"));
        }
        let dd = dual_lattice(&dual_lattice(lat));
        if is_isomorphic(lat, &dd).is_none() {
            failures.push(format!("{tag}: dual of dual differs"));
        }
    }
    let s = FloatSettings::default();
    let checks: [(&str, Result<()>); 3] = [
        ("moment period", detect_period(&moment(9, 4)?).map(|_| ())),
        (
            "B(2,3,30) period",
            detect_period(&crate::realization::sigma_points(2, 3, 30, s)?).map(|_| ()),
        ),
        (
            "trigonometric hulls",
            (6..=10).try_for_each(|n| hull_facets(&trig_moment4_points(n, s)?).map(|_| ())),
        ),
    ];
    for (what, r) in checks {
        match r {
            Err(e @ (Error::SelfConsistency(_) | Error::PrecisionAmbiguous(_))) => {
                failures.push(format!("{what}: {e}"))
            }
            Err(Error::NotPeriodicallyCyclic(_)) | Ok(()) => {}
            Err(e) => failures.push(format!("{what}: {e}")),
        }
    }
    for n in [12, 13] {
        if let Err(e @ Error::PrecisionAmbiguous(_)) = bicyclic_report(2, 3, n, s) {
            failures.push(format!("B(2,3,{n}): {e}"));
        }
    }
    outcome(failures, format!("{} lattices checked", lattices.len()))
}
