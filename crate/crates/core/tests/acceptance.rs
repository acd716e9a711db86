//! The nine acceptance criteria. Each test prints one PASS/FAIL line
//! (written past the harness capture so it shows on success too) and then
//! asserts. Expected values come from the oracles in `common`.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::Instant;

use common::*;
use polycyclic::error::Error;
use polycyclic::families::{
    braxtope_facets, classify_gale_braxial, is_braxial, is_multiplex, is_ordinary,
    multiplex_facets, BraxialKind, Strictness,
};
use polycyclic::gale::{characteristic, cyclic_facets, is_gale};
use polycyclic::lattice::{
    build_lattice, dual_lattice, f_vector, flag_vector, is_isomorphic, is_self_dual,
    universal_edges, vertex_figure,
};
use polycyclic::realization::{
    bicyclic_report, detect_period, hull_facets, moment_points, sigma_points,
    trig_moment4_points, FloatSettings,
};
use polycyclic::FacetList;
use rug::Rational;

const ORACLE_GRID: [(usize, usize); 8] =
    [(6, 3), (7, 3), (7, 4), (8, 4), (9, 4), (8, 5), (9, 6), (10, 6)];

fn report(id: u32, name: &str, start: Instant, failures: &[String]) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    let detail = if failures.is_empty() { String::new() } else { format!(": {}", failures.join("; ")) };
    let line = format!(
        "[{verdict}] criterion {id} ({name}) {:.1}s{detail}\n",
        start.elapsed().as_secs_f64()
    );
    let _ = std::io::stdout().lock().write_all(line.as_bytes());
    assert!(failures.is_empty(), "criterion {id} failed: {failures:?}");
}

fn multiplex_grid() -> Vec<(usize, usize)> {
    (3..=6).flat_map(|d| (d + 1..=d + 5).map(move |n| (n, d))).collect()
}

fn braxtope_grid() -> Vec<(usize, usize)> {
    (3..=5).flat_map(|e| (e + 1..=e + 4).map(move |v| (v, e))).collect()
}

fn moment(n: usize, d: usize) -> polycyclic::realization::PointConfig {
    let ts: Vec<Rational> = (1..=n as i64).map(Rational::from).collect();
    moment_points(&ts, d).unwrap()
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (n, d) in ORACLE_GRID {
        let expected = gale_facets(n, d);
        let generated = to_faces(&cyclic_facets(n, d).unwrap());
        let hull = to_faces(&hull_facets(&moment(n, d)).unwrap());
        let independent = integer_hull(&moment_integer_points(n, d));
        if generated != expected {
            failures.push(format!("cyclic_facets({n},{d}) disagrees with the evenness oracle"));
        }
        if hull != expected {
            failures.push(format!("hull of moment({n},{d}) disagrees with the evenness oracle"));
        }
        if independent != expected {
            failures.push(format!("determinant hull of moment({n},{d}) disagrees"));
        }
    }
    report(1, "oracle equivalence", start, &failures);
}

#[test]
fn criterion_2_bicyclic_30() {
    let start = Instant::now();
    let s = FloatSettings::default();
    let r = bicyclic_report(2, 3, 30, s).unwrap();
    let fl = hull_facets(&sigma_points(2, 3, 30, s).unwrap()).unwrap();
    let faces = to_faces(&fl);
    let mut failures = Vec::new();
    if !(r.gale && is_gale_oracle(&fl)) {
        failures.push(format!("gale = {}, oracle = {}", r.gale, is_gale_oracle(&fl)));
    }
    let sizes: BTreeSet<usize> = faces.iter().map(|f| f.len()).collect();
    if !sizes.is_subset(&BTreeSet::from([4, 6])) {
        failures.push(format!("facet sizes {sizes:?}"));
    }
    let shifted: BTreeSet<Face> =
        faces.iter().map(|f| f.iter().map(|v| (v + 1) % 30).collect()).collect();
    if !(r.rotation_invariant && shifted == faces) {
        failures.push("facet set not closed under the index shift".into());
    }
    let census: BTreeMap<usize, usize> = faces.iter().fold(BTreeMap::new(), |mut m, f| {
        *m.entry(f.len()).or_default() += 1;
        m
    });
    if census != r.facet_size_census {
        failures.push(format!("census {:?} vs oracle {census:?}", r.facet_size_census));
    }
    if r.period != Some(12) {
        failures.push(format!("period {:?}, expected Some(12)", r.period));
    }
    report(2, "B(2,3,30)", start, &failures);
}

#[test]
fn criterion_3_gale_divisibility() {
    let start = Instant::now();
    let s = FloatSettings::default();
    let mut failures = Vec::new();
    for (n, want) in [(12, true), (13, false)] {
        let r = bicyclic_report(2, 3, n, s).unwrap();
        let fl = hull_facets(&sigma_points(2, 3, n, s).unwrap()).unwrap();
        if r.gale != want || is_gale_oracle(&fl) != want {
            failures.push(format!("B(2,3,{n}): gale = {}, expected {want}", r.gale));
        }
    }
    report(3, "Gale divisibility", start, &failures);
}

#[test]
fn criterion_4_multiplex_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (n, d) in multiplex_grid() {
        let tag = format!("M({n},{d})");
        let fl = multiplex_facets(n, d).unwrap();
        let faces = to_faces(&fl);
        if faces != multiplex_oracle(n, d) {
            failures.push(format!("{tag}: facets differ from the window rule"));
        }
        if faces.len() != n + 1 {
            failures.push(format!("{tag}: {} facets", faces.len()));
        }
        let lat = Lattice::of(&fl);
        for f in lat.with_dim(d as isize - 1) {
            let sub = lat.face_facets(f);
            let ok = sub == multiplex_oracle(f.len() - 1, d - 1)
                && is_multiplex(&from_faces(d - 1, f.len(), &sub));
            if !ok {
                failures.push(format!("{tag}: facet {f:?} is not a multiplex"));
            }
        }
        for v in 0..=n {
            let (k, fig) = lat.vertex_figure(v);
            let lib_fig = to_faces(&vertex_figure(&fl, v).unwrap());
            if fig != multiplex_oracle(k - 1, d - 1) || lib_fig != fig {
                failures.push(format!("{tag}: vertex figure at {v} is not a multiplex"));
            }
        }
        // vertex i <-> facet i has a symmetric incidence, hence self-dual
        let by_index: Vec<Face> = (0..=n as isize)
            .map(|i| {
                (i - d as isize + 1..=i + d as isize - 1)
                    .filter(|&j| j != i)
                    .map(|j| j.clamp(0, n as isize) as usize)
                    .collect()
            })
            .collect();
        let symmetric = (0..=n).all(|i| (0..=n).all(|j| by_index[i].contains(&j) == by_index[j].contains(&i)));
        if !symmetric || !is_self_dual(&build_lattice(&fl).unwrap()) {
            failures.push(format!("{tag}: not self-dual"));
        }
        if d == 5 {
            let k = lat.neighbours(0).len();
            let ordinary = is_gale_oracle(&fl) && is_ordinary(&fl, Strictness::Facets).unwrap();
            if !ordinary || k != 5 || characteristic(&fl).unwrap() != 5 {
                failures.push(format!("{tag}: ordinary = {ordinary}, characteristic {k}"));
            }
        }
    }
    report(4, "multiplex suite", start, &failures);
}

#[test]
fn criterion_5_flag_identity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (n, d) in multiplex_grid() {
        let m = Lattice::new(&multiplex_oracle(n, d), n + 1).flag_vector();
        let g = n - d + 3;
        let mut p = polygon_oracle(g);
        for k in 0..d - 2 {
            p = pyramid_oracle(&p, g + k);
        }
        let pyr = Lattice::new(&p, g + d - 2).flag_vector();
        let lib: BTreeMap<Vec<usize>, u64> =
            flag_vector(&build_lattice(&multiplex_facets(n, d).unwrap()).unwrap())
                .entries()
                .into_iter()
                .collect();
        if m.len() != 1 << d || m != pyr || lib != m {
            failures.push(format!("M({n},{d})"));
        }
    }
    report(5, "flag-vector identity", start, &failures);
}

#[test]
fn criterion_6_braxtope_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut grid = braxtope_grid();
    // even e = 6 exercises the classification beyond e = 4
    grid.extend((7..=9).map(|v| (v, 6)));
    for (v, e) in grid {
        let tag = format!("B({v},{e})");
        let fl = braxtope_facets(v, e).unwrap();
        let lat = Lattice::of(&fl);
        if fl.num_vertices() != v + 1 || !is_braxial(&fl, Strictness::AllFaces).unwrap() {
            failures.push(format!("{tag}: not braxial"));
        }
        let (k, fig) = lat.vertex_figure(0);
        if fig != multiplex_oracle(k - 1, e - 1) || !is_multiplex(&vertex_figure(&fl, 0).unwrap()) {
            failures.push(format!("{tag}: vertex figure at 0 is not an {}-multiplex", e - 1));
        }
        if !lat.satisfies_euler() || !f_vector(&build_lattice(&fl).unwrap()).satisfies_euler() {
            failures.push(format!("{tag}: Euler relation fails"));
        }
        let gale = is_gale_oracle(&fl);
        if gale != is_gale(&fl) {
            failures.push(format!("{tag}: Gale verdicts disagree"));
        }
        if gale && e % 2 == 1 && to_faces(&fl) != gale_facets(v + 1, e) {
            failures.push(format!("{tag}: odd-dimensional Gale braxial but not cyclic"));
        }
        if gale && e % 2 == 0 {
            let m = v;
            let nbrs = lat.neighbours(m);
            let s = (1..m).find(|&j| nbrs.iter().filter(|&&u| u >= 1).eq((j..m).collect::<Vec<_>>().iter())).unwrap();
            let c = classify_gale_braxial(&fl).unwrap();
            if c.kind != BraxialKind::Braxtope || c.s != m - e + 1 || s != c.s {
                failures.push(format!("{tag}: classified {} with s = {} (oracle s = {s})", c.kind, c.s));
            }
        }
    }
    report(6, "braxtope suite", start, &failures);
}

#[test]
fn criterion_7_cyclic_properties() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (n, d) in ORACLE_GRID {
        let tag = format!("C({n},{d})");
        let fl = cyclic_facets(n, d).unwrap();
        let faces = to_faces(&fl);
        // simplicial facets are simplices, which are multiplexes
        if !(is_gale_oracle(&fl) && is_ordinary(&fl, Strictness::Facets).unwrap()) {
            failures.push(format!("{tag}: not ordinary"));
        }
        let lat = Lattice::of(&fl);
        let oracle_k = lat.neighbours(0).len();
        if characteristic(&fl).unwrap() != n - 1 || oracle_k != n - 1 {
            failures.push(format!("{tag}: characteristic"));
        }
        let reversed: BTreeSet<Face> =
            faces.iter().map(|f| f.iter().map(|v| n - 1 - v).collect()).collect();
        if reversed != faces {
            failures.push(format!("{tag}: reversal is not an automorphism"));
        }
    }
    for n in 7..=10 {
        let fl = cyclic_facets(n, 4).unwrap();
        let lat = Lattice::of(&fl);
        let oracle_u = lat
            .with_dim(1)
            .filter(|e| {
                (0..n).all(|v| {
                    let mut s = (*e).clone();
                    s.insert(v);
                    lat.faces.contains_key(&s)
                })
            })
            .count();
        let u = universal_edges(&build_lattice(&fl).unwrap()).len();
        if u != n || oracle_u != n {
            failures.push(format!("C({n},4): {u} universal edges (oracle {oracle_u})"));
        }
    }
    report(7, "cyclic-polytope properties", start, &failures);
}

#[test]
fn criterion_8_trig_hulls() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 6..=10 {
        match trig_moment4_points(n, FloatSettings::default()).and_then(|pc| hull_facets(&pc)) {
            Ok(fl) if to_faces(&fl) == gale_facets(n, 4) => {}
            Ok(_) => failures.push(format!("n = {n}: hull is not C({n},4)")),
            Err(e) => failures.push(format!("n = {n}: {e}")),
        }
    }
    report(8, "trigonometric moment curve", start, &failures);
}

#[test]
fn criterion_9_property_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut lists: Vec<(String, FacetList)> = Vec::new();
    for (n, d) in multiplex_grid() {
        lists.push((format!("M({n},{d})"), multiplex_facets(n, d).unwrap()));
    }
    for (v, e) in braxtope_grid() {
        lists.push((format!("B({v},{e})"), braxtope_facets(v, e).unwrap()));
    }
    for (n, d) in ORACLE_GRID {
        lists.push((format!("C({n},{d})"), cyclic_facets(n, d).unwrap()));
    }
    for n in 6..=10 {
        let fl = hull_facets(&trig_moment4_points(n, FloatSettings::default()).unwrap()).unwrap();
        lists.push((format!("trig({n})"), fl));
    }
    let s = FloatSettings::default();
    for n in [12, 13, 30] {
        let fl = hull_facets(&sigma_points(2, 3, n, s).unwrap()).unwrap();
        lists.push((format!("B(2,3,{n})"), fl));
    }
    for (tag, fl) in &lists {
        let lat = build_lattice(fl).unwrap();
        if !f_vector(&lat).satisfies_euler() {
            failures.push(format!("{tag}: Euler relation fails"));
        }
        if fl.num_vertices() <= 12 && !Lattice::of(fl).satisfies_euler() {
            failures.push(format!("{tag}: oracle Euler relation fails"));
        }
        if is_isomorphic(&lat, &dual_lattice(&dual_lattice(&lat))).is_none() {
            failures.push(format!("{tag}: dual of dual differs"));
        }
    }
    let periods = [
        ("moment(9,4)", detect_period(&moment(9, 4))),
        ("moment(10,6)", detect_period(&moment(10, 6))),
        ("B(2,3,12)", detect_period(&sigma_points(2, 3, 12, s).unwrap())),
        ("B(2,3,30)", detect_period(&sigma_points(2, 3, 30, s).unwrap())),
    ];
    for (tag, r) in periods {
        match r {
            Ok(_) | Err(Error::NotPeriodicallyCyclic(_)) => {}
            Err(e) => failures.push(format!("{tag}: {e}")),
        }
    }
    for n in [12, 13, 30] {
        if let Err(e) = bicyclic_report(2, 3, n, s) {
            failures.push(format!("B(2,3,{n}): {e}"));
        }
    }
    report(9, "property suite", start, &failures);
}
