//! End-to-end runs of the `polycyclic` binary.

use std::path::Path;
use std::process::{Command, Output};

use polycyclic::FacetList;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_str = path.to_str().unwrap().to_string();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path_str]);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    path_str
}

#[test]
fn generated_families_pass_their_own_checks() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, &[&str], &str); 4] = [
        ("c.json", &["cyclic", "--n", "8", "--d", "4"], "gale"),
        ("m.json", &["multiplex", "--n", "7", "--d", "4"], "multiplex"),
        ("b.json", &["braxtope", "--v", "7", "--e", "4"], "braxtope"),
        ("b2.json", &["braxtope", "--v", "7", "--e", "4"], "braxial"),
    ];
    for (name, args, prop) in cases {
        let file = gen_to(dir.path(), name, args);
        let o = run(&["check", prop, &file]);
        assert_eq!(o.status.code(), Some(0), "{prop} on {name}");
        assert_eq!(stdout(&o).trim(), format!("{prop}: true"));
    }
}

#[test]
fn false_property_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = gen_to(dir.path(), "c.json", &["cyclic", "--n", "7", "--d", "4"]);
    let o = run(&["check", "multiplex", &file]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "multiplex: false");
}

#[test]
fn errors_exit_two() {
    assert_eq!(run(&["gen", "cyclic", "--n", "3", "--d", "4"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "cyclic", "--n", "x"]).status.code(), Some(2));
    assert_eq!(run(&["hull", "/nonexistent/points.json"]).status.code(), Some(2));
    let o = run(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn generation_is_deterministic() {
    let a = run(&["gen", "multiplex", "--n", "9", "--d", "5"]);
    let b = run(&["gen", "multiplex", "--n", "9", "--d", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let fl = FacetList::from_json(&stdout(&a)).unwrap();
    assert_eq!(fl.num_vertices(), 10);
    assert_eq!(fl.num_facets(), 10);
}

#[test]
fn moment_hull_matches_generator() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("p.json");
    let pts = pts.to_str().unwrap();
    let o = run(&["points", "moment", "--d", "4", "--n", "8", "-o", pts]);
    assert_eq!(o.status.code(), Some(0));
    let hull = run(&["hull", pts]);
    let generated = run(&["gen", "cyclic", "--n", "8", "--d", "4"]);
    assert_eq!(
        FacetList::from_json(&stdout(&hull)).unwrap(),
        FacetList::from_json(&stdout(&generated)).unwrap()
    );
    let period = run(&["period", pts]);
    assert_eq!(period.status.code(), Some(0));
    assert!(stdout(&period).contains('8'));
}

#[test]
fn analyze_formats() {
    let dir = tempfile::tempdir().unwrap();
    let file = gen_to(dir.path(), "c.json", &["cyclic", "--n", "7", "--d", "4"]);
    assert_eq!(stdout(&run(&["analyze", "fvector", &file])).trim(), "f-vector: (7,21,28,14)");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["analyze", "fvector", &file, "--format", "json"]))).unwrap();
    assert_eq!(json["f"], serde_json::json!([7, 21, 28, 14]));
    let csv = stdout(&run(&["analyze", "flagvector", &file, "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("dimension-set,count"));
    assert_eq!(lines.count(), 16);
    assert_eq!(stdout(&run(&["analyze", "char", &file])).trim(), "characteristic: 6");
}

#[test]
fn pyramid_and_multiplex_are_not_isomorphic_but_share_flags() {
    let dir = tempfile::tempdir().unwrap();
    let m = gen_to(dir.path(), "m.json", &["multiplex", "--n", "6", "--d", "4"]);
    let p = gen_to(dir.path(), "p.json", &["pyramid", "--polygon", "5", "--times", "2"]);
    let fm = stdout(&run(&["analyze", "flagvector", &m, "--format", "json"]));
    let fp = stdout(&run(&["analyze", "flagvector", &p, "--format", "json"]));
    assert_eq!(fm, fp);
    let o = run(&["compare", "--iso", &m, &p]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bicyclic"));
}
