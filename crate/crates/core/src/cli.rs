//! Command-line front end. [`run`] takes the argument vector and two output
//! streams and returns the process exit code: 0 for success or a true
//! property, 1 for a false property, 2 for errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::Rational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{
    braxtope_facets, classify_gale_braxial, is_braxial, is_braxtope, is_multiplex,
    is_multiplicial, is_ordinary, multiplex_facets, Strictness,
};
use crate::gale::{characteristic, cyclic_facets, is_gale};
use crate::lattice::{
    build_lattice, f_vector, flag_vector, is_isomorphic, is_neighbourly, is_self_dual, polygon,
    universal_edges,
};
use crate::realization::{
    bicyclic_report, detect_period, hull_facets, moment_points, parse_rational, psi_points,
    sigma_points, trig_moment4_points, verify_pc_step, FloatSettings, PointConfig,
};
use crate::repro::{iterated_pyramid, run_all};
use crate::FacetList;

const TRUE: i32 = 0;
const FALSE: i32 = 1;
const FAILURE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "polycyclic",
    version,
    about = "Generate and verify cyclic polytopes and their generalizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the facet list of a combinatorial family.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Sample points on one of the curves.
    Points {
        #[command(subcommand)]
        curve: CurveCmd,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Facet list of the convex hull of a point configuration.
    Hull {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test a property of a facet list under its index order.
    Check {
        property: Property,
        input: PathBuf,
        /// Check every proper face rather than only the facets.
        #[arg(long)]
        all_faces: bool,
    },
    /// Compute an invariant of a facet list.
    Analyze {
        invariant: Invariant,
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Period of a Gale point configuration.
    Period {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report on the bi-cyclic polytope B(p, q, n).
    Bicyclic {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        float: FloatArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare two facet lists.
    Compare {
        /// Test combinatorial isomorphism of the face lattices.
        #[arg(long, required = true)]
        iso: bool,
        a: PathBuf,
        b: PathBuf,
    },
    /// Check the last point of a configuration against PC1-PC3.
    VerifyPc {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the scripted acceptance checks.
    Repro { target: ReproTarget },
}

#[derive(Subcommand)]
enum Family {
    /// Cyclic polytope C(n, d) on n vertices.
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Multiplex M(n, d) on n + 1 vertices.
    Multiplex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Braxtope on v + 1 vertices in dimension e.
    Braxtope {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        e: usize,
    },
    /// Polygon with g vertices.
    Polygon {
        #[arg(long)]
        g: usize,
    },
    /// Iterated pyramid over a polygon or over a facet list read from a file.
    Pyramid {
        #[arg(long, conflicts_with = "base", required_unless_present = "base")]
        polygon: Option<usize>,
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Exact points (t, t^2, ..., t^d); parameters 1..=n unless --ts is given.
    Moment {
        #[arg(long)]
        d: usize,
        #[arg(long, required_unless_present = "ts")]
        n: Option<usize>,
        /// Comma-separated rationals such as 1/2,1,3.
        #[arg(long, value_delimiter = ',')]
        ts: Option<Vec<String>>,
    },
    /// Spherical curve; parameters are fractions of pi in (0, 1).
    Psi {
        #[arg(long)]
        m: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        ts: Vec<String>,
        #[command(flatten)]
        float: FloatArgs,
    },
    /// n evenly spaced points on the trigonometric moment curve in R^4.
    Trig4 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        float: FloatArgs,
    },
    /// The points b_0, ..., b_{n-1} of B(p, q, n).
    Sigma {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        float: FloatArgs,
    },
}

#[derive(Args)]
struct FloatArgs {
    /// Mantissa bits for float mode.
    #[arg(long, default_value_t = 256)]
    bits: u32,
    /// Absolute tolerance for float mode.
    #[arg(long, default_value_t = 1e-30)]
    eps: f64,
}

impl FloatArgs {
    fn settings(&self) -> FloatSettings {
        FloatSettings {
            precision_bits: self.bits,
            eps: self.eps,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Gale,
    Ordinary,
    Multiplicial,
    Braxial,
    Multiplex,
    Braxtope,
    Neighbourly,
    Selfdual,
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Fvector,
    Flagvector,
    Char,
    UniversalEdges,
    Classify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproTarget {
    All,
}

/// Parses `argv` (including the program name) and executes one subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { FAILURE } else { TRUE };
            let text = e.render().to_string();
            let _ = if code == TRUE {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            FAILURE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen { family, output } => {
            let fl = generate(family)?;
            emit(out, output.as_deref(), &(fl.to_json() + "\n"))?;
            Ok(TRUE)
        }
        Command::Points { curve, output } => {
            let pc = sample(curve)?;
            emit(out, output.as_deref(), &(pc.to_json() + "\n"))?;
            Ok(TRUE)
        }
        Command::Hull { input, output } => {
            let fl = hull_facets(&read_points(&input)?)?;
            emit(out, output.as_deref(), &(fl.to_json() + "\n"))?;
            Ok(TRUE)
        }
        Command::Check {
            property,
            input,
            all_faces,
        } => {
            let fl = read_facets(&input)?;
            let strictness = if all_faces {
                Strictness::AllFaces
            } else {
                Strictness::Facets
            };
            let (name, value) = check(property, &fl, strictness)?;
            writeln!(out, "{name}: {value}").map_err(io_error)?;
            Ok(if value { TRUE } else { FALSE })
        }
        Command::Analyze {
            invariant,
            input,
            format,
            output,
        } => {
            let fl = read_facets(&input)?;
            let text = analyze(invariant, &fl, format)?;
            emit(out, output.as_deref(), &text)?;
            Ok(TRUE)
        }
        Command::Period { input, output } => match detect_period(&read_points(&input)?) {
            Ok(r) => {
                emit(out, output.as_deref(), &to_json(&r))?;
                Ok(TRUE)
            }
            Err(Error::NotPeriodicallyCyclic(diag)) => {
                let v = json!({ "period": null, "diagnostics": *diag });
                emit(out, output.as_deref(), &pretty(&v))?;
                writeln!(err, "not periodically-cyclic: {diag}").map_err(io_error)?;
                Ok(FALSE)
            }
            Err(e) => Err(e),
        },
        Command::Bicyclic {
            p,
            q,
            n,
            float,
            output,
        } => {
            let r = bicyclic_report(p, q, n, float.settings())?;
            emit(out, output.as_deref(), &to_json(&r))?;
            Ok(TRUE)
        }
        Command::Compare { iso: _, a, b } => {
            let la = build_lattice(&read_facets(&a)?)?;
            let lb = build_lattice(&read_facets(&b)?)?;
            match is_isomorphic(&la, &lb) {
                Some(map) => {
                    let v = json!({ "isomorphic": true, "vertex_map": map.vertex_map });
                    writeln!(out, "{v}").map_err(io_error)?;
                    Ok(TRUE)
                }
                None => {
                    writeln!(out, "{}", json!({ "isomorphic": false })).map_err(io_error)?;
                    Ok(FALSE)
                }
            }
        }
        Command::VerifyPc { input, k, output } => {
            let r = verify_pc_step(&read_points(&input)?, k)?;
            emit(out, output.as_deref(), &to_json(&r))?;
            Ok(if r.passed() { TRUE } else { FALSE })
        }
        Command::Repro {
            target: ReproTarget::All,
        } => {
            let mut all = true;
            for r in run_all() {
                all &= r.passed;
                writeln!(
                    out,
                    "[{}] {}. {} ({}) {:.2}s: {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.id,
                    r.name,
                    r.anchor,
                    r.elapsed.as_secs_f64(),
                    r.detail
                )
                .map_err(io_error)?;
            }
            Ok(if all { TRUE } else { FALSE })
        }
    }
}

fn generate(family: Family) -> Result<FacetList> {
    match family {
        Family::Cyclic { n, d } => cyclic_facets(n, d),
        Family::Multiplex { n, d } => multiplex_facets(n, d),
        Family::Braxtope { v, e } => braxtope_facets(v, e),
        Family::Polygon { g } => polygon(g),
        Family::Pyramid {
            polygon: g,
            base,
            times,
        } => {
            let base = match (g, base) {
                (Some(g), _) => polygon(g)?,
                (None, Some(path)) => read_facets(&path)?,
                (None, None) => unreachable!("clap requires one of --polygon, --base"),
            };
            Ok(iterated_pyramid(base, times))
        }
    }
}

fn sample(curve: CurveCmd) -> Result<PointConfig> {
    match curve {
        CurveCmd::Moment { d, n, ts } => {
            let ts: Vec<Rational> = match ts {
                Some(ts) => ts.iter().map(|t| parse_rational(t)).collect::<Result<_>>()?,
                None => (1..=n.unwrap_or(0) as i64).map(Rational::from).collect(),
            };
            moment_points(&ts, d)
        }
        CurveCmd::Psi { m, ts, float } => {
            let ts: Vec<Rational> = ts.iter().map(|t| parse_rational(t)).collect::<Result<_>>()?;
            psi_points(m, &ts, float.settings())
        }
        CurveCmd::Trig4 { n, float } => trig_moment4_points(n, float.settings()),
        CurveCmd::Sigma { p, q, n, float } => sigma_points(p, q, n, float.settings()),
    }
}

fn check(property: Property, fl: &FacetList, strictness: Strictness) -> Result<(&'static str, bool)> {
    Ok(match property {
        Property::Gale => ("gale", is_gale(fl)),
        Property::Ordinary => ("ordinary", is_ordinary(fl, strictness)?),
        Property::Multiplicial => ("multiplicial", is_multiplicial(fl, strictness)?),
        Property::Braxial => ("braxial", is_braxial(fl, strictness)?),
        Property::Multiplex => ("multiplex", is_multiplex(fl)),
        Property::Braxtope => ("braxtope", is_braxtope(fl)),
        Property::Neighbourly => ("neighbourly", is_neighbourly(&build_lattice(fl)?)),
        Property::Selfdual => ("selfdual", is_self_dual(&build_lattice(fl)?)),
    })
}

fn analyze(invariant: Invariant, fl: &FacetList, format: Format) -> Result<String> {
    let unsupported = || {
        Err(Error::InvalidArgument(
            "csv output is only available for fvector and flagvector".into(),
        ))
    };
    match invariant {
        Invariant::Fvector => {
            let f = f_vector(&build_lattice(fl)?);
            match format {
                Format::Text => Ok(format!("f-vector: {f}\n")),
                Format::Json => Ok(pretty(&json!({ "dim": f.dim(), "f": f.proper() }))),
                Format::Csv => csv_rows(f.proper().iter().enumerate().map(|(j, &c)| (vec![j], c))),
            }
        }
        Invariant::Flagvector => {
            let fv = flag_vector(&build_lattice(fl)?);
            match format {
                Format::Text => Ok(format!("flag vector: {fv}\n")),
                Format::Json => {
                    let entries: Vec<Value> = fv
                        .entries()
                        .into_iter()
                        .map(|(s, c)| json!({ "dimensions": s, "count": c }))
                        .collect();
                    Ok(pretty(&json!({ "dim": fv.dim(), "entries": entries })))
                }
                Format::Csv => csv_rows(fv.entries()),
            }
        }
        Invariant::Char => {
            let k = characteristic(fl)?;
            match format {
                Format::Text => Ok(format!("characteristic: {k}\n")),
                Format::Json => Ok(pretty(&json!({ "characteristic": k }))),
                Format::Csv => unsupported(),
            }
        }
        Invariant::UniversalEdges => {
            let edges = universal_edges(&build_lattice(fl)?);
            match format {
                Format::Text => {
                    let list: Vec<String> = edges.iter().map(ToString::to_string).collect();
                    Ok(format!("universal edges: {}\n{}\n", edges.len(), list.join(" ")))
                }
                Format::Json => Ok(pretty(&json!({ "count": edges.len(), "edges": edges }))),
                Format::Csv => unsupported(),
            }
        }
        Invariant::Classify => {
            let c = classify_gale_braxial(fl)?;
            match format {
                Format::Text => Ok(format!(
                    "kind={} s={} first_vertex_adjacent={}\n",
                    c.kind, c.s, c.first_vertex_adjacent
                )),
                Format::Json => Ok(to_json(&c)),
                Format::Csv => unsupported(),
            }
        }
    }
}

fn csv_rows(rows: impl IntoIterator<Item = (Vec<usize>, u64)>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["dimension-set", "count"]).map_err(io)?;
    for (dims, count) in rows {
        let names: Vec<String> = dims.iter().map(usize::to_string).collect();
        w.write_record([format!("{{{}}}", names.join(",")), count.to_string()])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Pretty JSON with sorted keys.
fn to_json<T: Serialize>(x: &T) -> String {
    pretty(&serde_json::to_value(x).expect("report serializes"))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("value serializes") + "\n"
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_path(p, e)),
        None => out.write_all(text.as_bytes()).map_err(io_error),
    }
}

fn read_facets(path: &Path) -> Result<FacetList> {
    FacetList::from_json(&fs::read_to_string(path).map_err(|e| io_path(path, e))?)
}

fn read_points(path: &Path) -> Result<PointConfig> {
    PointConfig::from_json(&fs::read_to_string(path).map_err(|e| io_path(path, e))?)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn io_path(p: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", p.display()))
}
