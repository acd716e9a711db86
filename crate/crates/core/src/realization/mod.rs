//! Point configurations on the moment, spherical, trigonometric and
//! bi-cyclic curves, and a brute-force convex hull that turns them back into
//! facet lists.
//!
//! Two scalar modes are supported. Exact mode uses arbitrary-precision
//! rationals and zero tolerance. Float mode uses MPFR floats with a fixed
//! mantissa width and an absolute tolerance; every float hull is recomputed
//! at doubled precision and squared tolerance, and any disagreement is
//! reported as [`Error::PrecisionAmbiguous`].

mod bicyclic;
mod curves;
mod cyclicity;
mod hull;
mod numeric;
mod pc_step;

use std::fmt;
use std::str::FromStr;

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bicyclic::{bicyclic_report, BicyclicReport};
pub use curves::{moment_points, psi_points, sigma_points, trig_moment4_points};
pub use cyclicity::{
    cyclicity, detect_period, find_cyclic_order, is_cyclic_polytope, CyclicityReport,
    PeriodDiagnostics, PeriodReport, SearchPath, WindowLevel,
};
pub use hull::{beneath_beyond, hull_facets, Side};
pub use pc_step::{verify_pc_step, PcReport};

pub(crate) use curves::Curve;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// Mantissa width and absolute tolerance for float mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatSettings {
    pub precision_bits: u32,
    pub eps: f64,
}

impl Default for FloatSettings {
    fn default() -> Self {
        Self {
            precision_bits: 256,
            eps: 1e-30,
        }
    }
}

impl FloatSettings {
    /// Settings for the stability re-check.
    pub fn refined(&self) -> Self {
        Self {
            precision_bits: self.precision_bits * 2,
            eps: self.eps * self.eps,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.precision_bits < 53 {
            return Err(Error::InvalidArgument(format!(
                "precision of {} bits is below double precision",
                self.precision_bits
            )));
        }
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(Error::InvalidArgument(format!("eps must be positive, got {}", self.eps)));
        }
        Ok(())
    }
}

/// A single point, in either scalar mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Exact(Vec<Rational>),
    Float(Vec<Float>),
}

impl Point {
    pub fn dim(&self) -> usize {
        match self {
            Point::Exact(v) => v.len(),
            Point::Float(v) => v.len(),
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            Point::Exact(v) => v.iter().map(Rational::to_f64).collect(),
            Point::Float(v) => v.iter().map(Float::to_f64).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Coords {
    Exact(Vec<Vec<Rational>>),
    Float(Vec<Vec<Float>>),
}

/// Curve parameters a float configuration was sampled from, so that the
/// stability re-check can resample instead of padding stored digits.
#[derive(Clone, Debug)]
pub(crate) struct Source {
    curve: Curve,
    indices: Vec<usize>,
}

/// An ordered list of points in `R^d`; the order is the vertex array.
#[derive(Clone, Debug)]
pub struct PointConfig {
    dim: usize,
    coords: Coords,
    settings: FloatSettings,
    source: Option<Source>,
}

impl PointConfig {
    pub fn exact(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        let pc = Self {
            dim,
            coords: Coords::Exact(points),
            settings: FloatSettings::default(),
            source: None,
        };
        pc.validate()?;
        Ok(pc)
    }

    pub fn float(dim: usize, points: Vec<Vec<Float>>, settings: FloatSettings) -> Result<Self> {
        settings.validate()?;
        let points = points
            .into_iter()
            .map(|p| {
                p.into_iter()
                    .map(|x| Float::with_val(settings.precision_bits, x))
                    .collect()
            })
            .collect();
        let pc = Self {
            dim,
            coords: Coords::Float(points),
            settings,
            source: None,
        };
        pc.validate()?;
        Ok(pc)
    }

    pub(crate) fn sampled(curve: Curve, count: usize, settings: FloatSettings) -> Result<Self> {
        settings.validate()?;
        let indices: Vec<usize> = (0..count).collect();
        let source = Source { curve, indices };
        let pc = Self {
            dim: source.curve.dim(),
            coords: Coords::Float(source.sample(settings.precision_bits)),
            settings,
            source: Some(source),
        };
        pc.validate()?;
        Ok(pc)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        if d == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        if self.len() < d + 1 {
            return Err(Error::DegenerateInput(format!(
                "{} points cannot span R^{d}",
                self.len()
            )));
        }
        let bad_len = match &self.coords {
            Coords::Exact(ps) => ps.iter().position(|p| p.len() != d),
            Coords::Float(ps) => ps.iter().position(|p| p.len() != d),
        };
        if let Some(i) = bad_len {
            return Err(Error::InvalidArgument(format!("point {i} does not have {d} coordinates")));
        }
        let dup = match &self.coords {
            Coords::Exact(ps) => first_duplicate(ps),
            Coords::Float(ps) => {
                if ps.iter().flatten().any(|x| !x.is_finite()) {
                    return Err(Error::InvalidArgument("non-finite coordinate".into()));
                }
                first_duplicate(ps)
            }
        };
        if let Some((i, j)) = dup {
            return Err(Error::InvalidArgument(format!("points {i} and {j} coincide")));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        match &self.coords {
            Coords::Exact(ps) => ps.len(),
            Coords::Float(ps) => ps.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mode(&self) -> Mode {
        match self.coords {
            Coords::Exact(_) => Mode::Exact,
            Coords::Float(_) => Mode::Float,
        }
    }

    /// Float settings; meaningless in exact mode.
    pub fn settings(&self) -> FloatSettings {
        self.settings
    }

    pub fn point(&self, i: usize) -> Point {
        match &self.coords {
            Coords::Exact(ps) => Point::Exact(ps[i].clone()),
            Coords::Float(ps) => Point::Float(ps[i].clone()),
        }
    }

    pub fn points(&self) -> Vec<Point> {
        (0..self.len()).map(|i| self.point(i)).collect()
    }

    pub(crate) fn coords(&self) -> &Coords {
        &self.coords
    }

    /// The average of all points.
    pub fn centroid(&self) -> Point {
        let n = self.len() as u32;
        match &self.coords {
            Coords::Exact(ps) => Point::Exact(
                (0..self.dim)
                    .map(|c| {
                        let s: Rational = ps.iter().map(|p| &p[c]).sum();
                        s / n
                    })
                    .collect(),
            ),
            Coords::Float(ps) => {
                let prec = self.settings.precision_bits;
                Point::Float(
                    (0..self.dim)
                        .map(|c| {
                            let mut s = Float::new(prec);
                            for p in ps {
                                s += &p[c];
                            }
                            s / n
                        })
                        .collect(),
                )
            }
        }
    }

    /// The sub-configuration on `indices`, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        if let Some(&i) = indices.iter().find(|&&i| i >= self.len()) {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                num_vertices: self.len(),
            });
        }
        let coords = match &self.coords {
            Coords::Exact(ps) => Coords::Exact(indices.iter().map(|&i| ps[i].clone()).collect()),
            Coords::Float(ps) => Coords::Float(indices.iter().map(|&i| ps[i].clone()).collect()),
        };
        let source = self.source.as_ref().map(|s| Source {
            curve: s.curve.clone(),
            indices: indices.iter().map(|&i| s.indices[i]).collect(),
        });
        let pc = Self {
            dim: self.dim,
            coords,
            settings: self.settings,
            source,
        };
        pc.validate()?;
        Ok(pc)
    }

    /// Points `start..start + len`.
    pub fn window(&self, start: usize, len: usize) -> Result<Self> {
        let idx: Vec<usize> = (start..start + len).collect();
        self.subset(&idx)
    }

    /// The configuration with one more point appended.
    pub fn with_point(&self, x: &Point) -> Result<Self> {
        let mut pc = self.clone();
        match (&mut pc.coords, x) {
            (Coords::Exact(ps), Point::Exact(p)) => ps.push(p.clone()),
            (Coords::Float(ps), Point::Float(p)) => {
                let prec = self.settings.precision_bits;
                ps.push(p.iter().map(|v| Float::with_val(prec, v)).collect())
            }
            _ => return Err(Error::InvalidArgument("point mode differs from configuration".into())),
        }
        pc.source = None;
        pc.validate()?;
        Ok(pc)
    }

    /// Float configuration at the refined settings: resampled from the
    /// source curve when known, otherwise the stored values widened.
    pub(crate) fn refined(&self) -> Option<Self> {
        let Coords::Float(ps) = &self.coords else {
            return None;
        };
        let settings = self.settings.refined();
        let prec = settings.precision_bits;
        let coords = match &self.source {
            Some(s) => s.sample(prec),
            None => ps
                .iter()
                .map(|p| p.iter().map(|x| Float::with_val(prec, x)).collect())
                .collect(),
        };
        Some(Self {
            dim: self.dim,
            coords: Coords::Float(coords),
            settings,
            source: self.source.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawPointConfig {
            dim: self.dim,
            eps: (self.mode() == Mode::Float).then_some(self.settings.eps),
            mode: self.mode(),
            points: match &self.coords {
                Coords::Exact(ps) => ps
                    .iter()
                    .map(|p| p.iter().map(Rational::to_string).collect())
                    .collect(),
                Coords::Float(ps) => ps
                    .iter()
                    .map(|p| p.iter().map(|x| x.to_string_radix(10, None)).collect())
                    .collect(),
            },
            precision_bits: (self.mode() == Mode::Float).then_some(self.settings.precision_bits),
        };
        serde_json::to_string(&raw).expect("point config serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawPointConfig = serde_json::from_str(s)?;
        match raw.mode {
            Mode::Exact => {
                let points = raw
                    .points
                    .iter()
                    .map(|p| p.iter().map(|x| parse_rational(x)).collect())
                    .collect::<Result<_>>()?;
                Self::exact(raw.dim, points)
            }
            Mode::Float => {
                let defaults = FloatSettings::default();
                let settings = FloatSettings {
                    precision_bits: raw.precision_bits.unwrap_or(defaults.precision_bits),
                    eps: raw.eps.unwrap_or(defaults.eps),
                };
                settings.validate()?;
                let prec = settings.precision_bits;
                let points = raw
                    .points
                    .iter()
                    .map(|p| p.iter().map(|x| parse_float(x, prec)).collect())
                    .collect::<Result<_>>()?;
                Self::float(raw.dim, points, settings)
            }
        }
    }
}

impl fmt::Display for PointConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} points in R^{} ({:?})", self.len(), self.dim, self.mode())
    }
}

impl Source {
    fn sample(&self, prec: u32) -> Vec<Vec<Float>> {
        self.indices.iter().map(|&j| self.curve.point(j, prec)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct RawPointConfig {
    dim: usize,
    #[serde(default)]
    eps: Option<f64>,
    mode: Mode,
    points: Vec<Vec<String>>,
    #[serde(default)]
    precision_bits: Option<u32>,
}

fn first_duplicate<T: PartialEq>(ps: &[Vec<T>]) -> Option<(usize, usize)> {
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if ps[i] == ps[j] {
                return Some((i, j));
            }
        }
    }
    None
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

fn parse_float(s: &str, prec: u32) -> Result<Float> {
    Float::parse(s.trim())
        .map(|v| Float::with_val(prec, v))
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}
