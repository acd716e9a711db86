use rug::float::Constant;
use rug::{Float, Integer, Rational};

use super::{FloatSettings, PointConfig};
use crate::error::{Error, Result};

// extra bits for evaluating trig functions before rounding to the target width
const GUARD_BITS: u32 = 32;

#[derive(Clone, Debug)]
pub(crate) enum Curve {
    /// `(cos mt sin t, sin mt sin t, cos t)` at `t = pi * ts[j]`.
    Psi { m: u32, ts: Vec<Rational> },
    /// `(cos 2pi t, sin 2pi t, cos 4pi t, sin 4pi t)` at `t = j/n`.
    Trig4 { n: usize },
    /// `(cos 2pi pt, sin 2pi pt, cos 2pi qt, sin 2pi qt)` at `t = j/n`.
    Sigma { p: u32, q: u32, n: usize },
}

impl Curve {
    pub(crate) fn dim(&self) -> usize {
        match self {
            Curve::Psi { .. } => 3,
            Curve::Trig4 { .. } | Curve::Sigma { .. } => 4,
        }
    }

    pub(crate) fn point(&self, j: usize, prec: u32) -> Vec<Float> {
        let work = prec + GUARD_BITS;
        let round = |x: Float| Float::with_val(prec, x);
        match self {
            Curve::Psi { m, ts } => {
                let t = Float::with_val(work, Constant::Pi) * &ts[j];
                let (s, c) = t.clone().sin_cos(Float::new(work));
                let mt = t * *m;
                let (ms, mc) = mt.sin_cos(Float::new(work));
                vec![round(mc * &s), round(ms * &s), round(c)]
            }
            Curve::Trig4 { n } => {
                let (c1, s1) = circle(j, *n, work);
                let (c2, s2) = circle(2 * j, *n, work);
                vec![round(c1), round(s1), round(c2), round(s2)]
            }
            Curve::Sigma { p, q, n } => {
                let (c1, s1) = circle(*p as usize * j, *n, work);
                let (c2, s2) = circle(*q as usize * j, *n, work);
                vec![round(c1), round(s1), round(c2), round(s2)]
            }
        }
    }
}

/// `(cos 2pi k/n, sin 2pi k/n)`, reducing `k` mod `n` first.
fn circle(k: usize, n: usize, prec: u32) -> (Float, Float) {
    let angle = Float::with_val(prec, Constant::Pi) * 2u32 * (k % n) as u64 / n as u64;
    let (s, c) = angle.sin_cos(Float::new(prec));
    (c, s)
}

/// Points `(t, t^2, ..., t^d)` on the moment curve, in exact arithmetic.
pub fn moment_points(ts: &[Rational], d: usize) -> Result<PointConfig> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("moment curve needs d >= 2, got {d}")));
    }
    if let Some(w) = ts.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "parameters must increase strictly, got {} then {}",
            w[0], w[1]
        )));
    }
    let points = ts
        .iter()
        .map(|t| {
            let mut acc = Rational::from(1);
            (0..d)
                .map(|_| {
                    acc *= t;
                    acc.clone()
                })
                .collect()
        })
        .collect();
    PointConfig::exact(d, points)
}

/// Points on the spherical curve `Psi_m`. Parameters are given as fractions
/// of pi, so `1/2` stands for `t = pi/2`; they must increase strictly and lie
/// in the open interval `(0, 1)`.
pub fn psi_points(m: u32, ts: &[Rational], settings: FloatSettings) -> Result<PointConfig> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if let Some(t) = ts.iter().find(|t| t.cmp0().is_le() || **t >= 1) {
        return Err(Error::InvalidArgument(format!("t = {t}*pi lies outside (0, pi)")));
    }
    if let Some(w) = ts.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "parameters must increase strictly, got {} then {}",
            w[0], w[1]
        )));
    }
    let curve = Curve::Psi { m, ts: ts.to_vec() };
    PointConfig::sampled(curve, ts.len(), settings)
}

/// `n` evenly spaced points on the trigonometric moment curve in `R^4`.
pub fn trig_moment4_points(n: usize, settings: FloatSettings) -> Result<PointConfig> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!("need n >= 5, got {n}")));
    }
    PointConfig::sampled(Curve::Trig4 { n }, n, settings)
}

/// The points `b_0, ..., b_{n-1}` of the bi-cyclic polytope `B(p, q, n)`.
pub fn sigma_points(p: u32, q: u32, n: usize, settings: FloatSettings) -> Result<PointConfig> {
    if !(q > p && p > 1) {
        return Err(Error::InvalidArgument(format!("need q > p > 1, got p = {p}, q = {q}")));
    }
    if Integer::from(p).gcd(&Integer::from(q)) != 1 {
        return Err(Error::InvalidArgument(format!("p = {p} and q = {q} are not coprime")));
    }
    if n < (p * q) as usize {
        return Err(Error::InvalidArgument(format!("need n >= pq = {}, got {n}", p * q)));
    }
    PointConfig::sampled(Curve::Sigma { p, q, n }, n, settings)
}
