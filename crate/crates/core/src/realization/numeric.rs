//! Arithmetic kernels for the hull oracle: exact rationals, and MPFR floats
//! with an absolute tolerance.

use std::cmp::Ordering;
use std::fmt::Debug;

use rug::{Float, Rational};

use crate::error::{Error, Result};

pub(crate) trait Field: Sync {
    type S: Clone + Debug + Send + Sync;

    fn zero(&self) -> Self::S;
    fn one(&self) -> Self::S;
    fn add(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn sub(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn mul(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn div(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn neg(&self, a: &Self::S) -> Self::S;
    /// `|a|` compared with `|b|`.
    fn cmp_abs(&self, a: &Self::S, b: &Self::S) -> Ordering;
    /// Sign of `a`, where values within tolerance of zero count as zero.
    /// Errors when the classification would flip under a tenfold change of
    /// the tolerance.
    fn sign(&self, a: &Self::S) -> Result<Ordering>;
    /// Rescales a normal vector to unit magnitude where that matters.
    fn normalize(&self, v: &mut [Self::S], offset: &mut Self::S);
}

pub(crate) struct Exact;

impl Field for Exact {
    type S = Rational;

    fn zero(&self) -> Rational {
        Rational::new()
    }
    fn one(&self) -> Rational {
        Rational::from(1)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a + b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a - b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a * b)
    }
    fn div(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a / b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        Rational::from(-a)
    }
    fn cmp_abs(&self, a: &Rational, b: &Rational) -> Ordering {
        a.cmp_abs(b)
    }
    fn sign(&self, a: &Rational) -> Result<Ordering> {
        Ok(a.cmp0())
    }
    fn normalize(&self, _v: &mut [Rational], _offset: &mut Rational) {}
}

pub(crate) struct Approx {
    prec: u32,
    zero_below: Float,
    nonzero_above: Float,
}

impl Approx {
    pub(crate) fn new(prec: u32, eps: f64) -> Self {
        Self {
            prec,
            zero_below: Float::with_val(prec, eps) / 10u32,
            nonzero_above: Float::with_val(prec, eps) * 10u32,
        }
    }
}

impl Field for Approx {
    type S = Float;

    fn zero(&self) -> Float {
        Float::new(self.prec)
    }
    fn one(&self) -> Float {
        Float::with_val(self.prec, 1)
    }
    fn add(&self, a: &Float, b: &Float) -> Float {
        Float::with_val(self.prec, a + b)
    }
    fn sub(&self, a: &Float, b: &Float) -> Float {
        Float::with_val(self.prec, a - b)
    }
    fn mul(&self, a: &Float, b: &Float) -> Float {
        Float::with_val(self.prec, a * b)
    }
    fn div(&self, a: &Float, b: &Float) -> Float {
        Float::with_val(self.prec, a / b)
    }
    fn neg(&self, a: &Float) -> Float {
        Float::with_val(self.prec, -a)
    }
    fn cmp_abs(&self, a: &Float, b: &Float) -> Ordering {
        a.cmp_abs(b).unwrap_or(Ordering::Equal)
    }
    fn sign(&self, a: &Float) -> Result<Ordering> {
        if a.is_nan() {
            return Err(Error::PrecisionAmbiguous("NaN in evaluation".into()));
        }
        if a.cmp_abs(&self.zero_below) != Some(Ordering::Greater) {
            return Ok(Ordering::Equal);
        }
        if a.cmp_abs(&self.nonzero_above) != Some(Ordering::Greater) {
            return Err(Error::PrecisionAmbiguous(format!(
                "value {} lies within a factor of ten of the tolerance",
                a.to_f64()
            )));
        }
        Ok(a.cmp0().unwrap_or(Ordering::Equal))
    }
    fn normalize(&self, v: &mut [Float], offset: &mut Float) {
        let scale = v
            .iter()
            .max_by(|a, b| self.cmp_abs(a, b))
            .map(|m| Float::with_val(self.prec, m.abs_ref()));
        if let Some(scale) = scale {
            if !scale.is_zero() {
                for x in v.iter_mut() {
                    *x /= &scale;
                }
                *offset /= &scale;
            }
        }
    }
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub(crate) fn rref<K: Field>(k: &K, m: &mut [Vec<K::S>], cols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let best = (row..m.len())
            .max_by(|&a, &b| k.cmp_abs(&m[a][col], &m[b][col]))
            .unwrap();
        if k.sign(&m[best][col])? == Ordering::Equal {
            continue;
        }
        m.swap(row, best);
        let p = m[row][col].clone();
        for c in col..cols {
            m[row][c] = k.div(&m[row][c], &p);
        }
        for r in 0..m.len() {
            if r == row {
                continue;
            }
            let factor = m[r][col].clone();
            if k.sign(&factor).map_or(true, |s| s != Ordering::Equal) {
                for c in col..cols {
                    let t = k.mul(&factor, &m[row][c]);
                    m[r][c] = k.sub(&m[r][c], &t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    Ok(pivots)
}

/// Dimension of the affine hull of `pts`.
pub(crate) fn affine_rank<K: Field>(k: &K, pts: &[&[K::S]]) -> Result<usize> {
    let Some((first, rest)) = pts.split_first() else {
        return Ok(0);
    };
    let d = first.len();
    let mut rows: Vec<Vec<K::S>> = rest
        .iter()
        .map(|p| (0..d).map(|c| k.sub(&p[c], &first[c])).collect())
        .collect();
    Ok(rref(k, &mut rows, d)?.len())
}

/// An oriented hyperplane `normal · x = offset`.
#[derive(Clone, Debug)]
pub(crate) struct Plane<S> {
    pub normal: Vec<S>,
    pub offset: S,
}

impl<S: Clone> Plane<S> {
    pub(crate) fn eval<K: Field<S = S>>(&self, k: &K, x: &[S]) -> S {
        let mut acc = k.neg(&self.offset);
        for (a, b) in self.normal.iter().zip(x) {
            acc = k.add(&acc, &k.mul(a, b));
        }
        acc
    }

    pub(crate) fn flip<K: Field<S = S>>(&mut self, k: &K) {
        for a in self.normal.iter_mut() {
            *a = k.neg(a);
        }
        self.offset = k.neg(&self.offset);
    }
}

/// The hyperplane spanned by `pts` in `R^d`, if their affine hull has
/// dimension exactly `d - 1`.
pub(crate) fn spanned_plane<K: Field>(k: &K, pts: &[&[K::S]]) -> Result<Option<Plane<K::S>>> {
    let Some((first, rest)) = pts.split_first() else {
        return Ok(None);
    };
    let d = first.len();
    let mut rows: Vec<Vec<K::S>> = rest
        .iter()
        .map(|p| (0..d).map(|c| k.sub(&p[c], &first[c])).collect())
        .collect();
    let pivots = rref(k, &mut rows, d)?;
    if pivots.len() + 1 != d {
        return Ok(None);
    }
    let free = (0..d).find(|c| !pivots.contains(c)).unwrap();
    let mut normal = vec![k.zero(); d];
    normal[free] = k.one();
    for (r, &c) in pivots.iter().enumerate() {
        normal[c] = k.neg(&rows[r][free]);
    }
    let mut offset = k.zero();
    for (a, b) in normal.iter().zip(first.iter()) {
        offset = k.add(&offset, &k.mul(a, b));
    }
    k.normalize(&mut normal, &mut offset);
    Ok(Some(Plane { normal, offset }))
}
