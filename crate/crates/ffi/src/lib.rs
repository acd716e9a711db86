//! C ABI over the polycyclic library.
//!
//! Facet lists and point configurations cross the boundary as opaque
//! handles, created by constructor functions and released with the matching
//! `*_free`. Every fallible function returns a [`PcStatus`]; on failure a
//! message is available from [`pc_last_error_message`] on the same thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`pc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polycyclic::error::Error;
use polycyclic::families::{self, Strictness};
use polycyclic::gale;
use polycyclic::lattice;
use polycyclic::realization::{self, FloatSettings, PointConfig};
use polycyclic::FacetList;
use rug::Rational;

/// Result codes. Predicates report their answer through a `bool`
/// out-parameter, so `Ok` means the question was decided.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidFacetList = 3,
    NotAPolytope = 4,
    Degenerate = 5,
    PrecisionAmbiguous = 6,
    NonVertices = 7,
    NotGale = 8,
    NotPeriodicallyCyclic = 9,
    PatternViolation = 10,
    Parse = 11,
    BufferTooSmall = 12,
    Internal = 13,
}

/// Properties accepted by [`pc_check`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcProperty {
    Gale = 0,
    Ordinary = 1,
    Multiplicial = 2,
    Braxial = 3,
    Multiplex = 4,
    Braxtope = 5,
    Neighbourly = 6,
    SelfDual = 7,
}

/// Opaque facet list.
pub struct PcFacetList(FacetList);

/// Opaque point configuration.
pub struct PcPoints(PointConfig);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PcStatus {
    match e {
        Error::InvalidFacetList(_) | Error::VertexOutOfRange { .. } => PcStatus::InvalidFacetList,
        Error::NotAPolytopeLattice(_) => PcStatus::NotAPolytope,
        Error::InvalidArgument(_) | Error::TooLarge { .. } | Error::NotAFacet(_) => {
            PcStatus::InvalidArgument
        }
        Error::PatternViolation(_) | Error::NotGaleBraxial(_) | Error::EdgePatternViolation(_) => {
            PcStatus::PatternViolation
        }
        Error::DegenerateInput(_) => PcStatus::Degenerate,
        Error::PrecisionAmbiguous(_) => PcStatus::PrecisionAmbiguous,
        Error::NonVertices(_) => PcStatus::NonVertices,
        Error::NotGale => PcStatus::NotGale,
        Error::NotPeriodicallyCyclic(_) => PcStatus::NotPeriodicallyCyclic,
        Error::Parse(_) | Error::Json(_) => PcStatus::Parse,
        Error::SelfConsistency(_) | Error::Io(_) => PcStatus::Internal,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (PcStatus, String)>) -> PcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PcStatus::Internal
        }
    }
}

fn lib<T>(r: polycyclic::Result<T>) -> Result<T, (PcStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (PcStatus, String) {
    (PcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, (PcStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (PcStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), (PcStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (PcStatus, String)> {
    let c = CString::new(s).map_err(|_| (PcStatus::Internal, "nul byte in output".to_string()))?;
    put(out, c.into_raw(), "out")
}

unsafe fn facets<'a>(fl: *const PcFacetList) -> Result<&'a FacetList, (PcStatus, String)> {
    fl.as_ref().map(|h| &h.0).ok_or_else(|| null("facet list"))
}

unsafe fn points<'a>(pc: *const PcPoints) -> Result<&'a PointConfig, (PcStatus, String)> {
    pc.as_ref().map(|h| &h.0).ok_or_else(|| null("point configuration"))
}

fn float_settings(bits: u32, eps: f64) -> FloatSettings {
    let d = FloatSettings::default();
    FloatSettings {
        precision_bits: if bits == 0 { d.precision_bits } else { bits },
        eps: if eps > 0.0 { eps } else { d.eps },
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `fl` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn pc_facet_list_free(fl: *mut PcFacetList) {
    if !fl.is_null() {
        drop(Box::from_raw(fl));
    }
}

/// # Safety
/// `pc` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn pc_points_free(pc: *mut PcPoints) {
    if !pc.is_null() {
        drop(Box::from_raw(pc));
    }
}

unsafe fn new_facets(out: *mut *mut PcFacetList, fl: FacetList) -> Result<(), (PcStatus, String)> {
    put(out, Box::into_raw(Box::new(PcFacetList(fl))), "out")
}

unsafe fn new_points(out: *mut *mut PcPoints, pc: PointConfig) -> Result<(), (PcStatus, String)> {
    put(out, Box::into_raw(Box::new(PcPoints(pc))), "out")
}

/// Parses a facet list from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_facet_list_from_json(
    json: *const c_char,
    out: *mut *mut PcFacetList,
) -> PcStatus {
    guard(|| {
        let fl = lib(FacetList::from_json(str_arg(json, "json")?))?;
        new_facets(out, fl)
    })
}

/// Canonical JSON of a facet list.
///
/// # Safety
/// `fl` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_facet_list_to_json(
    fl: *const PcFacetList,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| put_string(out, facets(fl)?.to_json()))
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `fl` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_facet_list_num_vertices(fl: *const PcFacetList) -> usize {
    fl.as_ref().map_or(0, |h| h.0.num_vertices())
}

/// Number of facets, or 0 for a null handle.
///
/// # Safety
/// `fl` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_facet_list_num_facets(fl: *const PcFacetList) -> usize {
    fl.as_ref().map_or(0, |h| h.0.num_facets())
}

/// Dimension, or 0 for a null handle.
///
/// # Safety
/// `fl` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_facet_list_dim(fl: *const PcFacetList) -> usize {
    fl.as_ref().map_or(0, |h| h.0.dim())
}

/// Cyclic polytope `C(n, d)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_cyclic(n: usize, d: usize, out: *mut *mut PcFacetList) -> PcStatus {
    guard(|| new_facets(out, lib(gale::cyclic_facets(n, d))?))
}

/// Multiplex `M(n, d)` on `n + 1` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_multiplex(n: usize, d: usize, out: *mut *mut PcFacetList) -> PcStatus {
    guard(|| new_facets(out, lib(families::multiplex_facets(n, d))?))
}

/// Braxtope on `v + 1` vertices in dimension `e`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_braxtope(v: usize, e: usize, out: *mut *mut PcFacetList) -> PcStatus {
    guard(|| new_facets(out, lib(families::braxtope_facets(v, e))?))
}

/// Tests a property under the index order. Ordinary, multiplicial and
/// braxial are checked on facets only unless `all_faces` is set.
///
/// # Safety
/// `fl` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_check(
    fl: *const PcFacetList,
    property: PcProperty,
    all_faces: bool,
    out: *mut bool,
) -> PcStatus {
    guard(|| {
        let fl = facets(fl)?;
        let s = if all_faces {
            Strictness::AllFaces
        } else {
            Strictness::Facets
        };
        let value = match property {
            PcProperty::Gale => gale::is_gale(fl),
            PcProperty::Ordinary => lib(families::is_ordinary(fl, s))?,
            PcProperty::Multiplicial => lib(families::is_multiplicial(fl, s))?,
            PcProperty::Braxial => lib(families::is_braxial(fl, s))?,
            PcProperty::Multiplex => families::is_multiplex(fl),
            PcProperty::Braxtope => families::is_braxtope(fl),
            PcProperty::Neighbourly => lattice::is_neighbourly(&lib(lattice::build_lattice(fl))?),
            PcProperty::SelfDual => lattice::is_self_dual(&lib(lattice::build_lattice(fl))?),
        };
        put(out, value, "out")
    })
}

/// Writes `f_0, ..., f_{d-1}` into `buf` and `d` into `out_len`. Fails with
/// `BufferTooSmall` (after setting `out_len`) when `cap < d`.
///
/// # Safety
/// `fl` must be a live handle; `buf` must hold `cap` values; `out_len` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_f_vector(
    fl: *const PcFacetList,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> PcStatus {
    guard(|| {
        let f = lattice::f_vector(&lib(lattice::build_lattice(facets(fl)?))?);
        let values = f.proper();
        put(out_len, values.len(), "out_len")?;
        if cap < values.len() {
            return Err((
                PcStatus::BufferTooSmall,
                format!("need {} entries, got {cap}", values.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
        Ok(())
    })
}

/// Characteristic of the index order.
///
/// # Safety
/// `fl` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_characteristic(fl: *const PcFacetList, out: *mut usize) -> PcStatus {
    guard(|| put(out, lib(gale::characteristic(facets(fl)?))?, "out"))
}

/// Whether the face lattices of `a` and `b` are isomorphic.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_is_isomorphic(
    a: *const PcFacetList,
    b: *const PcFacetList,
    out: *mut bool,
) -> PcStatus {
    guard(|| {
        let la = lib(lattice::build_lattice(facets(a)?))?;
        let lb = lib(lattice::build_lattice(facets(b)?))?;
        put(out, lattice::is_isomorphic(&la, &lb).is_some(), "out")
    })
}

/// Parses a point configuration from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_points_from_json(json: *const c_char, out: *mut *mut PcPoints) -> PcStatus {
    guard(|| {
        let pc = lib(PointConfig::from_json(str_arg(json, "json")?))?;
        new_points(out, pc)
    })
}

/// JSON of a point configuration.
///
/// # Safety
/// `pc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_points_to_json(pc: *const PcPoints, out: *mut *mut c_char) -> PcStatus {
    guard(|| put_string(out, points(pc)?.to_json()))
}

/// Exact moment-curve points at `t_i = num[i] / den[i]`.
///
/// # Safety
/// `num` and `den` must hold `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_moment_points(
    num: *const i64,
    den: *const i64,
    len: usize,
    d: usize,
    out: *mut *mut PcPoints,
) -> PcStatus {
    guard(|| {
        if num.is_null() || den.is_null() {
            return Err(null("parameter array"));
        }
        let num = std::slice::from_raw_parts(num, len);
        let den = std::slice::from_raw_parts(den, len);
        if den.contains(&0) {
            return Err((PcStatus::InvalidArgument, "zero denominator".into()));
        }
        let ts: Vec<Rational> = num.iter().zip(den).map(|(&a, &b)| Rational::from((a, b))).collect();
        new_points(out, lib(realization::moment_points(&ts, d))?)
    })
}

/// Points on the trigonometric moment curve. `bits = 0` and `eps <= 0`
/// select the defaults (256 bits, 1e-30).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_trig4_points(
    n: usize,
    bits: u32,
    eps: f64,
    out: *mut *mut PcPoints,
) -> PcStatus {
    guard(|| {
        let pc = lib(realization::trig_moment4_points(n, float_settings(bits, eps)))?;
        new_points(out, pc)
    })
}

/// The points of `B(p, q, n)`. `bits = 0` and `eps <= 0` select the defaults.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_sigma_points(
    p: u32,
    q: u32,
    n: usize,
    bits: u32,
    eps: f64,
    out: *mut *mut PcPoints,
) -> PcStatus {
    guard(|| {
        let pc = lib(realization::sigma_points(p, q, n, float_settings(bits, eps)))?;
        new_points(out, pc)
    })
}

/// Facet list of the convex hull.
///
/// # Safety
/// `pc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_hull(pc: *const PcPoints, out: *mut *mut PcFacetList) -> PcStatus {
    guard(|| new_facets(out, lib(realization::hull_facets(points(pc)?))?))
}

/// Whether the hull is combinatorially cyclic under some vertex array.
///
/// # Safety
/// `pc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_is_cyclic(pc: *const PcPoints, out: *mut bool) -> PcStatus {
    guard(|| put(out, lib(realization::is_cyclic_polytope(points(pc)?))?, "out"))
}

/// Period of a Gale configuration; `NotPeriodicallyCyclic` when there is none.
///
/// # Safety
/// `pc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_detect_period(pc: *const PcPoints, out: *mut usize) -> PcStatus {
    guard(|| put(out, lib(realization::detect_period(points(pc)?))?.period, "out"))
}

/// JSON report on `B(p, q, n)`. `bits = 0` and `eps <= 0` select the defaults.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_bicyclic_report_json(
    p: u32,
    q: u32,
    n: usize,
    bits: u32,
    eps: f64,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let r = lib(realization::bicyclic_report(p, q, n, float_settings(bits, eps)))?;
        let json = serde_json::to_string(&r).map_err(|e| (PcStatus::Internal, e.to_string()))?;
        put_string(out, json)
    })
}
