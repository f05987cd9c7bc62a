//! C interface to the maxlab engine.
//!
//! Measures and step functions are created from JSON and passed around as
//! opaque handles. Every call returns a `MaxlabStatus`; on failure the
//! message is available from `maxlab_last_error` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_double, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use maxlab::lab::constants;
use maxlab::maximal::maximal_at;
use maxlab::measure::json::{measure_from_json, step_from_json};
use maxlab::measure::rational::{format_rational, parse_rational, to_f64};
use maxlab::measure::{Measure, StepFunction};
use maxlab::norms::ratio;
use maxlab::LabError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxlabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    PreconditionViolated = 5,
    NoSolution = 6,
    TailNotCertified = 7,
    ZeroNorm = 8,
    Panic = 9,
}

/// A measure: finitely many atoms plus a piecewise-constant density.
pub struct MaxlabMeasure(Measure);

/// A compactly supported nonnegative step function.
pub struct MaxlabFunction(StepFunction);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: MaxlabStatus, message: impl Into<String>) -> MaxlabStatus {
    set_error(message.into());
    status
}

fn status_of(e: &LabError) -> MaxlabStatus {
    match e {
        LabError::Parse { .. } => MaxlabStatus::ParseError,
        LabError::InvalidInterval(_)
        | LabError::InvalidMeasure(_)
        | LabError::InvalidStepFunction(_)
        | LabError::InvalidArgument(_)
        | LabError::UnsupportedDimension(_) => MaxlabStatus::InvalidInput,
        LabError::PreconditionViolated(_) => MaxlabStatus::PreconditionViolated,
        LabError::NoSolution(_) | LabError::WindowTooSmall(_) => MaxlabStatus::NoSolution,
        LabError::TailNotCertified(_) => MaxlabStatus::TailNotCertified,
        LabError::ZeroNorm => MaxlabStatus::ZeroNorm,
    }
}

fn guarded(body: impl FnOnce() -> Result<(), (MaxlabStatus, String)>) -> MaxlabStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MaxlabStatus::Ok,
        Ok(Err((status, message))) => fail(status, message),
        Err(_) => fail(MaxlabStatus::Panic, "internal panic"),
    }
}

fn lab(e: LabError) -> (MaxlabStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(text: *const c_char, what: &str) -> Result<&'a str, (MaxlabStatus, String)> {
    if text.is_null() {
        return Err((MaxlabStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(text).to_str().map_err(|_| (MaxlabStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn null(what: &str) -> (MaxlabStatus, String) {
    (MaxlabStatus::NullPointer, format!("{what} is null"))
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn maxlab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a measure from JSON into `*out`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn maxlab_measure_from_json(json: *const c_char, out: *mut *mut MaxlabMeasure) -> MaxlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let mu = measure_from_json(read_str(json, "json")?).map_err(lab)?;
        *out = Box::into_raw(Box::new(MaxlabMeasure(mu)));
        Ok(())
    })
}

/// # Safety
/// `measure` must come from `maxlab_measure_from_json` or be null.
#[no_mangle]
pub unsafe extern "C" fn maxlab_measure_free(measure: *mut MaxlabMeasure) {
    if !measure.is_null() {
        drop(Box::from_raw(measure));
    }
}

/// Parses a step function from JSON into `*out`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn maxlab_function_from_json(json: *const c_char, out: *mut *mut MaxlabFunction) -> MaxlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f = step_from_json(read_str(json, "json")?).map_err(lab)?;
        *out = Box::into_raw(Box::new(MaxlabFunction(f)));
        Ok(())
    })
}

/// # Safety
/// `function` must come from `maxlab_function_from_json` or be null.
#[no_mangle]
pub unsafe extern "C" fn maxlab_function_free(function: *mut MaxlabFunction) {
    if !function.is_null() {
        drop(Box::from_raw(function));
    }
}

/// Uncentered maximal function at the rational `x` (e.g. "3/4"). Writes the
/// value as a double and, if `exact` is non-null, as a fraction string that
/// must be released with `maxlab_string_free`.
///
/// # Safety
/// Handles must be live, `x` nul-terminated, `value` valid.
#[no_mangle]
pub unsafe extern "C" fn maxlab_maximal_at(
    measure: *const MaxlabMeasure,
    function: *const MaxlabFunction,
    x: *const c_char,
    value: *mut c_double,
    exact: *mut *mut c_char,
) -> MaxlabStatus {
    guarded(|| {
        let (Some(mu), Some(f)) = (measure.as_ref(), function.as_ref()) else {
            return Err(null("handle"));
        };
        if value.is_null() {
            return Err(null("value"));
        }
        let point = parse_rational(read_str(x, "x")?).map_err(|m| (MaxlabStatus::ParseError, format!("x: {m}")))?;
        let v = maximal_at(&mu.0, &f.0, &point).value;
        *value = to_f64(&v);
        if !exact.is_null() {
            *exact = CString::new(format_rational(&v)).expect("no nul in a fraction").into_raw();
        }
        Ok(())
    })
}

/// `||M f||_p / ||f||_p` with `tol` relative to `||f||_p^p`.
///
/// # Safety
/// Handles must be live; `value` and `error_bound` valid.
#[no_mangle]
pub unsafe extern "C" fn maxlab_ratio(
    measure: *const MaxlabMeasure,
    function: *const MaxlabFunction,
    p: c_double,
    tol: c_double,
    value: *mut c_double,
    error_bound: *mut c_double,
) -> MaxlabStatus {
    guarded(|| {
        let (Some(mu), Some(f)) = (measure.as_ref(), function.as_ref()) else {
            return Err(null("handle"));
        };
        if value.is_null() || error_bound.is_null() {
            return Err(null("output"));
        }
        let r = ratio(&mu.0, &f.0, p, tol).map_err(lab)?;
        *value = r.value;
        *error_bound = r.error_bound;
        Ok(())
    })
}

/// Lower-bound constants for exponent `p` and overlap `overlap`.
///
/// # Safety
/// `lerner` and `besicovitch` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn maxlab_constants(
    p: c_double,
    overlap: u32,
    lerner: *mut c_double,
    besicovitch: *mut c_double,
) -> MaxlabStatus {
    guarded(|| {
        if lerner.is_null() || besicovitch.is_null() {
            return Err(null("output"));
        }
        let c = constants(p, overlap).map_err(lab)?;
        *lerner = c.lerner;
        *besicovitch = c.besicovitch;
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn maxlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
