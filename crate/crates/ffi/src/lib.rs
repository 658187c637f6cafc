//! C interface to the `rollercoaster` library.
//!
//! Objects cross the boundary as opaque handles (`RcDtCode`, `RcBraid`)
//! owned by the caller and released with the matching `*_free` function.
//! Every fallible call returns an [`RcStatus`]; on failure a message for the
//! calling thread is available from [`rc_last_error`]. Strings returned by
//! the library are released with [`rc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rollercoaster::braid::{ab_counts, closure_gauss, parse_braid, positive_unknotting, BraidWord};
use rollercoaster::codes::{dt_to_gauss, gauss_to_dt, is_reduced, parse_dt, DTCode, Direction};
use rollercoaster::embed::realize;
use rollercoaster::invariants::{format_jones, jones};
use rollercoaster::warp::{min_warp, warp_profile};

/// Result of every fallible call. Zero means success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Valid input the operation does not accept, e.g. a link closure.
    Unsupported = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// A validated DT code.
pub struct RcDtCode {
    inner: DTCode,
}

/// A braid word with a fixed strand count.
pub struct RcBraid {
    inner: BraidWord,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(RcStatus, String);

type Res<T> = Result<T, Failure>;

fn guard(f: impl FnOnce() -> Res<()>) -> RcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RcStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RcStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(RcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Res<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(RcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Res<&'a T> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Res<()> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a DT code such as `"[4, 6, 2]"` or `"4 6 2"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_dt_parse(text: *const c_char, out: *mut *mut RcDtCode) -> RcStatus {
    guard(|| {
        let s = read_str(text, "text")?;
        let d = parse_dt(s).map_err(|e| Failure(RcStatus::Parse, e.to_string()))?;
        write(out, Box::into_raw(Box::new(RcDtCode { inner: d })), "out")
    })
}

/// # Safety
/// `code` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn rc_dt_free(code: *mut RcDtCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Number of crossings, or 0 for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_dt_crossings(code: *const RcDtCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.crossings())
}

/// Least warping degree over all basepoints and both directions, with the
/// basepoint attaining it.
///
/// # Safety
/// `code` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_dt_min_warp(
    code: *const RcDtCode,
    degree: *mut usize,
    edge: *mut usize,
    backward: *mut bool,
) -> RcStatus {
    guard(|| {
        let c = handle(code, "code")?;
        let (d, w) = min_warp(&dt_to_gauss(&c.inner));
        write(degree, d, "degree")?;
        write(edge, w.basepoint.edge, "edge")?;
        write(backward, w.basepoint.direction == Direction::Backward, "backward")
    })
}

/// Warping degree at every edge `0..2c` in one direction. `len` is the
/// capacity of `out`; `written` receives `2c` even when the buffer is too
/// small.
///
/// # Safety
/// `code` must be a live handle; `out` must hold `len` values; `written`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_dt_warp_profile(
    code: *const RcDtCode,
    backward: bool,
    out: *mut usize,
    len: usize,
    written: *mut usize,
) -> RcStatus {
    guard(|| {
        let c = handle(code, "code")?;
        let dir = if backward { Direction::Backward } else { Direction::Forward };
        let p = warp_profile(&dt_to_gauss(&c.inner), dir);
        write(written, p.len(), "written")?;
        if len < p.len() {
            return Err(Failure(RcStatus::BufferTooSmall, format!("need {} values, got {len}", p.len())));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(p.as_ptr(), out, p.len());
        Ok(())
    })
}

/// Whether the diagram has no nugatory crossing.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_dt_is_reduced(code: *const RcDtCode, out: *mut bool) -> RcStatus {
    guard(|| {
        let c = handle(code, "code")?;
        write(out, is_reduced(&dt_to_gauss(&c.inner)), "out")
    })
}

/// Jones polynomial as text, e.g. `"t + t^3 - t^4"`. Release with
/// [`rc_string_free`].
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_dt_jones(code: *const RcDtCode, out: *mut *mut c_char) -> RcStatus {
    guard(|| {
        let c = handle(code, "code")?;
        let pd = realize(&c.inner).map_err(|e| Failure(RcStatus::Unsupported, e.to_string()))?;
        let j = jones(&pd).map_err(|e| Failure(RcStatus::Unsupported, e.to_string()))?;
        let s = CString::new(format_jones(&j)).expect("polynomial text has no NUL");
        write(out, s.into_raw(), "out")
    })
}

/// DT code as text, e.g. `"[4, 6, 2]"`. Release with [`rc_string_free`].
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_dt_to_string(code: *const RcDtCode, out: *mut *mut c_char) -> RcStatus {
    guard(|| {
        let c = handle(code, "code")?;
        write(out, CString::new(c.inner.to_string()).unwrap().into_raw(), "out")
    })
}

/// Parse a braid word such as `"1 2 -1"` or `"s1 s2^-1"`. `strands` fixes
/// the strand count; pass 0 to use one more than the largest generator.
///
/// # Safety
/// `word` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_braid_parse(word: *const c_char, strands: usize, out: *mut *mut RcBraid) -> RcStatus {
    guard(|| {
        let s = read_str(word, "word")?;
        let n = (strands > 0).then_some(strands);
        let w = parse_braid(s, n).map_err(|e| Failure(RcStatus::Parse, e.to_string()))?;
        write(out, Box::into_raw(Box::new(RcBraid { inner: w })), "out")
    })
}

/// # Safety
/// `braid` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn rc_braid_free(braid: *mut RcBraid) {
    if !braid.is_null() {
        drop(Box::from_raw(braid));
    }
}

/// Crossings of a positive braid closure first met from above (`a`) and
/// from below (`b`), walking from the top-left strand.
///
/// # Safety
/// `braid` must be a live handle; `a` and `b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_braid_ab_counts(braid: *const RcBraid, a: *mut usize, b: *mut usize) -> RcStatus {
    guard(|| {
        let w = handle(braid, "braid")?;
        let (x, y) = ab_counts(&w.inner).map_err(|e| Failure(RcStatus::Unsupported, e.to_string()))?;
        write(a, x, "a")?;
        write(b, y, "b")
    })
}

/// Unknotting number `(C - n + 1) / 2` of a positive braid knot.
///
/// # Safety
/// `braid` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_braid_unknotting(braid: *const RcBraid, out: *mut usize) -> RcStatus {
    guard(|| {
        let w = handle(braid, "braid")?;
        let u = positive_unknotting(&w.inner).map_err(|e| Failure(RcStatus::Unsupported, e.to_string()))?;
        write(out, u, "out")
    })
}

/// DT code of the braid closure, as a new handle.
///
/// # Safety
/// `braid` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_braid_closure_dt(braid: *const RcBraid, out: *mut *mut RcDtCode) -> RcStatus {
    guard(|| {
        let w = handle(braid, "braid")?;
        let (g, _) = closure_gauss(&w.inner).map_err(|e| Failure(RcStatus::Unsupported, e.to_string()))?;
        let d = gauss_to_dt(&g).map_err(|e| Failure(RcStatus::Unsupported, e.to_string()))?;
        write(out, Box::into_raw(Box::new(RcDtCode { inner: d })), "out")
    })
}
