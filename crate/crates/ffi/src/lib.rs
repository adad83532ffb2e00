//! C interface to `hessgkm`.
//!
//! Every fallible call returns an [`HgStatus`]. On failure the message is
//! kept per thread and read with [`hg_last_error_message`]. Objects are
//! opaque handles released with their `_free` function; strings returned
//! through `char **` are released with [`hg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hessgkm::classify::{classify, ClassificationReport, Verdict};
use hessgkm::cohomology::poincare_polynomial;
use hessgkm::graph::{build_hessenberg_graph, interval_graph, GkmGraph};
use hessgkm::hessenberg::{
    cell_dimension, enumerate_admissible, is_admissible, HessenbergFunction,
};
use hessgkm::perm::Permutation;
use hessgkm::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Precondition = 4,
    TooLarge = 5,
    BufferTooSmall = 6,
    Internal = 7,
    Panic = 8,
}

/// Three-valued verdict.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgVerdict {
    No = 0,
    Yes = 1,
    Unknown = 2,
}

impl From<Verdict> for HgVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Yes => HgVerdict::Yes,
            Verdict::No => HgVerdict::No,
            Verdict::Unknown => HgVerdict::Unknown,
        }
    }
}

/// A Hessenberg function.
pub struct HgHessenberg(HessenbergFunction);

/// A permutation in one-line notation.
pub struct HgPermutation(Permutation);

/// Classification of one pair (h, w).
pub struct HgReport(ClassificationReport);

/// A GKM graph.
pub struct HgGraph(GkmGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HgStatus {
    match e {
        Error::TooLarge { .. } => HgStatus::TooLarge,
        Error::NotAdmissible(_)
        | Error::NotInInterval { .. }
        | Error::Precondition(_)
        | Error::DomainMismatch
        | Error::SignInconsistency(_) => HgStatus::Precondition,
        Error::Internal(_) => HgStatus::Internal,
        _ => HgStatus::InvalidInput,
    }
}

struct Fail(HgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HgStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside hessgkm".into());
            HgStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(HgStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail(HgStatus::NullPointer, format!("{what} is null")))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(HgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior nul")
        .into_raw()
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses "3,3,4,4" (parentheses optional).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_hessenberg_parse(
    text: *const c_char,
    out: *mut *mut HgHessenberg,
) -> HgStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let h: HessenbergFunction = read_str(text, "text")?.parse()?;
        *out = boxed(HgHessenberg(h));
        Ok(())
    })
}

/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_hessenberg_free(h: *mut HgHessenberg) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// n for a Hessenberg function, 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_hessenberg_n(h: *const HgHessenberg) -> usize {
    h.as_ref().map_or(0, |h| h.0.n())
}

/// Parses one-line notation such as "3214".
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_permutation_parse(
    text: *const c_char,
    out: *mut *mut HgPermutation,
) -> HgStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let w: Permutation = read_str(text, "text")?.parse()?;
        *out = boxed(HgPermutation(w));
        Ok(())
    })
}

/// # Safety
/// `w` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_permutation_free(w: *mut HgPermutation) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Coxeter length, 0 for NULL.
///
/// # Safety
/// `w` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_permutation_length(w: *const HgPermutation) -> usize {
    w.as_ref().map_or(0, |w| w.0.length())
}

/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_is_admissible(
    h: *const HgHessenberg,
    w: *const HgPermutation,
    out: *mut bool,
) -> HgStatus {
    guard(|| {
        let (h, w, out) = (borrow(h, "h")?, borrow(w, "w")?, out_ptr(out, "out")?);
        *out = is_admissible(&w.0, &h.0)?;
        Ok(())
    })
}

/// Dimension of the cell of w in Hess(s, h).
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_cell_dimension(
    h: *const HgHessenberg,
    w: *const HgPermutation,
    out: *mut usize,
) -> HgStatus {
    guard(|| {
        let (h, w, out) = (borrow(h, "h")?, borrow(w, "w")?, out_ptr(out, "out")?);
        *out = cell_dimension(&w.0, &h.0)?;
        Ok(())
    })
}

/// Newline-terminated list of h-admissible permutations in lexicographic order.
///
/// # Safety
/// `h` must be live and `out` writable. Free the result with `hg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hg_enumerate_admissible(
    h: *const HgHessenberg,
    out: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let (h, out) = (borrow(h, "h")?, out_ptr(out, "out")?);
        let s: String = enumerate_admissible(&h.0)
            .iter()
            .map(|w| format!("{w}\n"))
            .collect();
        *out = to_c_string(s);
        Ok(())
    })
}

/// Betti numbers b_0, b_2, ... of Hess(s, h). `len` receives the count;
/// if it exceeds `cap`, nothing is written and BufferTooSmall is returned.
///
/// # Safety
/// `buf` must have room for `cap` values (may be NULL when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn hg_betti_numbers(
    h: *const HgHessenberg,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> HgStatus {
    guard(|| {
        let (h, len) = (borrow(h, "h")?, out_ptr(len, "len")?);
        let b = poincare_polynomial(&h.0);
        *len = b.len();
        if b.len() > cap {
            return Err(Fail(
                HgStatus::BufferTooSmall,
                format!("need {} entries", b.len()),
            ));
        }
        if buf.is_null() {
            return Err(Fail(HgStatus::NullPointer, "buf is null".into()));
        }
        for (i, &x) in b.iter().enumerate() {
            *buf.add(i) = x as u64;
        }
        Ok(())
    })
}

/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_classify(
    h: *const HgHessenberg,
    w: *const HgPermutation,
    out: *mut *mut HgReport,
) -> HgStatus {
    guard(|| {
        let (h, w, out) = (borrow(h, "h")?, borrow(w, "w")?, out_ptr(out, "out")?);
        *out = boxed(HgReport(classify(&w.0, &h.0)?));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_free(r: *mut HgReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_report_json(r: *const HgReport, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let (r, out) = (borrow(r, "report")?, out_ptr(out, "out")?);
        *out = to_c_string(r.0.to_json());
        Ok(())
    })
}

/// Unknown for NULL.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_intersection_smooth(r: *const HgReport) -> HgVerdict {
    r.as_ref().map_or(HgVerdict::Unknown, |r| {
        r.0.verdicts.intersection_smooth.value.into()
    })
}

/// Unknown for NULL.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_intersection_irreducible(r: *const HgReport) -> HgVerdict {
    r.as_ref().map_or(HgVerdict::Unknown, |r| {
        r.0.verdicts.intersection_irreducible.value.into()
    })
}

/// Unknown for NULL.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_hess_schubert_smooth(r: *const HgReport) -> HgVerdict {
    r.as_ref().map_or(HgVerdict::Unknown, |r| {
        r.0.verdicts.hess_schubert_smooth.value.into()
    })
}

/// GKM graph of Hess(s, h) when `w` is NULL, else of its intersection with Ω_w.
///
/// # Safety
/// `h` must be live, `w` NULL or live, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_build(
    h: *const HgHessenberg,
    w: *const HgPermutation,
    out: *mut *mut HgGraph,
) -> HgStatus {
    guard(|| {
        let (h, out) = (borrow(h, "h")?, out_ptr(out, "out")?);
        let g = match w.as_ref() {
            Some(w) => interval_graph(&h.0, &w.0)?,
            None => build_hessenberg_graph(&h.0)?,
        };
        *out = boxed(HgGraph(g));
        Ok(())
    })
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_free(g: *mut HgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_vertex_count(g: *const HgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_edge_count(g: *const HgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_is_connected(g: *const HgGraph) -> bool {
    g.as_ref().is_some_and(|g| g.0.is_connected())
}

/// # Safety
/// `g` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_dot(g: *const HgGraph, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let (g, out) = (borrow(g, "graph")?, out_ptr(out, "out")?);
        *out = to_c_string(g.0.to_dot());
        Ok(())
    })
}

/// # Safety
/// `g` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_json(g: *const HgGraph, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let (g, out) = (borrow(g, "graph")?, out_ptr(out, "out")?);
        *out = to_c_string(g.0.to_json());
        Ok(())
    })
}
