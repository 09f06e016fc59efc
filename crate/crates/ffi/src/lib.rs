//! C interface to `hyperf`.
//!
//! Every function returns a [`HyperfStatus`]; results go through out
//! pointers. On failure a message is available from
//! [`hyperf_last_error_message`] on the same thread. Handles are opaque
//! and must be released with the matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hyperf::extremal::{degeneracy, m_value, mad_exact};
use hyperf::fcalc::{closed_form_complete, f_count, f_with, FMethod, FValue};
use hyperf::hypercore::{generate, io};
use hyperf::orient::{orient_max_outdeg, BudgetOutcome};
use hyperf::ramsey::{b_value, chi_r};
use hyperf::{Error, Hypergraph, Orientation};

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperfStatus {
    Ok = 0,
    InvalidArgument = 1,
    Parse = 2,
    /// No object with the requested property exists.
    Infeasible = 3,
    BudgetExceeded = 4,
    Internal = 5,
    NullPointer = 6,
}

/// Method for [`hyperf_f`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperfMethod {
    Auto = 0,
    Brute = 1,
    ViaM = 2,
    ClosedForm = 3,
    Coloring = 4,
}

/// An r-uniform hypergraph.
pub struct HyperfHypergraph(Hypergraph);

/// An orientation of a hypergraph.
pub struct HyperfOrientation(Orientation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> HyperfStatus {
    match err {
        Error::Parse { .. } | Error::Io(_) => HyperfStatus::Parse,
        Error::BudgetExceeded { .. } | Error::BudgetBracket { .. } => HyperfStatus::BudgetExceeded,
        Error::NotDegenerateEnough { .. } | Error::Stuck { .. } | Error::MatchingImpossible { .. } => {
            HyperfStatus::Infeasible
        }
        Error::Internal(_) => HyperfStatus::Internal,
        _ => HyperfStatus::InvalidArgument,
    }
}

impl From<Error> for Fail {
    fn from(err: Error) -> Self {
        Fail(status_of(&err), err.to_string())
    }
}

struct Fail(HyperfStatus, String);

fn null() -> Fail {
    Fail(HyperfStatus::NullPointer, "null pointer argument".into())
}

/// Runs `body`, turning errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> HyperfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HyperfStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside hyperf");
            HyperfStatus::Internal
        }
    }
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn budget(b: u64, default: u64) -> u64 {
    if b == 0 {
        default
    } else {
        b
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn hyperf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a hypergraph from `edge_count * r` vertex ids laid out edge by
/// edge.
///
/// # Safety
/// `edges` must point to `edge_count * r` values (or be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_hypergraph_new(
    n: usize,
    r: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut HyperfHypergraph,
) -> HyperfStatus {
    guard(|| {
        if r == 0 {
            return Err(Fail(HyperfStatus::InvalidArgument, "r must be positive".into()));
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(edges, edge_count * r)
        };
        let rows: Vec<&[usize]> = flat.chunks(r).collect();
        let h = Hypergraph::canonicalize(&rows, n, r)?;
        put(out, Box::into_raw(Box::new(HyperfHypergraph(h))))
    })
}

/// Parses the plain-text format (`hypergraph n=.. r=..` with `e` lines,
/// or an oriented file, whose orders are dropped).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_hypergraph_parse(text: *const c_char, out: *mut *mut HyperfHypergraph) -> HyperfStatus {
    guard(|| {
        let text = get(text)?;
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(HyperfStatus::Parse, "input is not UTF-8".into()))?;
        let h = io::parse(text)?.hypergraph().clone();
        put(out, Box::into_raw(Box::new(HyperfHypergraph(h))))
    })
}

/// The complete r-uniform hypergraph on `n` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_hypergraph_complete(n: usize, r: usize, out: *mut *mut HyperfHypergraph) -> HyperfStatus {
    guard(|| {
        let h = generate::complete(n, r)?;
        put(out, Box::into_raw(Box::new(HyperfHypergraph(h))))
    })
}

/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hyperf_hypergraph_free(h: *mut HyperfHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Vertex count, uniformity and edge count.
///
/// # Safety
/// `h` must be a live handle; each out pointer may be NULL.
#[no_mangle]
pub unsafe extern "C" fn hyperf_hypergraph_counts(
    h: *const HyperfHypergraph,
    n: *mut usize,
    r: *mut usize,
    edges: *mut usize,
) -> HyperfStatus {
    guard(|| {
        let h = &get(h)?.0;
        for (p, v) in [(n, h.n()), (r, h.r()), (edges, h.edge_count())] {
            if !p.is_null() {
                p.write(v);
            }
        }
        Ok(())
    })
}

/// Maximum average degree as a reduced fraction.
///
/// # Safety
/// `h` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_mad(h: *const HyperfHypergraph, num: *mut i64, den: *mut i64) -> HyperfStatus {
    guard(|| {
        let value = mad_exact(&get(h)?.0).value;
        put(num, value.num())?;
        put(den, value.den())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_degeneracy(h: *const HyperfHypergraph, out: *mut usize) -> HyperfStatus {
    guard(|| put(out, degeneracy(&get(h)?.0).0))
}

/// Orientation in which every vertex is first in at most `k` edges;
/// `HYPERF_STATUS_INFEASIBLE` when none exists.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_orient_max_outdeg(
    h: *const HyperfHypergraph,
    k: u64,
    out: *mut *mut HyperfOrientation,
) -> HyperfStatus {
    guard(|| match orient_max_outdeg(&get(h)?.0, k) {
        BudgetOutcome::Oriented(d) => put(out, Box::into_raw(Box::new(HyperfOrientation(d)))),
        BudgetOutcome::Infeasible { witness } => Err(Fail(
            HyperfStatus::Infeasible,
            format!("vertices {witness:?} span more than {k} edges per vertex"),
        )),
    })
}

/// # Safety
/// `d` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hyperf_orientation_free(d: *mut HyperfOrientation) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// The orientation in the plain-text `oriented` format. Release the string
/// with [`hyperf_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_orientation_to_string(d: *const HyperfOrientation, out: *mut *mut c_char) -> HyperfStatus {
    guard(|| {
        let text = CString::new(io::write_orientation(&get(d)?.0))
            .map_err(|_| Fail(HyperfStatus::Internal, "interior NUL".into()))?;
        put(out, text.into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hyperf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of p-sets whose degree vector under `d` has every coordinate at
/// least `k`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_f_count(d: *const HyperfOrientation, p: usize, k: u32, out: *mut u64) -> HyperfStatus {
    guard(|| put(out, f_count(&get(d)?.0, p, k)?))
}

/// `f(H,p,k)`. `budget = 0` uses the library defaults. When `orientation`
/// is not NULL it receives an attaining orientation, or NULL when the
/// method produces none.
///
/// # Safety
/// `h` must be a live handle; `value` must be writable; `orientation` may
/// be NULL.
#[no_mangle]
pub unsafe extern "C" fn hyperf_f(
    h: *const HyperfHypergraph,
    p: usize,
    k: u32,
    method: HyperfMethod,
    budget: u64,
    value: *mut u64,
    orientation: *mut *mut HyperfOrientation,
) -> HyperfStatus {
    guard(|| {
        let method = match method {
            HyperfMethod::Auto => None,
            HyperfMethod::Brute => Some(FMethod::Brute),
            HyperfMethod::ViaM => Some(FMethod::ViaM),
            HyperfMethod::ClosedForm => Some(FMethod::ClosedForm),
            HyperfMethod::Coloring => Some(FMethod::Coloring),
        };
        let rep = f_with(&get(h)?.0, p, k, method, (budget != 0).then_some(budget))?;
        let v = match rep.value {
            FValue::Exact(v) => v,
            FValue::Interval { lower, upper } => {
                return Err(Fail(HyperfStatus::BudgetExceeded, format!("value lies in [{lower}, {upper}]")))
            }
        };
        put(value, v)?;
        if !orientation.is_null() {
            let d = rep.orientation.map_or(ptr::null_mut(), |d| Box::into_raw(Box::new(HyperfOrientation(d))));
            orientation.write(d);
        }
        Ok(())
    })
}

/// Ramsey p-chromatic number. `budget = 0` uses the default node budget.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_chi_r(h: *const HyperfHypergraph, p: usize, budget: u64, out: *mut u32) -> HyperfStatus {
    guard(|| put(out, chi_r(&get(h)?.0, p, self::budget(budget, hyperf::DEFAULT_NODE_BUDGET))?.value))
}

/// Largest family of p-sets colorable with `C(r,p)` colors and no
/// monochromatic edge.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_b_value(h: *const HyperfHypergraph, p: usize, budget: u64, out: *mut u64) -> HyperfStatus {
    guard(|| {
        let limit = self::budget(budget, hyperf::DEFAULT_NODE_BUDGET);
        let rep = b_value(&get(h)?.0, p, limit)?;
        if !rep.exact {
            return Err(Error::BudgetBracket { limit, lower: rep.value, upper: u64::MAX }.into());
        }
        put(out, rep.value)
    })
}

/// `M(H,k)`: the most vertices covered by `r` disjoint classes, each with
/// at most `k` edges per vertex in every subset.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_m_value(h: *const HyperfHypergraph, k: usize, budget: u64, out: *mut usize) -> HyperfStatus {
    guard(|| put(out, m_value(&get(h)?.0, k, self::budget(budget, hyperf::DEFAULT_NODE_BUDGET))?.value))
}

/// `f` of the complete r-uniform hypergraph on `n` vertices for `p = 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hyperf_closed_form_complete(n: u64, r: usize, k: u64, out: *mut u64) -> HyperfStatus {
    guard(|| put(out, closed_form_complete(n, r, k)?))
}
