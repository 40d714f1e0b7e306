//! C ABI over the `hfree` solvers.
//!
//! Graphs are opaque handles created by `hfree_graph_new` or
//! `hfree_graph_from_graph6` and released with `hfree_graph_free`. Every
//! fallible call returns an [`HfreeStatus`]; on failure
//! `hfree_last_error_message` describes the most recent error on the
//! calling thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hfree::factor::{max_degree_constrained_subgraph, DegreeBudget};
use hfree::matching::matching_number;
use hfree::oracle::{rem_exact, OracleError, SearchLimits, DEFAULT_NODE_LIMIT};
use hfree::reductions::contains_balanced_biclique;
use hfree::starforest::{ex_star_forest, StarForestError};
use hfree::Graph;

/// Result codes. `HFREE_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfreeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The answer exceeds the supplied budget.
    BudgetExceeded = 4,
    /// A search or enumeration limit was hit before an answer was found.
    LimitReached = 5,
    /// The pattern is outside the solver's scope.
    Unsupported = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct HfreeGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).unwrap()));
}

struct Failure(HfreeStatus, String);

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::Exceeded { .. } => HfreeStatus::BudgetExceeded,
            OracleError::NodeLimit { .. } => HfreeStatus::LimitReached,
            OracleError::Unremovable => HfreeStatus::Unsupported,
        };
        Failure(code, e.to_string())
    }
}

impl From<StarForestError> for Failure {
    fn from(e: StarForestError) -> Self {
        let code = match e {
            StarForestError::EnumerationTooLarge { .. } => HfreeStatus::LimitReached,
            _ => HfreeStatus::Unsupported,
        };
        Failure(code, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(HfreeStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HfreeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HfreeStatus::Ok,
        Ok(Err(Failure(code, msg))) => {
            set_error(msg);
            code
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            HfreeStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const HfreeGraph, what: &str) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hfree_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Creates an edgeless graph on `n` vertices.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_new(n: usize, out: *mut *mut HfreeGraph) -> HfreeStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = Box::into_raw(Box::new(HfreeGraph(Graph::empty(n))));
        Ok(())
    })
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut HfreeGraph,
) -> HfreeStatus {
    guard(|| {
        let out = out_ref(out)?;
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(HfreeStatus::Parse, e.to_string()))?;
        let g =
            hfree::io::parse_graph6(s).map_err(|e| Failure(HfreeStatus::Parse, e.to_string()))?;
        *out = Box::into_raw(Box::new(HfreeGraph(g)));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_free(g: *mut HfreeGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Adds the edge `uv`. Self-loops, duplicates and out-of-range endpoints
/// give `HFREE_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_add_edge(
    g: *mut HfreeGraph,
    u: usize,
    v: usize,
) -> HfreeStatus {
    guard(|| {
        let g = g.as_mut().ok_or_else(|| null("graph"))?;
        g.0.try_add_edge(u, v)
            .map_err(|e| Failure(HfreeStatus::InvalidArgument, e.to_string()))
    })
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_vertex_count(g: *const HfreeGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.n())
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_edge_count(g: *const HfreeGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.edge_count())
}

/// Writes a newly allocated graph6 string to `out`; free it with
/// `hfree_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_to_graph6(
    g: *const HfreeGraph,
    out: *mut *mut c_char,
) -> HfreeStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let out = out_ref(out)?;
        *out = CString::new(hfree::io::to_graph6(g)).unwrap().into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn hfree_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact `rem_H(G)` by bounded search. A negative `budget` means none;
/// otherwise `HFREE_STATUS_BUDGET_EXCEEDED` is returned when the answer is
/// larger.
///
/// # Safety
/// `g` and `h` must be live handles and `rem` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hfree_rem(
    g: *const HfreeGraph,
    h: *const HfreeGraph,
    budget: i64,
    rem: *mut usize,
) -> HfreeStatus {
    guard(|| {
        let (g, h) = (graph_ref(g, "graph")?, graph_ref(h, "pattern")?);
        let rem = out_ref(rem)?;
        let limits = SearchLimits {
            budget: usize::try_from(budget).ok(),
            node_limit: Some(DEFAULT_NODE_LIMIT),
        };
        *rem = rem_exact(g, h, limits)?.rem;
        Ok(())
    })
}

/// `ex(G, H)` for a star forest `H`, in polynomial time.
///
/// # Safety
/// `g` and `h` must be live handles and `ex` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hfree_ex_star_forest(
    g: *const HfreeGraph,
    h: *const HfreeGraph,
    ex: *mut usize,
) -> HfreeStatus {
    guard(|| {
        let (g, h) = (graph_ref(g, "graph")?, graph_ref(h, "pattern")?);
        let ex = out_ref(ex)?;
        *ex = ex_star_forest(g, h)?.ex;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `size` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hfree_matching_number(
    g: *const HfreeGraph,
    size: *mut usize,
) -> HfreeStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        *out_ref(size)? = matching_number(g);
        Ok(())
    })
}

/// Largest subgraph with `d(v) <= f[v]`; `len` must equal the vertex count.
///
/// # Safety
/// `f` must point to `len` readable values and `m` be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hfree_max_degree_subgraph(
    g: *const HfreeGraph,
    f: *const usize,
    len: usize,
    m: *mut usize,
) -> HfreeStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let m = out_ref(m)?;
        if f.is_null() && len > 0 {
            return Err(null("budget"));
        }
        let values = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(f, len).to_vec()
        };
        let r = max_degree_constrained_subgraph(g, &DegreeBudget::new(values))
            .map_err(|e| Failure(HfreeStatus::InvalidArgument, e.to_string()))?;
        *m = r.m;
        Ok(())
    })
}

/// Whether `G` contains `K_{⌊n/2⌋,⌈n/2⌉}`.
///
/// # Safety
/// `g` must be a live handle and `found` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn hfree_contains_balanced_biclique(
    g: *const HfreeGraph,
    found: *mut bool,
) -> HfreeStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        *out_ref(found)? = contains_balanced_biclique(g);
        Ok(())
    })
}
