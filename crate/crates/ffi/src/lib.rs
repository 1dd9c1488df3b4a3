//! C bindings for `inertial`.
//!
//! Graphs are opaque `InertialGraph` handles created by the constructors and
//! released with `inertial_graph_free`. Every fallible function returns an
//! `InertialStatus`; on failure `inertial_last_error` describes the problem
//! for the calling thread. Output pointers are written only on success.
//! Panics never cross the boundary; they surface as `INERTIAL_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use inertial::bounds::{hoffman_bound, inertial_bound};
use inertial::chromatic::{
    fractional_chromatic_with, independence_number, optimal_coloring, ChromaticOptions, FractionalOptions,
    SolverError, DEFAULT_CHIF_ORDER, DEFAULT_SET_CAP, DEFAULT_VERTEX_BUDGET,
};
use inertial::graph6::{encode_graph6, parse_graph6};
use inertial::spectrum::{numeric_spectrum, DEFAULT_TOL};
use inertial::srg::{srg_multiplicities, SrgParams};
use inertial::{Graph, Rational};
use num_traits::ToPrimitive;

/// Opaque graph handle.
pub struct InertialGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InertialStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Budget = 4,
    Overflow = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InertialInertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(InertialStatus, String);

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        let status = match e {
            SolverError::BudgetExceeded { .. } | SolverError::SetCapExceeded { .. } => InertialStatus::Budget,
            SolverError::Lp(_) => InertialStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> InertialStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            InertialStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            InertialStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(InertialStatus::NullPointer, "null pointer argument".into())
}

unsafe fn graph_ref<'a>(g: *const InertialGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn ratio_parts(r: &Rational) -> Result<(i64, i64), Failure> {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(Failure(InertialStatus::Overflow, format!("{r} does not fit in 64 bits"))),
    }
}

fn into_handle(g: Graph) -> *mut InertialGraph {
    Box::into_raw(Box::new(InertialGraph(g)))
}

/// Message for the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into this library on the thread.
#[no_mangle]
pub extern "C" fn inertial_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a NUL-terminated graph6 string.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn inertial_graph_from_graph6(text: *const c_char, out: *mut *mut InertialGraph) -> InertialStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure(InertialStatus::Parse, "graph6 text is not UTF-8".into()))?;
        let g = parse_graph6(s).map_err(|e| Failure(InertialStatus::Parse, e.to_string()))?;
        write(out, into_handle(g))
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`
/// (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (or may be null when
/// `edge_count` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_graph_from_edges(
    order: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut InertialGraph,
) -> InertialStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return Err(null());
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::from_edges(order, &pairs).map_err(|e| Failure(InertialStatus::InvalidArgument, e.to_string()))?;
        write(out, into_handle(g))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn inertial_graph_free(g: *mut InertialGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_graph_order(g: *const InertialGraph, out: *mut usize) -> InertialStatus {
    guard(|| write(out, graph_ref(g)?.order()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_graph_complement(
    g: *const InertialGraph,
    out: *mut *mut InertialGraph,
) -> InertialStatus {
    guard(|| {
        let c = graph_ref(g)?.complement();
        if out.is_null() {
            return Err(null());
        }
        write(out, into_handle(c))
    })
}

/// Encodes as graph6. Release the string with `inertial_string_free`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_graph_to_graph6(g: *const InertialGraph, out: *mut *mut c_char) -> InertialStatus {
    guard(|| {
        let s = encode_graph6(graph_ref(g)?).map_err(|e| Failure(InertialStatus::InvalidArgument, e.to_string()))?;
        let c = CString::new(s).map_err(|_| Failure(InertialStatus::Internal, "NUL in graph6".into()))?;
        if out.is_null() {
            return Err(null());
        }
        write(out, c.into_raw())
    })
}

/// # Safety
/// `s` must come from this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn inertial_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact inertia of the adjacency matrix.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_inertia(g: *const InertialGraph, out: *mut InertialInertia) -> InertialStatus {
    guard(|| {
        let i = inertial::inertia(graph_ref(g)?);
        write(
            out,
            InertialInertia {
                n_plus: i.n_plus,
                n_zero: i.n_zero,
                n_minus: i.n_minus,
            },
        )
    })
}

/// `1 + max(n+/n-, n-/n+)` as a reduced fraction. Edgeless graphs give
/// `INERTIAL_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_inertial_bound(
    g: *const InertialGraph,
    num: *mut i64,
    den: *mut i64,
) -> InertialStatus {
    guard(|| {
        let b = inertial_bound(inertial::inertia(graph_ref(g)?))
            .map_err(|e| Failure(InertialStatus::InvalidArgument, e.to_string()))?;
        let (n, d) = ratio_parts(&b)?;
        if den.is_null() {
            return Err(null());
        }
        write(num, n)?;
        write(den, d)
    })
}

/// Chromatic number. A `vertex_budget` of 0 selects the default.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_chromatic_number(
    g: *const InertialGraph,
    vertex_budget: usize,
    out: *mut usize,
) -> InertialStatus {
    guard(|| {
        let opts = ChromaticOptions {
            vertex_budget: if vertex_budget == 0 { DEFAULT_VERTEX_BUDGET } else { vertex_budget },
            ..ChromaticOptions::default()
        };
        let c = optimal_coloring(graph_ref(g)?, &opts)?;
        write(out, c.num_colors)
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_independence_number(g: *const InertialGraph, out: *mut usize) -> InertialStatus {
    guard(|| {
        let a = independence_number(graph_ref(g)?)?;
        write(out, a)
    })
}

/// Fractional chromatic number as a reduced fraction. A `max_order` of 0
/// selects the default.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_fractional_chromatic(
    g: *const InertialGraph,
    max_order: usize,
    num: *mut i64,
    den: *mut i64,
) -> InertialStatus {
    guard(|| {
        let opts = FractionalOptions {
            max_order: if max_order == 0 { DEFAULT_CHIF_ORDER } else { max_order },
            set_cap: DEFAULT_SET_CAP,
        };
        let c = fractional_chromatic_with(graph_ref(g)?, &opts)?;
        let (n, d) = ratio_parts(&c.value)?;
        if den.is_null() {
            return Err(null());
        }
        write(num, n)?;
        write(den, d)
    })
}

/// `1 + mu_1/|mu_n|` from the numeric spectrum.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_hoffman_bound(g: *const InertialGraph, out: *mut f64) -> InertialStatus {
    guard(|| {
        let s = numeric_spectrum(graph_ref(g)?, DEFAULT_TOL)
            .map_err(|e| Failure(InertialStatus::Internal, e.to_string()))?;
        let h = hoffman_bound(&s).map_err(|e| Failure(InertialStatus::InvalidArgument, e.to_string()))?;
        write(out, h)
    })
}

/// Eigenvalue multiplicities `(f, g)` of a strongly regular parameter set.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inertial_srg_multiplicities(
    n: i64,
    k: i64,
    lambda: i64,
    mu: i64,
    f: *mut i64,
    g: *mut i64,
) -> InertialStatus {
    guard(|| {
        let p = SrgParams::new(n, k, lambda, mu).map_err(|e| Failure(InertialStatus::InvalidArgument, e.to_string()))?;
        let (mf, mg) = srg_multiplicities(&p);
        if g.is_null() {
            return Err(null());
        }
        write(f, mf)?;
        write(g, mg)
    })
}
