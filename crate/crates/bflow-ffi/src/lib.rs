//! C bindings for the bflow solver.
//!
//! Graphs travel across the boundary as opaque `BfGraph` handles created
//! from edge-list text. Every function returns a [`BfStatus`]; results go
//! through out-pointers. Panics never cross the boundary: they are caught
//! and reported as [`BfStatus::Panic`].
//!
//! The C header is regenerated into `include/bflow.h` on every build.

use bflow::dp::{b_chromatic, decide_k, ValidatedGraph};
use bflow::graph::{line_graph_of_tree, parse_graph, Tree};
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Validated claw-free block graph, opaque to C callers.
///
/// Create with [`bf_graph_from_edge_list`] or
/// [`bf_graph_from_tree_edge_list`]; release with [`bf_graph_free`].
pub struct BfGraph(ValidatedGraph);

/// Result of every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfStatus {
    /// The call succeeded and the out-parameter is set.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The input text is not valid UTF-8 or not a well-formed edge list.
    ParseError = 2,
    /// The graph is not a connected claw-free block graph (or, for tree
    /// input, not a tree).
    InvalidGraph = 3,
    /// The requested color count is out of range.
    InvalidK = 4,
    /// An internal panic was caught at the boundary.
    Panic = 5,
}

fn shield(body: impl FnOnce() -> BfStatus) -> BfStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(BfStatus::Panic)
}

/// Reads a NUL-terminated edge list. Returns None for null or non-UTF-8.
unsafe fn read_text<'a>(text: *const c_char) -> Option<&'a str> {
    if text.is_null() {
        return None;
    }
    CStr::from_ptr(text).to_str().ok()
}

unsafe fn hand_out(out: *mut *mut BfGraph, vg: ValidatedGraph) -> BfStatus {
    *out = Box::into_raw(Box::new(BfGraph(vg)));
    BfStatus::Ok
}

/// Parses edge-list text as a claw-free block graph and validates it.
///
/// On success writes a heap-allocated handle to `*out`. The caller owns the
/// handle and must release it with [`bf_graph_free`].
///
/// # Safety
///
/// `text` must be null or point to a NUL-terminated string; `out` must be
/// a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn bf_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut BfGraph,
) -> BfStatus {
    shield(|| {
        if out.is_null() {
            return BfStatus::NullArgument;
        }
        let Some(text) = read_text(text) else {
            return if text.is_null() {
                BfStatus::NullArgument
            } else {
                BfStatus::ParseError
            };
        };
        let Ok(graph) = parse_graph(text) else {
            return BfStatus::ParseError;
        };
        match ValidatedGraph::new(graph) {
            Ok(vg) => hand_out(out, vg),
            Err(_) => BfStatus::InvalidGraph,
        }
    })
}

/// Parses edge-list text as a tree and validates its line graph.
///
/// On success writes a heap-allocated handle to `*out`. The caller owns the
/// handle and must release it with [`bf_graph_free`].
///
/// # Safety
///
/// `text` must be null or point to a NUL-terminated string; `out` must be
/// a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn bf_graph_from_tree_edge_list(
    text: *const c_char,
    out: *mut *mut BfGraph,
) -> BfStatus {
    shield(|| {
        if out.is_null() {
            return BfStatus::NullArgument;
        }
        let Some(text) = read_text(text) else {
            return if text.is_null() {
                BfStatus::NullArgument
            } else {
                BfStatus::ParseError
            };
        };
        let Ok(parsed) = parse_graph(text) else {
            return BfStatus::ParseError;
        };
        let Ok(tree) = Tree::from_graph(parsed) else {
            return BfStatus::InvalidGraph;
        };
        let Ok(lg) = line_graph_of_tree(&tree) else {
            return BfStatus::InvalidGraph;
        };
        match ValidatedGraph::new(lg) {
            Ok(vg) => hand_out(out, vg),
            Err(_) => BfStatus::InvalidGraph,
        }
    })
}

/// Releases a handle returned by one of the constructors. Null is ignored.
///
/// # Safety
///
/// `g` must be null or a handle previously returned by this library that
/// has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn bf_graph_free(g: *mut BfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

unsafe fn with_graph<T>(
    g: *const BfGraph,
    out: *mut T,
    body: impl FnOnce(&ValidatedGraph) -> Result<T, BfStatus>,
) -> BfStatus {
    shield(|| {
        if g.is_null() || out.is_null() {
            return BfStatus::NullArgument;
        }
        match body(&(*g).0) {
            Ok(value) => {
                *out = value;
                BfStatus::Ok
            }
            Err(status) => status,
        }
    })
}

/// Writes the size of the largest clique to `*out`.
///
/// # Safety
///
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_graph_omega(g: *const BfGraph, out: *mut u32) -> BfStatus {
    with_graph(g, out, |vg| Ok(vg.profile().omega() as u32))
}

/// Writes the m-degree, the largest k such that at least k vertices have
/// degree at least k - 1, to `*out`.
///
/// # Safety
///
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_graph_m_degree(g: *const BfGraph, out: *mut u32) -> BfStatus {
    with_graph(g, out, |vg| Ok(vg.profile().m_degree() as u32))
}

/// Decides whether the graph has a b-coloring with exactly `k` colors and
/// writes the answer to `*out`. `k` must be at least 1.
///
/// # Safety
///
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_decide_k(g: *const BfGraph, k: u32, out: *mut bool) -> BfStatus {
    with_graph(g, out, |vg| {
        decide_k(vg, k as usize).map_err(|_| BfStatus::InvalidK)
    })
}

/// Writes the b-chromatic number to `*out`.
///
/// # Safety
///
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_b_chromatic(g: *const BfGraph, out: *mut u32) -> BfStatus {
    with_graph(g, out, |vg| Ok(b_chromatic(vg) as u32))
}
