//! C ABI over the `spined` library.
//!
//! Graphs and hypergraphs are opaque handles owned by the caller and released
//! with the matching `_free` function. Every fallible call returns a
//! [`SpinedStatus`]; the message of the last failure on the calling thread is
//! available from [`spined_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use spined::chordal;
use spined::graph::io::{parse_graph, GraphFormat};
use spined::hypergraph::{parse_hypergraph_json, parse_hypergraph_text};
use spined::triangulation::hypergraph_delta;
use spined::{delta_graph, treewidth_oracle, Convention, Error, Hypergraph, SimpleGraph};

/// Opaque graph handle.
pub struct SpinedGraph(SimpleGraph);

/// Opaque hypergraph handle.
pub struct SpinedHypergraph(Hypergraph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinedStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    RangeError = 4,
    BoundExceeded = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinedFormat {
    EdgeList = 0,
    Dimacs = 1,
    Json = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinedHypergraphFormat {
    Text = 0,
    Json = 1,
}

/// Width conventions: the largest clique of an optimal completion, or that value minus one.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinedConvention {
    Paper = 0,
    Standard = 1,
}

impl From<SpinedConvention> for Convention {
    fn from(c: SpinedConvention) -> Self {
        match c {
            SpinedConvention::Paper => Convention::PaperMaxClique,
            SpinedConvention::Standard => Convention::StandardTreewidth,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SpinedStatus {
    match e {
        Error::Parse { .. } => SpinedStatus::ParseError,
        Error::Range { .. } => SpinedStatus::RangeError,
        Error::BoundExceeded { .. } | Error::BudgetExhausted { .. } => SpinedStatus::BoundExceeded,
        Error::PreconditionViolation(_) => SpinedStatus::InvalidArgument,
        _ => SpinedStatus::Internal,
    }
}

fn fail(status: SpinedStatus, message: impl Into<String>) -> SpinedStatus {
    set_last_error(message.into());
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), SpinedStatus>) -> SpinedStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpinedStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(SpinedStatus::Internal, "panic inside spined"),
    }
}

fn lift<T>(r: spined::Result<T>) -> Result<T, SpinedStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, SpinedStatus> {
    p.as_ref()
        .ok_or_else(|| fail(SpinedStatus::NullPointer, "null pointer argument"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), SpinedStatus> {
    if out.is_null() {
        return Err(fail(SpinedStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, SpinedStatus> {
    if text.is_null() {
        return Err(fail(SpinedStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(SpinedStatus::ParseError, "input is not valid UTF-8"))
}

/// Message of the last failed call on this thread, or NULL. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn spined_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn spined_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph from `edge_count` pairs stored flat in `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values unless `edge_count` is 0.
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_new(
    vertex_count: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SpinedGraph,
) -> SpinedStatus {
    guard(|| {
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            if edges.is_null() {
                return Err(fail(SpinedStatus::NullPointer, "null edge array"));
            }
            let len = edge_count
                .checked_mul(2)
                .ok_or_else(|| fail(SpinedStatus::InvalidArgument, "edge count overflows"))?;
            slice::from_raw_parts(edges, len)
        };
        let g = lift(SimpleGraph::new(
            vertex_count,
            flat.chunks_exact(2).map(|p| (p[0], p[1])),
        ))?;
        write_out(out, Box::into_raw(Box::new(SpinedGraph(g))))
    })
}

/// Parses a graph from a NUL-terminated string.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_parse(
    text: *const c_char,
    format: SpinedFormat,
    out: *mut *mut SpinedGraph,
) -> SpinedStatus {
    guard(|| {
        let text = read_str(text)?;
        let format = match format {
            SpinedFormat::EdgeList => GraphFormat::EdgeList,
            SpinedFormat::Dimacs => GraphFormat::Dimacs,
            SpinedFormat::Json => GraphFormat::Json,
        };
        let g = lift(parse_graph(text, format))?;
        write_out(out, Box::into_raw(Box::new(SpinedGraph(g))))
    })
}

/// # Safety
/// `graph` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_free(graph: *mut SpinedGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_vertex_count(graph: *const SpinedGraph, out: *mut usize) -> SpinedStatus {
    guard(|| write_out(out, deref(graph)?.0.vertex_count()))
}

/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_edge_count(graph: *const SpinedGraph, out: *mut usize) -> SpinedStatus {
    guard(|| write_out(out, deref(graph)?.0.edge_count()))
}

/// Δ of the graph in the requested convention.
///
/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_delta(
    graph: *const SpinedGraph,
    convention: SpinedConvention,
    out: *mut usize,
) -> SpinedStatus {
    guard(|| {
        let g = &deref(graph)?.0;
        let w = delta_graph(g).to_convention(convention.into(), g.vertex_count());
        write_out(out, w.value)
    })
}

/// Exact treewidth by dynamic programming; fails with `BoundExceeded` on large graphs.
///
/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_treewidth_oracle(
    graph: *const SpinedGraph,
    convention: SpinedConvention,
    out: *mut usize,
) -> SpinedStatus {
    guard(|| {
        let g = &deref(graph)?.0;
        let w = lift(treewidth_oracle(g))?.to_convention(convention.into(), g.vertex_count());
        write_out(out, w.value)
    })
}

/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_clique_number(graph: *const SpinedGraph, out: *mut usize) -> SpinedStatus {
    guard(|| write_out(out, chordal::clique_number(&deref(graph)?.0)))
}

/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_graph_is_chordal(graph: *const SpinedGraph, out: *mut bool) -> SpinedStatus {
    guard(|| write_out(out, chordal::is_chordal(&deref(graph)?.0)))
}

/// Parses a hypergraph from a NUL-terminated string.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_hypergraph_parse(
    text: *const c_char,
    format: SpinedHypergraphFormat,
    out: *mut *mut SpinedHypergraph,
) -> SpinedStatus {
    guard(|| {
        let text = read_str(text)?;
        let h = lift(match format {
            SpinedHypergraphFormat::Text => parse_hypergraph_text(text),
            SpinedHypergraphFormat::Json => parse_hypergraph_json(text),
        })?;
        write_out(out, Box::into_raw(Box::new(SpinedHypergraph(h))))
    })
}

/// # Safety
/// `hypergraph` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spined_hypergraph_free(hypergraph: *mut SpinedHypergraph) {
    if !hypergraph.is_null() {
        drop(Box::from_raw(hypergraph));
    }
}

/// # Safety
/// `hypergraph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_hypergraph_vertex_count(
    hypergraph: *const SpinedHypergraph,
    out: *mut usize,
) -> SpinedStatus {
    guard(|| write_out(out, deref(hypergraph)?.0.vertex_count()))
}

/// # Safety
/// `hypergraph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_hypergraph_edge_count(
    hypergraph: *const SpinedHypergraph,
    out: *mut usize,
) -> SpinedStatus {
    guard(|| write_out(out, deref(hypergraph)?.0.hyperedges().len()))
}

/// Δ of the hypergraph, taken on its primal graph.
///
/// # Safety
/// `hypergraph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spined_hypergraph_delta(
    hypergraph: *const SpinedHypergraph,
    convention: SpinedConvention,
    out: *mut usize,
) -> SpinedStatus {
    guard(|| {
        let h = &deref(hypergraph)?.0;
        let w = hypergraph_delta(h).to_convention(convention.into(), h.vertex_count());
        write_out(out, w.value)
    })
}
