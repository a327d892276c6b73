//! C ABI for the graphlines toolkit.
//!
//! Graphs are opaque handles created by `gl_graph_parse_g6` or
//! `gl_graph_from_edges` and released with `gl_graph_free`. Every fallible
//! call returns a status code; `gl_last_error_message` gives the detail text
//! for the most recent failure on the calling thread. Strings returned
//! through out-pointers are NUL-terminated UTF-8 owned by the caller and
//! must be released with `gl_string_free`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;

use graphlines::error::Error;
use graphlines::graph::Graph;
use graphlines::graph6::{parse_graph6, to_graph6};
use graphlines::lines::{ell, ul};
use graphlines::search::analyze_graph;
use graphlines::structure::{br, family_label, StructureReport};

/// Opaque graph handle.
pub struct GlGraph {
    inner: Graph,
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GlStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed graph6 or edge input.
    Parse = 3,
    /// Operation precondition violated (bad vertex, too few vertices, ...).
    Domain = 4,
    /// Request exceeds a built-in bound (vertex cap, analysis bound).
    Capability = 5,
    /// The provided buffer is too small; the needed size was written back.
    BufferTooSmall = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let owned = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = owned);
}

fn status_of(err: &Error) -> GlStatus {
    match err {
        Error::Parse { .. } => GlStatus::Parse,
        Error::Domain(_) => GlStatus::Domain,
        Error::Capability(_) => GlStatus::Capability,
        Error::Io(_) => GlStatus::Domain,
    }
}

fn fail(err: &Error) -> GlStatus {
    set_error(&err.to_string());
    status_of(err)
}

/// Detail text for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Short stable name of a status code.
#[no_mangle]
pub extern "C" fn gl_status_name(status: GlStatus) -> *const c_char {
    let name: &'static CStr = match status {
        GlStatus::Ok => c"ok",
        GlStatus::NullArgument => c"null-argument",
        GlStatus::InvalidUtf8 => c"invalid-utf8",
        GlStatus::Parse => c"parse-error",
        GlStatus::Domain => c"domain-error",
        GlStatus::Capability => c"capability-error",
        GlStatus::BufferTooSmall => c"buffer-too-small",
    };
    name.as_ptr()
}

/// Parses one graph6 record into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_parse_g6(
    text: *const c_char,
    out: *mut *mut GlGraph,
) -> GlStatus {
    if text.is_null() || out.is_null() {
        set_error("null argument");
        return GlStatus::NullArgument;
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("input is not valid UTF-8");
            return GlStatus::InvalidUtf8;
        }
    };
    match parse_graph6(text.trim()) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(GlGraph { inner: g }));
            GlStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Builds a graph from `num_edges` unordered pairs, flattened as
/// `u0, v0, u1, v1, ...`.
///
/// # Safety
/// `endpoints` must point to `2 * num_edges` readable values (may be null
/// when `num_edges` is zero) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_from_edges(
    n: u32,
    endpoints: *const u32,
    num_edges: usize,
    out: *mut *mut GlGraph,
) -> GlStatus {
    if out.is_null() || (endpoints.is_null() && num_edges > 0) {
        set_error("null argument");
        return GlStatus::NullArgument;
    }
    let mut edges = Vec::with_capacity(num_edges);
    for k in 0..num_edges {
        let u = *endpoints.add(2 * k) as usize;
        let v = *endpoints.add(2 * k + 1) as usize;
        edges.push((u, v));
    }
    match Graph::from_edge_list(n as usize, &edges) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(GlGraph { inner: g }));
            GlStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `g` must be a pointer previously returned by a constructor, or null.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_free(g: *mut GlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_vertex_count(g: *const GlGraph) -> u32 {
    (*g).inner.vertex_count() as u32
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_edge_count(g: *const GlGraph) -> u32 {
    (*g).inner.edge_count() as u32
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_is_connected(g: *const GlGraph) -> bool {
    (*g).inner.is_connected()
}

unsafe fn write_str(
    s: &str,
    buf: *mut c_char,
    buf_len: usize,
    needed: *mut usize,
) -> GlStatus {
    let bytes = s.as_bytes();
    if !needed.is_null() {
        *needed = bytes.len() + 1;
    }
    if buf.is_null() || buf_len < bytes.len() + 1 {
        set_error("buffer too small");
        return GlStatus::BufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, bytes.len());
    *buf.add(bytes.len()) = 0;
    GlStatus::Ok
}

/// Writes the graph6 record of the graph. `needed` (optional) receives the
/// required buffer size including the NUL byte.
///
/// # Safety
/// `g` must be a live handle; `buf` must point to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_to_g6(
    g: *const GlGraph,
    buf: *mut c_char,
    buf_len: usize,
    needed: *mut usize,
) -> GlStatus {
    if g.is_null() {
        set_error("null argument");
        return GlStatus::NullArgument;
    }
    write_str(&to_graph6(&(*g).inner), buf, buf_len, needed)
}

unsafe fn count_of(
    g: *const GlGraph,
    out: *mut u32,
    f: impl Fn(&Graph) -> graphlines::Result<usize>,
) -> GlStatus {
    if g.is_null() || out.is_null() {
        set_error("null argument");
        return GlStatus::NullArgument;
    }
    match f(&(*g).inner) {
        Ok(v) => {
            *out = v as u32;
            GlStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Number of distinct lines (needs at least two vertices).
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_line_count(g: *const GlGraph, out: *mut u32) -> GlStatus {
    count_of(g, out, ell)
}

/// Number of bridges.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_bridge_count(g: *const GlGraph, out: *mut u32) -> GlStatus {
    count_of(g, out, |g| Ok(br(g)))
}

/// Number of vertex pairs inducing the universal line.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_universal_pair_count(
    g: *const GlGraph,
    out: *mut u32,
) -> GlStatus {
    count_of(g, out, ul)
}

/// Writes the family label (`F:C4`, `F0:H5`, `B:B6a`, ... or `none`).
///
/// # Safety
/// `g` must be a live handle; `buf` must point to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_family(
    g: *const GlGraph,
    buf: *mut c_char,
    buf_len: usize,
    needed: *mut usize,
) -> GlStatus {
    if g.is_null() {
        set_error("null argument");
        return GlStatus::NullArgument;
    }
    write_str(&family_label(&(*g).inner), buf, buf_len, needed)
}

/// Full analysis plus structure report as a JSON document in a freshly
/// allocated string; release it with `gl_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gl_graph_analyze_json(
    g: *const GlGraph,
    out: *mut *mut c_char,
) -> GlStatus {
    if g.is_null() || out.is_null() {
        set_error("null argument");
        return GlStatus::NullArgument;
    }
    let graph = &(*g).inner;
    let analysis = match analyze_graph(graph) {
        Ok(a) => a,
        Err(e) => return fail(&e),
    };
    let combined = serde_json::json!({
        "analysis": analysis,
        "structure": StructureReport::of(graph),
    });
    let text = serde_json::to_string(&combined).expect("report serializes");
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            GlStatus::Ok
        }
        Err(_) => {
            set_error("report contained an interior NUL");
            GlStatus::Domain
        }
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must originate from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn gl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn parse(text: &str) -> *mut GlGraph {
        let c = CString::new(text).unwrap();
        let mut out = ptr::null_mut();
        let st = unsafe { gl_graph_parse_g6(c.as_ptr(), &mut out) };
        assert_eq!(st, GlStatus::Ok);
        out
    }

    #[test]
    fn parse_count_roundtrip() {
        let g = parse("Cl"); // C4
        unsafe {
            assert_eq!(gl_graph_vertex_count(g), 4);
            assert_eq!(gl_graph_edge_count(g), 4);
            assert!(gl_graph_is_connected(g));

            let mut ell = 0u32;
            assert_eq!(gl_graph_line_count(g, &mut ell), GlStatus::Ok);
            assert_eq!(ell, 1);
            let mut ul = 0u32;
            assert_eq!(gl_graph_universal_pair_count(g, &mut ul), GlStatus::Ok);
            assert_eq!(ul, 6);
            let mut br = 9u32;
            assert_eq!(gl_graph_bridge_count(g, &mut br), GlStatus::Ok);
            assert_eq!(br, 0);

            let mut buf = [0i8; 16];
            let mut needed = 0usize;
            let st = gl_graph_to_g6(g, buf.as_mut_ptr() as *mut c_char, 16, &mut needed);
            assert_eq!(st, GlStatus::Ok);
            assert_eq!(needed, 3);
            let text = CStr::from_ptr(buf.as_ptr() as *const c_char);
            assert_eq!(text.to_str().unwrap(), "Cl");

            gl_graph_free(g);
        }
    }

    #[test]
    fn family_and_json() {
        let g = parse("Cl");
        unsafe {
            let mut buf = [0i8; 32];
            let st = gl_graph_family(g, buf.as_mut_ptr() as *mut c_char, 32, ptr::null_mut());
            assert_eq!(st, GlStatus::Ok);
            assert_eq!(
                CStr::from_ptr(buf.as_ptr() as *const c_char).to_str().unwrap(),
                "F:C4"
            );

            let mut json = ptr::null_mut();
            assert_eq!(gl_graph_analyze_json(g, &mut json), GlStatus::Ok);
            let text = CStr::from_ptr(json).to_str().unwrap().to_string();
            gl_string_free(json);
            let value: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert_eq!(value["analysis"]["ell"], 1);
            assert_eq!(value["structure"]["chordal"], false);

            gl_graph_free(g);
        }
    }

    #[test]
    fn error_paths() {
        unsafe {
            let mut out = ptr::null_mut();
            let bad = CString::new("not graph6 at all").unwrap();
            let st = gl_graph_parse_g6(bad.as_ptr(), &mut out);
            assert_eq!(st, GlStatus::Parse);
            let msg = CStr::from_ptr(gl_last_error_message()).to_str().unwrap();
            assert!(msg.contains("parse error"), "{msg}");
            let name = CStr::from_ptr(gl_status_name(st)).to_str().unwrap();
            assert_eq!(name, "parse-error");

            assert_eq!(
                gl_graph_parse_g6(ptr::null(), &mut out),
                GlStatus::NullArgument
            );

            // K1 is too small for line statistics.
            let g = parse("@");
            let mut v = 0u32;
            assert_eq!(gl_graph_line_count(g, &mut v), GlStatus::Domain);
            gl_graph_free(g);

            // Buffer sizing.
            let g = parse("Cl");
            let mut needed = 0usize;
            let st = gl_graph_to_g6(g, ptr::null_mut(), 0, &mut needed);
            assert_eq!(st, GlStatus::BufferTooSmall);
            assert_eq!(needed, 3);
            gl_graph_free(g);
        }
    }

    #[test]
    fn edge_constructor_validates() {
        unsafe {
            let mut out = ptr::null_mut();
            let endpoints = [0u32, 1, 1, 2];
            assert_eq!(gl_graph_from_edges(3, endpoints.as_ptr(), 2, &mut out), GlStatus::Ok);
            assert_eq!(gl_graph_edge_count(out), 2);
            gl_graph_free(out);

            let self_loop = [0u32, 0];
            let st = gl_graph_from_edges(3, self_loop.as_ptr(), 1, &mut out);
            assert_eq!(st, GlStatus::Domain);
        }
    }
}
