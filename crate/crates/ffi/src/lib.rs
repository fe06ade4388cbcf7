//! C ABI over `tgcolor`.
//!
//! Graphs and colorings cross the boundary as opaque handles created and
//! freed by this library. Every fallible call returns a [`TgStatus`]; on
//! failure the message is kept per thread and read with
//! [`tg_last_error_message`]. Strings returned through out-pointers are
//! owned by the caller and released with [`tg_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tgcolor::io::{parse_coloring, parse_temporal_graph, serialize_coloring, serialize_temporal_graph};
use tgcolor::kernel::kernelize;
use tgcolor::solver::{minimize, solve_decision};
use tgcolor::{is_proper, Error, Instance, TemporalColoring, TemporalGraph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TgStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Invalid = 3,
    Budget = 4,
    Io = 5,
    Utf8 = 6,
    Panic = 7,
}

/// Opaque temporal graph.
pub struct TgGraph(TemporalGraph);

/// Opaque temporal coloring.
pub struct TgColoring(TemporalColoring);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TgStatus {
    match e {
        Error::Parse { .. } => TgStatus::Parse,
        Error::BudgetExceeded { .. } => TgStatus::Budget,
        Error::Io(_) => TgStatus::Io,
        _ => TgStatus::Invalid,
    }
}

fn fail(status: TgStatus, msg: impl Into<String>) -> TgStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), TgStatus>) -> TgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TgStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(TgStatus::Panic, "internal panic"),
    }
}

fn lib(e: Error) -> TgStatus {
    fail(status_of(&e), e.to_string())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, TgStatus> {
    if s.is_null() {
        return Err(fail(TgStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(TgStatus::Utf8, "input is not UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, TgStatus> {
    p.as_ref()
        .ok_or_else(|| fail(TgStatus::NullPointer, format!("null {what}")))
}

fn out_string(s: String, out: *mut *mut c_char) -> Result<(), TgStatus> {
    let c = CString::new(s).map_err(|_| fail(TgStatus::Invalid, "output contains NUL"))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), TgStatus> {
    if out.is_null() {
        Err(fail(TgStatus::NullPointer, "null output pointer"))
    } else {
        Ok(())
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn tg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn tg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `.tg` text into a new graph handle.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_parse(text_ptr: *const c_char, out: *mut *mut TgGraph) -> TgStatus {
    guard(|| {
        check_out(out)?;
        let g = parse_temporal_graph(text(text_ptr)?).map_err(lib)?;
        *out = Box::into_raw(Box::new(TgGraph(g)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn tg_graph_free(g: *mut TgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Canonical `.tg` text of the graph.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_serialize(g: *const TgGraph, out: *mut *mut c_char) -> TgStatus {
    guard(|| {
        check_out(out)?;
        out_string(serialize_temporal_graph(&handle(g, "graph")?.0), out)
    })
}

/// Vertex count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_vertex_count(g: *const TgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Lifetime T, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_lifetime(g: *const TgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.lifetime())
}

/// Number of edges of the underlying graph, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_edge_count(g: *const TgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Decides the instance. `is_yes` receives 1 or 0. If `witness` is not
/// NULL it receives a new coloring handle on yes and NULL on no.
#[no_mangle]
pub unsafe extern "C" fn tg_solve(
    g: *const TgGraph,
    delta: usize,
    k: u32,
    is_yes: *mut c_int,
    witness: *mut *mut TgColoring,
) -> TgStatus {
    guard(|| {
        check_out(is_yes)?;
        let inst = Instance::new(handle(g, "graph")?.0.clone(), delta, k).map_err(lib)?;
        let d = solve_decision(&inst).map_err(lib)?;
        *is_yes = c_int::from(d.is_yes());
        if !witness.is_null() {
            *witness = d
                .witness()
                .map_or(ptr::null_mut(), |w| Box::into_raw(Box::new(TgColoring(w.clone()))));
        }
        Ok(())
    })
}

/// Smallest number of colors; optionally returns a witness.
#[no_mangle]
pub unsafe extern "C" fn tg_minimize(
    g: *const TgGraph,
    delta: usize,
    k_out: *mut u32,
    witness: *mut *mut TgColoring,
) -> TgStatus {
    guard(|| {
        check_out(k_out)?;
        let (k, w) = minimize(&handle(g, "graph")?.0, delta).map_err(lib)?;
        *k_out = k;
        if !witness.is_null() {
            *witness = Box::into_raw(Box::new(TgColoring(w)));
        }
        Ok(())
    })
}

/// Checks a coloring; `proper` receives 1 or 0. When `violation` is not
/// NULL and the coloring is not proper, it receives the message
/// `VIOLATION t=<t> edge=<u>,<v>` (caller frees).
#[no_mangle]
pub unsafe extern "C" fn tg_verify(
    g: *const TgGraph,
    delta: usize,
    col: *const TgColoring,
    proper: *mut c_int,
    violation: *mut *mut c_char,
) -> TgStatus {
    guard(|| {
        check_out(proper)?;
        let col = &handle(col, "coloring")?.0;
        let inst = Instance::new(handle(g, "graph")?.0.clone(), delta, col.k()).map_err(lib)?;
        let v = is_proper(&inst, col).map_err(lib)?;
        *proper = c_int::from(v.is_proper());
        if !violation.is_null() {
            if v.is_proper() {
                *violation = ptr::null_mut();
            } else {
                out_string(v.to_string(), violation)?;
            }
        }
        Ok(())
    })
}

/// Kernel for Δ = T as a new graph handle.
#[no_mangle]
pub unsafe extern "C" fn tg_kernelize(g: *const TgGraph, out: *mut *mut TgGraph) -> TgStatus {
    guard(|| {
        check_out(out)?;
        let k = kernelize(&handle(g, "graph")?.0);
        *out = Box::into_raw(Box::new(TgGraph(k.graph)));
        Ok(())
    })
}

/// Parses `.tc` text into a new coloring handle.
#[no_mangle]
pub unsafe extern "C" fn tg_coloring_parse(text_ptr: *const c_char, out: *mut *mut TgColoring) -> TgStatus {
    guard(|| {
        check_out(out)?;
        let c = parse_coloring(text(text_ptr)?).map_err(lib)?;
        *out = Box::into_raw(Box::new(TgColoring(c)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn tg_coloring_serialize(c: *const TgColoring, out: *mut *mut c_char) -> TgStatus {
    guard(|| {
        check_out(out)?;
        out_string(serialize_coloring(&handle(c, "coloring")?.0), out)
    })
}

/// Color of vertex `v` (0-based) at slot `t` (1-based).
#[no_mangle]
pub unsafe extern "C" fn tg_coloring_get(c: *const TgColoring, t: usize, v: usize, color: *mut u32) -> TgStatus {
    guard(|| {
        check_out(color)?;
        let c = &handle(c, "coloring")?.0;
        if t == 0 || t > c.lifetime() || v >= c.n() {
            return Err(fail(
                TgStatus::Invalid,
                format!("cell ({t}, {v}) outside {}x{}", c.lifetime(), c.n()),
            ));
        }
        *color = c.get(t, v);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn tg_coloring_free(c: *mut TgColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
