//! C interface to `treedim`.
//!
//! Trees and embeddings are opaque handles owned by the caller and released
//! with their `_free` function. Every fallible call returns a [`TdStatus`];
//! on failure the thread's last error message is set and can be read with
//! [`td_last_error_message`]. Output pointers are written only on success.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use treedim::{Embedding, Tree, VerifyError};

/// Opaque tree handle.
pub struct TdTree(Tree);

/// Opaque embedding handle.
pub struct TdEmbedding(Embedding);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed edge list, cycle, disconnected input and the like.
    Parse = 3,
    InvalidArgument = 4,
    /// Vertex not present in the embedding.
    UnknownVertex = 5,
    BufferTooSmall = 6,
    /// Exhaustive search refused: too many vertices.
    TooLarge = 7,
    /// Exhaustive search found nothing within the given dimension.
    NotFound = 8,
    /// Tree and embedding don't match.
    Mismatch = 9,
    Internal = 10,
    Panic = 11,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(message).ok());
}

fn fail(status: TdStatus, message: impl Into<String>) -> TdStatus {
    set_error(message);
    status
}

/// Runs `f`, turning a panic into `TdStatus::Panic`.
fn guard(f: impl FnOnce() -> TdStatus) -> TdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(TdStatus::Panic, format!("panic: {msg}"))
        }
    }
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn td_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn td_status_name(status: TdStatus) -> *const c_char {
    let s: &'static CStr = match status {
        TdStatus::Ok => c"ok",
        TdStatus::NullPointer => c"null pointer",
        TdStatus::InvalidUtf8 => c"invalid UTF-8",
        TdStatus::Parse => c"parse error",
        TdStatus::InvalidArgument => c"invalid argument",
        TdStatus::UnknownVertex => c"unknown vertex",
        TdStatus::BufferTooSmall => c"buffer too small",
        TdStatus::TooLarge => c"too large",
        TdStatus::NotFound => c"not found",
        TdStatus::Mismatch => c"tree and embedding mismatch",
        TdStatus::Internal => c"internal error",
        TdStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// Parses a NUL-terminated edge list.
#[no_mangle]
pub unsafe extern "C" fn td_tree_parse(text: *const c_char, out: *mut *mut TdTree) -> TdStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(TdStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(TdStatus::InvalidUtf8, "edge list is not valid UTF-8");
        };
        match treedim::parse_edge_list(text) {
            Ok(t) => {
                put(out, TdTree(t));
                TdStatus::Ok
            }
            Err(e) => fail(TdStatus::Parse, e.to_string()),
        }
    })
}

/// Uniformly random labeled tree on `0..vertices`, reproducible from `seed`.
#[no_mangle]
pub unsafe extern "C" fn td_tree_random(
    vertices: usize,
    seed: u64,
    out: *mut *mut TdTree,
) -> TdStatus {
    guard(|| {
        if out.is_null() {
            return fail(TdStatus::NullPointer, "null argument");
        }
        match Tree::random(vertices, seed) {
            Ok(t) => {
                put(out, TdTree(t));
                TdStatus::Ok
            }
            Err(e) => fail(TdStatus::InvalidArgument, e.to_string()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn td_tree_free(tree: *mut TdTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

/// Returns 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn td_tree_vertex_count(tree: *const TdTree) -> usize {
    tree.as_ref().map_or(0, |t| t.0.vertex_count())
}

/// Returns 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn td_tree_leaf_count(tree: *const TdTree) -> usize {
    tree.as_ref().map_or(0, |t| t.0.leaf_count())
}

/// ceil(leaves / 2); 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn td_tree_lattice_dimension(tree: *const TdTree) -> usize {
    tree.as_ref()
        .map_or(0, |t| treedim::lattice_dimension(&t.0))
}

#[no_mangle]
pub unsafe extern "C" fn td_embed_tree(
    tree: *const TdTree,
    out: *mut *mut TdEmbedding,
) -> TdStatus {
    guard(|| {
        let (Some(t), false) = (tree.as_ref(), out.is_null()) else {
            return fail(TdStatus::NullPointer, "null argument");
        };
        match treedim::embed_tree(&t.0) {
            Ok(e) => {
                put(out, TdEmbedding(e));
                TdStatus::Ok
            }
            Err(e) => fail(TdStatus::Internal, e.to_string()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn td_embedding_free(embedding: *mut TdEmbedding) {
    if !embedding.is_null() {
        drop(Box::from_raw(embedding));
    }
}

/// Returns 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn td_embedding_dimension(embedding: *const TdEmbedding) -> usize {
    embedding.as_ref().map_or(0, |e| e.0.dimension())
}

/// New embedding translated so every axis starts at 0.
#[no_mangle]
pub unsafe extern "C" fn td_embedding_normalize(
    embedding: *const TdEmbedding,
    out: *mut *mut TdEmbedding,
) -> TdStatus {
    guard(|| {
        let (Some(e), false) = (embedding.as_ref(), out.is_null()) else {
            return fail(TdStatus::NullPointer, "null argument");
        };
        put(out, TdEmbedding(e.0.normalize()));
        TdStatus::Ok
    })
}

/// Writes the coordinates of `vertex` into `buf`, which must hold at least
/// `td_embedding_dimension` values.
#[no_mangle]
pub unsafe extern "C" fn td_embedding_coords(
    embedding: *const TdEmbedding,
    vertex: u64,
    buf: *mut i64,
    len: usize,
) -> TdStatus {
    guard(|| {
        let Some(e) = embedding.as_ref() else {
            return fail(TdStatus::NullPointer, "null embedding");
        };
        let Some(p) = e.0.point(vertex) else {
            return fail(
                TdStatus::UnknownVertex,
                format!("vertex {vertex} is not embedded"),
            );
        };
        let d = p.0.len();
        if len < d {
            return fail(
                TdStatus::BufferTooSmall,
                format!("need {d} slots, got {len}"),
            );
        }
        if d > 0 {
            if buf.is_null() {
                return fail(TdStatus::NullPointer, "null buffer");
            }
            std::slice::from_raw_parts_mut(buf, d).copy_from_slice(&p.0);
        }
        TdStatus::Ok
    })
}

/// Checks all pairs. `passed` and `checked_pairs` may each be NULL.
#[no_mangle]
pub unsafe extern "C" fn td_verify_isometric(
    tree: *const TdTree,
    embedding: *const TdEmbedding,
    passed: *mut bool,
    checked_pairs: *mut u64,
) -> TdStatus {
    guard(|| {
        let (Some(t), Some(e)) = (tree.as_ref(), embedding.as_ref()) else {
            return fail(TdStatus::NullPointer, "null argument");
        };
        match treedim::verify_isometric(&t.0, &e.0) {
            Ok(r) => {
                if !passed.is_null() {
                    *passed = r.passed;
                }
                if !checked_pairs.is_null() {
                    *checked_pairs = r.checked_pairs;
                }
                TdStatus::Ok
            }
            Err(VerifyError::VertexSetMismatch(v)) => fail(
                TdStatus::Mismatch,
                format!("embedding and tree disagree on vertex {v}"),
            ),
            Err(e) => fail(TdStatus::Internal, e.to_string()),
        }
    })
}

/// JSON document for the embedding. Release with `td_string_free`.
#[no_mangle]
pub unsafe extern "C" fn td_embedding_to_json(
    embedding: *const TdEmbedding,
    out: *mut *mut c_char,
) -> TdStatus {
    guard(|| {
        let (Some(e), false) = (embedding.as_ref(), out.is_null()) else {
            return fail(TdStatus::NullPointer, "null argument");
        };
        match CString::new(e.0.to_json()) {
            Ok(s) => {
                *out = s.into_raw();
                TdStatus::Ok
            }
            Err(e) => fail(TdStatus::Internal, e.to_string()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn td_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Smallest dimension admitting an isometric embedding, by exhaustive
/// search up to `max_dim`. Only for small trees.
#[no_mangle]
pub unsafe extern "C" fn td_brute_force_min_dimension(
    tree: *const TdTree,
    max_dim: usize,
    out: *mut usize,
) -> TdStatus {
    guard(|| {
        let (Some(t), false) = (tree.as_ref(), out.is_null()) else {
            return fail(TdStatus::NullPointer, "null argument");
        };
        match treedim::brute_force_min_dimension(&t.0, max_dim) {
            Ok(d) => {
                *out = d;
                TdStatus::Ok
            }
            Err(e @ VerifyError::TooLarge(_)) => fail(TdStatus::TooLarge, e.to_string()),
            Err(e @ VerifyError::NoEmbeddingWithin { .. }) => {
                fail(TdStatus::NotFound, e.to_string())
            }
            Err(e) => fail(TdStatus::Internal, e.to_string()),
        }
    })
}
