//! C ABI over the invseq library.
//!
//! Conventions:
//! * Handles (`InvseqSeq`, `InvseqPerm`, `InvseqClass`) are opaque; create via
//!   the `*_new`/`*_parse` constructors, destroy via the matching `*_free`.
//! * Fallible functions return [`InvseqStatus`]; on anything but `Ok` the
//!   thread-local message from [`invseq_last_error`] describes the failure.
//! * Strings returned as `char*` are UTF-8, owned by the caller, and must be
//!   released with [`invseq_string_free`].
//! * Every entry point catches panics and converts them to `Panic` status;
//!   nothing unwinds across the boundary.

use invseq::bijections;
use invseq::codes;
use invseq::patterns;
use invseq::poly;
use invseq::verify;
use invseq::{ClassSpec, Error, InvSeq, Perm};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Opaque inversion-sequence handle.
pub struct InvseqSeq(InvSeq);

/// Opaque permutation handle.
pub struct InvseqPerm(Perm);

/// Opaque class-description handle.
pub struct InvseqClass(ClassSpec);

/// Status codes returned by fallible functions.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InvseqStatus {
    Ok = 0,
    /// Domain failure: input outside a bijection's class, no preimage,
    /// a non-symmetric polynomial, a failed check.
    Domain = 1,
    /// Usage failure: unparsable input, unknown name, wrong universe.
    Usage = 2,
    /// Enumeration beyond the configured ceiling (`INVSEQ_MAX_N`).
    Limit = 3,
    /// A required pointer argument was null.
    NullArg = 4,
    /// An internal panic was caught at the boundary.
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("no interior nul");
    });
}

fn status_of(err: &Error) -> InvseqStatus {
    match err.exit_code() {
        2 => InvseqStatus::Usage,
        3 => InvseqStatus::Limit,
        _ => InvseqStatus::Domain,
    }
}

/// Message describing the most recent failure on this thread. The pointer is
/// valid until the next failing call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn invseq_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

fn guard(body: impl FnOnce() -> InvseqStatus) -> InvseqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&message);
            InvseqStatus::Panic
        }
    }
}

/// # Safety
/// `text` must be a valid nul-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> Option<&'a str> {
    if text.is_null() {
        return None;
    }
    CStr::from_ptr(text).to_str().ok()
}

fn give<T>(out: *mut *mut T, value: T) -> InvseqStatus {
    if out.is_null() {
        set_error("null output pointer");
        return InvseqStatus::NullArg;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    InvseqStatus::Ok
}

fn give_string(out: *mut *mut c_char, s: String) -> InvseqStatus {
    if out.is_null() {
        set_error("null output pointer");
        return InvseqStatus::NullArg;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            InvseqStatus::Ok
        }
        Err(_) => {
            set_error("interior nul in output");
            InvseqStatus::Panic
        }
    }
}

/// Builds an inversion sequence from `len` values; rejects words violating
/// the positional bound.
///
/// # Safety
/// `values` must point to `len` readable `uint64_t`s; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn invseq_seq_new(
    values: *const u64,
    len: usize,
    out: *mut *mut InvseqSeq,
) -> InvseqStatus {
    guard(|| {
        if values.is_null() && len > 0 {
            set_error("null values pointer");
            return InvseqStatus::NullArg;
        }
        let slice = if len == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(values, len)
        };
        let entries: Vec<usize> = slice.iter().map(|&v| v as usize).collect();
        match InvSeq::new(entries) {
            Ok(seq) => give(out, InvseqSeq(seq)),
            Err(err) => {
                set_error(&err.to_string());
                status_of(&err)
            }
        }
    })
}

/// # Safety
/// `handle` must come from `invseq_seq_new` (or another constructor) and not
/// have been freed; null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn invseq_seq_free(handle: *mut InvseqSeq) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// `handle` must be a live sequence handle.
#[no_mangle]
pub unsafe extern "C" fn invseq_seq_len(handle: *const InvseqSeq) -> usize {
    if handle.is_null() {
        return 0;
    }
    (*handle).0.len()
}

/// Copies the entries into `buf`, which must hold at least `len` values
/// (query the length with `invseq_seq_len`).
///
/// # Safety
/// `handle` live; `buf` writable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn invseq_seq_values(
    handle: *const InvseqSeq,
    buf: *mut u64,
    len: usize,
) -> InvseqStatus {
    guard(|| {
        if handle.is_null() || buf.is_null() {
            set_error("null argument");
            return InvseqStatus::NullArg;
        }
        let entries = (*handle).0.entries();
        if len < entries.len() {
            set_error("buffer too small");
            return InvseqStatus::Usage;
        }
        for (i, &v) in entries.iter().enumerate() {
            *buf.add(i) = v as u64;
        }
        InvseqStatus::Ok
    })
}

/// Builds a permutation of `1..=len` from its one-line notation.
///
/// # Safety
/// As for [`invseq_seq_new`].
#[no_mangle]
pub unsafe extern "C" fn invseq_perm_new(
    values: *const u64,
    len: usize,
    out: *mut *mut InvseqPerm,
) -> InvseqStatus {
    guard(|| {
        if values.is_null() && len > 0 {
            set_error("null values pointer");
            return InvseqStatus::NullArg;
        }
        let slice = if len == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(values, len)
        };
        let images: Vec<usize> = slice.iter().map(|&v| v as usize).collect();
        match Perm::new(images) {
            Ok(p) => give(out, InvseqPerm(p)),
            Err(err) => {
                set_error(&err.to_string());
                status_of(&err)
            }
        }
    })
}

/// # Safety
/// `handle` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn invseq_perm_free(handle: *mut InvseqPerm) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// `handle` must be a live permutation handle.
#[no_mangle]
pub unsafe extern "C" fn invseq_perm_len(handle: *const InvseqPerm) -> usize {
    if handle.is_null() {
        return 0;
    }
    (*handle).0.len()
}

/// # Safety
/// As for [`invseq_seq_values`].
#[no_mangle]
pub unsafe extern "C" fn invseq_perm_values(
    handle: *const InvseqPerm,
    buf: *mut u64,
    len: usize,
) -> InvseqStatus {
    guard(|| {
        if handle.is_null() || buf.is_null() {
            set_error("null argument");
            return InvseqStatus::NullArg;
        }
        let images = (*handle).0.images();
        if len < images.len() {
            set_error("buffer too small");
            return InvseqStatus::Usage;
        }
        for (i, &v) in images.iter().enumerate() {
            *buf.add(i) = v as u64;
        }
        InvseqStatus::Ok
    })
}

/// Parses a registry name (`A`, `B`, `C`, `AB`, `BC`, `CA`, `ABC`, `T`) or a
/// class description: `(>,-,>)`, `201,210,110`, `perm:2134,2143`.
///
/// # Safety
/// `text` nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invseq_class_parse(
    text: *const c_char,
    out: *mut *mut InvseqClass,
) -> InvseqStatus {
    guard(|| {
        let Some(text) = read_str(text) else {
            set_error("null or non-UTF-8 class text");
            return InvseqStatus::NullArg;
        };
        match patterns::resolve_class(text) {
            Ok(spec) => give(out, InvseqClass(spec)),
            Err(err) => {
                set_error(&err.to_string());
                status_of(&err)
            }
        }
    })
}

/// # Safety
/// `handle` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn invseq_class_free(handle: *mut InvseqClass) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of class members of length `n`.
///
/// # Safety
/// `class` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invseq_count(
    class: *const InvseqClass,
    n: usize,
    out: *mut u64,
) -> InvseqStatus {
    guard(|| {
        if class.is_null() || out.is_null() {
            set_error("null argument");
            return InvseqStatus::NullArg;
        }
        match patterns::class_count(&(*class).0, n) {
            Ok(count) => {
                *out = count;
                InvseqStatus::Ok
            }
            Err(err) => {
                set_error(&err.to_string());
                status_of(&err)
            }
        }
    })
}

fn seq_bijection(name: &str) -> Option<fn(&InvSeq) -> invseq::Result<InvSeq>> {
    Some(match name {
        "alpha" => bijections::alpha,
        "beta" => bijections::beta,
        "psi" => bijections::psi,
        "psi-inv" => bijections::psi_inv,
        "gamma" => bijections::gamma_map,
        "gamma-inv" => bijections::gamma_map_inv,
        "big-gamma" => bijections::gamma_involution,
        _ => return None,
    })
}

/// Applies a sequence-to-sequence bijection: one of `alpha`, `beta`, `psi`,
/// `psi-inv`, `gamma`, `gamma-inv`, `big-gamma`.
///
/// # Safety
/// `bijection` nul-terminated; `input` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invseq_map_seq(
    bijection: *const c_char,
    input: *const InvseqSeq,
    out: *mut *mut InvseqSeq,
) -> InvseqStatus {
    guard(|| {
        let Some(name) = read_str(bijection) else {
            set_error("null bijection name");
            return InvseqStatus::NullArg;
        };
        if input.is_null() {
            set_error("null input");
            return InvseqStatus::NullArg;
        }
        let Some(f) = seq_bijection(name) else {
            set_error(&format!("unknown bijection {name:?}"));
            return InvseqStatus::Usage;
        };
        match f(&(*input).0) {
            Ok(image) => give(out, InvseqSeq(image)),
            Err(err) => {
                set_error(&err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Encodes a permutation: `code` is `lehmer` or `bcode`.
///
/// # Safety
/// `code` nul-terminated; `input` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invseq_encode_perm(
    code: *const c_char,
    input: *const InvseqPerm,
    out: *mut *mut InvseqSeq,
) -> InvseqStatus {
    guard(|| {
        let Some(name) = read_str(code) else {
            set_error("null code name");
            return InvseqStatus::NullArg;
        };
        if input.is_null() {
            set_error("null input");
            return InvseqStatus::NullArg;
        }
        let image = match name {
            "lehmer" => codes::lehmer(&(*input).0),
            "bcode" => codes::b_code(&(*input).0),
            other => {
                set_error(&format!("unknown code {other:?}"));
                return InvseqStatus::Usage;
            }
        };
        give(out, InvseqSeq(image))
    })
}

/// Decodes a sequence back to a permutation: `code` is `lehmer` or `bcode`.
///
/// # Safety
/// As for [`invseq_encode_perm`].
#[no_mangle]
pub unsafe extern "C" fn invseq_decode_to_perm(
    code: *const c_char,
    input: *const InvseqSeq,
    out: *mut *mut InvseqPerm,
) -> InvseqStatus {
    guard(|| {
        let Some(name) = read_str(code) else {
            set_error("null code name");
            return InvseqStatus::NullArg;
        };
        if input.is_null() {
            set_error("null input");
            return InvseqStatus::NullArg;
        }
        let result = match name {
            "lehmer" => Ok(codes::lehmer_inv(&(*input).0)),
            "bcode" => codes::b_decode(&(*input).0),
            other => {
                set_error(&format!("unknown code {other:?}"));
                return InvseqStatus::Usage;
            }
        };
        match result {
            Ok(p) => give(out, InvseqPerm(p)),
            Err(err) => {
                set_error(&err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Full statistics of a sequence as a JSON object (1-based positions; the
/// fixed/to-right/to-left fields appear only on the moving domain).
/// Returns null on error; free the string with [`invseq_string_free`].
///
/// # Safety
/// `input` must be a live sequence handle.
#[no_mangle]
pub unsafe extern "C" fn invseq_profile_json(input: *const InvseqSeq) -> *mut c_char {
    let mut out: *mut c_char = ptr::null_mut();
    let status = guard(|| {
        if input.is_null() {
            set_error("null input");
            return InvseqStatus::NullArg;
        }
        let profile = invseq::stats::profile(&(*input).0);
        let json = serde_json::to_string(&profile).expect("profile serializes");
        give_string(&mut out, json)
    });
    if status == InvseqStatus::Ok {
        out
    } else {
        ptr::null_mut()
    }
}

/// Move-by-move trace of the involution on the moving domain followed by the
/// rewrite image, as JSON. Returns null (with `invseq_last_error` set) when
/// the input is outside the domain.
///
/// # Safety
/// `input` must be a live sequence handle.
#[no_mangle]
pub unsafe extern "C" fn invseq_trace_json(input: *const InvseqSeq) -> *mut c_char {
    let mut out: *mut c_char = ptr::null_mut();
    let status = guard(|| {
        if input.is_null() {
            set_error("null input");
            return InvseqStatus::NullArg;
        }
        let e = &(*input).0;
        let (involuted, trace) = match bijections::gamma_involution_traced(e, true) {
            Ok(x) => x,
            Err(err) => {
                set_error(&err.to_string());
                return status_of(&err);
            }
        };
        let image = match bijections::psi(&involuted) {
            Ok(x) => x,
            Err(err) => {
                set_error(&err.to_string());
                return status_of(&err);
            }
        };
        let obj = serde_json::json!({
            "input": e.entries(),
            "steps": trace.steps,
            "states": trace.states,
            "image": image.entries(),
        });
        give_string(&mut out, obj.to_string())
    });
    if status == InvseqStatus::Ok {
        out
    } else {
        ptr::null_mut()
    }
}

/// Gamma-vector of the class distribution polynomial as JSON. `via` is
/// `poly` or `orbits` (the latter needs a permutation class).
///
/// # Safety
/// `class` live; `via` nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invseq_gamma_json(
    class: *const InvseqClass,
    n: usize,
    via: *const c_char,
    out: *mut *mut c_char,
) -> InvseqStatus {
    guard(|| {
        if class.is_null() {
            set_error("null class");
            return InvseqStatus::NullArg;
        }
        let Some(via) = read_str(via) else {
            set_error("null via");
            return InvseqStatus::NullArg;
        };
        let spec = &(*class).0;
        let stat = match spec.universe() {
            invseq::Universe::InvSeqs => poly::Stat::Asc,
            invseq::Universe::Perms => poly::Stat::Des,
        };
        let result: invseq::Result<Vec<i64>> = (|| match via {
            "poly" => {
                let h = poly::dist_poly(spec, n, stat)?;
                let g = poly::gamma_extract(&h, n.saturating_sub(1))?;
                poly::gamma_to_i64(&g)
            }
            "orbits" => {
                let members: Vec<Perm> = patterns::perm_class_members(spec, n)?.collect();
                Ok(invseq::actions::gamma_via_orbits(&members)?
                    .into_iter()
                    .map(|x| x as i64)
                    .collect())
            }
            other => Err(Error::Parse {
                position: 0,
                message: format!("unknown via {other:?}"),
            }),
        })();
        match result {
            Ok(gamma) => {
                let obj = serde_json::json!({
                    "class": spec.render(),
                    "n": n,
                    "via": via,
                    "gamma": gamma,
                });
                give_string(out, obj.to_string())
            }
            Err(err) => {
                set_error(&err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Runs one registered check (or all of them when `name` is null) up to
/// `max_n` (0 means the per-check default). `all_pass` reports the aggregate
/// verdict; the JSON report lands in `out`.
///
/// # Safety
/// `name` nul-terminated or null; `all_pass` and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invseq_verify_json(
    name: *const c_char,
    max_n: usize,
    all_pass: *mut i32,
    out: *mut *mut c_char,
) -> InvseqStatus {
    guard(|| {
        if all_pass.is_null() {
            set_error("null all_pass pointer");
            return InvseqStatus::NullArg;
        }
        let depth = if max_n == 0 { None } else { Some(max_n) };
        let results = if name.is_null() {
            verify::check_all(depth)
        } else {
            let Some(name) = read_str(name) else {
                set_error("non-UTF-8 check name");
                return InvseqStatus::NullArg;
            };
            verify::check(name, depth).map(|r| vec![r])
        };
        match results {
            Ok(results) => {
                *all_pass = i32::from(results.iter().all(|r| r.passed()));
                let json = serde_json::to_string(&results).expect("results serialize");
                give_string(out, json)
            }
            Err(err) => {
                set_error(&err.to_string());
                status_of(&err)
            }
        }
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed; null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn invseq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
