//! C ABI over the braid normal-form and ordering library.
//!
//! Conventions:
//!
//! * every function returns a [`PnStatus`] code; out-parameters are written
//!   only on `PN_STATUS_OK`;
//! * braid words travel as NUL-terminated strings of signed decimal
//!   integers (`"1 2 -3"`), the same wire format as the CLI;
//! * parsed words are opaque [`PnWord`] handles that must be released with
//!   [`pn_word_free`]; strings returned by the library must be released
//!   with [`pn_string_free`];
//! * passing a NULL pointer yields `PN_STATUS_INVALID_INPUT`; panics are
//!   caught and reported as `PN_STATUS_INTERNAL`.

use std::cmp::Ordering;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use phinorm::error::Error;
use phinorm::ordering::{self, Sign};
use phinorm::phinormal;
use phinorm::splitting;
use phinorm::word::{self, SignedBraidWord};

/// Result code of every FFI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum PnStatus {
    /// Success.
    Ok = 0,
    /// Malformed input: bad word syntax, out-of-range index, inverse
    /// letters where a positive word is required, or a domain violation.
    InvalidInput = 2,
    /// An internal invariant was breached; this is a library bug.
    Internal = 3,
    /// An exhaustive computation refused to run beyond its bound.
    BoundExceeded = 4,
}

fn status_of(e: &Error) -> PnStatus {
    match e {
        Error::Invariant(_) => PnStatus::Internal,
        Error::BoundExceeded(_) => PnStatus::BoundExceeded,
        _ => PnStatus::InvalidInput,
    }
}

/// An opaque braid word (possibly with inverse letters).
pub struct PnWord {
    inner: SignedBraidWord,
}

/// Comparison verdict of [`pn_compare`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum PnOrdering {
    Less = -1,
    Equal = 0,
    Greater = 1,
}

/// Sign verdict of [`pn_sign`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum PnSign {
    Negative = -1,
    Zero = 0,
    Positive = 1,
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn export_string(s: String, out: *mut *mut c_char) -> PnStatus {
    match CString::new(s) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            PnStatus::Ok
        }
        Err(_) => PnStatus::Internal,
    }
}

fn guarded(f: impl FnOnce() -> PnStatus) -> PnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => PnStatus::Internal,
    }
}

/// Parses a word. `strands = 0` means "infer from the letters".
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pn_word_parse(
    text: *const c_char,
    strands: u16,
    out: *mut *mut PnWord,
) -> PnStatus {
    guarded(|| {
        let (text, out) = match (read_str(text), out.is_null()) {
            (Some(t), false) => (t, out),
            _ => return PnStatus::InvalidInput,
        };
        let n = if strands == 0 { None } else { Some(strands) };
        match word::parse(text, n) {
            Ok(w) => {
                unsafe { *out = Box::into_raw(Box::new(PnWord { inner: w })) };
                PnStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a word handle. NULL is accepted.
///
/// # Safety
/// `w` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pn_word_free(w: *mut PnWord) {
    if !w.is_null() {
        drop(unsafe { Box::from_raw(w) });
    }
}

/// Releases a string returned by this library. NULL is accepted.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// The strand count of a parsed word.
///
/// # Safety
/// `w` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pn_word_strands(w: *const PnWord, out: *mut u16) -> PnStatus {
    guarded(|| {
        if w.is_null() || out.is_null() {
            return PnStatus::InvalidInput;
        }
        unsafe { *out = (*w).inner.strands() };
        PnStatus::Ok
    })
}

/// Formats a word back into the wire format.
///
/// # Safety
/// `w` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pn_word_format(w: *const PnWord, out: *mut *mut c_char) -> PnStatus {
    guarded(|| {
        if w.is_null() || out.is_null() {
            return PnStatus::InvalidInput;
        }
        let text = unsafe { (*w).inner.to_string() };
        export_string(text, out)
    })
}

/// The normal form of a positive word, as a new word handle.
///
/// # Safety
/// `w` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pn_normalize(w: *const PnWord, out: *mut *mut PnWord) -> PnStatus {
    guarded(|| {
        if w.is_null() || out.is_null() {
            return PnStatus::InvalidInput;
        }
        let positive = match unsafe { (*w).inner.to_positive() } {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        match phinormal::phi_normalize(&positive) {
            Ok(nf) => {
                unsafe { *out = Box::into_raw(Box::new(PnWord { inner: nf.into() })) };
                PnStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Compares two positive words in the braid ordering.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pn_compare(
    x: *const PnWord,
    y: *const PnWord,
    out: *mut PnOrdering,
) -> PnStatus {
    guarded(|| {
        if x.is_null() || y.is_null() || out.is_null() {
            return PnStatus::InvalidInput;
        }
        let (px, py) = unsafe {
            match ((*x).inner.to_positive(), (*y).inner.to_positive()) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return status_of(&e),
            }
        };
        match ordering::compare_plus_checked(&px, &py) {
            Ok(o) => {
                unsafe {
                    *out = match o {
                        Ordering::Less => PnOrdering::Less,
                        Ordering::Equal => PnOrdering::Equal,
                        Ordering::Greater => PnOrdering::Greater,
                    }
                };
                PnStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The sign of a signed word relative to the identity braid.
///
/// # Safety
/// `w` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pn_sign(w: *const PnWord, out: *mut PnSign) -> PnStatus {
    guarded(|| {
        if w.is_null() || out.is_null() {
            return PnStatus::InvalidInput;
        }
        match ordering::sign(unsafe { &(*w).inner }) {
            Ok(s) => {
                unsafe {
                    *out = match s {
                        Sign::Negative => PnSign::Negative,
                        Sign::Zero => PnSign::Zero,
                        Sign::Positive => PnSign::Positive,
                    }
                };
                PnStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The splitting of a positive word, rendered as entries separated by " ; ".
///
/// # Safety
/// `w` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pn_split(w: *const PnWord, out: *mut *mut c_char) -> PnStatus {
    guarded(|| {
        if w.is_null() || out.is_null() {
            return PnStatus::InvalidInput;
        }
        let positive = match unsafe { (*w).inner.to_positive() } {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        match splitting::braid_splitting(&positive, positive.strands()) {
            Ok(s) => export_string(s.to_string(), out),
            Err(e) => status_of(&e),
        }
    })
}

/// The breadth of a positive word's splitting.
///
/// # Safety
/// `w` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pn_breadth(w: *const PnWord, out: *mut u64) -> PnStatus {
    guarded(|| {
        if w.is_null() || out.is_null() {
            return PnStatus::InvalidInput;
        }
        let positive = match unsafe { (*w).inner.to_positive() } {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        match splitting::breadth(&positive, positive.strands()) {
            Ok(b) => {
                unsafe { *out = b as u64 };
                PnStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The ordinal rank of a 3-strand positive word, as text like `w^3*2 + 4`.
///
/// # Safety
/// `w` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pn_rank_b3(w: *const PnWord, out: *mut *mut c_char) -> PnStatus {
    guarded(|| {
        if w.is_null() || out.is_null() {
            return PnStatus::InvalidInput;
        }
        let positive = match unsafe { (*w).inner.to_positive() } {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        match ordering::rank_b3(&positive) {
            Ok(r) => export_string(ordering::ordinal_format(&r), out),
            Err(e) => status_of(&e),
        }
    })
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn pn_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}
