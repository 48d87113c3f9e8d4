//! C ABI for the `dposet` library.
//!
//! Double posets cross the boundary as opaque [`DpDoublePoset`] handles.
//! Every fallible call returns a [`DpStatus`] and writes its result through
//! an out-pointer; on failure [`dp_last_error`] returns the message of the
//! most recent error on the calling thread. Strings returned by the library
//! must be released with [`dp_string_free`], handles with [`dp_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use dposet::checks::{self, Suite};
use dposet::lincomb::TensorDisplay;
use dposet::qsym::MonomialDisplay;
use dposet::{algebra, double_poset, lr, perm, qsym, text};
use dposet::{DoublePoset, Error, LinComb, Partition, Permutation};

/// Result of a call. `DP_STATUS_OK` is zero.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Cycle = 4,
    Index = 5,
    SizeCap = 6,
    NotSpecial = 7,
    NotIncreasing = 8,
    InvalidPartition = 9,
    InvalidPermutation = 10,
    InvalidComposition = 11,
    NotAPartition = 12,
    NotLattice = 13,
    LengthMismatch = 14,
    SizeMismatch = 15,
    Empty = 16,
    Precondition = 17,
    Overflow = 18,
    UnknownSuite = 19,
    Panic = 20,
}

impl From<&Error> for DpStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Cycle(_) => DpStatus::Cycle,
            Error::Index { .. } => DpStatus::Index,
            Error::SizeCap { .. } => DpStatus::SizeCap,
            Error::NotIncreasing => DpStatus::NotIncreasing,
            Error::NotSpecial => DpStatus::NotSpecial,
            Error::InvalidPartition(_) => DpStatus::InvalidPartition,
            Error::InvalidPermutation(_) => DpStatus::InvalidPermutation,
            Error::InvalidComposition(_) => DpStatus::InvalidComposition,
            Error::NotAPartition(_) => DpStatus::NotAPartition,
            Error::NotLattice => DpStatus::NotLattice,
            Error::LengthMismatch { .. } => DpStatus::LengthMismatch,
            Error::SizeMismatch { .. } => DpStatus::SizeMismatch,
            Error::Empty => DpStatus::Empty,
            Error::Precondition(_) => DpStatus::Precondition,
            Error::Overflow => DpStatus::Overflow,
            Error::Parse { .. } => DpStatus::Parse,
        }
    }
}

/// Opaque handle to a validated double poset.
pub struct DpDoublePoset(DoublePoset);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(DpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(DpStatus::from(&e), format!("{}: {e}", e.name()))
    }
}

fn set_last_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("interior nul removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, records its error message, and converts panics to
/// `DP_STATUS_PANIC`.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> DpStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            DpStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(Some(message));
            status
        }
        Err(_) => {
            set_last_error(Some("internal panic".into()));
            DpStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(DpStatus::NullPointer, "null pointer argument".into())
}

unsafe fn handle<'a>(p: *const DpDoublePoset) -> Result<&'a DoublePoset, Failure> {
    p.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn string<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(DpStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn slice<'a>(p: *const usize, len: usize) -> Result<&'a [usize], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn put_handle(out: *mut *mut DpDoublePoset, d: DoublePoset) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(Box::into_raw(Box::new(DpDoublePoset(d))));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| Failure(DpStatus::InvalidUtf8, "output contains nul".into()))?;
    out.write(c.into_raw());
    Ok(())
}

/// Symbolic name of a status, e.g. `"CycleError"`. Static storage.
#[no_mangle]
pub extern "C" fn dp_status_name(status: DpStatus) -> *const c_char {
    let s: &'static CStr = match status {
        DpStatus::Ok => c"Ok",
        DpStatus::NullPointer => c"NullPointerError",
        DpStatus::InvalidUtf8 => c"InvalidUtf8Error",
        DpStatus::Parse => c"ParseError",
        DpStatus::Cycle => c"CycleError",
        DpStatus::Index => c"IndexError",
        DpStatus::SizeCap => c"SizeCapError",
        DpStatus::NotSpecial => c"NotSpecialError",
        DpStatus::NotIncreasing => c"NotIncreasingError",
        DpStatus::InvalidPartition => c"InvalidPartitionError",
        DpStatus::InvalidPermutation => c"InvalidPermutationError",
        DpStatus::InvalidComposition => c"InvalidCompositionError",
        DpStatus::NotAPartition => c"NotAPartitionError",
        DpStatus::NotLattice => c"NotLatticeError",
        DpStatus::LengthMismatch => c"LengthMismatchError",
        DpStatus::SizeMismatch => c"SizeMismatchError",
        DpStatus::Empty => c"EmptyError",
        DpStatus::Precondition => c"PreconditionError",
        DpStatus::Overflow => c"OverflowError",
        DpStatus::UnknownSuite => c"UnknownSuiteError",
        DpStatus::Panic => c"PanicError",
    };
    s.as_ptr()
}

/// Copy of the last error message on this thread, or null if the last call
/// succeeded. Release with [`dp_string_free`].
#[no_mangle]
pub extern "C" fn dp_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `d` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dp_free(d: *mut DpDoublePoset) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Parses the text format (`dp <n>`, `r1: …`, `r2: …`).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_parse(text: *const c_char, out: *mut *mut DpDoublePoset) -> DpStatus {
    guard(|| {
        let d = text::parse(string(text)?)?;
        put_handle(out, d)
    })
}

/// The one-element double poset.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_point(out: *mut *mut DpDoublePoset) -> DpStatus {
    guard(|| put_handle(out, DoublePoset::point()))
}

/// `P_σ` for a permutation given in one-line notation, values `1..=len`.
///
/// # Safety
/// `word` must point to `len` readable values (or be null when `len` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_from_permutation(word: *const usize, len: usize, out: *mut *mut DpDoublePoset) -> DpStatus {
    guard(|| {
        let sigma = Permutation::new(slice(word, len)?.to_vec())?;
        put_handle(out, DoublePoset::from_permutation(&sigma))
    })
}

/// `π_ν` for a partition given by its parts, largest first.
///
/// # Safety
/// As for [`dp_from_permutation`].
#[no_mangle]
pub unsafe extern "C" fn dp_from_partition(parts: *const usize, len: usize, out: *mut *mut DpDoublePoset) -> DpStatus {
    guard(|| {
        let nu = Partition::new(slice(parts, len)?.to_vec())?;
        put_handle(out, DoublePoset::pi_from_partition(&nu))
    })
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dp_size(d: *const DpDoublePoset) -> usize {
    d.as_ref().map_or(0, |h| h.0.n())
}

/// Composition `AB`: disjoint union, with every element of `A` below every
/// element of `B` in the second order.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_compose(
    a: *const DpDoublePoset,
    b: *const DpDoublePoset,
    out: *mut *mut DpDoublePoset,
) -> DpStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        let size = a.n() + b.n();
        if size > dposet::poset::MAX_ELEMENTS {
            return Err(Error::SizeCap {
                what: "compose",
                size,
                cap: dposet::poset::MAX_ELEMENTS,
            }
            .into());
        }
        put_handle(out, a.compose(b))
    })
}

/// Whether the two double posets are isomorphic (1) or not (0).
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_is_isomorphic(a: *const DpDoublePoset, b: *const DpDoublePoset, out: *mut c_int) -> DpStatus {
    guard(|| {
        let same = handle(a)?.is_isomorphic(handle(b)?)?;
        put(out, c_int::from(same))
    })
}

/// Canonical key in hexadecimal.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_canonical_key(d: *const DpDoublePoset, out: *mut *mut c_char) -> DpStatus {
    guard(|| put_string(out, handle(d)?.canonical_form()?.to_hex()))
}

/// Canonical text form.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_serialize(d: *const DpDoublePoset, out: *mut *mut c_char) -> DpStatus {
    guard(|| put_string(out, text::serialize(handle(d)?)?))
}

/// Number of pictures from `a` to `b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_pairing(a: *const DpDoublePoset, b: *const DpDoublePoset, out: *mut u64) -> DpStatus {
    guard(|| put(out, double_poset::pairing_basis(handle(a)?, handle(b)?)))
}

/// Coproduct as `c*left|right` terms over canonical keys.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_coproduct(d: *const DpDoublePoset, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        let delta = algebra::coproduct_basis(&handle(d)?.canonical_form()?)?;
        put_string(out, TensorDisplay(&delta).to_string())
    })
}

/// Antipode as `c*key` terms.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_antipode(d: *const DpDoublePoset, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        let s = algebra::Antipode::new().basis(&handle(d)?.canonical_form()?)?;
        put_string(out, s.to_string())
    })
}

/// Internal product `a ∘ b` as `c*key` terms.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_internal_product(
    a: *const DpDoublePoset,
    b: *const DpDoublePoset,
    out: *mut *mut c_char,
) -> DpStatus {
    guard(|| {
        let x = handle(a)?.canonical_form()?;
        let y = handle(b)?.canonical_form()?;
        put_string(out, algebra::internal_product_basis(&x, &y)?.to_string())
    })
}

/// Generating function in the monomial basis, as `c*M(…)` terms.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_gamma(d: *const DpDoublePoset, out: *mut *mut c_char) -> DpStatus {
    guard(|| put_string(out, MonomialDisplay(&qsym::gamma(handle(d)?)?).to_string()))
}

/// Linear extensions of a special double poset, one permutation per line.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_linear_extensions(d: *const DpDoublePoset, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        let lines: Vec<String> = perm::linear_extensions_special(handle(d)?)?
            .iter()
            .map(Permutation::to_string)
            .collect();
        put_string(out, lines.join("\n"))
    })
}

/// Image under the linear extension map, as `c*σ` terms.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_lmap(d: *const DpDoublePoset, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        let image = perm::linear_extension_map(&LinComb::basis(handle(d)?.canonical_form()?))?;
        put_string(out, image.to_string())
    })
}

/// The two lattice-word counts for a special double poset and a partition,
/// together with its pairing against `π_ν`.
///
/// # Safety
/// `d` must be a live handle; `parts` must point to `len` readable values;
/// the three out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_lr_counts(
    d: *const DpDoublePoset,
    parts: *const usize,
    len: usize,
    complement_count: *mut u64,
    mirror_count: *mut u64,
    pairing: *mut u64,
) -> DpStatus {
    guard(|| {
        let d = handle(d)?;
        let nu = Partition::new(slice(parts, len)?.to_vec())?;
        let c = lr::lr_count_complement(d, &nu)?;
        let m = lr::lr_count_mirror(d, &nu)?;
        let p = double_poset::pairing_basis(d, &DoublePoset::pi_from_partition(&nu));
        put(complement_count, c)?;
        put(mirror_count, m)?;
        put(pairing, p)
    })
}

/// Runs a verification suite; `passed` receives 1 iff every property held
/// and `report` the printed report.
///
/// # Safety
/// `suite` must be a nul-terminated string; the out-pointers must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn dp_check(
    suite: *const c_char,
    max_n: usize,
    seed: u64,
    passed: *mut c_int,
    report: *mut *mut c_char,
) -> DpStatus {
    guard(|| {
        let suite: Suite = string(suite)?
            .parse()
            .map_err(|m| Failure(DpStatus::UnknownSuite, m))?;
        let r = checks::run(suite, max_n, seed)?;
        put(passed, c_int::from(r.passed()))?;
        put_string(report, r.to_string())
    })
}
