//! C ABI for the parity-bias engine.
//!
//! Every function returns a [`PbStatus`]. Objects are opaque handles created
//! by a `*_new`/constructor call and released with the matching `*_free`.
//! After a non-`Ok` status, [`pb_last_error`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use parity_bias::counting::{count_by_dp, BiasCount, CountTable};
use parity_bias::maps::{audit_family, Family, InjectionReport, MapError};
use parity_bias::partition::{ClassSpec, Partition};
use parity_bias::verify::{verify_lemma, Holds, Lemma};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The input lies outside the domain of the requested map or lemma.
    DomainViolation = 3,
    /// The input is in the domain but no rule of the map produced an image.
    Unmapped = 4,
    /// The value does not fit in the requested integer type.
    Overflow = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PbBias {
    OddHeavy = 0,
    EvenHeavy = 1,
    Balanced = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PbFamily {
    T1 = 1,
    T2 = 2,
    T3 = 3,
    T4 = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PbLemma {
    L1 = 1,
    L2 = 2,
}

/// A partition, parts in non-increasing order.
pub struct PbPartition(Partition);

/// Bias counts for one class, rows 0..=n_max.
pub struct PbCountTable(CountTable);

pub struct PbAuditReport(InjectionReport);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PbAuditSummary {
    pub n: u32,
    pub domain_size: u64,
    pub image_size: u64,
    pub residual_count: u64,
    pub expected_residual: u64,
    pub collisions: u64,
    pub violations: u64,
    pub clean: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap_or_default());
}

fn fail(status: PbStatus, msg: impl Into<String>) -> PbStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> PbStatus) -> PbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(PbStatus::Internal, "internal panic"),
    }
}

impl From<PbFamily> for Family {
    fn from(f: PbFamily) -> Self {
        match f {
            PbFamily::T1 => Family::T1,
            PbFamily::T2 => Family::T2,
            PbFamily::T3 => Family::T3,
            PbFamily::T4 => Family::T4,
        }
    }
}

fn pick(row: &BiasCount, bias: PbBias) -> &num_bigint::BigUint {
    match bias {
        PbBias::OddHeavy => &row.odd_heavy,
        PbBias::EvenHeavy => &row.even_heavy,
        PbBias::Balanced => &row.balanced,
    }
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a partition from `len` positive parts in any order.
///
/// # Safety
/// `parts` must point to `len` readable `u32` values (it may be null when
/// `len` is 0). `out` must be a valid pointer to write the handle to.
#[no_mangle]
pub unsafe extern "C" fn pb_partition_new(parts: *const u32, len: usize, out: *mut *mut PbPartition) -> PbStatus {
    guard(|| {
        if out.is_null() || (parts.is_null() && len > 0) {
            return fail(PbStatus::NullPointer, "null pointer argument");
        }
        let raw = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(parts, len).to_vec() };
        match Partition::new(raw) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(PbPartition(p)));
                PbStatus::Ok
            }
            Err(e) => fail(PbStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pb_partition_free(p: *mut PbPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live partition handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_partition_weight(p: *const PbPartition, out: *mut u32) -> PbStatus {
    if p.is_null() || out.is_null() {
        return fail(PbStatus::NullPointer, "null pointer argument");
    }
    *out = (*p).0.n();
    PbStatus::Ok
}

/// # Safety
/// `p` must be a live partition handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_partition_len(p: *const PbPartition, out: *mut usize) -> PbStatus {
    if p.is_null() || out.is_null() {
        return fail(PbStatus::NullPointer, "null pointer argument");
    }
    *out = (*p).0.len();
    PbStatus::Ok
}

/// Copies the parts, largest first, into `buf`. `written` receives the
/// number of parts; when `cap` is too small nothing is copied, `written`
/// holds the required length and `BufferTooSmall` is returned.
///
/// # Safety
/// `p` must be a live partition handle, `buf` must have room for `cap`
/// values (null allowed when `cap` is 0), `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pb_partition_parts(
    p: *const PbPartition,
    buf: *mut u32,
    cap: usize,
    written: *mut usize,
) -> PbStatus {
    if p.is_null() || written.is_null() || (buf.is_null() && cap > 0) {
        return fail(PbStatus::NullPointer, "null pointer argument");
    }
    let parts = (*p).0.parts();
    *written = parts.len();
    if cap < parts.len() {
        return fail(PbStatus::BufferTooSmall, format!("need room for {} parts", parts.len()));
    }
    if !parts.is_empty() {
        ptr::copy_nonoverlapping(parts.as_ptr(), buf, parts.len());
    }
    PbStatus::Ok
}

/// Counts rows 0..=n_max for a class name such as `P`, `DQ`, `Pm3` or `P{1,2}`.
///
/// # Safety
/// `class_name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_count_table_dp(class_name: *const c_char, n_max: u32, out: *mut *mut PbCountTable) -> PbStatus {
    guard(|| {
        if class_name.is_null() || out.is_null() {
            return fail(PbStatus::NullPointer, "null pointer argument");
        }
        let Ok(name) = CStr::from_ptr(class_name).to_str() else {
            return fail(PbStatus::InvalidArgument, "class name is not UTF-8");
        };
        match ClassSpec::parse_name(name) {
            Ok(spec) => {
                *out = Box::into_raw(Box::new(PbCountTable(count_by_dp(n_max, &spec))));
                PbStatus::Ok
            }
            Err(e) => fail(PbStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `t` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pb_count_table_free(t: *mut PbCountTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live table handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_count_table_n_max(t: *const PbCountTable, out: *mut u32) -> PbStatus {
    if t.is_null() || out.is_null() {
        return fail(PbStatus::NullPointer, "null pointer argument");
    }
    *out = (*t).0.n_max();
    PbStatus::Ok
}

unsafe fn row<'a>(t: *const PbCountTable, n: u32) -> Result<&'a BiasCount, PbStatus> {
    if t.is_null() {
        return Err(fail(PbStatus::NullPointer, "null pointer argument"));
    }
    (*t).0.row(n).ok_or_else(|| fail(PbStatus::InvalidArgument, format!("n={n} is beyond the table")))
}

/// One count as `u64`; `Overflow` when it does not fit.
///
/// # Safety
/// `t` must be a live table handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_count_table_get_u64(t: *const PbCountTable, n: u32, bias: PbBias, out: *mut u64) -> PbStatus {
    if out.is_null() {
        return fail(PbStatus::NullPointer, "null pointer argument");
    }
    let r = match row(t, n) {
        Ok(r) => r,
        Err(s) => return s,
    };
    match u64::try_from(pick(r, bias)) {
        Ok(v) => {
            *out = v;
            PbStatus::Ok
        }
        Err(_) => fail(PbStatus::Overflow, format!("count at n={n} exceeds 64 bits")),
    }
}

/// One count as a decimal string, released with [`pb_string_free`].
///
/// # Safety
/// `t` must be a live table handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_count_table_get_string(
    t: *const PbCountTable,
    n: u32,
    bias: PbBias,
    out: *mut *mut c_char,
) -> PbStatus {
    if out.is_null() {
        return fail(PbStatus::NullPointer, "null pointer argument");
    }
    let r = match row(t, n) {
        Ok(r) => r,
        Err(s) => return s,
    };
    match CString::new(pick(r, bias).to_string()) {
        Ok(s) => {
            *out = s.into_raw();
            PbStatus::Ok
        }
        Err(_) => fail(PbStatus::Internal, "decimal string contained NUL"),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Applies a family's proof map without repair. On `Ok`, `*out` is the image,
/// or null when the source is left to a counting argument.
///
/// # Safety
/// `src` must be a live partition handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_map_apply(family: PbFamily, src: *const PbPartition, out: *mut *mut PbPartition) -> PbStatus {
    guard(|| {
        if src.is_null() || out.is_null() {
            return fail(PbStatus::NullPointer, "null pointer argument");
        }
        match Family::from(family).map(&(*src).0) {
            Ok(o) => {
                *out = o.image.map_or(ptr::null_mut(), |p| Box::into_raw(Box::new(PbPartition(p))));
                PbStatus::Ok
            }
            Err(e @ MapError::OutsideDomain { .. }) => fail(PbStatus::DomainViolation, e.to_string()),
            Err(e @ MapError::Unmapped { .. }) => fail(PbStatus::Unmapped, e.to_string()),
        }
    })
}

/// Exhaustive audit of a family at `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_audit(family: PbFamily, n: u32, out: *mut *mut PbAuditReport) -> PbStatus {
    guard(|| {
        if out.is_null() {
            return fail(PbStatus::NullPointer, "null pointer argument");
        }
        *out = Box::into_raw(Box::new(PbAuditReport(audit_family(n, family.into()))));
        PbStatus::Ok
    })
}

/// # Safety
/// `r` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_audit_summary(r: *const PbAuditReport, out: *mut PbAuditSummary) -> PbStatus {
    if r.is_null() || out.is_null() {
        return fail(PbStatus::NullPointer, "null pointer argument");
    }
    let r = &(*r).0;
    *out = PbAuditSummary {
        n: r.n,
        domain_size: r.domain_size as u64,
        image_size: r.image_size as u64,
        residual_count: r.residual_count as u64,
        expected_residual: r.expected_residual as u64,
        collisions: r.collisions.len() as u64,
        violations: r.violation_count() as u64,
        clean: r.clean(),
    };
    PbStatus::Ok
}

/// The two sources and the shared image of collision `i`, as new handles.
///
/// # Safety
/// `r` must be a live report handle; the three out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pb_audit_collision(
    r: *const PbAuditReport,
    i: usize,
    first: *mut *mut PbPartition,
    second: *mut *mut PbPartition,
    image: *mut *mut PbPartition,
) -> PbStatus {
    if r.is_null() || first.is_null() || second.is_null() || image.is_null() {
        return fail(PbStatus::NullPointer, "null pointer argument");
    }
    let report = &(*r).0;
    let Some(c) = report.collisions.get(i) else {
        return fail(PbStatus::InvalidArgument, format!("no collision {i}"));
    };
    let handle = |p: &Partition| Box::into_raw(Box::new(PbPartition(p.clone())));
    *first = handle(&c.first);
    *second = handle(&c.second);
    *image = handle(&c.image);
    PbStatus::Ok
}

/// # Safety
/// `r` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pb_audit_free(r: *mut PbAuditReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Evaluates a floor-sum lemma at `n`. `DomainViolation` for wrong parity or
/// n below the lemma's range.
///
/// # Safety
/// `holds` must be a valid pointer; `lhs` and `rhs` may be null.
#[no_mangle]
pub unsafe extern "C" fn pb_verify_lemma(lemma: PbLemma, n: u32, holds: *mut bool, lhs: *mut i64, rhs: *mut i64) -> PbStatus {
    guard(|| {
        if holds.is_null() {
            return fail(PbStatus::NullPointer, "null pointer argument");
        }
        let which = match lemma {
            PbLemma::L1 => Lemma::L1,
            PbLemma::L2 => Lemma::L2,
        };
        let rec = match verify_lemma(which, n) {
            Ok(r) => r,
            Err(e) => return fail(PbStatus::DomainViolation, e.to_string()),
        };
        let side = |v: &Option<num_bigint::BigInt>| v.as_ref().and_then(|x| i64::try_from(x).ok());
        let (Some(l), Some(r)) = (side(&rec.lhs), side(&rec.rhs)) else {
            return fail(PbStatus::Overflow, "lemma sides exceed 64 bits");
        };
        *holds = rec.holds == Holds::Yes;
        if !lhs.is_null() {
            *lhs = l;
        }
        if !rhs.is_null() {
            *rhs = r;
        }
        PbStatus::Ok
    })
}
