//! Opaque handles for results that own variable-length data. Each handle
//! comes with accessors and a `*_free` function; passing NULL to a free
//! function is a no-op.

use std::ffi::{c_char, CString};
use std::sync::OnceLock;

use smarandache::iterations::{iterate_first_kind, iterate_second_kind, iterate_third_kind};
use smarandache::verification::{
    radu_scan, tables, tutescu_scan, verify_all, verify_table, Expected, LedgerEntry, Status,
};
use smarandache::{factorize, Factorization, FunctionId, IterationTrace};

use crate::error::{guard, null_pointer, Failure, SmStatus};
use crate::scalar::{read_str, write_out, SmValue};

/// Moves `value` to the heap and hands ownership to the caller.
fn give<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null_pointer("out"));
    }
    write_out(out, Box::into_raw(Box::new(value)), "out")
}

/// Borrows a handle, failing on NULL.
fn borrow<'a, T>(h: *const T, what: &str) -> Result<&'a T, Failure> {
    // SAFETY: the caller guarantees `h` is NULL or a live handle.
    unsafe { h.as_ref() }.ok_or_else(|| null_pointer(what))
}

fn index_error(i: usize, len: usize) -> Failure {
    Failure(
        SmStatus::Domain,
        format!("index {i} out of range for length {len}"),
    )
}

/// Releases a handle produced by `give`.
///
/// # Safety
/// `h` must be NULL or a pointer obtained from this library and not yet
/// freed.
unsafe fn release<T>(h: *mut T) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

// ---------------------------------------------------------------- factorization

/// Prime factorization, primes in increasing order.
pub struct SmFactorization(Factorization);

/// Factorizes n >= 1 (1 has no factors).
#[no_mangle]
pub extern "C" fn sm_factorize(n: u64, out: *mut *mut SmFactorization) -> SmStatus {
    guard(|| give(out, SmFactorization(factorize(n)?)))
}

/// Number of distinct prime factors; 0 for NULL.
#[no_mangle]
pub extern "C" fn sm_factorization_len(f: *const SmFactorization) -> usize {
    // SAFETY: the caller guarantees `f` is NULL or a live handle.
    unsafe { f.as_ref() }.map_or(0, |f| f.0.len())
}

/// The i-th prime and its exponent.
#[no_mangle]
pub extern "C" fn sm_factorization_get(
    f: *const SmFactorization,
    i: usize,
    prime: *mut u64,
    exponent: *mut u32,
) -> SmStatus {
    guard(|| {
        let f = &borrow(f, "factorization")?.0;
        let &(p, a) = f.factors().get(i).ok_or_else(|| index_error(i, f.len()))?;
        write_out(prime, p, "prime")?;
        write_out(exponent, a, "exponent")
    })
}

/// # Safety
/// `f` must be NULL or a live handle from `sm_factorize`.
#[no_mangle]
pub unsafe extern "C" fn sm_factorization_free(f: *mut SmFactorization) {
    release(f)
}

// ---------------------------------------------------------------- iterations

/// Orbit of a functional iteration.
pub struct SmTrace(IterationTrace);

fn function_named(name: *const c_char) -> Result<FunctionId, Failure> {
    Ok(FunctionId::parse(read_str(name, "name")?, None, None)?)
}

/// Iterates `name` (only "d" is registered) from x until a fixed point.
#[no_mangle]
pub extern "C" fn sm_iterate_first_kind(
    name: *const c_char,
    x: u64,
    out: *mut *mut SmTrace,
) -> SmStatus {
    guard(|| give(out, SmTrace(iterate_first_kind(function_named(name)?, x)?)))
}

/// Iterates `name` (only "sigma" is registered) from x until it reaches b.
#[no_mangle]
pub extern "C" fn sm_iterate_second_kind(
    name: *const c_char,
    x: u64,
    b: u64,
    out: *mut *mut SmTrace,
) -> SmStatus {
    guard(|| {
        give(
            out,
            SmTrace(iterate_second_kind(function_named(name)?, x, b)?),
        )
    })
}

/// Iterates `name` (only "gd" is registered) from x until it drops to b.
#[no_mangle]
pub extern "C" fn sm_iterate_third_kind(
    name: *const c_char,
    x: u64,
    b: u64,
    out: *mut *mut SmTrace,
) -> SmStatus {
    guard(|| {
        give(
            out,
            SmTrace(iterate_third_kind(function_named(name)?, x, b)?),
        )
    })
}

/// Number of applications until the stopping rule held; 0 for NULL.
#[no_mangle]
pub extern "C" fn sm_trace_count(t: *const SmTrace) -> u64 {
    // SAFETY: the caller guarantees `t` is NULL or a live handle.
    unsafe { t.as_ref() }.map_or(0, |t| t.0.count)
}

/// Length of the orbit (count + 1); 0 for NULL.
#[no_mangle]
pub extern "C" fn sm_trace_len(t: *const SmTrace) -> usize {
    // SAFETY: the caller guarantees `t` is NULL or a live handle.
    unsafe { t.as_ref() }.map_or(0, |t| t.0.orbit.len())
}

/// Orbit values, starting with x; valid until the handle is freed.
#[no_mangle]
pub extern "C" fn sm_trace_orbit(t: *const SmTrace) -> *const u64 {
    // SAFETY: the caller guarantees `t` is NULL or a live handle.
    unsafe { t.as_ref() }.map_or(std::ptr::null(), |t| t.0.orbit.as_ptr())
}

/// # Safety
/// `t` must be NULL or a live handle from an `sm_iterate_*` call.
#[no_mangle]
pub unsafe extern "C" fn sm_trace_free(t: *mut SmTrace) {
    release(t)
}

// ---------------------------------------------------------------- tables & ledger

fn table_id_strings() -> &'static [CString] {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    IDS.get_or_init(|| {
        tables()
            .iter()
            .map(|t| CString::new(t.id.as_str()).expect("table ids contain no NUL"))
            .collect()
    })
}

/// Number of embedded tables.
#[no_mangle]
pub extern "C" fn sm_table_count() -> usize {
    table_id_strings().len()
}

/// Id of the i-th embedded table, or NULL when out of range. The string is
/// static.
#[no_mangle]
pub extern "C" fn sm_table_id(i: usize) -> *const c_char {
    table_id_strings()
        .get(i)
        .map_or(std::ptr::null(), |c| c.as_ptr())
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmLedgerStatus {
    Confirmed = 0,
    Mismatch = 1,
    Undecided = 2,
}

/// One audited table entry.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmLedgerEntry {
    pub argument: u64,
    /// False when the table leaves the value unknown.
    pub expected_known: bool,
    pub expected: u64,
    pub computed: SmValue,
    pub status: SmLedgerStatus,
}

/// Audit result for one or all tables.
pub struct SmLedger {
    entries: Vec<LedgerEntry>,
    table_ids: Vec<CString>,
}

impl SmLedger {
    fn new(entries: Vec<LedgerEntry>) -> Result<Self, Failure> {
        let table_ids = entries
            .iter()
            .map(|e| CString::new(e.table.as_str()))
            .collect::<Result<_, _>>()
            .map_err(|e| Failure(SmStatus::Internal, e.to_string()))?;
        Ok(SmLedger { entries, table_ids })
    }
}

/// Audits one embedded table with default search bounds.
#[no_mangle]
pub extern "C" fn sm_verify_table(id: *const c_char, out: *mut *mut SmLedger) -> SmStatus {
    guard(|| {
        let id = read_str(id, "id")?;
        let ledger = SmLedger::new(verify_table(id, &Default::default())?)?;
        give(out, ledger)
    })
}

/// Audits every embedded table with default search bounds.
#[no_mangle]
pub extern "C" fn sm_verify_all(out: *mut *mut SmLedger) -> SmStatus {
    guard(|| give(out, SmLedger::new(verify_all(&Default::default())?)?))
}

/// Number of entries; 0 for NULL.
#[no_mangle]
pub extern "C" fn sm_ledger_len(l: *const SmLedger) -> usize {
    // SAFETY: the caller guarantees `l` is NULL or a live handle.
    unsafe { l.as_ref() }.map_or(0, |l| l.entries.len())
}

/// Copies the i-th entry into `out`.
#[no_mangle]
pub extern "C" fn sm_ledger_entry(
    l: *const SmLedger,
    i: usize,
    out: *mut SmLedgerEntry,
) -> SmStatus {
    guard(|| {
        let l = borrow(l, "ledger")?;
        let e = l
            .entries
            .get(i)
            .ok_or_else(|| index_error(i, l.entries.len()))?;
        let (expected_known, expected) = match e.expected {
            Expected::Value(v) => (true, v),
            Expected::Unknown => (false, 0),
        };
        let status = match e.status {
            Status::Confirmed => SmLedgerStatus::Confirmed,
            Status::Mismatch => SmLedgerStatus::Mismatch,
            Status::Undecided => SmLedgerStatus::Undecided,
        };
        let entry = SmLedgerEntry {
            argument: e.argument,
            expected_known,
            expected,
            computed: e.computed.into(),
            status,
        };
        write_out(out, entry, "out")
    })
}

/// Table id of the i-th entry, or NULL when out of range; valid until the
/// ledger is freed.
#[no_mangle]
pub extern "C" fn sm_ledger_table_id(l: *const SmLedger, i: usize) -> *const c_char {
    // SAFETY: the caller guarantees `l` is NULL or a live handle.
    unsafe { l.as_ref() }
        .and_then(|l| l.table_ids.get(i))
        .map_or(std::ptr::null(), |c| c.as_ptr())
}

/// # Safety
/// `l` must be NULL or a live handle from `sm_verify_table`/`sm_verify_all`.
#[no_mangle]
pub unsafe extern "C" fn sm_ledger_free(l: *mut SmLedger) {
    release(l)
}

// ---------------------------------------------------------------- scans

/// A list of unsigned 64-bit integers.
pub struct SmU64List(Vec<u64>);

/// Every n in 2..=limit with S(n) = S(n+1).
#[no_mangle]
pub extern "C" fn sm_tutescu_scan(limit: u64, out: *mut *mut SmU64List) -> SmStatus {
    guard(|| give(out, SmU64List(tutescu_scan(limit)?)))
}

/// Every n in 2..=limit with S(n) + S(n+1) = S(n+2).
#[no_mangle]
pub extern "C" fn sm_radu_scan(limit: u64, out: *mut *mut SmU64List) -> SmStatus {
    guard(|| give(out, SmU64List(radu_scan(limit)?)))
}

/// Number of elements; 0 for NULL.
#[no_mangle]
pub extern "C" fn sm_u64_list_len(l: *const SmU64List) -> usize {
    // SAFETY: the caller guarantees `l` is NULL or a live handle.
    unsafe { l.as_ref() }.map_or(0, |l| l.0.len())
}

/// Element storage; valid until the list is freed.
#[no_mangle]
pub extern "C" fn sm_u64_list_data(l: *const SmU64List) -> *const u64 {
    // SAFETY: the caller guarantees `l` is NULL or a live handle.
    unsafe { l.as_ref() }.map_or(std::ptr::null(), |l| l.0.as_ptr())
}

/// # Safety
/// `l` must be NULL or a live handle from a scan function.
#[no_mangle]
pub unsafe extern "C" fn sm_u64_list_free(l: *mut SmU64List) {
    release(l)
}
