//! Functions of one integer argument and the search-based variants.

use std::ffi::{c_char, CStr};

use smarandache::arith;
use smarandache::classical;
use smarandache::parts;
use smarandache::variants;
use smarandache::verification::sieve_prime_count;
use smarandache::{EvalParams, FunctionId, NoneReason, SearchOutcome, Value};

use crate::error::{guard, null_pointer, Failure, SmStatus};

/// Stores `value` through `out`, failing on a NULL pointer.
pub(crate) fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null_pointer(what));
    }
    // SAFETY: non-null; the caller guarantees `out` points to writable memory.
    unsafe { out.write(value) };
    Ok(())
}

/// Borrows a NUL-terminated UTF-8 string.
pub(crate) fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(null_pointer(what));
    }
    // SAFETY: non-null; the caller guarantees a valid NUL-terminated string.
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|e| Failure(SmStatus::InvalidUtf8, format!("{what}: {e}")))
}

/// Deterministic primality test; never fails.
#[no_mangle]
pub extern "C" fn sm_is_prime(n: u64) -> bool {
    arith::is_prime(n)
}

/// Shared body of the one-argument entry points.
fn unary(n: u64, out: *mut u64, f: impl FnOnce(u64) -> smarandache::Result<u64>) -> SmStatus {
    guard(|| write_out(out, f(n)?, "out"))
}

/// S(n): least m with n | m!. S(1) = 1; n = 0 is a domain error.
#[no_mangle]
pub extern "C" fn sm_s(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, classical::s)
}

/// S(n) by stepping m! mod n; slow, for cross-checking.
#[no_mangle]
pub extern "C" fn sm_s_oracle(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, classical::s_oracle)
}

/// Least m with n | m!!.
#[no_mangle]
pub extern "C" fn sm_sdf(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, variants::sdf)
}

/// Least m with n | m(m + 1)/2.
#[no_mangle]
pub extern "C" fn sm_z(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, variants::z)
}

/// Number of divisors.
#[no_mangle]
pub extern "C" fn sm_num_divisors(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, arith::num_divisors)
}

/// Sum of divisors.
#[no_mangle]
pub extern "C" fn sm_sum_divisors(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, arith::sum_divisors)
}

/// Greatest divisor below n (n >= 2).
#[no_mangle]
pub extern "C" fn sm_greatest_proper_divisor(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, arith::greatest_proper_divisor)
}

/// Largest prime <= n.
#[no_mangle]
pub extern "C" fn sm_inferior_prime_part(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, parts::inferior_prime_part)
}

/// Smallest prime >= n.
#[no_mangle]
pub extern "C" fn sm_superior_prime_part(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, parts::superior_prime_part)
}

/// Largest square <= n.
#[no_mangle]
pub extern "C" fn sm_inferior_square_part(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, |n| Ok(parts::inferior_square_part(n)))
}

/// Smallest square >= n.
#[no_mangle]
pub extern "C" fn sm_superior_square_part(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, parts::superior_square_part)
}

/// Largest cube <= n.
#[no_mangle]
pub extern "C" fn sm_inferior_cubic_part(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, |n| Ok(parts::inferior_cubic_part(n)))
}

/// Smallest cube >= n.
#[no_mangle]
pub extern "C" fn sm_superior_cubic_part(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, parts::superior_cubic_part)
}

/// Least k with n * k a perfect square.
#[no_mangle]
pub extern "C" fn sm_square_complementary(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, parts::square_complementary)
}

/// Least k with n * k a perfect cube.
#[no_mangle]
pub extern "C" fn sm_cubic_complementary(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, parts::cubic_complementary)
}

/// Least k >= 0 with n + k prime.
#[no_mangle]
pub extern "C" fn sm_prime_complementary(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, parts::prime_complementary)
}

/// pi(x) through the S-based closed formula (x >= 4).
#[no_mangle]
pub extern "C" fn sm_prime_count_via_s(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, classical::prime_count_via_s)
}

/// pi(x) by sieving.
#[no_mangle]
pub extern "C" fn sm_sieve_prime_count(n: u64, out: *mut u64) -> SmStatus {
    unary(n, out, sieve_prime_count)
}

/// Least m with n | m^k.
#[no_mangle]
pub extern "C" fn sm_ceil_s(n: u64, k: u32, out: *mut u64) -> SmStatus {
    guard(|| write_out(out, variants::ceil_s(n, k)?, "out"))
}

/// Least k with x * k a perfect m-th power.
#[no_mangle]
pub extern "C" fn sm_m_power_complementary(x: u64, m: u32, out: *mut u64) -> SmStatus {
    guard(|| write_out(out, parts::m_power_complementary(x, m)?, "out"))
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmValueKind {
    /// A plain integer result.
    Int = 0,
    /// A search found `value`.
    Found = 1,
    /// A search exhausted its bound; `value` holds the bound.
    NotFoundWithin = 2,
    /// No solution exists; `reason` says why.
    ProvablyNone = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmNoneReason {
    NoReason = 0,
    StableNonzeroResidue = 1,
    FourDividesNPrimorialSquarefree = 2,
}

/// Result of evaluating a function that may run a bounded search.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmValue {
    pub kind: SmValueKind,
    pub value: u64,
    pub reason: SmNoneReason,
}

impl From<SearchOutcome> for SmValue {
    fn from(o: SearchOutcome) -> Self {
        let (kind, value, reason) = match o {
            SearchOutcome::Found(v) => (SmValueKind::Found, v, SmNoneReason::NoReason),
            SearchOutcome::NotFoundWithin(b) => {
                (SmValueKind::NotFoundWithin, b, SmNoneReason::NoReason)
            }
            SearchOutcome::ProvablyNone(r) => (
                SmValueKind::ProvablyNone,
                0,
                match r {
                    NoneReason::StableNonzeroResidue => SmNoneReason::StableNonzeroResidue,
                    NoneReason::FourDividesNPrimorialSquarefree => {
                        SmNoneReason::FourDividesNPrimorialSquarefree
                    }
                },
            ),
        };
        SmValue {
            kind,
            value,
            reason,
        }
    }
}

impl From<Value> for SmValue {
    fn from(v: Value) -> Self {
        match v {
            Value::Int(v) => SmValue {
                kind: SmValueKind::Int,
                value: v,
                reason: SmNoneReason::NoReason,
            },
            Value::Outcome(o) => o.into(),
        }
    }
}

/// Least m <= bound with p | 0! + 1! + ... + (m-1)! (p prime).
#[no_mangle]
pub extern "C" fn sm_sk(p: u64, bound: u64, out: *mut SmValue) -> SmStatus {
    guard(|| write_out(out, variants::sk(p, bound)?.into(), "out"))
}

/// Least m <= bound with p | 1! + 2! + ... + m! (p prime).
#[no_mangle]
pub extern "C" fn sm_sw(p: u64, bound: u64, out: *mut SmValue) -> SmStatus {
    guard(|| write_out(out, variants::sw(p, bound)?.into(), "out"))
}

/// Least prime p <= prime_bound with n | p# - 1, p# or p# + 1.
#[no_mangle]
pub extern "C" fn sm_sntp(n: u64, prime_bound: u64, out: *mut SmValue) -> SmStatus {
    guard(|| write_out(out, variants::sntp(n, prime_bound)?.into(), "out"))
}

/// Extra arguments for `sm_eval`. `k` and `m` are ignored unless the named
/// function needs them; 0 means "not given".
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmEvalParams {
    pub search_bound: u64,
    pub prime_bound: u64,
    pub threshold: u64,
    pub has_threshold: bool,
    pub k: u32,
    pub m: u32,
}

/// Defaults: search bound 100000, prime bound 997, no threshold, no k or m.
#[no_mangle]
pub extern "C" fn sm_eval_params_default() -> SmEvalParams {
    let d = EvalParams::default();
    SmEvalParams {
        search_bound: d.search_bound,
        prime_bound: d.prime_bound,
        threshold: 0,
        has_threshold: false,
        k: 0,
        m: 0,
    }
}

/// Evaluates a function by symbolic name (e.g. "S", "SK", "Sk", "sq-comp").
/// `params` may be NULL for the defaults.
#[no_mangle]
pub extern "C" fn sm_eval(
    name: *const c_char,
    x: u64,
    params: *const SmEvalParams,
    out: *mut SmValue,
) -> SmStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let p = if params.is_null() {
            sm_eval_params_default()
        } else {
            // SAFETY: non-null; the caller guarantees a valid struct.
            unsafe { params.read() }
        };
        let given = |v: u32| (v != 0).then_some(v);
        let f = FunctionId::parse(name, given(p.k), given(p.m))?;
        let eval = EvalParams {
            search_bound: p.search_bound,
            prime_bound: p.prime_bound,
            threshold: p.has_threshold.then_some(p.threshold),
        };
        write_out(out, f.eval(x, &eval)?.into(), "out")
    })
}
