//! Exercises the C ABI from Rust through the exported symbols.

use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use smarandache_ffi::*;

fn last_error() -> String {
    let p = sm_last_error_message();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn unary(f: extern "C" fn(u64, *mut u64) -> SmStatus, n: u64) -> Result<u64, SmStatus> {
    let mut out = u64::MAX;
    match f(n, &mut out) {
        SmStatus::Ok => Ok(out),
        s => Err(s),
    }
}

#[test]
fn version_matches_the_crate() {
    let v = unsafe { CStr::from_ptr(sm_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn scalar_functions() {
    assert!(sm_is_prime(1_000_000_007));
    assert!(!sm_is_prime(1));
    assert_eq!(unary(sm_s, 1), Ok(1));
    assert_eq!(unary(sm_s, 16), Ok(6));
    assert_eq!(unary(sm_s_oracle, 16), Ok(6));
    assert_eq!(unary(sm_sdf, 9), Ok(9));
    assert_eq!(unary(sm_z, 4), Ok(7));
    assert_eq!(unary(sm_num_divisors, 12), Ok(6));
    assert_eq!(unary(sm_sum_divisors, 12), Ok(28));
    assert_eq!(unary(sm_greatest_proper_divisor, 12), Ok(6));
    assert_eq!(unary(sm_inferior_prime_part, 10), Ok(7));
    assert_eq!(unary(sm_superior_prime_part, 10), Ok(11));
    assert_eq!(unary(sm_inferior_square_part, 10), Ok(9));
    assert_eq!(unary(sm_superior_square_part, 10), Ok(16));
    assert_eq!(unary(sm_inferior_cubic_part, 10), Ok(8));
    assert_eq!(unary(sm_superior_cubic_part, 10), Ok(27));
    assert_eq!(unary(sm_square_complementary, 12), Ok(3));
    assert_eq!(unary(sm_cubic_complementary, 12), Ok(18));
    assert_eq!(unary(sm_prime_complementary, 8), Ok(3));
    assert_eq!(unary(sm_prime_count_via_s, 100), Ok(25));
    assert_eq!(unary(sm_sieve_prime_count, 100), Ok(25));

    let mut out = 0;
    assert_eq!(sm_ceil_s(72, 2, &mut out), SmStatus::Ok);
    assert_eq!(out, 12);
    assert_eq!(sm_m_power_complementary(12, 3, &mut out), SmStatus::Ok);
    assert_eq!(out, 18);
}

#[test]
fn errors_set_status_and_message() {
    assert_eq!(unary(sm_s, 0), Err(SmStatus::Domain));
    assert!(!last_error().is_empty());

    // A success clears the message.
    assert_eq!(unary(sm_s, 5), Ok(5));
    assert!(sm_last_error_message().is_null());

    assert_eq!(sm_s(5, ptr::null_mut()), SmStatus::NullPointer);
    assert!(last_error().contains("NULL"));

    assert_eq!(
        unary(sm_superior_square_part, u64::MAX),
        Err(SmStatus::Overflow)
    );

    let mut out = 7;
    assert_eq!(sm_ceil_s(10, 0, &mut out), SmStatus::Domain);
    assert_eq!(out, 7, "out-pointer untouched on failure");
}

#[test]
fn search_outcomes() {
    let mut v = SmValue {
        kind: SmValueKind::Int,
        value: 0,
        reason: SmNoneReason::NoReason,
    };
    assert_eq!(sm_sk(3, 100_000, &mut v), SmStatus::Ok);
    assert_eq!(v.kind, SmValueKind::ProvablyNone);
    assert_eq!(v.reason, SmNoneReason::StableNonzeroResidue);

    assert_eq!(sm_sw(3, 100_000, &mut v), SmStatus::Ok);
    assert_eq!((v.kind, v.value), (SmValueKind::Found, 2));

    assert_eq!(sm_sntp(4, 997, &mut v), SmStatus::Ok);
    assert_eq!(v.kind, SmValueKind::ProvablyNone);
    assert_eq!(v.reason, SmNoneReason::FourDividesNPrimorialSquarefree);

    assert_eq!(sm_sntp(9, 997, &mut v), SmStatus::Ok);
    assert_eq!((v.kind, v.value), (SmValueKind::NotFoundWithin, 997));

    assert_eq!(sm_sk(4, 100, &mut v), SmStatus::Domain);
}

#[test]
fn eval_by_name() {
    let mut v = SmValue {
        kind: SmValueKind::Int,
        value: 0,
        reason: SmNoneReason::NoReason,
    };
    let name = CString::new("S").unwrap();
    assert_eq!(
        sm_eval(name.as_ptr(), 24, ptr::null(), &mut v),
        SmStatus::Ok
    );
    assert_eq!((v.kind, v.value), (SmValueKind::Int, 4));

    let mut params = sm_eval_params_default();
    params.k = 2;
    let sk = CString::new("Sk").unwrap();
    assert_eq!(sm_eval(sk.as_ptr(), 72, &params, &mut v), SmStatus::Ok);
    assert_eq!(v.value, 12);
    assert_eq!(
        sm_eval(sk.as_ptr(), 72, ptr::null(), &mut v),
        SmStatus::Domain,
        "Sk needs k"
    );

    params.has_threshold = true;
    params.threshold = 100;
    let si2 = CString::new("SI2-sigma").unwrap();
    assert_eq!(sm_eval(si2.as_ptr(), 2, &params, &mut v), SmStatus::Ok);
    assert_eq!(v.kind, SmValueKind::Int);

    let bogus = CString::new("nope").unwrap();
    assert_eq!(
        sm_eval(bogus.as_ptr(), 1, ptr::null(), &mut v),
        SmStatus::UnknownFunction
    );
    assert_eq!(
        sm_eval(ptr::null(), 1, ptr::null(), &mut v),
        SmStatus::NullPointer
    );
    let bad_utf8 = [0xffu8, 0];
    assert_eq!(
        sm_eval(bad_utf8.as_ptr().cast(), 1, ptr::null(), &mut v),
        SmStatus::InvalidUtf8
    );
}

#[test]
fn factorization_handle() {
    let mut f = ptr::null_mut();
    assert_eq!(sm_factorize(360, &mut f), SmStatus::Ok);
    let len = sm_factorization_len(f);
    let mut got = Vec::new();
    for i in 0..len {
        let (mut p, mut a) = (0, 0);
        assert_eq!(sm_factorization_get(f, i, &mut p, &mut a), SmStatus::Ok);
        got.push((p, a));
    }
    assert_eq!(got, vec![(2, 3), (3, 2), (5, 1)]);
    let (mut p, mut a) = (0, 0);
    assert_eq!(
        sm_factorization_get(f, len, &mut p, &mut a),
        SmStatus::Domain
    );
    unsafe { sm_factorization_free(f) };
    unsafe { sm_factorization_free(ptr::null_mut()) };
    assert_eq!(sm_factorization_len(ptr::null()), 0);
    assert_eq!(sm_factorize(0, &mut f), SmStatus::Domain);
}

#[test]
fn iteration_handles() {
    let d = CString::new("d").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(sm_iterate_first_kind(d.as_ptr(), 12, &mut t), SmStatus::Ok);
    let orbit = unsafe { std::slice::from_raw_parts(sm_trace_orbit(t), sm_trace_len(t)) };
    assert_eq!(orbit, &[12, 6, 4, 3, 2]);
    assert_eq!(sm_trace_count(t), 4);
    unsafe { sm_trace_free(t) };

    let gd = CString::new("gd").unwrap();
    assert_eq!(
        sm_iterate_third_kind(gd.as_ptr(), 100, 10, &mut t),
        SmStatus::Ok
    );
    let orbit = unsafe { std::slice::from_raw_parts(sm_trace_orbit(t), sm_trace_len(t)) };
    assert_eq!(orbit, &[100, 50, 25, 5]);
    unsafe { sm_trace_free(t) };

    let sigma = CString::new("sigma").unwrap();
    assert_eq!(
        sm_iterate_second_kind(sigma.as_ptr(), 2, 20, &mut t),
        SmStatus::Ok
    );
    let orbit = unsafe { std::slice::from_raw_parts(sm_trace_orbit(t), sm_trace_len(t)) };
    assert_eq!(orbit, &[2, 3, 4, 7, 8, 15, 24]);
    unsafe { sm_trace_free(t) };

    assert_eq!(
        sm_iterate_first_kind(sigma.as_ptr(), 12, &mut t),
        SmStatus::NotRegistered
    );
    assert_eq!(sm_trace_count(ptr::null()), 0);
    assert!(sm_trace_orbit(ptr::null()).is_null());
}

#[test]
fn tables_and_ledger() {
    let n = sm_table_count();
    assert!(n > 0);
    let ids: Vec<String> = (0..n)
        .map(|i| {
            unsafe { CStr::from_ptr(sm_table_id(i)) }
                .to_str()
                .unwrap()
                .to_owned()
        })
        .collect();
    assert!(ids.iter().any(|id| id == "z-5.5"));
    assert!(sm_table_id(n).is_null());

    let id = CString::new("z-5.5").unwrap();
    let mut l = ptr::null_mut();
    assert_eq!(sm_verify_table(id.as_ptr(), &mut l), SmStatus::Ok);
    let mut mismatches = Vec::new();
    for i in 0..sm_ledger_len(l) {
        let mut e = std::mem::MaybeUninit::<SmLedgerEntry>::uninit();
        assert_eq!(sm_ledger_entry(l, i, e.as_mut_ptr()), SmStatus::Ok);
        let e = unsafe { e.assume_init() };
        let table = unsafe { CStr::from_ptr(sm_ledger_table_id(l, i)) };
        assert_eq!(table.to_str().unwrap(), "z-5.5");
        if e.status == SmLedgerStatus::Mismatch {
            mismatches.push((e.argument, e.computed.value));
        }
    }
    assert_eq!(mismatches, vec![(4, 7)]);
    assert!(sm_ledger_table_id(l, sm_ledger_len(l)).is_null());
    unsafe { sm_ledger_free(l) };

    let unknown = CString::new("no-such-table").unwrap();
    assert_eq!(
        sm_verify_table(unknown.as_ptr(), &mut l),
        SmStatus::UnknownTable
    );
}

#[test]
fn scan_lists() {
    let mut l = ptr::null_mut();
    assert_eq!(sm_radu_scan(20_000, &mut l), SmStatus::Ok);
    let v = unsafe { std::slice::from_raw_parts(sm_u64_list_data(l), sm_u64_list_len(l)) };
    assert_eq!(v, &[9, 119, 4900]);
    unsafe { sm_u64_list_free(l) };

    assert_eq!(sm_tutescu_scan(20_000, &mut l), SmStatus::Ok);
    assert_eq!(sm_u64_list_len(l), 0);
    unsafe { sm_u64_list_free(l) };

    assert_eq!(sm_tutescu_scan(1, &mut l), SmStatus::Domain);
    assert_eq!(sm_radu_scan(10, ptr::null_mut()), SmStatus::NullPointer);
}

/// The generated header must compile as C99 and as C++.
#[test]
fn header_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/smarandache.h");
    assert!(header.exists(), "build script did not emit the header");
    for (compiler, lang, std) in [("cc", "c", "-std=c99"), ("c++", "c++", "-std=c++11")] {
        let result = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", std, "-x", lang])
            .arg(&header)
            .output();
        match result {
            Ok(out) => assert!(
                out.status.success(),
                "{compiler} rejected the header:\n{}",
                String::from_utf8_lossy(&out.stderr)
            ),
            Err(_) => eprintln!("{compiler} not available; skipping header check"),
        }
    }
}
