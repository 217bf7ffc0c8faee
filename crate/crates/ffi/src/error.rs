//! Status codes and the per-thread last-error message.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use smarandache::Error;

/// Result code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmStatus {
    Ok = 0,
    /// Argument outside the function's domain.
    Domain = 1,
    /// The exact result does not fit in 64 bits.
    Overflow = 2,
    NotCoprime = 3,
    UnknownTable = 4,
    UnknownFunction = 5,
    Unsupported = 6,
    NotRegistered = 7,
    IterationCap = 8,
    NullPointer = 9,
    InvalidUtf8 = 10,
    /// A Rust panic was caught at the boundary.
    Panic = 11,
    Internal = 12,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

pub(crate) fn set_last_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    let c = CString::new(text).expect("interior NULs were replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

impl From<&Error> for SmStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain { .. } => SmStatus::Domain,
            Error::Overflow { .. } => SmStatus::Overflow,
            Error::NotCoprime { .. } => SmStatus::NotCoprime,
            Error::UnknownTable(_) => SmStatus::UnknownTable,
            Error::UnknownFunction(_) => SmStatus::UnknownFunction,
            Error::Unsupported(_) => SmStatus::Unsupported,
            Error::NotRegistered { .. } => SmStatus::NotRegistered,
            Error::IterationCap { .. } => SmStatus::IterationCap,
            Error::TableFormat { .. } | Error::Checkpoint(_) => SmStatus::Internal,
        }
    }
}

/// Failure inside an FFI body: a status plus its message.
pub(crate) struct Failure(pub SmStatus, pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SmStatus::from(&e), e.to_string())
    }
}

pub(crate) fn null_pointer(what: &str) -> Failure {
    Failure(SmStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `body`, recording any failure or panic as the thread's last error.
pub(crate) fn guard<F>(body: F) -> SmStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    // Bodies only touch caller-owned memory through raw pointers and leave
    // no shared Rust state half-updated, so unwinding out of them is benign.
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            clear_last_error();
            SmStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(format!("panic: {msg}"));
            SmStatus::Panic
        }
    }
}

/// Message describing the most recent failure on the calling thread, or
/// NULL after a successful call. The pointer stays valid until the next
/// call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}
