//! C ABI over the `smarandache` crate.
//!
//! Conventions:
//! - Fallible functions return [`SmStatus`] and write their result through
//!   an out-pointer; on failure the out-pointer is left untouched and
//!   [`sm_last_error_message`] describes the problem.
//! - Variable-length results are opaque handles released with the matching
//!   `*_free` function.
//! - Panics never cross the boundary; they surface as `SM_STATUS_PANIC`.
//! - Pointer arguments are checked for NULL; beyond that, the caller must
//!   pass valid pointers, as with any C API. The entry points are therefore
//!   plain `extern "C"` functions rather than `unsafe` ones.

#![allow(clippy::not_unsafe_ptr_arg_deref)]

use std::ffi::c_char;

mod error;
mod handles;
mod scalar;

pub use error::{sm_last_error_message, SmStatus};
pub use handles::*;
pub use scalar::*;

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
