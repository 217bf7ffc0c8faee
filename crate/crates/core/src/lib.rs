//! Smarandache-type arithmetic functions over exact 64-bit integers.
//!
//! The crate covers the classical function S(n) and its relatives (double
//! factorial, left factorial and factorial-sum variants, k-th power ceilings,
//! the pseudo-Smarandache function, the near-to-primordial function),
//! inferior/superior parts, complementary functions and functional
//! iterations. Every fast path has a definition-literal oracle next to it,
//! and [`verification`] audits the published value tables against both.

pub mod arith;
pub mod classical;
pub mod cli;
pub mod error;
pub mod function;
pub mod iterations;
pub mod parts;
pub mod variants;
pub mod verification;

pub use arith::{factorize, is_prime, Factorization};
pub use classical::{s, s_oracle, SValue};
pub use error::{Error, Result};
pub use function::{EvalParams, FunctionId, Value};
pub use iterations::IterationTrace;
pub use variants::{NoneReason, SearchOutcome};
