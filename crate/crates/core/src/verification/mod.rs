//! Embedded tables, the discrepancy ledger, the sieve oracle and the
//! conjecture scanners.

pub mod conjecture;
pub mod ledger;
pub mod sieve;
pub mod tables;

pub use conjecture::{radu_scan, scan, tutescu_scan, Checkpoint, Conjecture, CHECKPOINT_STRIDE};
pub use ledger::{classify, verify_all, verify_table, LedgerEntry, Status};
pub use sieve::{prime_count_table, sieve_prime_count, SIEVE_CEILING};
pub use tables::{table, table_ids, tables, Expected, Layout, PublishedTable, TableEntry};
