//! Discrepancy ledger: every table entry re-derived from its definition.

use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Map, Value as Json};

use super::tables::{table, tables, Expected, PublishedTable};
use crate::error::Result;
use crate::function::{EvalParams, Value};
use crate::variants::SearchOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Confirmed,
    Mismatch,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::Mismatch => "mismatch",
            Status::Undecided => "undecided",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LedgerEntry {
    pub table: String,
    pub argument: u64,
    pub expected: Expected,
    pub computed: Value,
    pub status: Status,
}

/// Status of a computed value against its expected value. Only an unknown
/// expectation or an exhausted search leaves the entry undecided.
pub fn classify(expected: Expected, computed: Value) -> Status {
    match (expected, computed) {
        (Expected::Unknown, _) | (_, Value::Outcome(SearchOutcome::NotFoundWithin(_))) => {
            Status::Undecided
        }
        (Expected::Value(e), c) if c.as_int() == Some(e) => Status::Confirmed,
        _ => Status::Mismatch,
    }
}

/// Audits one table. Entries whose argument falls outside the function's
/// domain are errors: the embedded data never contains such rows.
pub fn verify_published_table(t: &PublishedTable, params: &EvalParams) -> Result<Vec<LedgerEntry>> {
    t.entries
        .par_iter()
        .map(|e| {
            let computed = t.function.eval(e.argument, params)?;
            Ok(LedgerEntry {
                table: t.id.clone(),
                argument: e.argument,
                expected: e.expected,
                computed,
                status: classify(e.expected, computed),
            })
        })
        .collect()
}

pub fn verify_table(id: &str, params: &EvalParams) -> Result<Vec<LedgerEntry>> {
    verify_published_table(table(id)?, params)
}

/// Every embedded table, in embedding order.
pub fn verify_all(params: &EvalParams) -> Result<Vec<LedgerEntry>> {
    let mut out = Vec::new();
    for t in tables() {
        out.extend(verify_published_table(t, params)?);
    }
    Ok(out)
}

pub const LEDGER_CSV_HEADER: &str = "table,argument,expected,computed,status";

impl LedgerEntry {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.table, self.argument, self.expected, self.computed, self.status
        )
    }

    pub fn to_json(&self) -> Json {
        let mut obj = Map::new();
        obj.insert("table".into(), json!(self.table));
        obj.insert("argument".into(), json!(self.argument));
        obj.insert(
            "expected".into(),
            match self.expected {
                Expected::Value(v) => json!(v),
                Expected::Unknown => json!("?"),
            },
        );
        obj.insert("computed".into(), value_json(self.computed));
        obj.insert("status".into(), json!(self.status.as_str()));
        Json::Object(obj)
    }
}

/// `{"value": v}` or `{"outcome": ..., "bound"|"reason": ...}`.
pub fn value_json(v: Value) -> Json {
    match v {
        Value::Int(n) | Value::Outcome(SearchOutcome::Found(n)) => json!({ "value": n }),
        Value::Outcome(SearchOutcome::NotFoundWithin(b)) => {
            json!({ "outcome": "not-found-within", "bound": b })
        }
        Value::Outcome(SearchOutcome::ProvablyNone(r)) => {
            json!({ "outcome": "provably-none", "reason": r.tag() })
        }
    }
}
