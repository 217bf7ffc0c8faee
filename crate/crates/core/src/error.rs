use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Argument outside the domain of the named operation.
    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// An exact result does not fit in 64 bits.
    #[error("{op}: result overflows u64")]
    Overflow { op: &'static str },

    #[error("arguments {a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("unknown table `{0}`")]
    UnknownTable(String),

    #[error("unknown function `{0}`")]
    UnknownFunction(String),

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("{function} has no registered {kind} iteration instance")]
    NotRegistered {
        function: &'static str,
        kind: &'static str,
    },

    #[error("iteration of {function} from {start} did not stop within {cap} steps")]
    IterationCap {
        function: &'static str,
        start: u64,
        cap: u64,
    },

    #[error("table data, line {line}: {msg}")]
    TableFormat { line: usize, msg: String },

    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn overflow(op: &'static str) -> Self {
        Error::Overflow { op }
    }
}
