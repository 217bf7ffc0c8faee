//! Command-line driver. `run` takes its output streams as arguments so the
//! whole surface can be exercised in-process.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 a search exhausted its
//! bound, 3 a verification found mismatches or undecided entries.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::next_prime;
use crate::classical::prime_count_via_s;
use crate::error::{Error, Result};
use crate::function::{EvalParams, FunctionId, Value};
use crate::variants::{SearchOutcome, DEFAULT_PRIME_BOUND, DEFAULT_SEARCH_BOUND};
use crate::verification::conjecture::{scan, Checkpoint, Conjecture};
use crate::verification::ledger::{value_json, LEDGER_CSV_HEADER};
use crate::verification::{sieve_prime_count, table_ids, verify_all, verify_table, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NOT_FOUND: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

#[derive(Debug, Parser)]
#[command(
    name = "smarandache",
    version,
    about = "Evaluate Smarandache-type functions, audit value tables and scan conjectures"
)]
pub struct Cli {
    /// Output format for seq and verify.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Candidate bound for the SK and SW searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_BOUND)]
    pub bound: u64,
    /// Largest prime tried by SNTP.
    #[arg(long = "prime-bound", global = true, default_value_t = DEFAULT_PRIME_BOUND)]
    pub prime_bound: u64,
    /// Scan limit for conjecture (defaults: tutescu 1000000, radu 100000).
    #[arg(long, global = true)]
    pub limit: Option<u64>,
    /// Order k for Sk.
    #[arg(long, global = true)]
    pub k: Option<u32>,
    /// Power m for mpow-comp.
    #[arg(long, global = true)]
    pub m: Option<u32>,
    /// Threshold b for SI2-sigma and SI3-gd.
    #[arg(long, global = true)]
    pub threshold: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one argument.
    Eval { function: String, argument: u64 },
    /// Emit a function over an inclusive argument range.
    Seq {
        function: String,
        from: u64,
        to: u64,
    },
    /// Audit embedded tables against the definitions.
    Verify {
        table: Option<String>,
        #[arg(long, conflicts_with = "table")]
        all: bool,
        /// List the embedded table ids.
        #[arg(long, conflicts_with_all = ["table", "all"])]
        list: bool,
    },
    /// Scan for solutions of `tutescu` (S(n) = S(n+1)) or `radu`
    /// (S(n) + S(n+1) = S(n+2)).
    Conjecture {
        name: String,
        /// Resume from and save progress to this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Compare the S-based prime count with a sieve.
    Pi { x: u64 },
}

impl Cli {
    fn params(&self) -> EvalParams {
        EvalParams {
            search_bound: self.bound,
            prime_bound: self.prime_bound,
            threshold: self.threshold,
        }
    }

    fn function(&self, name: &str) -> Result<FunctionId> {
        FunctionId::parse(name, self.k, self.m)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

enum CliError {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = std::result::Result<i32, CliError>;

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Eval { function, argument } => cmd_eval(cli, function, *argument, out),
        Command::Seq { function, from, to } => cmd_seq(cli, function, *from, *to, out),
        Command::Verify { table, all, list } => {
            if *list {
                for id in table_ids() {
                    writeln!(out, "{id}")?;
                }
                return Ok(EXIT_OK);
            }
            match (table, all) {
                (Some(id), false) => cmd_verify(cli, Some(id), out, err),
                (None, true) => cmd_verify(cli, None, out, err),
                _ => Err(Error::domain("verify", "give a table id or --all").into()),
            }
        }
        Command::Conjecture { name, checkpoint } => {
            cmd_conjecture(cli, name, checkpoint.as_deref(), out, err)
        }
        Command::Pi { x } => cmd_pi(*x, out),
    }
}

fn cmd_eval(cli: &Cli, name: &str, x: u64, out: &mut dyn Write) -> CliResult {
    let f = cli.function(name)?;
    let v = f.eval(x, &cli.params())?;
    match cli.format {
        Format::Csv => writeln!(out, "{v}")?,
        Format::Jsonl => writeln!(out, "{}", record_json(x, v))?,
    }
    Ok(match v {
        Value::Outcome(SearchOutcome::NotFoundWithin(_)) => EXIT_NOT_FOUND,
        _ => EXIT_OK,
    })
}

fn record_json(x: u64, v: Value) -> serde_json::Value {
    let mut obj = value_json(v);
    obj["argument"] = json!(x);
    obj
}

fn cmd_seq(cli: &Cli, name: &str, from: u64, to: u64, out: &mut dyn Write) -> CliResult {
    let f = cli.function(name)?;
    if from > to {
        return Err(Error::domain("seq", "from must not exceed to").into());
    }
    let params = cli.params();
    if cli.format == Format::Csv {
        writeln!(out, "argument,value")?;
    }
    let mut x = from;
    loop {
        if f.prime_arguments_only() {
            // SK and SW are defined on primes only; walk the primes in range.
            x = next_prime(x)?;
            if x > to {
                break;
            }
        }
        let v = f.eval(x, &params)?;
        match cli.format {
            Format::Csv => writeln!(out, "{x},{v}")?,
            Format::Jsonl => writeln!(out, "{}", record_json(x, v))?,
        }
        if x >= to {
            break;
        }
        x += 1;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli, id: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let params = cli.params();
    let ledger = match id {
        Some(id) => verify_table(id, &params)?,
        None => verify_all(&params)?,
    };
    if cli.format == Format::Csv {
        writeln!(out, "{LEDGER_CSV_HEADER}")?;
    }
    let mut tally = [0usize; 3];
    for entry in &ledger {
        match cli.format {
            Format::Csv => writeln!(out, "{}", entry.to_csv())?,
            Format::Jsonl => writeln!(out, "{}", entry.to_json())?,
        }
        tally[entry.status as usize] += 1;
    }
    writeln!(
        err,
        "confirmed: {}, mismatch: {}, undecided: {}",
        tally[Status::Confirmed as usize],
        tally[Status::Mismatch as usize],
        tally[Status::Undecided as usize]
    )?;
    Ok(if tally[Status::Confirmed as usize] == ledger.len() {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    })
}

fn cmd_conjecture(
    cli: &Cli,
    name: &str,
    checkpoint: Option<&std::path::Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let conjecture: Conjecture = name.parse()?;
    let limit = cli.limit.unwrap_or(conjecture.default_limit());
    let resume = match checkpoint {
        Some(path) if path.exists() => Some(Checkpoint::load(path)?),
        _ => None,
    };
    let started = Instant::now();
    if let Some(cp) = &resume {
        for n in &cp.solutions {
            writeln!(out, "{n}")?;
        }
    }
    let mut io_error = None;
    let solutions = scan(
        conjecture,
        limit,
        resume,
        |n| {
            if let Err(e) = writeln!(out, "{n}").and_then(|()| out.flush()) {
                io_error.get_or_insert(e);
            }
        },
        |cp| match checkpoint {
            Some(path) => cp.save(path),
            None => Ok(()),
        },
    )?;
    if let Some(e) = io_error {
        return Err(e.into());
    }
    writeln!(
        out,
        "{conjecture}: {} solutions up to {limit}",
        solutions.len()
    )?;
    writeln!(err, "elapsed: {:.3}s", started.elapsed().as_secs_f64())?;
    Ok(EXIT_OK)
}

fn cmd_pi(x: u64, out: &mut dyn Write) -> CliResult {
    let via_s = prime_count_via_s(x)?;
    let sieve = sieve_prime_count(x)?;
    let agree = via_s == sieve;
    writeln!(
        out,
        "{via_s} {sieve} {}",
        if agree { "agree" } else { "disagree" }
    )?;
    Ok(if agree { EXIT_OK } else { EXIT_DISCREPANCY })
}
