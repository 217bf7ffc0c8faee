//! Functional iterations: repeat a map until the orbit becomes constant
//! (first kind), climbs to at least b (second kind) or falls to at most b
//! (third kind).
//!
//! Only the instances with known contracts are registered: d for the first
//! kind (fixed points 1 and 2), Σ for the second, gd for the third.

use crate::arith::{greatest_proper_divisor, num_divisors, sum_divisors};
use crate::error::{Error, Result};
use crate::function::FunctionId;

/// Step cap guarding against maps that break their monotonicity contract.
pub const DEFAULT_ITERATION_CAP: u64 = 1_000_000;

/// Full orbit of an iteration. `orbit[0]` is the start, `orbit[i + 1]` is
/// the map applied to `orbit[i]`, and `count == orbit.len() - 1`.
///
/// The stopping rule is tested on the iterates `orbit[1..]` only: the last
/// one satisfies it and no earlier iterate does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    pub function: FunctionId,
    pub start: u64,
    pub threshold: Option<u64>,
    pub orbit: Vec<u64>,
    pub count: u64,
}

impl IterationTrace {
    pub fn last(&self) -> u64 {
        *self.orbit.last().expect("orbit always holds the start")
    }
}

fn first_kind_fixed_points(f: FunctionId) -> Option<&'static [u64]> {
    match f {
        FunctionId::NumDivisors => Some(&[1, 2]),
        _ => None,
    }
}

fn run(
    function: FunctionId,
    start: u64,
    threshold: Option<u64>,
    cap: u64,
    apply: impl Fn(u64) -> Result<u64>,
    done: impl Fn(u64) -> bool,
) -> Result<IterationTrace> {
    let mut orbit = vec![start];
    let mut x = start;
    loop {
        if orbit.len() as u64 > cap {
            return Err(Error::IterationCap {
                function: function.name(),
                start,
                cap,
            });
        }
        x = apply(x)?;
        orbit.push(x);
        if done(x) {
            break;
        }
    }
    let count = orbit.len() as u64 - 1;
    Ok(IterationTrace {
        function,
        start,
        threshold,
        orbit,
        count,
    })
}

/// Smallest k ≥ 1 such that f^k(x) is a fixed point of f. Starting at a
/// fixed point gives count 1.
pub fn iterate_first_kind(f: FunctionId, x: u64) -> Result<IterationTrace> {
    iterate_first_kind_with_cap(f, x, DEFAULT_ITERATION_CAP)
}

pub fn iterate_first_kind_with_cap(f: FunctionId, x: u64, cap: u64) -> Result<IterationTrace> {
    let fixed = first_kind_fixed_points(f).ok_or(Error::NotRegistered {
        function: f.name(),
        kind: "first-kind",
    })?;
    if x == 0 {
        return Err(Error::domain("iterate_first_kind", "x must be at least 1"));
    }
    run(f, x, None, cap, num_divisors, |v| fixed.contains(&v))
}

/// Smallest k ≥ 1 with g^k(x) ≥ b.
pub fn iterate_second_kind(g: FunctionId, x: u64, b: u64) -> Result<IterationTrace> {
    iterate_second_kind_with_cap(g, x, b, DEFAULT_ITERATION_CAP)
}

pub fn iterate_second_kind_with_cap(
    g: FunctionId,
    x: u64,
    b: u64,
    cap: u64,
) -> Result<IterationTrace> {
    if g != FunctionId::SumDivisors {
        return Err(Error::NotRegistered {
            function: g.name(),
            kind: "second-kind",
        });
    }
    if x < 2 {
        return Err(Error::domain("iterate_second_kind", "sigma requires x > 1"));
    }
    if b <= x {
        return Err(Error::domain(
            "iterate_second_kind",
            "threshold b must exceed x",
        ));
    }
    run(g, x, Some(b), cap, sum_divisors, |v| v >= b)
}

/// Smallest k ≥ 1 with h^k(x) ≤ b.
pub fn iterate_third_kind(h: FunctionId, x: u64, b: u64) -> Result<IterationTrace> {
    iterate_third_kind_with_cap(h, x, b, DEFAULT_ITERATION_CAP)
}

pub fn iterate_third_kind_with_cap(
    h: FunctionId,
    x: u64,
    b: u64,
    cap: u64,
) -> Result<IterationTrace> {
    if h != FunctionId::GreatestProperDivisor {
        return Err(Error::NotRegistered {
            function: h.name(),
            kind: "third-kind",
        });
    }
    if x < 2 {
        return Err(Error::domain("iterate_third_kind", "gd requires x > 1"));
    }
    if b >= x {
        return Err(Error::domain(
            "iterate_third_kind",
            "threshold b must be below x",
        ));
    }
    if b == 0 {
        // gd bottoms out at 1, so b = 0 is never reached.
        return Err(Error::domain(
            "iterate_third_kind",
            "gd never falls below 1",
        ));
    }
    run(h, x, Some(b), cap, greatest_proper_divisor, |v| v <= b)
}
