//! Inferior/superior parts with respect to the primes, squares and cubes,
//! and the complementary functions that complete x into a square, cube,
//! m-th power or prime.

use crate::arith::{
    factorize, integer_kth_root, is_prime, next_prime, nth_prime, prev_prime, prime_pi,
};
use crate::error::{Error, Result};

/// A strictly increasing integer sequence indexed from 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonotoneSequence {
    /// 2, 3, 5, 7, ...
    Primes,
    /// 0, 1, 4, 9, ...
    Squares,
    /// 0, 1, 8, 27, ...
    Cubes,
}

impl MonotoneSequence {
    /// The `k`-th element.
    pub fn value(self, k: u64) -> Result<u64> {
        match self {
            MonotoneSequence::Primes => nth_prime(k),
            MonotoneSequence::Squares => checked_power(k, 2),
            MonotoneSequence::Cubes => checked_power(k, 3),
        }
    }

    pub fn least(self) -> u64 {
        match self {
            MonotoneSequence::Primes => 2,
            MonotoneSequence::Squares | MonotoneSequence::Cubes => 0,
        }
    }

    fn order(self) -> u32 {
        match self {
            MonotoneSequence::Primes => 0,
            MonotoneSequence::Squares => 2,
            MonotoneSequence::Cubes => 3,
        }
    }

    /// Position of an element known to belong to the sequence.
    fn index_of(self, element: u64) -> u64 {
        match self {
            MonotoneSequence::Primes => prime_pi(element) - 1,
            _ => integer_kth_root(element, self.order()),
        }
    }

    /// Largest element ≤ x, or None below the least element.
    fn floor_element(self, x: u64) -> Option<u64> {
        match self {
            MonotoneSequence::Primes => prev_prime(x),
            _ => Some(integer_kth_root(x, self.order()).pow(self.order())),
        }
    }

    /// Smallest element ≥ x.
    fn ceil_element(self, x: u64) -> Result<u64> {
        match self {
            MonotoneSequence::Primes => next_prime(x),
            _ => {
                let k = self.order();
                let r = integer_kth_root(x, k);
                if r.pow(k) == x {
                    Ok(x)
                } else {
                    checked_power(r + 1, k)
                }
            }
        }
    }
}

fn checked_power(base: u64, k: u32) -> Result<u64> {
    base.checked_pow(k)
        .ok_or(Error::overflow("sequence element"))
}

/// A located sequence element: `value == seq.value(index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part {
    pub index: u64,
    pub value: u64,
}

/// The unique k with f(k) ≤ x < f(k+1), together with f(k).
pub fn inferior_part(seq: MonotoneSequence, x: u64) -> Result<Part> {
    let value = seq.floor_element(x).ok_or_else(|| {
        Error::domain(
            "inferior_part",
            format!("{x} is below the least element {}", seq.least()),
        )
    })?;
    Ok(Part {
        index: seq.index_of(value),
        value,
    })
}

/// The smallest element ≥ x and its position.
///
/// The position is that of the returned element itself; the k of the
/// f(k) < x ≤ f(k+1) formulation is one less (and undefined when x does
/// not exceed the least element).
pub fn superior_part(seq: MonotoneSequence, x: u64) -> Result<Part> {
    let value = seq.ceil_element(x)?;
    Ok(Part {
        index: seq.index_of(value),
        value,
    })
}

/// Largest prime ≤ n; rejects n < 2.
pub fn inferior_prime_part(n: u64) -> Result<u64> {
    prev_prime(n).ok_or_else(|| Error::domain("inferior_prime_part", "n must be at least 2"))
}

/// Smallest prime ≥ n.
pub fn superior_prime_part(n: u64) -> Result<u64> {
    next_prime(n)
}

pub fn inferior_square_part(n: u64) -> u64 {
    integer_kth_root(n, 2).pow(2)
}

pub fn superior_square_part(n: u64) -> Result<u64> {
    MonotoneSequence::Squares.ceil_element(n)
}

pub fn inferior_cubic_part(n: u64) -> u64 {
    integer_kth_root(n, 3).pow(3)
}

pub fn superior_cubic_part(n: u64) -> Result<u64> {
    MonotoneSequence::Cubes.ceil_element(n)
}

/// Internal law combining x with the complement k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Multiply,
    Add,
}

/// Set the combination x∼k must land in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Squares,
    Cubes,
    Powers(u32),
    Primes,
}

/// Smallest k (k ≥ 1 under multiplication, k ≥ 0 under addition) such that
/// x∼k lies in the target set.
pub fn complementary(x: u64, law: Law, target: Target) -> Result<u64> {
    match (law, target) {
        (Law::Multiply, Target::Squares) => square_complementary(x),
        (Law::Multiply, Target::Cubes) => cubic_complementary(x),
        (Law::Multiply, Target::Powers(m)) => m_power_complementary(x, m),
        (Law::Add, Target::Primes) => prime_complementary(x),
        (law, target) => Err(Error::Unsupported(format!(
            "complement under {law:?} into {target:?}"
        ))),
    }
}

/// Smallest k with x·k a perfect square: the squarefree part of x.
pub fn square_complementary(x: u64) -> Result<u64> {
    m_power_complementary(x, 2)
}

pub fn cubic_complementary(x: u64) -> Result<u64> {
    m_power_complementary(x, 3)
}

/// Smallest k with x·k a perfect m-th power: the product of p^((-s) mod m).
pub fn m_power_complementary(x: u64, m: u32) -> Result<u64> {
    if x == 0 {
        return Err(Error::domain(
            "m_power_complementary",
            "x must be at least 1",
        ));
    }
    if m < 2 {
        return Err(Error::domain(
            "m_power_complementary",
            "m must be at least 2",
        ));
    }
    let mut k: u64 = 1;
    for (p, s) in factorize(x)?.iter() {
        let missing = (m - s % m) % m;
        let term = p
            .checked_pow(missing)
            .ok_or(Error::overflow("m_power_complementary"))?;
        k = k
            .checked_mul(term)
            .ok_or(Error::overflow("m_power_complementary"))?;
    }
    Ok(k)
}

/// Smallest k ≥ 0 with x + k prime.
pub fn prime_complementary(x: u64) -> Result<u64> {
    if x == 0 {
        return Err(Error::domain("prime_complementary", "x must be at least 1"));
    }
    if is_prime(x) {
        return Ok(0);
    }
    Ok(next_prime(x)? - x)
}
