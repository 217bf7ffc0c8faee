//! Sieve of Eratosthenes, kept independent of the primality test in
//! `arith` so it can serve as an oracle for prime counts.

use crate::error::{Error, Result};

/// Largest argument accepted by [`sieve_prime_count`].
pub const SIEVE_CEILING: u64 = 100_000_000;

const SEGMENT: usize = 1 << 16;

/// Number of primes ≤ x, by a segmented odd-only sieve.
pub fn sieve_prime_count(x: u64) -> Result<u64> {
    if x > SIEVE_CEILING {
        return Err(Error::domain(
            "sieve_prime_count",
            format!("x exceeds the sieve ceiling {SIEVE_CEILING}"),
        ));
    }
    if x < 2 {
        return Ok(0);
    }
    let base = base_primes(isqrt(x) as usize);
    // Count 2 separately; the segments hold odd numbers only.
    let mut count = 1u64;
    let mut seg = vec![true; SEGMENT];
    let mut lo = 3u64;
    while lo <= x {
        // Odd numbers lo, lo + 2, ..., up to SEGMENT of them.
        let len = (((x - lo) / 2 + 1) as usize).min(SEGMENT);
        let hi = lo + 2 * (len as u64 - 1);
        seg[..len].fill(true);
        for &p in base.iter().skip(1) {
            let p = p as u64;
            if p * p > hi {
                break;
            }
            let mut start = (p * p).max(lo.div_ceil(p) * p);
            if start.is_multiple_of(2) {
                start += p;
            }
            let mut j = start;
            while j <= hi {
                seg[((j - lo) / 2) as usize] = false;
                j += 2 * p;
            }
        }
        count += seg[..len].iter().filter(|&&b| b).count() as u64;
        lo = hi + 2;
    }
    Ok(count)
}

/// `counts[x]` = number of primes ≤ x, for every x ≤ limit.
pub fn prime_count_table(limit: u64) -> Result<Vec<u64>> {
    if limit > SIEVE_CEILING {
        return Err(Error::domain(
            "prime_count_table",
            format!("limit exceeds the sieve ceiling {SIEVE_CEILING}"),
        ));
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut counts = Vec::with_capacity(n + 1);
    let mut running = 0u64;
    for i in 0..=n {
        if i >= 2 && !composite[i] {
            running += 1;
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        counts.push(running);
    }
    Ok(counts)
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

fn base_primes(limit: usize) -> Vec<usize> {
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}
