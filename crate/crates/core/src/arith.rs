//! Exact unsigned 64-bit primitives: primality, factorization, divisor
//! functions, factorial valuations, primorials and integer roots.
//!
//! Every operation either returns the exact answer or reports
//! [`Error::Overflow`]; nothing wraps silently.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Trial division covers primes below this bound before switching to
/// Pollard's rho on the remaining cofactor.
const TRIAL_LIMIT: u64 = 1 << 12;

/// Miller-Rabin witnesses that are deterministic for every n < 2^64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i as u64);
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Deterministic primality over the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Canonical prime-power decomposition. Primes are strictly increasing and
/// the factorization of 1 is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    /// Multiplies the prime powers back together.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Canonical factorization of `n ≥ 1`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::domain("factorize", "n must be at least 1"));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rest > 1 {
        if rest < TRIAL_LIMIT * TRIAL_LIMIT || is_prime(rest) {
            factors.push((rest, 1));
        } else {
            let mut big = Vec::new();
            split_cofactor(rest, &mut big);
            big.sort_unstable();
            for p in big {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }
    Ok(Factorization { factors })
}

/// Pushes the prime factors (with multiplicity) of a cofactor that has no
/// prime factor below `TRIAL_LIMIT`.
fn split_cofactor(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_cofactor(d, out);
    split_cofactor(n / d, out);
}

/// Brent's variant of Pollard's rho. `n` must be an odd composite.
fn pollard_brent(n: u64) -> u64 {
    let root = integer_kth_root(n, 2);
    if root * root == n {
        return root;
    }
    // Fixed constants keep the factorization deterministic.
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho always splits an odd composite for some constant")
}

/// Exponent of the prime `p` in `m!`, i.e. the sum of `floor(m / p^j)`.
pub fn legendre_valuation(p: u64, m: u64) -> u64 {
    debug_assert!(p >= 2);
    let mut total = 0;
    let mut q = m;
    while q >= p {
        q /= p;
        total += q;
    }
    total
}

/// Exponent of `p` in `n` (n ≥ 1).
pub(crate) fn valuation(p: u64, mut n: u64) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// d(n): number of positive divisors.
pub fn num_divisors(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("num_divisors", "n must be at least 1"));
    }
    Ok(factorize(n)?.iter().map(|(_, e)| e as u64 + 1).product())
}

/// Σ(n): sum of all positive divisors, 1 and n included.
pub fn sum_divisors(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("sum_divisors", "n must be at least 1"));
    }
    let overflow = || Error::overflow("sum_divisors");
    let mut total: u64 = 1;
    for (p, e) in factorize(n)?.iter() {
        // 1 + p + ... + p^e, accumulated in u128 so the last power cannot wrap.
        let mut term: u128 = 1;
        let mut power: u128 = 1;
        for _ in 0..e {
            power *= p as u128;
            term += power;
        }
        let term = u64::try_from(term).map_err(|_| overflow())?;
        total = total.checked_mul(term).ok_or_else(overflow)?;
    }
    Ok(total)
}

/// gd(n): the greatest divisor of `n` below `n`.
pub fn greatest_proper_divisor(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::domain(
            "greatest_proper_divisor",
            "n must be at least 2",
        ));
    }
    Ok(n / smallest_prime_factor(n))
}

pub fn smallest_prime_factor(n: u64) -> u64 {
    debug_assert!(n >= 2);
    for &p in small_primes() {
        if p * p > n {
            return n;
        }
        if n.is_multiple_of(p) {
            return p;
        }
    }
    factorize(n)
        .ok()
        .and_then(|f| f.smallest_prime())
        .unwrap_or(n)
}

/// p#: product of all primes up to and including the prime `p`.
pub fn primorial(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::domain("primorial", format!("{p} is not prime")));
    }
    let mut acc: u64 = 1;
    let mut q = 2;
    while q <= p {
        if is_prime(q) {
            acc = acc.checked_mul(q).ok_or(Error::overflow("primorial"))?;
        }
        q += 1;
    }
    Ok(acc)
}

/// T(m) = 1 + 2 + ... + m.
pub fn triangular(m: u64) -> Result<u64> {
    let wide = m as u128 * (m as u128 + 1) / 2;
    u64::try_from(wide).map_err(|_| Error::overflow("triangular"))
}

/// Largest r with r^k ≤ n.
pub fn integer_kth_root(n: u64, k: u32) -> u64 {
    assert!(k >= 1, "root order must be positive");
    if k == 1 || n < 2 {
        return n;
    }
    if k >= 64 {
        return 1;
    }
    // Float estimate, then exact correction in both directions.
    let mut r = (n as f64).powf(1.0 / k as f64) as u64;
    while r > 0 && pow_exceeds(r, k, n) {
        r -= 1;
    }
    while !pow_exceeds(r + 1, k, n) {
        r += 1;
    }
    r
}

/// Whether `base^k > limit`, without overflow.
fn pow_exceeds(base: u64, k: u32, limit: u64) -> bool {
    match base.checked_pow(k) {
        Some(v) => v > limit,
        None => true,
    }
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.iter().map(|(p, _)| p).product())
}

/// Smallest prime ≥ n.
pub fn next_prime(n: u64) -> Result<u64> {
    if n <= 2 {
        return Ok(2);
    }
    let mut c = n | 1;
    loop {
        if is_prime(c) {
            return Ok(c);
        }
        c = c.checked_add(2).ok_or(Error::overflow("next_prime"))?;
    }
}

/// Largest prime ≤ n, if any.
pub fn prev_prime(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    if n == 2 {
        return Some(2);
    }
    let mut c = if n.is_multiple_of(2) { n - 1 } else { n };
    while c >= 3 {
        if is_prime(c) {
            return Some(c);
        }
        c -= 2;
    }
    Some(2)
}

/// π(x) by the Lucy-Hedgehog recursion, O(x^{3/4}).
pub fn prime_pi(x: u64) -> u64 {
    if x < 2 {
        return 0;
    }
    let r = integer_kth_root(x, 2);
    // Distinct values of floor(x / i).
    let mut vals: Vec<u64> = (1..=r).map(|i| x / i).collect();
    let last = *vals.last().unwrap();
    vals.extend((1..last).rev());
    let mut count: Vec<u64> = vals.iter().map(|&v| v - 1).collect();
    let index = |v: u64| -> usize {
        if v < last {
            vals.len() - v as usize
        } else {
            (x / v) as usize - 1
        }
    };
    for p in 2..=r {
        let ip = index(p - 1);
        if count[index(p)] == count[ip] {
            continue;
        }
        let below = count[ip];
        let p2 = p * p;
        for i in 0..vals.len() {
            let v = vals[i];
            if v < p2 {
                break;
            }
            count[i] -= count[index(v / p)] - below;
        }
    }
    count[0]
}

/// The `k`-th prime counting from 0 (so `nth_prime(0) == 2`).
pub fn nth_prime(k: u64) -> Result<u64> {
    let mut p = 2u64;
    for _ in 0..k {
        p = next_prime(p.checked_add(1).ok_or(Error::overflow("nth_prime"))?)?;
    }
    Ok(p)
}
