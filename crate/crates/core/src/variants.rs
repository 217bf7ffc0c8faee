//! Minimal-witness variants of S: double factorials, left factorials,
//! factorial sums, k-th power ceilings, triangular numbers and primorials.
//!
//! Searches that may not terminate return a [`SearchOutcome`] instead of a
//! bare integer so that "not found yet" and "cannot exist" stay distinct.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, mul_mod};
use crate::error::{Error, Result};

/// Default candidate bound for [`sk`] and [`sw`].
pub const DEFAULT_SEARCH_BOUND: u64 = 100_000;
/// Default largest prime tried by [`sntp`].
pub const DEFAULT_PRIME_BOUND: u64 = 997;

/// Machine-checkable reasons for a proof of nonexistence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoneReason {
    /// A running residue mod p is constant from m = p onwards and is nonzero.
    StableNonzeroResidue,
    /// 4 | n, while p# is squarefree and p# ± 1 is odd.
    FourDividesNPrimorialSquarefree,
}

impl NoneReason {
    pub fn tag(self) -> &'static str {
        match self {
            NoneReason::StableNonzeroResidue => "stable-nonzero-residue",
            NoneReason::FourDividesNPrimorialSquarefree => "four-divides-n-primorial-squarefree",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "stable-nonzero-residue" => Some(NoneReason::StableNonzeroResidue),
            "four-divides-n-primorial-squarefree" => {
                Some(NoneReason::FourDividesNPrimorialSquarefree)
            }
            _ => None,
        }
    }
}

impl fmt::Display for NoneReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Result of a bounded minimal-witness search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchOutcome {
    /// The least witness.
    Found(u64),
    /// Every candidate up to the bound was checked and failed.
    NotFoundWithin(u64),
    ProvablyNone(NoneReason),
}

impl SearchOutcome {
    pub fn found(self) -> Option<u64> {
        match self {
            SearchOutcome::Found(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Found(v) => write!(f, "{v}"),
            SearchOutcome::NotFoundWithin(b) => write!(f, "not-found-within {b}"),
            SearchOutcome::ProvablyNone(r) => write!(f, "provably-none: {r}"),
        }
    }
}

fn require_positive(op: &'static str, name: &str, v: u64) -> Result<()> {
    if v == 0 {
        Err(Error::domain(op, format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn require_prime(op: &'static str, p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(op, format!("{p} is not prime")))
    }
}

/// m!! mod n.
pub fn double_factorial_mod(m: u64, n: u64) -> Result<u64> {
    require_positive("double_factorial_mod", "m", m)?;
    require_positive("double_factorial_mod", "n", n)?;
    let mut acc = 1 % n;
    let mut i = m;
    while i >= 1 && acc != 0 {
        acc = mul_mod(acc, i % n, n);
        if i < 2 {
            break;
        }
        i -= 2;
    }
    Ok(acc)
}

/// Sdf(n): the least m with n | m!!.
///
/// Odd and even double factorials are tracked as two running products and
/// the candidates are visited in increasing order. m = n always works, so
/// the loop is bounded by n.
pub fn sdf(n: u64) -> Result<u64> {
    require_positive("sdf", "n", n)?;
    if n == 1 {
        return Ok(1);
    }
    let mut odd = 1u64;
    let mut even = 1u64;
    let mut m = 1u64;
    loop {
        let acc = if m % 2 == 1 { &mut odd } else { &mut even };
        *acc = mul_mod(*acc, m % n, n);
        if *acc == 0 {
            return Ok(m);
        }
        m += 1;
    }
}

/// !m mod p where !m = 0! + 1! + ... + (m-1)!.
pub fn left_factorial_mod(m: u64, p: u64) -> Result<u64> {
    require_positive("left_factorial_mod", "m", m)?;
    require_prime("left_factorial_mod", p)?;
    let mut fact = 1 % p;
    let mut sum = 0u64;
    for i in 0..m {
        if i > 0 {
            fact = mul_mod(fact, i % p, p);
            if fact == 0 {
                break;
            }
        }
        sum = (sum + fact) % p;
    }
    Ok(sum)
}

/// W(m) mod p where W(m) = 1! + 2! + ... + m!.
pub fn factorial_sum_mod(m: u64, p: u64) -> Result<u64> {
    require_positive("factorial_sum_mod", "m", m)?;
    require_prime("factorial_sum_mod", p)?;
    let mut fact = 1 % p;
    let mut sum = 0u64;
    for i in 1..=m {
        fact = mul_mod(fact, i % p, p);
        if fact == 0 {
            break;
        }
        sum = (sum + fact) % p;
    }
    Ok(sum)
}

/// Shared search for SK and SW. `terms` yields successive partial-sum
/// residues for m = 1, 2, ...; every factorial term past m = p vanishes mod
/// p, so the residue at m = p is final.
fn stable_residue_search(
    p: u64,
    bound: u64,
    mut residues: impl Iterator<Item = u64>,
) -> SearchOutcome {
    let mut m = 0;
    while m < bound {
        m += 1;
        let r = residues.next().expect("residue stream is unbounded");
        if r == 0 {
            return SearchOutcome::Found(m);
        }
        if m >= p {
            return SearchOutcome::ProvablyNone(NoneReason::StableNonzeroResidue);
        }
    }
    SearchOutcome::NotFoundWithin(bound)
}

/// SK(p): the least m with p | !m.
pub fn sk(p: u64, bound: u64) -> Result<SearchOutcome> {
    require_prime("sk", p)?;
    if bound < 2 {
        return Err(Error::domain("sk", "bound must be at least 2"));
    }
    // !m for m = 1, 2, ...: running sum of i! for i = 0..m.
    let mut fact = 1u64;
    let mut sum = 0u64;
    let mut i = 0u64;
    let residues = std::iter::from_fn(|| {
        if i > 0 {
            fact = mul_mod(fact, i % p, p);
        }
        sum = (sum + fact) % p;
        i += 1;
        Some(sum)
    });
    Ok(stable_residue_search(p, bound, residues))
}

/// SW(p): the least m with p | W(m).
pub fn sw(p: u64, bound: u64) -> Result<SearchOutcome> {
    require_prime("sw", p)?;
    if bound < 1 {
        return Err(Error::domain("sw", "bound must be at least 1"));
    }
    let mut fact = 1u64;
    let mut sum = 0u64;
    let mut i = 0u64;
    let residues = std::iter::from_fn(|| {
        i += 1;
        fact = mul_mod(fact, i % p, p);
        sum = (sum + fact) % p;
        Some(sum)
    });
    Ok(stable_residue_search(p, bound, residues))
}

/// S_k(n): the least x with n | x^k, i.e. the product of p^ceil(s/k).
pub fn ceil_s(n: u64, k: u32) -> Result<u64> {
    require_positive("ceil_s", "n", n)?;
    if k == 0 {
        return Err(Error::domain("ceil_s", "k must be at least 1"));
    }
    // Each factor divides n, so the product cannot overflow.
    Ok(factorize(n)?
        .iter()
        .map(|(p, e)| p.pow(e.div_ceil(k)))
        .product())
}

/// Z(n): the least m with n | 1 + 2 + ... + m. Always at most 2n - 1.
///
/// n | m(m+1)/2 exactly when 2n = a·b with gcd(a, b) = 1, a | m and
/// b | m + 1. Each split of the prime powers of 2n gives one residue class
/// mod 2n by the Chinese remainder theorem; the answer is the least
/// positive representative over all splits.
pub fn z(n: u64) -> Result<u64> {
    require_positive("z", "n", n)?;
    let mut powers: Vec<u128> = Vec::new();
    let mut twos = 1u32;
    for (p, e) in factorize(n)?.iter() {
        if p == 2 {
            twos += e;
        } else {
            powers.push((p as u128).pow(e));
        }
    }
    powers.push(1u128 << twos);
    let modulus = 2 * n as u128;
    let mut best = modulus;
    for mask in 0u32..(1 << powers.len()) {
        let a: u128 = powers
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, q)| q)
            .product();
        let b = modulus / a;
        // m = a·t with a·t ≡ -1 (mod b).
        let m = if b == 1 {
            modulus
        } else {
            let t = (b - inverse_mod(a % b, b)) % b;
            a * t
        };
        let m = if m == 0 { modulus } else { m };
        best = best.min(m);
    }
    Ok(best as u64)
}

/// Z(n) by walking m = 1, 2, ... with T(m) mod n.
pub fn z_search(n: u64) -> Result<u64> {
    require_positive("z_search", "n", n)?;
    let mut t = 0u64;
    let mut m = 0u64;
    loop {
        m += 1;
        t = ((t as u128 + m as u128) % n as u128) as u64;
        if t == 0 {
            return Ok(m);
        }
    }
}

/// Inverse of a modulo m for coprime a, m with m > 1.
fn inverse_mod(a: u128, m: u128) -> u128 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u128
}

/// SNTP(n): the least prime p with n dividing p# - 1, p# or p# + 1.
///
/// Primorials are carried mod n, so `prime_bound` is not limited by the
/// size of p#.
pub fn sntp(n: u64, prime_bound: u64) -> Result<SearchOutcome> {
    require_positive("sntp", "n", n)?;
    if prime_bound < 2 {
        return Err(Error::domain("sntp", "prime bound must be at least 2"));
    }
    if n.is_multiple_of(4) {
        return Ok(SearchOutcome::ProvablyNone(
            NoneReason::FourDividesNPrimorialSquarefree,
        ));
    }
    let mut primorial = 1 % n;
    for p in 2..=prime_bound {
        if !is_prime(p) {
            continue;
        }
        primorial = mul_mod(primorial, p % n, n);
        if primorial == 0 || primorial == 1 % n || primorial == n - 1 {
            return Ok(SearchOutcome::Found(p));
        }
    }
    Ok(SearchOutcome::NotFoundWithin(prime_bound))
}
