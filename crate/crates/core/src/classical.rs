//! The Smarandache (Kempner) function S(n): the least m with n | m!.

use crate::arith::{factorize, gcd, is_prime, legendre_valuation, mul_mod, valuation};
use crate::error::{Error, Result};

/// A computed pair `(n, S(n))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SValue {
    pub n: u64,
    pub s: u64,
}

impl SValue {
    pub fn of(n: u64) -> Result<Self> {
        Ok(SValue { n, s: s(n)? })
    }
}

/// S(p^a): the least m whose factorial carries at least `a` factors of `p`.
///
/// v_p(m!) only grows at multiples of p, so the walk visits m = p, 2p, ...
/// and adds v_p(m) each time. The answer never exceeds p·a.
pub fn s_of_prime_power(p: u64, a: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::domain(
            "s_of_prime_power",
            format!("{p} is not prime"),
        ));
    }
    if a == 0 {
        return Err(Error::domain(
            "s_of_prime_power",
            "exponent must be at least 1",
        ));
    }
    p.checked_mul(a as u64)
        .ok_or(Error::overflow("s_of_prime_power"))?;
    let target = a as u64;
    let mut m = 0u64;
    let mut v = 0u64;
    while v < target {
        m += p;
        v += valuation(p, m) as u64;
    }
    debug_assert_eq!(legendre_valuation(p, m), v);
    Ok(m)
}

/// S(n) through the prime-power decomposition; S(1) = 1.
pub fn s(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("s", "n must be at least 1"));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut best = 0;
    for (p, e) in factorize(n)?.iter() {
        // S(p) = p, and the largest prime factor often dominates anyway.
        let term = if e == 1 { p } else { s_of_prime_power(p, e)? };
        best = best.max(term);
    }
    Ok(best)
}

/// Literal evaluation of the definition: walk m = 1, 2, ... keeping m! mod n.
pub fn s_oracle(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("s_oracle", "n must be at least 1"));
    }
    let mut fact = 1 % n;
    let mut m = 1;
    loop {
        fact = mul_mod(fact, m % n, n);
        if fact == 0 {
            return Ok(m);
        }
        m += 1;
    }
}

/// For p > 4: p is prime exactly when S(p) = p.
pub fn is_prime_via_s(p: u64) -> Result<bool> {
    if p <= 4 {
        return Err(Error::domain("is_prime_via_s", "argument must exceed 4"));
    }
    Ok(s(p)? == p)
}

/// One summand `floor(S(k) / k)` of the prime-counting formula.
pub fn prime_count_term(k: u64) -> Result<u64> {
    Ok(s(k)? / k)
}

/// π(x) as `-1 + Σ_{k=2..x} floor(S(k)/k)`, valid for x ≥ 4.
pub fn prime_count_via_s(x: u64) -> Result<u64> {
    if x < 4 {
        return Err(Error::domain("prime_count_via_s", "x must be at least 4"));
    }
    let mut sum = 0u64;
    for k in 2..=x {
        sum += prime_count_term(k)?;
    }
    Ok(sum - 1)
}

/// `prime_count_via_s(x)` for every x in `4..=limit`, sharing one pass over
/// the summands. Entry `i` holds the value at `x = 4 + i`.
pub fn prime_count_via_s_series(limit: u64) -> Result<Vec<u64>> {
    if limit < 4 {
        return Err(Error::domain("prime_count_via_s", "x must be at least 4"));
    }
    let mut out = Vec::with_capacity((limit - 3) as usize);
    let mut sum = 0u64;
    for k in 2..=limit {
        sum += prime_count_term(k)?;
        if k >= 4 {
            out.push(sum - 1);
        }
    }
    Ok(out)
}

/// Whether `f(a·b) = max(f(a), f(b))` for coprime `a`, `b`.
pub fn check_s_multiplicative<F>(f: F, a: u64, b: u64) -> Result<bool>
where
    F: Fn(u64) -> Result<u64>,
{
    if a == 0 || b == 0 {
        return Err(Error::domain(
            "check_s_multiplicative",
            "arguments must be positive",
        ));
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let ab = a
        .checked_mul(b)
        .ok_or(Error::overflow("check_s_multiplicative"))?;
    Ok(f(ab)? == f(a)?.max(f(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;

    #[test]
    fn prime_power_examples() {
        assert_eq!(s_of_prime_power(2, 3).unwrap(), 4);
        assert_eq!(s_of_prime_power(3, 1).unwrap(), 3);
        assert_eq!(s_of_prime_power(2, 2).unwrap(), 4);
        assert_eq!(s_of_prime_power(5, 6).unwrap(), 25);
        assert!(s_of_prime_power(4, 1).is_err());
        assert!(s_of_prime_power(2, 0).is_err());
    }

    #[test]
    fn prime_power_is_minimal_and_bounded() {
        for p in [2u64, 3, 5, 7, 11, 101] {
            for a in 1..=40u32 {
                let m = s_of_prime_power(p, a).unwrap();
                assert!(legendre_valuation(p, m) >= a as u64);
                assert!(legendre_valuation(p, m - 1) < a as u64);
                assert!(m <= p * a as u64);
            }
        }
    }

    #[test]
    fn s_examples() {
        assert_eq!(s(6).unwrap(), 3);
        assert_eq!(s(8).unwrap(), 4);
        assert_eq!(s(11).unwrap(), 11);
        assert_eq!(s(1).unwrap(), 1);
        assert_eq!(s(4).unwrap(), 4);
        assert!(s(0).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(s_oracle(6).unwrap(), 3);
        assert_eq!(s_oracle(1).unwrap(), 1);
        assert_eq!(s_oracle(12).unwrap(), 4);
    }

    #[test]
    fn fast_path_matches_oracle() {
        for n in 1..=10_000 {
            assert_eq!(s(n).unwrap(), s_oracle(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn bounds_and_minimality() {
        for n in 2..=10_000u64 {
            let v = s(n).unwrap();
            let big = factorize(n).unwrap().largest_prime().unwrap();
            assert!(big <= v && v <= n, "n = {n}");
            let mut fact = 1u64;
            for m in 1..v {
                fact = mul_mod(fact, m, n);
            }
            assert_ne!(fact, 0, "(S(n)-1)! divisible, n = {n}");
            assert_eq!(mul_mod(fact, v, n), 0, "S(n)! not divisible, n = {n}");
        }
    }

    #[test]
    fn characterization_examples() {
        assert!(is_prime_via_s(5).unwrap());
        assert!(!is_prime_via_s(6).unwrap());
        assert!(!is_prime_via_s(9).unwrap());
        assert!(is_prime_via_s(4).is_err());
    }

    #[test]
    fn prime_count_examples() {
        assert_eq!(prime_count_via_s(4).unwrap(), 2);
        assert_eq!(prime_count_via_s(10).unwrap(), 4);
        assert_eq!(prime_count_via_s(100).unwrap(), 25);
        assert!(prime_count_via_s(3).is_err());
        let series = prime_count_via_s_series(100).unwrap();
        assert_eq!(series.len(), 97);
        assert_eq!(series[0], 2);
        assert_eq!(*series.last().unwrap(), 25);
    }

    #[test]
    fn multiplicative_examples() {
        assert!(check_s_multiplicative(s, 3, 4).unwrap());
        assert!(check_s_multiplicative(|_| Ok(1), 5, 6).unwrap());
        assert!(check_s_multiplicative(s, 1, 7).unwrap());
        assert_eq!(
            check_s_multiplicative(s, 4, 6),
            Err(Error::NotCoprime { a: 4, b: 6 })
        );
        // d(n) is multiplicative in the ordinary sense, not S-multiplicative.
        assert!(!check_s_multiplicative(crate::arith::num_divisors, 2, 3).unwrap());
    }
}
