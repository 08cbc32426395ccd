//! Segmented Eratosthenes sieve, integer roots and a deterministic primality test.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Default segment length.
pub const SEGMENT_LEN: u64 = 1 << 20;

/// Largest total range [`sieve_segment`] accepts.
pub const MAX_SIEVE_SPAN: u64 = 10_000_000_000;

/// Power sums `s_l = Σ_{p∈[a,b]} (p − a)^l`, `l = 0, 1, 2`, over the primes of one segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentMoments {
    pub a: u64,
    pub b: u64,
    pub s: [u128; 3],
}

impl SegmentMoments {
    pub fn from_primes(a: u64, b: u64, primes: &[u64]) -> Self {
        let mut s = [0u128; 3];
        for &p in primes {
            let d = (p - a) as u128;
            s[0] += 1;
            s[1] += d;
            s[2] += d * d;
        }
        Self { a, b, s }
    }
}

/// `⌊√n⌋`.
pub fn isqrt(n: u64) -> u64 {
    iroot(n, 2)
}

/// `⌊n^{1/m}⌋` for `m ≥ 1`.
pub fn iroot(n: u64, m: u32) -> u64 {
    if m == 1 || n < 2 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / m as f64) as u64;
    let fits = |r: u64| r.checked_pow(m).is_some_and(|v| v <= n);
    while r > 0 && !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

/// All primes `≤ limit`.
pub fn base_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Primes in `[lo, hi]`, given every prime up to `√hi` in `base`.
pub(crate) fn sieve_block(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    if hi < lo || hi < 2 {
        return Vec::new();
    }
    let lo = lo.max(2);
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        let sq = match p.checked_mul(p) {
            Some(v) if v <= hi => v,
            _ => break,
        };
        let mut j = sq.max(lo.div_ceil(p) * p);
        while j <= hi {
            composite[(j - lo) as usize] = true;
            j += p;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// Moments of the primes in `[lo, hi]`, one entry per segment of length at most `2^20`.
pub fn sieve_segment(lo: u64, hi: u64) -> Result<Vec<SegmentMoments>> {
    if hi < lo {
        return Ok(Vec::new());
    }
    if hi - lo > MAX_SIEVE_SPAN {
        return domain(format!("sieve span {} exceeds {MAX_SIEVE_SPAN}", hi - lo));
    }
    let base = base_primes(isqrt(hi));
    let n = (hi - lo) / SEGMENT_LEN + 1;
    Ok((0..n)
        .into_par_iter()
        .map(|k| {
            let a = lo + k * SEGMENT_LEN;
            let b = (a + SEGMENT_LEN - 1).min(hi);
            SegmentMoments::from_primes(a, b, &sieve_block(a, b, &base))
        })
        .collect())
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All `p^m ∈ [lo, hi]` with `p` prime and `m ≥ 2`, ascending, as `(p^m, p, m)`.
pub fn enumerate_prime_powers(lo: u64, hi: u64) -> Result<Vec<(u64, u64, u32)>> {
    if hi > i64::MAX as u64 {
        return domain("prime-power enumeration limited to 2^63 - 1");
    }
    let mut out = Vec::new();
    if hi < 4 || hi < lo {
        return Ok(out);
    }
    let top = 63 - hi.leading_zeros();
    for m in 2..=top {
        let pmax = iroot(hi, m);
        let mut p = iroot(lo.saturating_sub(1), m) + 1;
        while p <= pmax {
            if is_prime(p) {
                let v = p.pow(m);
                if v >= lo {
                    out.push((v, p, m));
                }
            }
            p += 1;
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn moments_examples() {
        let m = sieve_segment(2, 30).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].s[0], 10);
        let m = sieve_segment(14, 16).unwrap();
        assert_eq!(m[0].s, [0, 0, 0]);
        let m = sieve_segment(10, 20).unwrap();
        assert_eq!(m[0].s[0], 4);
        assert_eq!(m[0].s[1], 20);
        assert_eq!(m[0].s[2], 1 + 9 + 49 + 81);
    }

    #[test]
    fn sieve_matches_trial_division() {
        let m = sieve_segment(0, 3 * SEGMENT_LEN / 2).unwrap();
        assert_eq!(m.len(), 2);
        let total: u128 = m.iter().map(|s| s.s[0]).sum();
        let brute = (0..=3 * SEGMENT_LEN / 2).filter(|&n| trial_division(n)).count() as u128;
        assert_eq!(total, brute);
        assert_eq!(total, 119_268);
    }

    #[test]
    fn powers_in_window() {
        let v = enumerate_prime_powers(30_000, 33_000).unwrap();
        assert!(v.contains(&(32768, 2, 15)));
        assert!(v.contains(&(32761, 181, 2)));
        let brute: Vec<u64> = (30_000u64..=33_000)
            .filter(|&n| {
                (2..=15).any(|m| {
                    let r = iroot(n, m);
                    r.pow(m) == n && trial_division(r)
                })
            })
            .collect();
        let got: Vec<u64> = v.iter().map(|t| t.0).collect();
        assert_eq!(got, brute);
        assert!(enumerate_prime_powers(2, 3).unwrap().is_empty());
        assert!(enumerate_prime_powers(0, u64::MAX).is_err());
    }

    #[test]
    fn primality_edge_cases() {
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(1));
        assert!(is_prime(2));
    }

    proptest! {
        #[test]
        fn roots_are_floors(n in 0u64..u64::MAX, m in 2u32..8) {
            let r = iroot(n, m);
            prop_assert!(r.checked_pow(m).is_some_and(|v| v <= n));
            prop_assert!((r + 1).checked_pow(m).is_none_or(|v| v > n));
        }

        #[test]
        fn miller_rabin_agrees(n in 0u64..200_000) {
            prop_assert_eq!(is_prime(n), trial_division(n));
        }
    }
}
