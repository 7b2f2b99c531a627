//! Prime generation: a segmented sieve of Eratosthenes that records, for every
//! integer up to the limit, the index of its smallest prime factor.
//!
//! Storing the *index* (into the ascending prime list) rather than the prime
//! itself costs nothing extra and lets factorization loops update dense
//! per-prime exponent vectors without any search.
//!
//! The sieve runs in segments (default 2^22 entries) so that scans needing
//! primes up to a few million keep their working set cache-resident.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::factored::FactoredInteger;

/// Default segment length for the sieve, in table entries.
pub const DEFAULT_SEGMENT: usize = 1 << 22;

const UNMARKED: u32 = u32::MAX;

/// Ascending primes up to a limit together with a smallest-prime-factor table.
///
/// Immutable after construction; share it freely across worker threads.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
    /// `spf_idx[n]` is the index into `primes` of the least prime factor of n,
    /// for 2 <= n <= limit. Entries 0 and 1 are unused.
    spf_idx: Vec<u32>,
}

impl PrimeTable {
    /// Sieve all primes and smallest prime factors up to `limit` inclusive.
    pub fn new(limit: u64) -> Result<Self> {
        Self::with_segment_size(limit, DEFAULT_SEGMENT)
    }

    /// Like [`PrimeTable::new`] but with an explicit segment length.
    #[allow(clippy::needless_range_loop)] // index arithmetic is the sieve
    pub fn with_segment_size(limit: u64, segment: usize) -> Result<Self> {
        if limit < 2 {
            return Err(Error::InvalidArgument(format!(
                "sieve limit must be at least 2, got {limit}"
            )));
        }
        if limit >= u64::from(u32::MAX) {
            return Err(Error::LimitExceeded(format!(
                "sieve limit {limit} exceeds the supported table size"
            )));
        }
        let segment = segment.max(1024);
        let limit_us = limit as usize;
        let mut spf_idx = vec![UNMARKED; limit_us + 1];
        let mut primes: Vec<u64> = Vec::new();

        // Plain sieve over [2, sqrt(limit)]: these primes seed every later segment.
        let sqrt = (limit.isqrt() as usize).min(limit_us);
        for n in 2..=sqrt {
            if spf_idx[n] == UNMARKED {
                spf_idx[n] = primes.len() as u32;
                primes.push(n as u64);
                let (idx, mut m) = (spf_idx[n], n * n);
                while m <= sqrt {
                    if spf_idx[m] == UNMARKED {
                        spf_idx[m] = idx;
                    }
                    m += n;
                }
            }
        }
        let base_count = primes.len();

        // Segments over (sqrt, limit]. Base primes are processed in ascending
        // order, so the first prime to mark an entry is its least factor.
        let mut lo = sqrt + 1;
        while lo <= limit_us {
            let hi = (lo + segment - 1).min(limit_us);
            for i in 0..base_count {
                let p = primes[i] as usize;
                if p * p > hi {
                    break;
                }
                let mut m = lo.div_ceil(p) * p;
                while m <= hi {
                    if spf_idx[m] == UNMARKED {
                        spf_idx[m] = i as u32;
                    }
                    m += p;
                }
            }
            for n in lo..=hi {
                if spf_idx[n] == UNMARKED {
                    spf_idx[n] = primes.len() as u32;
                    primes.push(n as u64);
                }
            }
            lo = hi + 1;
        }

        Ok(PrimeTable {
            limit,
            primes,
            spf_idx,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes up to the limit, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }

    /// The primes not exceeding `x`, as a prefix slice. `x` may exceed the
    /// table limit; the slice is then simply all known primes.
    pub fn primes_upto(&self, x: u64) -> &[u64] {
        let cut = self.primes.partition_point(|&p| p <= x);
        &self.primes[..cut]
    }

    /// Whether 2 <= n <= limit is prime.
    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.primes[self.spf_idx[n as usize] as usize] == n
    }

    /// Least prime factor of n, for 2 <= n <= limit.
    pub fn smallest_prime_factor(&self, n: u64) -> u64 {
        assert!(
            (2..=self.limit).contains(&n),
            "smallest_prime_factor: {n} outside table range 2..={}",
            self.limit
        );
        self.primes[self.spf_idx[n as usize] as usize]
    }

    /// Index into [`PrimeTable::primes`] of the least prime factor of n.
    pub(crate) fn spf_index(&self, n: u64) -> usize {
        debug_assert!((2..=self.limit).contains(&n));
        self.spf_idx[n as usize] as usize
    }

    /// Full factorization of 1 <= n <= limit by walking the table.
    pub fn factor(&self, n: u64) -> FactoredInteger {
        assert!(
            n >= 1 && n <= self.limit,
            "factor: {n} outside table range 1..={}",
            self.limit
        );
        let mut pairs: Vec<(u64, u32)> = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.primes[self.spf_idx[m as usize] as usize];
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        FactoredInteger::from_sorted_unchecked(pairs)
    }
}

/// Deterministic Miller-Rabin primality test for u64.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to be
/// exact for all n < 3.3 * 10^24, which covers the full u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
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

/// The first `count` primes, ascending.
pub fn first_n_primes(count: usize) -> Vec<u64> {
    assert!(count >= 1, "first_n_primes: count must be positive");
    // p_k < k(ln k + ln ln k) for k >= 6; start there and double on a miss.
    let k = count as f64;
    let mut bound = if count < 6 {
        16
    } else {
        (k * (k.ln() + k.ln().ln())).ceil() as u64 + 16
    };
    loop {
        let table = PrimeTable::new(bound).expect("sieve bound is always >= 2");
        if table.prime_count() >= count {
            return table.primes()[..count].to_vec();
        }
        bound *= 2;
    }
}
