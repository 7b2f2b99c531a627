//! Practicality of central binomial coefficients C(2n, n).
//!
//! The p-adic valuation of C(2n, n) is, by Kummer's theorem, the number of
//! carries when n is added to itself in base p; that carry count is this
//! module's [`central_valuation`]. Practicality is decided by a two-stage
//! procedure:
//!
//! 1. **d-shortcut.** Build d = prod_j p_j^{v_{p_j}} over a small set of the
//!    first primes (16 by default, the count that optimizes the tail bound in
//!    [`crate::bounds::optimize_eta`]). d divides C(2n, n) by construction;
//!    if d > n (saturating compare) and d itself passes the chain test, then
//!    C(2n, n) is practical: all its prime factors are at most 2n < 2d.
//!    The chain check on d is required for soundness -- d > n alone fails at
//!    n = 10, where d = 184756 is not practical.
//! 2. **Full factorization.** Walk all primes up to 2n in ascending order,
//!    computing valuations lazily and feeding the chain test directly; the
//!    chain saturates or breaks within a few primes in practice.
//!
//! The range scan is data-parallel over n with deterministic merged output.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{digits_base_wide, first_n_primes, is_prime_u64, sigma_prime_power, PrimeTable};
use crate::report::{ExceptionCountReport, ScanReport, SCHEMA_VERSION};
use crate::{Error, Result};

/// Number of primes in the default d-shortcut.
pub const DEFAULT_SHORTCUT_PRIMES: u32 = 16;

/// Largest exponent accepted by [`powers_of_two_base3_01`]; 2^64 is the
/// widest power of two the digit extraction path handles natively.
pub const MAX_POW2_EXPONENT: u32 = 64;

/// How a central-binomial verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralMethod {
    FastDShortcut,
    FullFactorization,
}

/// Practicality verdict for C(2n, n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralVerdict {
    pub n: u64,
    pub practical: bool,
    pub method: CentralMethod,
    /// Value of d from the last shortcut evaluation, clamped just above n.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_value: Option<u64>,
}

/// v_p(C(2n, n)): the number of carries when n + n is added in base p
/// (Kummer's theorem). A digit d initiates a carry when 2d >= p and, with an
/// incoming carry, propagates it when 2d + 1 >= p; for p = 2 the count is
/// simply the number of one digits. The count of digits strictly above
/// (p - 1)/2 is only a lower bound for odd p -- a digit equal to (p - 1)/2
/// keeps a carry alive -- so the carry walk below is the exact valuation,
/// and the test suite pins it to Legendre's formula.
pub fn central_valuation(n: u64, p: u64) -> u64 {
    debug_assert!(is_prime_u64(p), "{p} is not prime");
    let mut count = 0u64;
    let mut carry = 0u64;
    let mut m = n;
    while m > 0 {
        let d = m % p;
        if 2 * d + carry >= p {
            count += 1;
            carry = 1;
        } else {
            carry = 0;
        }
        m /= p;
    }
    count
}

/// Scan stage that settled a verdict; drives the per-method report counts.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Stage {
    Shortcut,
    Retry,
    Full,
}

impl Stage {
    fn label(self) -> &'static str {
        match self {
            Stage::Shortcut => "fast-d-shortcut",
            Stage::Retry => "fast-d-retry",
            Stage::Full => "full-factorization",
        }
    }
}

/// d-shortcut over the given primes: returns (clamped d, shortcut fired).
fn d_shortcut(n: u64, primes: &[u64]) -> (u64, bool) {
    let clamp = n.saturating_add(1);
    let mut d = 1u64;
    let mut pairs: Vec<(u64, u32)> = Vec::with_capacity(primes.len());
    for &p in primes {
        let e = central_valuation(n, p);
        if e == 0 {
            continue;
        }
        pairs.push((p, e as u32));
        for _ in 0..e {
            d = d.saturating_mul(p).min(clamp);
        }
    }
    if d <= n {
        return (d, false);
    }
    // d divides C(2n, n) and exceeds n, so if d is practical then so is
    // C(2n, n): its primes are below 2n < 2d. Chain-check d directly.
    let Some(&(largest, _)) = pairs.last() else {
        return (d, false);
    };
    let cap = largest + 2;
    let mut sigma = 1u64;
    for &(q, e) in &pairs {
        if q > sigma + 1 {
            return (d, false);
        }
        sigma = sigma.saturating_mul(sigma_prime_power(q, e)).min(cap);
    }
    (d, true)
}

/// Full lazy chain over all primes up to 2n. Ascending valuations feed the
/// chain test directly; the walk stops at the first violation or as soon as
/// sigma clears 2n, whichever comes first.
fn full_chain_practical(n: u64, table: &PrimeTable) -> bool {
    let stop = 2 * n + 1;
    let mut sigma = 1u64;
    for &p in table.primes_upto(2 * n) {
        let e = central_valuation(n, p);
        if e == 0 {
            continue;
        }
        if p > sigma + 1 {
            return false;
        }
        sigma = sigma.saturating_mul(sigma_prime_power(p, e as u32)).min(stop);
        if sigma == stop {
            return true;
        }
    }
    true
}

fn classify(n: u64, shortcut_primes: &[u64], table: &PrimeTable) -> (Stage, CentralVerdict) {
    let (d, hit) = d_shortcut(n, shortcut_primes);
    if hit {
        return (
            Stage::Shortcut,
            CentralVerdict {
                n,
                practical: true,
                method: CentralMethod::FastDShortcut,
                d_value: Some(d),
            },
        );
    }
    // Retry with every prime up to log^2(n) when that widens the set.
    let mut d_value = d;
    let ln = (n.max(2) as f64).ln();
    let wide = table.primes_upto((ln * ln) as u64);
    if wide.len() > shortcut_primes.len() {
        let (d2, hit2) = d_shortcut(n, wide);
        d_value = d2;
        if hit2 {
            return (
                Stage::Retry,
                CentralVerdict {
                    n,
                    practical: true,
                    method: CentralMethod::FastDShortcut,
                    d_value: Some(d2),
                },
            );
        }
    }
    (
        Stage::Full,
        CentralVerdict {
            n,
            practical: full_chain_practical(n, table),
            method: CentralMethod::FullFactorization,
            d_value: Some(d_value),
        },
    )
}

/// Practicality of C(2n, n). `shortcut_primes` is the d-shortcut prime count
/// (16 unless there is a reason to deviate); the table must cover 2n.
pub fn central_is_practical(
    n: u64,
    shortcut_primes: u32,
    table: &PrimeTable,
) -> Result<CentralVerdict> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if shortcut_primes == 0 {
        return Err(Error::InvalidArgument(
            "shortcut prime count must be positive".into(),
        ));
    }
    let two_n = n
        .checked_mul(2)
        .ok_or_else(|| Error::LimitExceeded(format!("2n overflows for n = {n}")))?;
    if table.limit() < two_n {
        return Err(Error::InvalidArgument(format!(
            "prime table covers {} but C({two_n}, {n}) needs primes up to {two_n}",
            table.limit()
        )));
    }
    let small = first_n_primes(shortcut_primes as usize);
    Ok(classify(n, &small, table).1)
}

/// Scan n = 1..=limit for non-practical C(2n, n).
///
/// The verdict for each n is pure, so the range is processed in parallel
/// chunks and merged back in index order; the report is identical whatever
/// the worker count. `threads` pins the pool size (None uses the caller's).
pub fn scan_central(limit: u64, shortcut_primes: u32, threads: Option<usize>) -> Result<ScanReport> {
    if limit == 0 {
        return Err(Error::InvalidArgument("scan limit must be positive".into()));
    }
    if shortcut_primes == 0 {
        return Err(Error::InvalidArgument(
            "shortcut prime count must be positive".into(),
        ));
    }
    let started = Instant::now();
    let table_limit = limit
        .checked_mul(2)
        .ok_or_else(|| Error::LimitExceeded(format!("2n overflows for limit {limit}")))?;
    let table = PrimeTable::new(table_limit)?;
    let small = first_n_primes(shortcut_primes as usize);

    let body = || -> (Vec<u64>, [u64; 3]) {
        (1..=limit)
            .into_par_iter()
            .fold(
                || (Vec::new(), [0u64; 3]),
                |(mut exceptions, mut tallies), n| {
                    let (stage, verdict) = classify(n, &small, &table);
                    tallies[stage as usize] += 1;
                    if !verdict.practical {
                        exceptions.push(n);
                    }
                    (exceptions, tallies)
                },
            )
            .reduce(
                || (Vec::new(), [0u64; 3]),
                |(mut ea, ta), (eb, tb)| {
                    ea.extend(eb);
                    (ea, [ta[0] + tb[0], ta[1] + tb[1], ta[2] + tb[2]])
                },
            )
    };
    let (exceptions, tallies) = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(body),
        None => body(),
    };

    let mut counts = BTreeMap::new();
    for stage in [Stage::Shortcut, Stage::Retry, Stage::Full] {
        counts.insert(stage.label().to_string(), tallies[stage as usize]);
    }
    let fast = tallies[Stage::Shortcut as usize] + tallies[Stage::Retry as usize];
    Ok(ScanReport {
        schema: SCHEMA_VERSION,
        command: "scan-central".into(),
        range: [1, limit],
        exceptions,
        counts,
        fast_path_hit_rate: Some(fast as f64 / limit as f64),
        elapsed_ms: started.elapsed().as_millis() as u64,
        parameters: serde_json::json!({ "limit": limit, "s": shortcut_primes }),
    })
}

/// Exponents e <= max_exponent for which every base-3 digit of 2^e is 0 or 1.
///
/// For any such n = 2^e > 2, C(2n, n) = 2 * (odd coprime to 3), i.e. of the
/// form 12k +- 2, and no practical number above 2 has that form, so C(2n, n)
/// is not practical. Whether infinitely many such powers of two exist is a
/// longstanding open problem; this search only reports the range it covered.
pub fn powers_of_two_base3_01(max_exponent: u32) -> Result<Vec<u32>> {
    if max_exponent > MAX_POW2_EXPONENT {
        return Err(Error::LimitExceeded(format!(
            "exponent {max_exponent} exceeds the supported cap {MAX_POW2_EXPONENT}"
        )));
    }
    let mut out = Vec::new();
    for e in 0..=max_exponent {
        let digits = digits_base_wide(1u128 << e, 3)?;
        if digits.digits().iter().all(|&d| d <= 1) {
            out.push(e);
        }
    }
    Ok(out)
}

/// Counts n <= limit whose central valuation falls at or below
/// (alpha_p - epsilon) log n / log p, with the proof-visible envelope
/// p * limit^{1 - 2 epsilon^2 / log p}.
pub fn valuation_exceptions(p: u64, epsilon: f64, limit: u64) -> Result<ExceptionCountReport> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must lie in (0, 1/2), got {epsilon}"
        )));
    }
    let alpha = crate::bounds::alpha_p_f64(p);
    let lnp = (p as f64).ln();
    let mut count = 0u64;
    for n in 1..=limit {
        let threshold = (alpha - epsilon) * (n as f64).ln() / lnp;
        if central_valuation(n, p) as f64 <= threshold {
            count += 1;
        }
    }
    let bound = p as f64 * (limit as f64).powf(1.0 - 2.0 * epsilon * epsilon / lnp);
    Ok(ExceptionCountReport {
        statistic: "beta".into(),
        p,
        epsilon,
        limit,
        count,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorial_valuation;

    fn table(limit: u64) -> PrimeTable {
        PrimeTable::new(limit).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(central_valuation(10, 2), 2); // binary 1010
        assert_eq!(central_valuation(4, 3), 0); // base-3 11: no carry anywhere
        assert_eq!(central_valuation(1, 2), 1); // C(2,1) = 2
        assert_eq!(central_valuation(10, 3), 0);
        assert_eq!(central_valuation(6, 7), 1);
        // Carry propagation through a digit equal to (p-1)/2: 5 = 12 base 3,
        // and v_3(C(10,5)) = v_3(252) = 2, one initiated + one propagated.
        assert_eq!(central_valuation(5, 3), 2);
        assert_eq!(central_valuation(13, 5), 2); // 23 base 5, same effect
    }

    #[test]
    fn valuation_matches_legendre_sample() {
        // The full 10^5 x 6-prime agreement run is in the acceptance suite.
        for p in [2u64, 3, 5, 7, 11, 13] {
            for n in 1..=3000u64 {
                let legendre = factorial_valuation(2 * n, p) - 2 * factorial_valuation(n, p);
                assert_eq!(central_valuation(n, p), legendre, "n = {n}, p = {p}");
            }
        }
    }

    #[test]
    fn two_always_divides() {
        for n in 1..=10_000u64 {
            assert!(central_valuation(n, 2) >= 1);
        }
    }

    #[test]
    fn known_verdicts() {
        let t = table(4096);
        assert!(central_is_practical(1, 16, &t).unwrap().practical);
        assert!(central_is_practical(2, 16, &t).unwrap().practical);
        assert!(central_is_practical(3, 16, &t).unwrap().practical);
        assert!(!central_is_practical(4, 16, &t).unwrap().practical);
        assert!(!central_is_practical(10, 16, &t).unwrap().practical);
        assert!(!central_is_practical(256, 16, &t).unwrap().practical);
        assert!(central_is_practical(100, 16, &t).unwrap().practical);
    }

    #[test]
    fn shortcut_verdict_shape() {
        let t = table(4096);
        let v = central_is_practical(100, 16, &t).unwrap();
        assert_eq!(v.method, CentralMethod::FastDShortcut);
        assert!(v.d_value.unwrap() > 100);
        let v = central_is_practical(10, 16, &t).unwrap();
        assert_eq!(v.method, CentralMethod::FullFactorization);
    }

    #[test]
    fn shortcut_is_sound() {
        // Whenever the shortcut fires, the full factorization agrees.
        let t = table(20_000);
        let small = first_n_primes(16);
        for n in 1..=10_000u64 {
            let (d, hit) = d_shortcut(n, &small);
            if hit {
                assert!(d > n);
                assert!(full_chain_practical(n, &t), "shortcut unsound at n = {n}");
            }
        }
    }

    #[test]
    fn scan_small_ranges() {
        let r = scan_central(3, 16, None).unwrap();
        assert!(r.exceptions.is_empty());
        let r = scan_central(4, 16, None).unwrap();
        assert_eq!(r.exceptions, vec![4]);
        let r = scan_central(300, 16, None).unwrap();
        assert_eq!(r.exceptions, vec![4, 10, 256]);
        assert_eq!(r.counts.values().sum::<u64>(), 300);
    }

    #[test]
    fn scan_rejects_zero() {
        assert!(scan_central(0, 16, None).is_err());
        assert!(scan_central(10, 0, None).is_err());
    }

    #[test]
    fn base3_search() {
        assert_eq!(powers_of_two_base3_01(1).unwrap(), vec![0]);
        assert_eq!(powers_of_two_base3_01(10).unwrap(), vec![0, 2, 8]);
        assert_eq!(powers_of_two_base3_01(64).unwrap(), vec![0, 2, 8]);
        assert!(powers_of_two_base3_01(65).is_err());
    }

    #[test]
    fn base3_outputs_are_scan_exceptions() {
        // For n = 2^e > 2 on the list, C(2n, n) has the form 12k +- 2 and is
        // not practical; n = 1 is the excluded small case (C(2, 1) = 2 is
        // practical).
        let t = table(1024);
        for e in powers_of_two_base3_01(9).unwrap() {
            let n = 1u64 << e;
            let verdict = central_is_practical(n, 16, &t).unwrap();
            assert_eq!(verdict.practical, n <= 2, "n = {n}");
            if n > 2 {
                assert_eq!(central_valuation(n, 2), 1);
                assert_eq!(central_valuation(n, 3), 0);
            }
        }
    }

    #[test]
    fn beta_exception_counts() {
        let r = valuation_exceptions(2, 0.3, 1).unwrap();
        assert_eq!(r.count, 0); // beta_2(1) = 1 > 0
        let a = valuation_exceptions(2, 0.3, 100).unwrap();
        let b = valuation_exceptions(2, 0.3, 1000).unwrap();
        assert!(a.count <= b.count);
        assert!(valuation_exceptions(2, 0.5, 10).is_err());
    }

    #[test]
    fn insufficient_table_rejected() {
        let t = table(10);
        assert!(central_is_practical(100, 16, &t).is_err());
    }
}
