//! Row n of Pascal's triangle in factored form: the per-row statistic f(n)
//! counting non-practical entries, and Fine's digit-product formula for the
//! number of entries not divisible by a prime.
//!
//! A row is walked with the incremental valuation recurrence
//! v_p(C(n, k+1)) = v_p(C(n, k)) + v_p(n - k) - v_p(k + 1), keeping a dense
//! exponent vector indexed by prime index. Each step factors two integers via
//! the smallest-prime-factor table, so the amortized update cost is a few
//! table lookups. The chain practicality test then runs directly on the
//! exponent vector; since sigma saturates geometrically, it almost always
//! exits within the first dozen primes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{
    binomial_valuation, digits_base, sigma_prime_power, FactoredInteger, PrimeTable,
};
use crate::practical::{Method, PracticalityVerdict, Witness};
use crate::report::ExceptionCountReport;
use crate::{Error, Result};

/// Summary of one row of Pascal's triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowProfile {
    pub n: u64,
    /// Number of k in [0, n] with C(n, k) not practical.
    pub f: u64,
    /// The non-practical positions, sorted ascending. Closed under k -> n-k
    /// and never contains 0 or n.
    pub nonpractical_ks: Vec<u64>,
    /// Optional Fine counts per requested prime.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tp: Option<BTreeMap<u64, u64>>,
}

/// Incremental factored walk along row n.
struct RowStepper<'a> {
    table: &'a PrimeTable,
    n: u64,
    k: u64,
    /// Exponent of primes[i] in C(n, k).
    exps: Vec<u32>,
}

impl<'a> RowStepper<'a> {
    fn new(n: u64, table: &'a PrimeTable) -> Result<Self> {
        if table.limit() < n.max(2) {
            return Err(Error::InvalidArgument(format!(
                "prime table covers {} but row {n} needs primes up to n",
                table.limit()
            )));
        }
        let nprimes = table.primes_upto(n).len();
        Ok(RowStepper {
            table,
            n,
            k: 0,
            exps: vec![0u32; nprimes],
        })
    }

    /// Advance from C(n, k) to C(n, k+1). Caller keeps k+1 <= n.
    fn step(&mut self) {
        debug_assert!(self.k < self.n);
        self.apply(self.n - self.k, 1);
        self.apply(self.k + 1, -1);
        self.k += 1;
    }

    fn apply(&mut self, mut m: u64, sign: i32) {
        while m > 1 {
            let idx = self.table.spf_index(m);
            if sign > 0 {
                self.exps[idx] += 1;
            } else {
                self.exps[idx] -= 1;
            }
            m /= self.table.primes()[idx];
        }
    }

    fn to_factored(&self) -> FactoredInteger {
        let primes = self.table.primes();
        let pairs = self
            .exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| (primes[i], e))
            .collect();
        FactoredInteger::from_sorted_unchecked(pairs)
    }

    /// Chain practicality test straight off the exponent vector.
    /// Returns the violating prime for a non-practical entry.
    fn chain_violation(&self) -> Option<u64> {
        let primes = self.table.primes();
        // Once sigma reaches n + 1 every remaining prime (all <= n) passes.
        let stop = self.n + 1;
        let mut sigma = 1u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let q = primes[i];
            if q > sigma + 1 {
                return Some(q);
            }
            sigma = sigma.saturating_mul(sigma_prime_power(q, e)).min(stop);
            if sigma == stop {
                return None;
            }
        }
        None
    }
}

/// Iterator over the exact factorizations of C(n, 0), ..., C(n, n).
pub struct RowFactorization<'a> {
    stepper: RowStepper<'a>,
    next_k: u64,
}

impl<'a> Iterator for RowFactorization<'a> {
    type Item = FactoredInteger;

    fn next(&mut self) -> Option<FactoredInteger> {
        if self.next_k > self.stepper.n {
            return None;
        }
        let item = self.stepper.to_factored();
        if self.next_k < self.stepper.n {
            self.stepper.step();
        }
        self.next_k += 1;
        Some(item)
    }
}

/// Streaming factored forms of row n. The table must cover n.
pub fn row_factored<'a>(n: u64, table: &'a PrimeTable) -> Result<RowFactorization<'a>> {
    Ok(RowFactorization {
        stepper: RowStepper::new(n, table)?,
        next_k: 0,
    })
}

/// f(n) together with the non-practical positions, scanning k <= n/2 and
/// mirroring. `tp_primes` adds Fine counts for those primes to the profile.
pub fn row_profile(n: u64, table: &PrimeTable, tp_primes: &[u64]) -> Result<RowProfile> {
    let tp = if tp_primes.is_empty() {
        None
    } else {
        let mut map = BTreeMap::new();
        for &p in tp_primes {
            map.insert(p, fine_count(n, p)?);
        }
        Some(map)
    };
    // Rows 1 and 2 are {1,1} and {1,2,1}: nothing to scan.
    if n <= 2 {
        return Ok(RowProfile {
            n,
            f: 0,
            nonpractical_ks: Vec::new(),
            tp,
        });
    }
    let mut stepper = RowStepper::new(n, table)?;
    let mut ks: Vec<u64> = Vec::new();
    for k in 1..=n / 2 {
        stepper.step();
        debug_assert_eq!(stepper.k, k);
        if stepper.chain_violation().is_some() {
            ks.push(k);
        }
    }
    let mut mirrored: Vec<u64> = ks.iter().rev().filter(|&&k| k != n - k).map(|&k| n - k).collect();
    ks.append(&mut mirrored);
    Ok(RowProfile {
        n,
        f: ks.len() as u64,
        nonpractical_ks: ks,
        tp,
    })
}

/// Smallest k with C(n, k) not practical, if any. Early-exits, which makes it
/// much cheaper than a full profile on rows that fail fast.
pub fn first_nonpractical_k(n: u64, table: &PrimeTable) -> Result<Option<u64>> {
    if n <= 2 {
        return Ok(None);
    }
    let mut stepper = RowStepper::new(n, table)?;
    for k in 1..=n / 2 {
        stepper.step();
        if stepper.chain_violation().is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The practicality verdict for a single entry C(n, k), with the violating
/// prime as witness when negative.
pub fn entry_verdict(n: u64, k: u64, table: &PrimeTable) -> Result<PracticalityVerdict> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    let k = k.min(n - k);
    let mut stepper = RowStepper::new(n, table)?;
    for _ in 0..k {
        stepper.step();
    }
    Ok(match stepper.chain_violation() {
        None => PracticalityVerdict {
            practical: true,
            method: Method::SigmaChain,
            witness: None,
        },
        Some(q) => PracticalityVerdict {
            practical: false,
            method: Method::SigmaChain,
            witness: Some(Witness::ChainViolation(q)),
        },
    })
}

/// f(n) for every n in [0, x], indexed by n. Rows are independent and run on
/// the rayon pool; the output order is fixed by the index.
pub fn f_values_up_to(x: u64, table: &PrimeTable) -> Result<Vec<u64>> {
    if table.limit() < x {
        return Err(Error::InvalidArgument(format!(
            "prime table covers {} but the scan needs {x}",
            table.limit()
        )));
    }
    (0..=x)
        .into_par_iter()
        .map(|n| row_profile(n, table, &[]).map(|p| p.f))
        .collect()
}

/// Number of k in [0, n] with p not dividing C(n, k), by Fine's theorem:
/// the product of (digit + 1) over the base-p digits of n.
pub fn fine_count(n: u64, p: u64) -> Result<u64> {
    let digits = digits_base(n, p)?;
    Ok(digits.digits().iter().map(|&d| d + 1).product())
}

/// Direct count of k with v_p(C(n, k)) = 0; the independent check on
/// [`fine_count`], restricted to oracle scale.
pub fn fine_count_bruteforce(n: u64, p: u64) -> Result<u64> {
    const BRUTEFORCE_LIMIT: u64 = 10_000;
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::LimitExceeded(format!(
            "brute-force row count capped at n = {BRUTEFORCE_LIMIT}, got {n}"
        )));
    }
    let mut count = 0u64;
    for k in 0..=n {
        if binomial_valuation(n, k, p)? == 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts n <= limit whose Fine count reaches n^{omega_p + epsilon}, together
/// with the proof-visible envelope p^3 * limit^{1 - epsilon}.
pub fn fine_exceptions(p: u64, epsilon: f64, limit: u64) -> Result<ExceptionCountReport> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must lie in (0, 1/2), got {epsilon}"
        )));
    }
    let omega = crate::bounds::omega_p(p);
    let mut count = 0u64;
    for n in 1..=limit {
        let t = fine_count(n, p)? as f64;
        if t >= (n as f64).powf(omega + epsilon) {
            count += 1;
        }
    }
    let bound = (p as f64).powi(3) * (limit as f64).powf(1.0 - epsilon);
    Ok(ExceptionCountReport {
        statistic: "tp".into(),
        p,
        epsilon,
        limit,
        count,
        bound,
    })
}
