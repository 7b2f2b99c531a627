//! Integers in factored form and a saturating sum-of-divisors.
//!
//! Binomial coefficients overflow machine words around n = 67, while their
//! prime exponents stay tiny, so every binomial coefficient in this crate
//! lives as a sorted (prime, exponent) list and is never multiplied out
//! except in small-case oracle tests. The sum-of-divisors function clamps its
//! partial products at an explicit cap, which is lossless for the chain
//! comparisons the practicality test makes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::sieve::is_prime_u64;

/// A positive integer as a product of prime powers, primes strictly
/// increasing, exponents >= 1. The empty product is the integer 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactoredInteger {
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    /// The integer 1.
    pub fn one() -> Self {
        FactoredInteger {
            factors: Vec::new(),
        }
    }

    /// Builds from (prime, exponent) pairs, validating the invariants.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        for window in pairs.windows(2) {
            if window[0].0 >= window[1].0 {
                return Err(Error::InvalidArgument(format!(
                    "primes not strictly increasing: {} then {}",
                    window[0].0, window[1].0
                )));
            }
        }
        for &(p, e) in &pairs {
            if e == 0 {
                return Err(Error::InvalidArgument(format!("zero exponent on {p}")));
            }
            if !is_prime_u64(p) {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
        }
        Ok(FactoredInteger { factors: pairs })
    }

    /// Internal constructor for pair lists already known to be valid.
    pub(crate) fn from_sorted_unchecked(pairs: Vec<(u64, u32)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(pairs.iter().all(|&(p, e)| e >= 1 && is_prime_u64(p)));
        FactoredInteger { factors: pairs }
    }

    /// Factors a positive integer by trial division. Intended for small
    /// inputs (tests, rule lemmas, CLI arguments); scan-scale factorizations
    /// come from [`super::sieve::PrimeTable::factor`] or from valuations.
    pub fn of(n: u64) -> Self {
        assert!(n >= 1, "cannot factor 0");
        let mut pairs = Vec::new();
        let mut m = n;
        let mut d = 2u64;
        while d * d <= m {
            if m.is_multiple_of(d) {
                let mut e = 0u32;
                while m.is_multiple_of(d) {
                    m /= d;
                    e += 1;
                }
                pairs.push((d, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m > 1 {
            pairs.push((m, 1));
        }
        FactoredInteger { factors: pairs }
    }

    /// The (prime, exponent) pairs, primes ascending.
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    /// Exponent of `p` in this integer (0 when `p` does not divide it).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Multiplies out the factors; `None` if the value overflows u64.
    pub fn value(&self) -> Option<u64> {
        let mut acc = 1u64;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p)?;
            }
        }
        Some(acc)
    }

    /// min(value, cap) without intermediate overflow.
    pub fn value_saturating(&self, cap: u64) -> u64 {
        let mut acc = 1u64;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = acc.saturating_mul(p).min(cap);
                if acc == cap {
                    return cap;
                }
            }
        }
        acc
    }

    /// Product of two factored integers.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (p, e) = self.factors[i];
            let (q, f) = other.factors[j];
            if p < q {
                out.push((p, e));
                i += 1;
            } else if q < p {
                out.push((q, f));
                j += 1;
            } else {
                out.push((p, e + f));
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        FactoredInteger { factors: out }
    }

    /// Whether this integer divides `other`, by exponent dominance.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors
            .iter()
            .all(|&(p, e)| other.exponent_of(p) >= e)
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// sigma(p^e) = 1 + p + ... + p^e, saturating at u64::MAX.
pub(crate) fn sigma_prime_power(p: u64, e: u32) -> u64 {
    let mut acc = 1u64;
    for _ in 0..e {
        acc = acc.saturating_mul(p).saturating_add(1);
    }
    acc
}

/// min(sigma(f), cap), where sigma is the sum of divisors.
///
/// Each partial product is clamped at `cap` before continuing, so the
/// computation never overflows regardless of the size of the input. Clamping
/// is lossless for any comparison against thresholds below `cap`.
pub fn sigma_saturating(f: &FactoredInteger, cap: u64) -> u64 {
    assert!(cap >= 2, "sigma cap must be at least 2");
    let mut acc = 1u64;
    for &(p, e) in f.pairs() {
        acc = acc.saturating_mul(sigma_prime_power(p, e)).min(cap);
        if acc == cap {
            return cap;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma_by_enumeration(n: u64) -> u64 {
        (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
    }

    #[test]
    fn construction_and_value() {
        assert_eq!(FactoredInteger::one().value(), Some(1));
        let f = FactoredInteger::from_pairs(vec![(2, 3), (7, 1)]).unwrap();
        assert_eq!(f.value(), Some(56));
        assert_eq!(f.to_string(), "2^3 * 7");
        assert!(FactoredInteger::from_pairs(vec![(7, 1), (2, 3)]).is_err());
        assert!(FactoredInteger::from_pairs(vec![(2, 0)]).is_err());
        assert!(FactoredInteger::from_pairs(vec![(4, 1)]).is_err());
    }

    #[test]
    fn trial_factorization_round_trips() {
        for n in 1..=10_000u64 {
            assert_eq!(FactoredInteger::of(n).value(), Some(n));
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            sigma_saturating(&FactoredInteger::from_pairs(vec![(2, 2)]).unwrap(), 1 << 30),
            7
        );
        assert_eq!(sigma_saturating(&FactoredInteger::one(), 1 << 30), 1);
        let f = FactoredInteger::from_pairs(vec![(2, 2), (5, 1), (7, 1)]).unwrap();
        assert_eq!(sigma_saturating(&f, 50), 50); // sigma(140) = 336 clamps
        assert_eq!(sigma_saturating(&f, u64::MAX), 336);
    }

    #[test]
    fn sigma_matches_divisor_enumeration() {
        for n in 1..=10_000u64 {
            assert_eq!(
                sigma_saturating(&FactoredInteger::of(n), u64::MAX),
                sigma_by_enumeration(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn multiplication_and_divisibility() {
        let a = FactoredInteger::of(12);
        let b = FactoredInteger::of(70);
        assert_eq!(a.mul(&b).value(), Some(840));
        assert!(FactoredInteger::of(4).divides(&FactoredInteger::of(196)));
        assert!(!FactoredInteger::of(8).divides(&FactoredInteger::of(196)));
        assert!(FactoredInteger::one().divides(&a));
    }

    #[test]
    fn saturating_value() {
        let f = FactoredInteger::of(1_000_000);
        assert_eq!(f.value_saturating(100), 100);
        assert_eq!(f.value_saturating(u64::MAX), 1_000_000);
    }
}
