//! Deciding whether an integer is practical: every positive integer below it
//! must be a sum of distinct divisors.
//!
//! Two independent routes are provided. [`is_practical_oracle`] implements the
//! definition directly with a reachable-sums bitset over the divisors and is
//! the ground truth for small inputs. [`is_practical_factored`] runs the
//! classical chain criterion (Stewart 1954, Sierpinski 1955) on a factored
//! form: with primes q_1 < ... < q_r, the value is practical iff q_1 = 2 and
//! q_{i+1} <= sigma(q_1^{a_1} ... q_i^{a_i}) + 1 at every step. The chain test
//! works unchanged on numbers the size of central binomial coefficients, and
//! the test suite holds the two routes to exact agreement on [1, 10^4].
//!
//! The composition rules (`practical_times_small`, `practical_by_bounded_primes`,
//! `primorial_power_practical`) expose sufficiency lemmas as checkable
//! operations: when their preconditions fail they report "not applicable",
//! never "not practical".

use serde::{Deserialize, Serialize};

use crate::arith::{sigma_prime_power, FactoredInteger};
use crate::{Error, Result};

/// Ceiling for the definition-level oracle unless a caller raises it.
pub const DEFAULT_ORACLE_LIMIT: u64 = 1_000_000;

/// Which procedure decided a practicality verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    SigmaChain,
    #[serde(rename = "shortcut-2d")]
    Shortcut2d,
    PrimorialPower,
}

/// Diagnostic accompanying a not-practical verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum Witness {
    /// Smallest integer below n that is not a sum of distinct divisors.
    UnreachableSum(u64),
    /// First prime at which the sigma chain breaks.
    ChainViolation(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PracticalityVerdict {
    pub practical: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl PracticalityVerdict {
    fn practical(method: Method) -> Self {
        PracticalityVerdict {
            practical: true,
            method,
            witness: None,
        }
    }
}

/// Outcome of applying a sufficiency rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum RuleOutcome {
    /// Preconditions hold; `product` is the integer the rule certifies.
    Applies {
        product: FactoredInteger,
        verdict: PracticalityVerdict,
    },
    /// A precondition failed. Says nothing about practicality.
    NotApplicable { reason: String },
}

impl RuleOutcome {
    pub fn applies(&self) -> bool {
        matches!(self, RuleOutcome::Applies { .. })
    }
}

/// All divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Definition-level practicality test via a reachable-sums dynamic program
/// over the divisors of n, truncated at n. Ground truth for small inputs.
pub fn is_practical_oracle(n: u64) -> Result<PracticalityVerdict> {
    is_practical_oracle_within(n, DEFAULT_ORACLE_LIMIT)
}

/// As [`is_practical_oracle`] with an explicit ceiling on n.
pub fn is_practical_oracle_within(n: u64, ceiling: u64) -> Result<PracticalityVerdict> {
    if n == 0 {
        return Err(Error::InvalidArgument("0 is not a positive integer".into()));
    }
    if n > ceiling {
        return Err(Error::LimitExceeded(format!(
            "oracle input {n} exceeds ceiling {ceiling}"
        )));
    }
    if n == 1 {
        // No positive integers below 1: practical vacuously.
        return Ok(PracticalityVerdict::practical(Method::Oracle));
    }
    // bit m of `reach` = "m is a sum of distinct divisors"; sums >= n are
    // irrelevant to the definition, so the bitset is truncated at n bits.
    let words = (n as usize).div_ceil(64);
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    for d in divisors(n) {
        if d >= n {
            break;
        }
        shl_or_in_place(&mut reach, d as usize);
    }
    for m in 1..n {
        if reach[(m / 64) as usize] >> (m % 64) & 1 == 0 {
            return Ok(PracticalityVerdict {
                practical: false,
                method: Method::Oracle,
                witness: Some(Witness::UnreachableSum(m)),
            });
        }
    }
    Ok(PracticalityVerdict::practical(Method::Oracle))
}

/// bits |= bits << shift, truncating at the vector length.
fn shl_or_in_place(bits: &mut [u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    if ws >= bits.len() {
        return;
    }
    for i in (ws..bits.len()).rev() {
        let mut v = bits[i - ws] << bs;
        if bs > 0 && i > ws {
            v |= bits[i - ws - 1] >> (64 - bs);
        }
        bits[i] |= v;
    }
}

/// Chain criterion on a factored form. Verdicts are independent of the
/// magnitude of the input, so this is the test used at scan scale.
pub fn is_practical_factored(f: &FactoredInteger) -> PracticalityVerdict {
    let Some(largest) = f.largest_prime() else {
        return PracticalityVerdict::practical(Method::SigmaChain); // n = 1
    };
    // Clamping sigma just above the largest prime keeps every chain
    // comparison exact while avoiding wide arithmetic.
    let cap = largest.saturating_add(2);
    let mut sigma = 1u64;
    for &(q, e) in f.pairs() {
        if q > sigma + 1 {
            return PracticalityVerdict {
                practical: false,
                method: Method::SigmaChain,
                witness: Some(Witness::ChainViolation(q)),
            };
        }
        sigma = sigma.saturating_mul(sigma_prime_power(q, e)).min(cap);
        if sigma == cap {
            break; // every later prime passes: q <= largest < sigma + 1
        }
    }
    PracticalityVerdict::practical(Method::SigmaChain)
}

/// Rule: a practical m times any n <= 2m is practical.
///
/// On success the product's factored form is returned together with the chain
/// verdict on it, which the rule guarantees to be practical.
pub fn practical_times_small(m: &FactoredInteger, n: u64) -> RuleOutcome {
    if n == 0 {
        return RuleOutcome::NotApplicable {
            reason: "n must be positive".into(),
        };
    }
    let m_verdict = is_practical_factored(m);
    if !m_verdict.practical {
        return RuleOutcome::NotApplicable {
            reason: format!("{m} is not practical"),
        };
    }
    // n <= 2m compared with saturating arithmetic; m may be astronomically big.
    let twice_m = m.value_saturating(u64::MAX / 2) * 2;
    if n > twice_m {
        return RuleOutcome::NotApplicable {
            reason: format!("{n} exceeds twice {m}"),
        };
    }
    let product = m.mul(&FactoredInteger::of(n));
    let verdict = is_practical_factored(&product);
    debug_assert!(verdict.practical);
    RuleOutcome::Applies { product, verdict }
}

/// Rule: if d is practical, d divides n, and every prime of n is at most 2d,
/// then n is practical.
pub fn practical_by_bounded_primes(d: &FactoredInteger, n: &FactoredInteger) -> RuleOutcome {
    let d_verdict = is_practical_factored(d);
    if !d_verdict.practical {
        return RuleOutcome::NotApplicable {
            reason: format!("{d} is not practical"),
        };
    }
    if !d.divides(n) {
        return RuleOutcome::NotApplicable {
            reason: format!("{d} does not divide {n}"),
        };
    }
    let twice_d = d.value_saturating(u64::MAX / 2) * 2;
    if let Some(&(p, _)) = n.pairs().iter().find(|&&(p, _)| p > twice_d) {
        return RuleOutcome::NotApplicable {
            reason: format!("prime {p} of {n} exceeds twice {d}"),
        };
    }
    let verdict = PracticalityVerdict::practical(Method::Shortcut2d);
    debug_assert!(is_practical_factored(n).practical);
    RuleOutcome::Applies {
        product: n.clone(),
        verdict,
    }
}

/// p_1^{a_1} ... p_s^{a_s} over the first s primes, all exponents positive.
/// Such products are always practical; the test suite checks rather than
/// assumes this.
pub fn primorial_power_practical(exponents: &[u32]) -> Result<FactoredInteger> {
    if exponents.is_empty() {
        return Err(Error::InvalidArgument("empty exponent list".into()));
    }
    if exponents.contains(&0) {
        return Err(Error::InvalidArgument(
            "exponents must all be positive".into(),
        ));
    }
    let primes = crate::arith::first_n_primes(exponents.len());
    let pairs = primes
        .into_iter()
        .zip(exponents.iter().copied())
        .collect::<Vec<_>>();
    Ok(FactoredInteger::from_sorted_unchecked(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_small_cases() {
        assert!(is_practical_oracle(1).unwrap().practical);
        assert!(is_practical_oracle(2).unwrap().practical);
        let v = is_practical_oracle(10).unwrap();
        assert!(!v.practical);
        assert_eq!(v.witness, Some(Witness::UnreachableSum(4)));
        assert!(!is_practical_oracle(70).unwrap().practical);
        assert!(is_practical_oracle(6).unwrap().practical);
        assert!(is_practical_oracle(28).unwrap().practical);
    }

    #[test]
    fn oracle_input_validation() {
        assert!(matches!(
            is_practical_oracle(0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            is_practical_oracle_within(100, 10),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn chain_small_cases() {
        assert!(is_practical_factored(&FactoredInteger::one()).practical);
        let seventy = FactoredInteger::from_pairs(vec![(2, 1), (5, 1), (7, 1)]).unwrap();
        let v = is_practical_factored(&seventy);
        assert!(!v.practical);
        assert_eq!(v.witness, Some(Witness::ChainViolation(5)));
        let fifty_six = FactoredInteger::from_pairs(vec![(2, 3), (7, 1)]).unwrap();
        assert!(is_practical_factored(&fifty_six).practical);
        // Odd numbers above 1 break the chain at their first prime.
        let v = is_practical_factored(&FactoredInteger::of(15));
        assert_eq!(v.witness, Some(Witness::ChainViolation(3)));
    }

    #[test]
    fn oracle_and_chain_agree_to_2000() {
        // The full 10^4 agreement run lives in the acceptance suite.
        for n in 1..=2000u64 {
            let a = is_practical_oracle(n).unwrap().practical;
            let b = is_practical_factored(&FactoredInteger::of(n)).practical;
            assert_eq!(a, b, "disagreement at n = {n}");
        }
    }

    #[test]
    fn times_small_rule() {
        let two = FactoredInteger::of(2);
        match practical_times_small(&two, 3) {
            RuleOutcome::Applies { product, verdict } => {
                assert_eq!(product.value(), Some(6));
                assert!(verdict.practical);
            }
            other => panic!("rule should apply: {other:?}"),
        }
        // Boundary n = 2m.
        assert!(practical_times_small(&FactoredInteger::one(), 2).applies());
        assert!(practical_times_small(&FactoredInteger::of(4), 7).applies());
        // Precondition failures are not practicality claims.
        assert!(!practical_times_small(&FactoredInteger::of(3), 2).applies());
        assert!(!practical_times_small(&two, 5).applies());
    }

    #[test]
    fn bounded_primes_rule() {
        let d = FactoredInteger::of(2);
        let n = FactoredInteger::of(6);
        assert!(practical_by_bounded_primes(&d, &n).applies());
        assert!(practical_by_bounded_primes(&FactoredInteger::one(), &FactoredInteger::of(2)).applies());
        let d = FactoredInteger::of(4);
        let n = FactoredInteger::of(196); // 4 * 7 * 7, and 7 <= 8
        assert!(practical_by_bounded_primes(&d, &n).applies());
        assert!(is_practical_oracle(196).unwrap().practical);
        // d does not divide n.
        let out = practical_by_bounded_primes(&FactoredInteger::of(4), &FactoredInteger::of(6));
        assert!(!out.applies());
        // Prime too large.
        let out = practical_by_bounded_primes(&FactoredInteger::of(2), &FactoredInteger::of(10));
        assert!(!out.applies());
    }

    #[test]
    fn primorial_powers() {
        let f = primorial_power_practical(&[1]).unwrap();
        assert_eq!(f.value(), Some(2));
        let f = primorial_power_practical(&[1, 1, 1]).unwrap();
        assert_eq!(f.value(), Some(30));
        assert!(is_practical_oracle(30).unwrap().practical);
        let f = primorial_power_practical(&[3, 1, 2]).unwrap();
        assert_eq!(f.value(), Some(600));
        assert!(is_practical_factored(&f).practical);
        assert!(is_practical_oracle(600).unwrap().practical);
        assert!(primorial_power_practical(&[]).is_err());
        assert!(primorial_power_practical(&[1, 0, 2]).is_err());
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(10), vec![1, 2, 5, 10]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }
}
