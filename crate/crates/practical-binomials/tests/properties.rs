//! Property tests over randomized inputs, complementing the exhaustive
//! sweeps that live next to each module.

use num_bigint::BigUint;
use proptest::prelude::*;

use practical_binomials::arith::{
    binomial_valuation, digits_base, sigma_saturating, FactoredInteger,
};
use practical_binomials::practical::{
    is_practical_factored, is_practical_oracle, practical_times_small, RuleOutcome,
};

fn small_primes() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23])
}

/// Exhaustive (not property-based) wide-integer check: for every entry of
/// every row up to 500, p^v divides the exact coefficient and p^(v+1) does
/// not, where v comes from the Legendre subtraction.
#[test]
fn valuations_split_exact_coefficients_to_500() {
    for p in [2u64, 3, 5] {
        let pbig = BigUint::from(p);
        let mut row = vec![BigUint::from(1u32)];
        for n in 0..=500u64 {
            for (k, c) in row.iter().enumerate() {
                let mut m = c.clone();
                let mut exact = 0u64;
                while (&m % &pbig) == BigUint::from(0u32) {
                    m /= &pbig;
                    exact += 1;
                }
                assert_eq!(
                    exact,
                    binomial_valuation(n, k as u64, p).unwrap(),
                    "C({n},{k}), p = {p}"
                );
            }
            let mut next = vec![BigUint::from(1u32)];
            next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
            next.push(BigUint::from(1u32));
            row = next;
        }
    }
}

proptest! {
    #[test]
    fn digits_round_trip(n in 0u64..1_000_000_000, p in small_primes()) {
        let dv = digits_base(n, p).unwrap();
        prop_assert_eq!(dv.value(), n as u128);
        prop_assert!(dv.digits().iter().all(|&d| d < p));
        if let Some(&last) = dv.digits().last() {
            prop_assert_ne!(last, 0);
        }
    }

    #[test]
    fn binomial_valuation_symmetric(n in 0u64..5000, frac in 0.0f64..=1.0, p in small_primes()) {
        let k = (n as f64 * frac) as u64;
        prop_assert_eq!(
            binomial_valuation(n, k, p).unwrap(),
            binomial_valuation(n, n - k, p).unwrap()
        );
    }

    #[test]
    fn valuation_divides_exactly(n in 0u64..200, frac in 0.0f64..=1.0, p in small_primes()) {
        // p^v divides C(n, k) computed by exact Pascal addition; p^(v+1)
        // does not.
        let k = (n as f64 * frac) as u64;
        let mut row = vec![BigUint::from(1u32)];
        for _ in 0..n {
            let mut next = vec![BigUint::from(1u32)];
            next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
            next.push(BigUint::from(1u32));
            row = next;
        }
        let c = row[k as usize].clone();
        let v = binomial_valuation(n, k, p).unwrap();
        let pv = BigUint::from(p).pow(v as u32);
        prop_assert!((&c % &pv) == BigUint::from(0u32));
        prop_assert!((&c % (&pv * p)) != BigUint::from(0u32));
    }

    #[test]
    fn sigma_agrees_with_divisor_sum(n in 1u64..20_000) {
        let f = FactoredInteger::of(n);
        let direct: u64 = (1..=n).filter(|d| n % d == 0).sum();
        prop_assert_eq!(sigma_saturating(&f, u64::MAX), direct);
        // Any cap at or below the true value clamps to the cap.
        prop_assert_eq!(sigma_saturating(&f, direct), direct);
        if direct > 2 {
            prop_assert_eq!(sigma_saturating(&f, direct - 1), direct - 1);
        }
    }

    #[test]
    fn factored_round_trip(n in 1u64..5_000_000) {
        prop_assert_eq!(FactoredInteger::of(n).value(), Some(n));
    }

    #[test]
    fn product_rule_always_practical(seed in 0u64..10_000, stretch in 1u64..=2) {
        // Pick a practical m pseudo-derived from the seed, then any
        // n <= 2m: the product must pass the chain test.
        let m = 2 * (seed % 500 + 1); // even candidates are dense in practicals
        if is_practical_factored(&FactoredInteger::of(m)).practical {
            let n = (seed % m).max(1) * stretch;
            if n <= 2 * m {
                match practical_times_small(&FactoredInteger::of(m), n) {
                    RuleOutcome::Applies { product, verdict } => {
                        prop_assert!(verdict.practical);
                        // The oracle agrees where it can reach.
                        if let Some(v) = product.value() {
                            if v <= 1_000_000 {
                                prop_assert!(is_practical_oracle(v).unwrap().practical);
                            }
                        }
                    }
                    RuleOutcome::NotApplicable { reason } => {
                        return Err(TestCaseError::fail(format!(
                            "rule must apply for practical m = {m}, n = {n}: {reason}"
                        )));
                    }
                }
            }
        }
    }

    #[test]
    fn verdict_serde_round_trip(n in 1u64..5000) {
        let v = is_practical_oracle(n).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        let back: practical_binomials::PracticalityVerdict =
            serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, v);
    }
}
