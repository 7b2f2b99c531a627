//! The three sufficiency rules for building practical numbers, each exposed
//! as a checkable operation that reports "not applicable" (never
//! "not practical") when its preconditions fail.
//!
//!     cargo run --release --example composition_rules

use practical_binomials::arith::FactoredInteger;
use practical_binomials::practical::{
    practical_by_bounded_primes, practical_times_small, primorial_power_practical, RuleOutcome,
};

fn show(outcome: &RuleOutcome) -> String {
    match outcome {
        RuleOutcome::Applies { product, verdict } => {
            format!("applies: {product} practical = {}", verdict.practical)
        }
        RuleOutcome::NotApplicable { reason } => format!("not applicable ({reason})"),
    }
}

fn main() {
    println!("rule 1: practical m times any n <= 2m stays practical");
    for (m, n) in [(2u64, 3u64), (1, 2), (4, 7), (4, 9), (3, 2), (6, 13)] {
        let out = practical_times_small(&FactoredInteger::of(m), n);
        println!("  m = {m}, n = {n}: {}", show(&out));
    }

    println!("\nrule 2: practical d | n with all primes of n at most 2d");
    for (d, n) in [(2u64, 6u64), (1, 2), (4, 196), (4, 6), (2, 10)] {
        let out = practical_by_bounded_primes(&FactoredInteger::of(d), &FactoredInteger::of(n));
        println!("  d = {d}, n = {n}: {}", show(&out));
    }

    println!("\nrule 3: products of consecutive prime powers (positive exponents)");
    for exps in [vec![1u32], vec![1, 1, 1], vec![3, 1, 2], vec![1, 1, 1, 1, 1, 1]] {
        let f = primorial_power_practical(&exps).unwrap();
        match f.value() {
            Some(v) => println!("  exponents {exps:?} -> {f} = {v}"),
            None => println!("  exponents {exps:?} -> {f}"),
        }
    }
}
