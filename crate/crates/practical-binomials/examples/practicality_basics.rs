//! The two routes to a practicality verdict: the definition-level subset-sum
//! oracle (small inputs, produces unreachable-sum witnesses) and the factored
//! chain test (any magnitude, produces chain-violation witnesses).
//!
//!     cargo run --release --example practicality_basics

use practical_binomials::arith::FactoredInteger;
use practical_binomials::practical::{is_practical_factored, is_practical_oracle};

fn main() {
    println!("oracle verdicts (sum-of-distinct-divisors definition):");
    for n in [1u64, 2, 6, 10, 12, 28, 30, 70, 100, 104, 105] {
        let v = is_practical_oracle(n).unwrap();
        match v.witness {
            Some(w) => println!("  {n:>4}  practical: {:<5}  witness: {w:?}", v.practical),
            None => println!("  {n:>4}  practical: {}", v.practical),
        }
    }

    println!("\nchain verdicts on factored forms (no magnitude limit):");
    for pairs in [
        vec![(2u64, 1u32), (5, 1), (7, 1)], // 70 = C(8,4)
        vec![(2, 3), (7, 1)],               // 56
        vec![(2, 2), (11, 1), (13, 1), (17, 1), (19, 1)], // C(20,10) = 184756
        vec![(2, 40), (3, 25), (5, 12), (999_999_937, 2)], // astronomically large
    ] {
        let f = FactoredInteger::from_pairs(pairs).unwrap();
        let v = is_practical_factored(&f);
        println!("  {f}  ->  practical: {:<5}  witness: {:?}", v.practical, v.witness);
    }

    // The two routes agree everywhere; spot-check a window.
    let agree = (1..=5000u64).all(|n| {
        is_practical_oracle(n).unwrap().practical
            == is_practical_factored(&FactoredInteger::of(n)).practical
    });
    println!("\noracle and chain agree on [1, 5000]: {agree}");
}
