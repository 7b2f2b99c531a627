//! Powers of two whose base-3 digits are all 0 or 1. For such n = 2^e > 2,
//! C(2n, n) = 2 * (odd, coprime to 3) has the form 12k +- 2, and no
//! practical number above 2 looks like that -- so each hit is a guaranteed
//! scan exception. Whether the list [0, 2, 8] is complete is a longstanding
//! open problem; the search is exhaustive only up to the exponent cap.
//!
//!     cargo run --release --example pow2_base3

use practical_binomials::arith::{digits_base_wide, PrimeTable};
use practical_binomials::central::{central_is_practical, powers_of_two_base3_01};

fn main() {
    let exponents = powers_of_two_base3_01(64).unwrap();
    println!("exponents e <= 64 with 2^e base-3 digits in {{0,1}}: {exponents:?}");

    let table = PrimeTable::new(1024).unwrap();
    for &e in &exponents {
        let n = 1u128 << e;
        let digits = digits_base_wide(n, 3).unwrap();
        let verdict = central_is_practical(n as u64, 16, &table).unwrap();
        println!(
            "  2^{e} = {n}: base-3 {:?}, C(2n,n) practical = {}{}",
            digits.digits(),
            verdict.practical,
            if n <= 2 { "  (the small exception: C(2,1) = 2 is practical)" } else { "" }
        );
    }

    println!("\nso n = 4 and n = 256 are forced scan exceptions;");
    println!("n = 10 is the only known exception NOT of this form.");
}
