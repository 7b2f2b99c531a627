//! Valuations of C(2n, n) by carry counting, cross-checked against Legendre
//! sums. A base-p digit above (p-1)/2 starts a carry; a digit equal to
//! (p-1)/2 keeps an incoming carry alive, which is why plain digit counting
//! undercounts (first at n = 5, p = 3).
//!
//!     cargo run --release --example kummer_digits

use practical_binomials::arith::{digits_base, factorial_valuation};
use practical_binomials::central::central_valuation;

fn main() {
    println!(" n  p   digits (lsb first)   carries = v_p(C(2n,n))   digits > (p-1)/2");
    for (n, p) in [(10u64, 2u64), (4, 3), (5, 3), (13, 5), (100, 7), (256, 3)] {
        let digits = digits_base(n, p).unwrap();
        let naive = digits
            .digits()
            .iter()
            .filter(|&&d| 2 * d > p - 1)
            .count();
        println!(
            "{n:>3} {p:>2}   {:<20} {:^24} {:^18}",
            format!("{:?}", digits.digits()),
            central_valuation(n, p),
            naive
        );
    }

    // Exact agreement with the Legendre route, a few million cases.
    let mut checked = 0u64;
    for p in [2u64, 3, 5, 7, 11, 13] {
        for n in 1..=200_000u64 {
            assert_eq!(
                central_valuation(n, p),
                factorial_valuation(2 * n, p) - 2 * factorial_valuation(n, p)
            );
            checked += 1;
        }
    }
    println!("\ncarry counts match Legendre sums on {checked} (n, p) cases");
}
