//! Scan the central binomial coefficients C(2n, n) for non-practical cases.
//! Below 10^6 there are exactly three: n = 4, 10, 256. The d-shortcut
//! settles all but a handful of n without touching the full factorization.
//!
//!     cargo run --release --example central_scan -- [limit]
//!
//! The limit defaults to 100000; the full 10^6 run takes a few seconds.

use practical_binomials::arith::PrimeTable;
use practical_binomials::central::{central_is_practical, scan_central};

fn main() {
    let limit: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("limit must be an integer"))
        .unwrap_or(100_000);

    let report = scan_central(limit, 16, None).unwrap();
    println!("scanned n = 1..={limit} in {} ms", report.elapsed_ms);
    println!("exceptions: {:?}", report.exceptions);
    println!("verdicts by stage:");
    for (method, count) in &report.counts {
        println!("  {method:<20} {count}");
    }

    // Look closer at each exception: the chain breaks at a small prime.
    let table = PrimeTable::new(2 * limit.max(256)).unwrap();
    for &n in &report.exceptions {
        let verdict = central_is_practical(n, 16, &table).unwrap();
        println!(
            "n = {n}: C({}, {n}) not practical (method {:?}, d clamp {:?})",
            2 * n,
            verdict.method,
            verdict.d_value
        );
    }
}
