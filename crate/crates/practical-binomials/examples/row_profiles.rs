//! Row statistics: f(n) counts the entries of row n of Pascal's triangle
//! that are not practical numbers. Rows 2^k - 1 are all-odd (so f = n - 1),
//! row 8 has the single culprit C(8,4) = 70, and rows with f = 0 are rare.
//!
//!     cargo run --release --example row_profiles

use practical_binomials::arith::PrimeTable;
use practical_binomials::rows::{first_nonpractical_k, row_profile};

fn main() {
    let table = PrimeTable::new(2048).unwrap();

    println!(" n     f(n)   non-practical positions (first few)   T_2   T_3");
    for n in [1u64, 3, 4, 5, 7, 8, 10, 15, 16, 31, 63, 64, 100, 127, 255, 1023] {
        let p = row_profile(n, &table, &[2, 3]).unwrap();
        let tp = p.tp.as_ref().unwrap();
        let shown: Vec<u64> = p.nonpractical_ks.iter().take(6).copied().collect();
        let ellipsis = if p.nonpractical_ks.len() > 6 { ", ..." } else { "" };
        println!(
            "{n:>5} {:>6}   {:<36} {:>5} {:>5}",
            p.f,
            format!("{shown:?}{ellipsis}"),
            tp[&2],
            tp[&3]
        );
    }

    // Rows with every entry practical: the scan below finds only powers of 2.
    let all_practical: Vec<u64> = (1..=2048)
        .filter(|&n| first_nonpractical_k(n, &table).unwrap().is_none())
        .collect();
    println!("\nrows <= 2048 with f(n) = 0: {all_practical:?}");
    println!("(all powers of two -- but not all of them: 8 and 512 are absent)");
}
