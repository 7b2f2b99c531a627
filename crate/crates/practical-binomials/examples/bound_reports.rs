//! Empirical reports on the asymptotic statements: the census of rows
//! violating the f(n) bound, the row-sum density (which should decay), the
//! kappa growth table, and the crossover points where the proof-chain
//! inequalities start holding.
//!
//!     cargo run --release --example bound_reports

use practical_binomials::bounds::{
    kappa_omega_crossover, kappa_table, row_exception_report, row_sum_report, BoundParams,
};

fn main() {
    let params = BoundParams::new(0.6, 0.3).unwrap();
    let census = row_exception_report(2000, params).unwrap();
    println!(
        "rows n <= {} with f(n) >= n^(1 - (log 2 - {})/log log n): {} of them",
        census.limit, census.delta, census.exception_count
    );
    println!("  first few: {:?}", &census.exceptions[..census.exceptions.len().min(12)]);
    println!("  envelope x^(1 - (delta - gamma)/log log x) = {:.1}", census.envelope);
    println!("  (the implied constant is unspecified; the envelope is context, not a gate)");

    let sums = row_sum_report(&[100, 1000, 10_000], 0.1).unwrap();
    println!("\nrow sums: sum of f(n) for n <= x");
    println!("      x      sum f(n)    sum/x^2");
    for r in &sums.rows {
        println!(" {:>6}  {:>12}    {:.6}", r.limit, r.sum_f, r.density);
    }

    println!("\nkappa growth (kappa(x) = least k with p_1...p_k >= x):");
    println!("        x   kappa  p_kappa   k*loglog x/log x   p_kappa/log x");
    for row in kappa_table(&[1e2, 1e4, 1e6, 1e8]).unwrap() {
        println!(
            " {:>8.0e} {:>6} {:>8}   {:>16.4} {:>15.4}",
            row.x, row.kappa, row.p_kappa, row.kappa_ratio, row.p_ratio
        );
    }
    println!("  (both ratios tend to 1, but far beyond desk scale)");

    println!("\nproof-chain inequalities, scanned to 10^6 (they are only claimed");
    println!("for n large, and the threshold depends strongly on gamma):");
    for gamma in [0.3, 0.65] {
        let crossover = kappa_omega_crossover(gamma, 1_000_000).unwrap();
        match crossover.omega_holds_from {
            Some(n0) => println!("  gamma = {gamma}: omega inequality holds from n = {n0} on"),
            None => println!("  gamma = {gamma}: omega inequality does not stabilize in range"),
        }
        match crossover.kappa_holds_from {
            Some(n0) => println!("  gamma = {gamma}: kappa inequality holds from n = {n0} on"),
            None => println!("  gamma = {gamma}: kappa inequality does not stabilize in range"),
        }
    }
}
