//! Tail machinery: the Hoeffding bound e^(-2 eps^2 j) dominating exact
//! binomial lower tails (checked in exact rational arithmetic), and the
//! exhaustive exception censuses against their proof-visible envelopes.
//!
//!     cargo run --release --example tail_bounds

use num_rational::Ratio;
use num_traits::ToPrimitive;
use practical_binomials::bounds::hoeffding_domination_case;
use practical_binomials::central::valuation_exceptions;
use practical_binomials::rows::fine_exceptions;

fn main() {
    println!("exact binomial tails vs e^(-2 eps^2 j), alpha = 1/2:");
    println!("  j  eps    exact tail     bound");
    for j in [5u64, 10, 20] {
        for k in [2u64, 6] {
            let (tail, bound, ok) = hoeffding_domination_case(j, Ratio::new(1, 2), Ratio::new(k, 20));
            assert!(ok);
            println!(
                " {j:>2}  {:.2}  {:<12.6e}  {:<12.6e}",
                k as f64 / 20.0,
                tail.to_f64().unwrap(),
                bound.to_f64().unwrap()
            );
        }
    }

    println!("\nrow-count exceptions: n <= 10^4 with T_p(n) >= n^(omega_p + eps)");
    for p in [2u64, 3] {
        let r = fine_exceptions(p, 0.4, 10_000).unwrap();
        println!(
            "  p = {p}: {:>4} exception(s)   envelope p^3 x^(1-eps) = {:>8.1}",
            r.count, r.bound
        );
    }

    println!("\nvaluation exceptions: n <= 10^4 with v_p(C(2n,n)) <= (alpha_p - eps) log_p n");
    let r = valuation_exceptions(2, 0.3, 10_000).unwrap();
    println!(
        "  p = 2: {:>4} exception(s)   envelope p x^(1-2eps^2/log p) = {:>8.1}",
        r.count, r.bound
    );
}
