//! The slack optimization behind the central-binomial exception exponent:
//! eta_s = (sum of alpha_p over the first s primes - 1) / (sum of
//! sqrt(log p)). The maximum over s lands at s = 16 and yields the exponent
//! 1 - 2 eta^2 just under 0.88097.
//!
//!     cargo run --release --example eta_optimization

use practical_binomials::bounds::{eta_profile, optimize_eta, EtaOutcome};

fn main() {
    let search = optimize_eta(200).unwrap();
    println!("best s = {}", search.best_s);
    println!("eta    = {:.12}", search.best.eta);
    println!("1-2e^2 = {:.12}", search.best.exponent);
    println!("alpha sum = {:.12}", search.best.alpha_sum);

    println!("\n  s   eta_s (around the optimum)");
    for (s, eta) in search.curve.iter().filter(|(s, _)| (10..=22).contains(s)) {
        let marker = if *s == search.best_s { "  <-- max" } else { "" };
        match eta {
            Some(e) => println!(" {s:>3}  {e:.12}{marker}"),
            None => println!(" {s:>3}  (alpha sum below 1)"),
        }
    }

    match eta_profile(16) {
        EtaOutcome::Applicable(p) => {
            println!("\nslack per prime at s = 16 (all must lie in (0, 1/2)):");
            for (prime, eps) in p.primes.iter().zip(&p.epsilons) {
                println!("  p = {prime:>3}: eps = {eps:.6}");
            }
            let residual: f64 = p
                .primes
                .iter()
                .zip(&p.epsilons)
                .map(|(&q, &e)| practical_binomials::bounds::alpha_p_f64(q) - e)
                .sum::<f64>()
                - 1.0;
            println!("sum(alpha - eps) - 1 = {residual:+.3e} (forced to 0 by construction)");
        }
        EtaOutcome::NotApplicable { .. } => unreachable!("s = 16 always applies"),
    }
}
