//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its measured wall time (visible with `--nocapture`).
//! Correctness is asserted exactly; the printed timings document that each
//! criterion also meets its time budget on a desk machine.
//!
//! The full-scale central scan (limit 10^6) is `#[ignore]`d as a slow test:
//!
//!     cargo test --release --test acceptance -- --ignored --nocapture

use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;

use practical_binomials::arith::{factorial_valuation, PrimeTable};
use practical_binomials::bounds::{
    hoeffding_domination_case, kappa_table, optimize_eta, row_exception_report, row_sum_report,
    BoundParams,
};
use practical_binomials::central::{
    central_is_practical, central_valuation, powers_of_two_base3_01, scan_central,
    valuation_exceptions,
};
use practical_binomials::practical::{is_practical_factored, is_practical_oracle};
use practical_binomials::rows::{fine_count, fine_count_bruteforce, fine_exceptions, row_profile};

fn pass(criterion: &str, detail: &str, started: Instant) {
    println!(
        "ACCEPTANCE {criterion}: PASS — {detail} ({} ms)",
        started.elapsed().as_millis()
    );
}

#[test]
fn a01_row_values() {
    let started = Instant::now();
    let table = PrimeTable::new(1024).unwrap();
    assert_eq!(row_profile(5, &table, &[]).unwrap().f, 4);
    assert_eq!(row_profile(8, &table, &[]).unwrap().f, 1);
    for k in 2..=10u32 {
        let n = (1u64 << k) - 1;
        assert_eq!(
            row_profile(n, &table, &[]).unwrap().f,
            n - 1,
            "f(2^{k} - 1) must be 2^{k} - 2"
        );
    }
    pass(
        "1 (row values)",
        "f(5) = 4, f(8) = 1, f(2^k - 1) = 2^k - 2 for k = 2..10",
        started,
    );
}

#[test]
fn a02_central_scan_ci_scale() {
    let started = Instant::now();
    let report = scan_central(10_000, 16, None).unwrap();
    assert_eq!(report.exceptions, vec![4, 10, 256]);
    assert_eq!(report.counts.values().sum::<u64>(), 10_000);
    pass(
        "2 (central scan, CI scale)",
        "scan to 10^4 finds exactly {4, 10, 256}",
        started,
    );
}

#[test]
#[ignore = "full-scale scan; run with --ignored (a few seconds in release)"]
fn a02_central_scan_full_scale() {
    let started = Instant::now();
    let report = scan_central(1_000_000, 16, None).unwrap();
    assert_eq!(report.exceptions, vec![4, 10, 256]);
    assert_eq!(report.counts.values().sum::<u64>(), 1_000_000);
    pass(
        "2 (central scan, full scale)",
        "scan to 10^6 finds exactly {4, 10, 256}",
        started,
    );
}

#[test]
fn a03_oracle_equivalence() {
    let started = Instant::now();
    let table = PrimeTable::new(10_000).unwrap();
    let bad: Vec<u64> = (1..=10_000u64)
        .into_par_iter()
        .filter(|&n| {
            is_practical_oracle(n).unwrap().practical
                != is_practical_factored(&table.factor(n)).practical
        })
        .collect();
    assert!(bad.is_empty(), "oracle/chain disagreements: {bad:?}");
    let not_div: Vec<u64> = (3..=10_000u64)
        .into_par_iter()
        .filter(|&n| {
            is_practical_factored(&table.factor(n)).practical && n % 4 != 0 && n % 6 != 0
        })
        .collect();
    assert!(not_div.is_empty(), "practical but not divisible by 4 or 6: {not_div:?}");
    pass(
        "3 (oracle equivalence)",
        "chain = subset-sum oracle on [1, 10^4]; practicals in [3, 10^4] all divisible by 4 or 6",
        started,
    );
}

#[test]
fn a04_fine_formula() {
    let started = Instant::now();
    let bad: Vec<(u64, u64)> = (0..=2000u64)
        .into_par_iter()
        .flat_map_iter(|n| [2u64, 3, 5, 7].into_iter().map(move |p| (n, p)))
        .filter(|&(n, p)| fine_count(n, p).unwrap() != fine_count_bruteforce(n, p).unwrap())
        .collect();
    assert!(bad.is_empty(), "digit product vs direct count mismatches: {bad:?}");
    pass(
        "4 (row divisibility count)",
        "digit product equals direct count for n <= 2000, p in {2,3,5,7}",
        started,
    );
}

#[test]
fn a05_kummer_legendre() {
    let started = Instant::now();
    let bad: Vec<(u64, u64)> = (1..=100_000u64)
        .into_par_iter()
        .flat_map_iter(|n| [2u64, 3, 5, 7, 11, 13].into_iter().map(move |p| (n, p)))
        .filter(|&(n, p)| {
            central_valuation(n, p) != factorial_valuation(2 * n, p) - 2 * factorial_valuation(n, p)
        })
        .collect();
    assert!(bad.is_empty(), "carry count vs Legendre mismatches: {bad:?}");
    pass(
        "5 (central valuation)",
        "carry count equals v_p((2n)!) - 2 v_p(n!) for n <= 10^5, p in {2,3,5,7,11,13}",
        started,
    );
}

#[test]
fn a06_eta_optimization() {
    let started = Instant::now();
    let search = optimize_eta(100).unwrap();
    assert_eq!(search.best_s, 16);
    assert!(search.best.epsilons.iter().all(|&e| e > 0.0 && e < 0.5));
    assert!(search.best.exponent < 0.88097);
    pass(
        "6 (eta optimization)",
        &format!(
            "optimum at s = 16, slack in (0, 1/2), exponent {:.10} < 0.88097",
            search.best.exponent
        ),
        started,
    );
}

#[test]
fn a07_hoeffding_domination() {
    let started = Instant::now();
    for trials in 1..=20u64 {
        for alpha in [Ratio::new(1u64, 2), Ratio::new(1, 3), Ratio::new(2, 5)] {
            for k in 1..=9u64 {
                let eps = Ratio::new(k, 20);
                let (tail, bound, ok) = hoeffding_domination_case(trials, alpha, eps);
                assert!(
                    ok,
                    "tail exceeds bound at j = {trials}, alpha = {alpha}, eps = {eps}: {tail} > {bound}"
                );
            }
        }
    }
    pass(
        "7 (tail domination)",
        "exact binomial tails below e^(-2 eps^2 j) for j <= 20, alpha in {1/2, 1/3, 2/5}, eps in {0.05..0.45}",
        started,
    );
}

#[test]
fn a08_pow2_base3() {
    let started = Instant::now();
    assert_eq!(powers_of_two_base3_01(64).unwrap(), vec![0, 2, 8]);
    let table = PrimeTable::new(1024).unwrap();
    for e in [2u32, 8] {
        let n = 1u64 << e;
        assert!(
            !central_is_practical(n, 16, &table).unwrap().practical,
            "C(2*{n}, {n}) must not be practical"
        );
    }
    pass(
        "8 (base-3 search)",
        "exponents {0, 2, 8} up to 64; n = 4 and n = 256 confirmed non-practical",
        started,
    );
}

#[test]
fn a09_exception_envelopes_and_reports() {
    let started = Instant::now();
    // Hard assertions: only the constants visible in the displayed
    // inequalities. The asymptotic statements carry unspecified implied
    // constants and are emitted as tables below, not gated.
    for p in [2u64, 3] {
        let r = fine_exceptions(p, 0.4, 10_000).unwrap();
        assert!(
            (r.count as f64) < r.bound,
            "T_{p} exceptions {} not below p^3 x^(1-eps) = {}",
            r.count,
            r.bound
        );
    }
    let r = valuation_exceptions(2, 0.3, 10_000).unwrap();
    assert!(
        (r.count as f64) < r.bound,
        "valuation exceptions {} not below p x^(1-2eps^2/log p) = {}",
        r.count,
        r.bound
    );

    let params = BoundParams::new(0.6, 0.3).unwrap();
    let census = row_exception_report(2_000, params).unwrap();
    println!(
        "  report: rows <= 2000 violating the f bound: {} (envelope {:.1})",
        census.exception_count, census.envelope
    );
    for k in 2..=10u32 {
        let n = (1u64 << k) - 1;
        if n <= 2_000 {
            assert!(census.exceptions.contains(&n), "row 2^{k}-1 must violate the bound");
        }
    }

    let sums = row_sum_report(&[100, 1_000, 10_000], 0.1).unwrap();
    println!("  report: row-sum densities (must be reported, not gated):");
    for row in &sums.rows {
        println!(
            "    x = {:>6}: sum f = {:>10}, sum/x^2 = {:.6}, envelope = {:.3e}",
            row.limit, row.sum_f, row.density, row.envelope
        );
    }
    assert!(
        sums.rows.windows(2).all(|w| w[0].density > w[1].density),
        "row-sum density should decrease over the sampled range"
    );

    let kappa_rows = kappa_table(&[1e2, 1e4, 1e6, 1e8]).unwrap();
    println!("  report: kappa growth ratios:");
    for row in &kappa_rows {
        println!(
            "    x = {:>8.0e}: kappa = {}, p_kappa = {}, ratios {:.3} / {:.3}",
            row.x, row.kappa, row.p_kappa, row.kappa_ratio, row.p_ratio
        );
    }
    pass(
        "9 (envelopes and reports)",
        "proof-visible envelopes hold at p in {2,3} (T_p) and p = 2 (valuation); tables emitted",
        started,
    );
}

#[test]
fn a10_scan_determinism() {
    let started = Instant::now();
    let reports: Vec<String> = [1usize, 4, 8]
        .iter()
        .map(|&t| {
            let report = scan_central(100_000, 16, Some(t)).unwrap();
            // Wall time is the one field runs cannot share.
            serde_json::to_string(&report.normalized()).unwrap()
        })
        .collect();
    assert_eq!(reports[0], reports[1], "1-thread and 4-thread scans differ");
    assert_eq!(reports[0], reports[2], "1-thread and 8-thread scans differ");
    pass(
        "10 (determinism)",
        "scan to 10^5 byte-identical across thread counts {1, 4, 8}",
        started,
    );
}
