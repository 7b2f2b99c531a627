//! Named verification suites behind `verify --suite <name>`: each one runs a
//! batch of cross-checks between independent routes (definition oracle vs
//! chain test, digit formulas vs Legendre sums, exact tails vs bounds) and
//! collects report-grade measurements alongside the hard assertions.

use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::json;

use crate::arith::{factorial_valuation, FactoredInteger, PrimeTable};
use crate::bounds::{
    self, eta_profile, hoeffding_domination_case, kappa_omega_crossover, kappa_table,
    omega_strictly_increasing, optimize_eta, BoundParams, EtaOutcome,
};
use crate::central::central_valuation;
use crate::practical::{
    is_practical_factored, is_practical_oracle_within, practical_times_small, RuleOutcome,
};
use crate::report::VerifyReport;
use crate::rows::{fine_count, fine_count_bruteforce, fine_exceptions, first_nonpractical_k};
use crate::{central, Error, Result};

/// Suites exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Fine,
    Kummer,
    Eta,
    Bounds,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Fine => "fine",
            Suite::Kummer => "kummer",
            Suite::Eta => "eta",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }

    pub fn parse(name: &str) -> Result<Suite> {
        match name {
            "oracle" => Ok(Suite::Oracle),
            "fine" => Ok(Suite::Fine),
            "kummer" => Ok(Suite::Kummer),
            "eta" => Ok(Suite::Eta),
            "bounds" => Ok(Suite::Bounds),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!("unknown suite '{other}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Range of the oracle / chain agreement sweep.
    pub oracle_agreement_limit: u64,
    /// Hard ceiling on oracle invocations (PRACTICAL_ORACLE_LIMIT).
    pub oracle_ceiling: u64,
    /// Range for the practical-number density measurement.
    pub practical_count_limit: u64,
    /// Limits for the row-sum density table.
    pub row_sum_limits: Vec<u64>,
    /// Range for the row-bound exception census.
    pub row_census_limit: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            oracle_agreement_limit: 10_000,
            oracle_ceiling: crate::practical::DEFAULT_ORACLE_LIMIT,
            practical_count_limit: 100_000,
            row_sum_limits: vec![100, 1_000, 10_000],
            row_census_limit: 2_000,
        }
    }
}

/// Runs one suite and reports its checks and measurements.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerifyReport> {
    let started = Instant::now();
    let mut report = match suite {
        Suite::Oracle => oracle_suite(cfg)?,
        Suite::Fine => fine_suite()?,
        Suite::Kummer => kummer_suite()?,
        Suite::Eta => eta_suite()?,
        Suite::Bounds => bounds_suite(cfg)?,
        Suite::All => {
            let mut all = VerifyReport::new("all");
            for s in [Suite::Oracle, Suite::Fine, Suite::Kummer, Suite::Eta, Suite::Bounds] {
                all.merge(run_suite(s, cfg)?);
            }
            all
        }
    };
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

fn oracle_suite(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("oracle");
    let limit = cfg.oracle_agreement_limit;
    if limit > cfg.oracle_ceiling {
        return Err(Error::LimitExceeded(format!(
            "agreement limit {limit} exceeds oracle ceiling {}",
            cfg.oracle_ceiling
        )));
    }
    let table = PrimeTable::new(limit.max(2))?;

    // Definition-level oracle against the factored chain test, every n.
    let disagreements: Vec<u64> = (1..=limit)
        .into_par_iter()
        .filter(|&n| {
            let oracle = is_practical_oracle_within(n, cfg.oracle_ceiling)
                .expect("n is within the ceiling")
                .practical;
            let chain = is_practical_factored(&table.factor(n)).practical;
            oracle != chain
        })
        .collect();
    report.check(
        "oracle-chain-agreement",
        disagreements.is_empty(),
        format!(
            "oracle and chain test agree on [1, {limit}]; disagreements: {:?}",
            &disagreements[..disagreements.len().min(10)]
        ),
    );

    let practicals: Vec<u64> = (1..=limit)
        .into_par_iter()
        .filter(|&n| is_practical_factored(&table.factor(n)).practical)
        .collect();
    let div46 = practicals
        .iter()
        .filter(|&&n| n >= 3)
        .all(|&n| n % 4 == 0 || n % 6 == 0);
    report.check(
        "practical-divisible-by-4-or-6",
        div46,
        format!("every practical n in [3, {limit}] is divisible by 4 or 6"),
    );
    let parity = practicals.iter().all(|&n| n == 1 || n % 2 == 0);
    report.check(
        "practical-parity",
        parity,
        "1 is the only odd practical number in range".into(),
    );

    // Product rule on a deterministic pair sweep: for practical m and
    // n <= 2m, the product must pass the chain test.
    let small_practicals: Vec<u64> = (1..=1000u64)
        .filter(|&n| is_practical_factored(&table.factor(n)).practical)
        .collect();
    let mut pairs_checked = 0u64;
    let mut rule_ok = true;
    for &m in &small_practicals {
        for n in [1, 2, m / 2 + 1, m, 2 * m - 1, 2 * m] {
            if n == 0 || n > 2 * m {
                continue;
            }
            match practical_times_small(&table.factor(m), n) {
                RuleOutcome::Applies { verdict, .. } => rule_ok &= verdict.practical,
                RuleOutcome::NotApplicable { .. } => rule_ok = false,
            }
            pairs_checked += 1;
        }
    }
    report.check(
        "product-rule",
        rule_ok && pairs_checked >= 500,
        format!("{pairs_checked} (practical m, n <= 2m) pairs all yield practical products"),
    );

    // Density of practical numbers: count / (x / log x) approaches a
    // constant around 1.34 in the literature. Measurement only.
    let big = cfg.practical_count_limit;
    let big_table = PrimeTable::new(big.max(2))?;
    let count = (1..=big)
        .into_par_iter()
        .filter(|&n| is_practical_factored(&big_table.factor(n)).practical)
        .count() as u64;
    let x = big as f64;
    report.measure(
        "practical-count",
        json!({ "limit": big, "count": count, "c-estimate": count as f64 / (x / x.ln()) }),
    );
    Ok(report)
}

fn fine_suite() -> Result<VerifyReport> {
    let mut report = VerifyReport::new("fine");
    let mismatches: Vec<(u64, u64)> = (0..=2000u64)
        .into_par_iter()
        .flat_map_iter(|n| [2u64, 3, 5, 7].into_iter().map(move |p| (n, p)))
        .filter(|&(n, p)| fine_count(n, p).unwrap() != fine_count_bruteforce(n, p).unwrap())
        .collect();
    report.check(
        "fine-digit-product",
        mismatches.is_empty(),
        format!(
            "digit product equals the direct row count for n <= 2000, p in {{2,3,5,7}}; mismatches: {:?}",
            &mismatches[..mismatches.len().min(5)]
        ),
    );

    let mut cap_ok = true;
    for p in [2u64, 3, 5, 7] {
        for n in 1..=2000u64 {
            let t = fine_count(n, p)?;
            let dv = crate::arith::digits_base(n, p)?;
            let ds = dv.digits();
            let lower_max = ds[..ds.len() - 1].iter().all(|&d| d == p - 1);
            cap_ok &= t <= n + 1 && ((t == n + 1) == lower_max);
        }
    }
    report.check(
        "fine-count-cap",
        cap_ok,
        "count is at most n + 1, with equality exactly when all non-leading digits are maximal".into(),
    );
    Ok(report)
}

fn kummer_suite() -> Result<VerifyReport> {
    let mut report = VerifyReport::new("kummer");
    let limit = 100_000u64;
    let mismatches: Vec<(u64, u64)> = (1..=limit)
        .into_par_iter()
        .flat_map_iter(|n| [2u64, 3, 5, 7, 11, 13].into_iter().map(move |p| (n, p)))
        .filter(|&(n, p)| {
            central_valuation(n, p) != factorial_valuation(2 * n, p) - 2 * factorial_valuation(n, p)
        })
        .collect();
    report.check(
        "kummer-digit-count",
        mismatches.is_empty(),
        format!(
            "digit count equals the Legendre valuation for n <= {limit}, p in {{2,3,5,7,11,13}}; mismatches: {:?}",
            &mismatches[..mismatches.len().min(5)]
        ),
    );

    let even = (1..=limit).into_par_iter().all(|n| central_valuation(n, 2) >= 1);
    report.check(
        "central-binomial-even",
        even,
        "the central binomial coefficient is always even".into(),
    );

    // Shortcut soundness: wherever the d-shortcut settles a verdict, the
    // full factorization (rebuilt here from scratch) agrees.
    let table = PrimeTable::new(20_000)?;
    let unsound: Vec<u64> = (1..=10_000u64)
        .into_par_iter()
        .filter(|&n| {
            let verdict = central::central_is_practical(n, 16, &table).unwrap();
            if verdict.method != central::CentralMethod::FastDShortcut {
                return false;
            }
            let pairs: Vec<(u64, u32)> = table
                .primes_upto(2 * n)
                .iter()
                .map(|&p| (p, central_valuation(n, p) as u32))
                .filter(|&(_, e)| e > 0)
                .collect();
            let full = FactoredInteger::from_sorted_unchecked(pairs);
            is_practical_factored(&full).practical != verdict.practical
        })
        .collect();
    report.check(
        "shortcut-soundness",
        unsound.is_empty(),
        format!("d-shortcut verdicts match the full factorization; violations: {unsound:?}"),
    );
    Ok(report)
}

fn eta_suite() -> Result<VerifyReport> {
    let mut report = VerifyReport::new("eta");
    let search = optimize_eta(100)?;
    report.check(
        "eta-optimum",
        search.best_s == 16,
        format!("eta is maximized at s = {} (expected 16)", search.best_s),
    );
    let profile = &search.best;
    report.check(
        "eta-epsilons-in-range",
        profile.epsilons.iter().all(|&e| e > 0.0 && e < 0.5),
        format!(
            "all slack values in (0, 1/2); largest = {:.6}",
            profile.epsilons.last().copied().unwrap_or(0.0)
        ),
    );
    report.check(
        "eta-exponent",
        profile.exponent < 0.88097,
        format!("1 - 2 eta^2 = {:.10} < 0.88097", profile.exponent),
    );
    let mut norm_ok = true;
    for s in 1..=100u32 {
        if let EtaOutcome::Applicable(p) = eta_profile(s) {
            let residual: f64 = p
                .primes
                .iter()
                .zip(&p.epsilons)
                .map(|(&q, &e)| bounds::alpha_p_f64(q) - e)
                .sum::<f64>()
                - 1.0;
            norm_ok &= residual.abs() < 1e-12;
        }
    }
    report.check(
        "eta-normalization",
        norm_ok,
        "sum of (alpha_j - eps_j) is 1 to 1e-12 wherever eta applies".into(),
    );
    report.measure(
        "eta",
        json!({ "best_s": search.best_s, "eta": profile.eta, "exponent": profile.exponent }),
    );
    Ok(report)
}

fn bounds_suite(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("bounds");

    // Exact binomial tails against the Hoeffding bound, j <= 20.
    let mut domination_ok = true;
    let mut worst_margin = f64::INFINITY;
    for trials in 1..=20u64 {
        for alpha in [Ratio::new(1u64, 2), Ratio::new(1, 3), Ratio::new(2, 5)] {
            for k in 1..=9u64 {
                let (tail, bound, ok) = hoeffding_domination_case(trials, alpha, Ratio::new(k, 20));
                domination_ok &= ok;
                let t = rational_to_f64(&tail);
                let b = rational_to_f64(&bound);
                if b > 0.0 {
                    worst_margin = worst_margin.min(b - t);
                }
            }
        }
    }
    report.check(
        "hoeffding-domination",
        domination_ok,
        format!("exact tails below e^(-2 eps^2 j) on the full grid; slimmest margin {worst_margin:.3e}"),
    );

    // Proof-visible exception envelopes, exhaustively counted.
    for (p, eps) in [(2u64, 0.4), (3, 0.4)] {
        let r = fine_exceptions(p, eps, 10_000)?;
        report.check(
            &format!("tp-exceptions-p{p}"),
            r.within_bound(),
            format!("{} exceptions <= envelope {:.1}", r.count, r.bound),
        );
    }
    let r = central::valuation_exceptions(2, 0.3, 10_000)?;
    report.check(
        "beta-exceptions-p2",
        r.within_bound(),
        format!("{} exceptions <= envelope {:.1}", r.count, r.bound),
    );

    report.check(
        "omega-monotone",
        omega_strictly_increasing(1000),
        "omega is strictly increasing over the first 1000 primes".into(),
    );

    // kappa growth ratios stay in a loose band at desk scale.
    let xs: Vec<f64> = (2..=8).map(|e| 10f64.powi(e)).collect();
    let rows = kappa_table(&xs)?;
    let in_band = rows
        .iter()
        .all(|r| (0.5..2.5).contains(&r.kappa_ratio) && (0.5..2.5).contains(&r.p_ratio));
    report.check(
        "kappa-ratio-band",
        in_band,
        "kappa and p_kappa growth ratios lie in [0.5, 2.5] for x in [1e2, 1e8]".into(),
    );
    report.measure("kappa-table", serde_json::to_value(&rows).unwrap());

    // Row-bound census. Rows 2^k - 1 have f = n - 1 and must violate the
    // bound at this scale; the total count is a measurement (the implied
    // constant in the exception estimate is unspecified).
    let params = BoundParams::new(0.6, 0.3)?;
    let census = bounds::row_exception_report(cfg.row_census_limit, params)?;
    let mersenne_ok = (2..)
        .map(|k| (1u64 << k) - 1)
        .take_while(|&n| n <= cfg.row_census_limit)
        .all(|n| census.exceptions.contains(&n));
    report.check(
        "row-census-mersenne",
        mersenne_ok,
        "rows 2^k - 1 all violate the row bound in range".into(),
    );
    report.measure(
        "row-census",
        json!({
            "limit": census.limit,
            "delta": census.delta,
            "gamma": census.gamma,
            "exception-count": census.exception_count,
            "envelope": census.envelope,
        }),
    );

    // Row-sum densities: sum f(n) grows strictly slower than x^2.
    let sums = bounds::row_sum_report(&cfg.row_sum_limits, 0.1)?;
    report.measure("row-sums", serde_json::to_value(&sums.rows).unwrap());

    // Where the proof-chain inequalities start holding, empirically.
    let crossover = kappa_omega_crossover(0.3, 1_000_000)?;
    report.measure("crossover", serde_json::to_value(&crossover).unwrap());

    // Power-of-2 necessity: rows with no non-practical entry up to 10^4.
    let table = PrimeTable::new(10_000)?;
    let zero_f: Vec<u64> = (1..=10_000u64)
        .into_par_iter()
        .filter(|&n| first_nonpractical_k(n, &table).unwrap().is_none())
        .collect();
    let all_pow2 = zero_f.iter().all(|&n| n.is_power_of_two());
    report.check(
        "zero-f-rows-are-powers-of-two",
        all_pow2,
        format!("rows with every entry practical: {zero_f:?}"),
    );
    report.measure("zero-f-rows", serde_json::to_value(&zero_f).unwrap());
    Ok(report)
}

fn rational_to_f64(r: &num_rational::BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Oracle, Suite::Fine, Suite::Kummer, Suite::Eta, Suite::Bounds, Suite::All] {
            assert_eq!(Suite::parse(s.name()).unwrap(), s);
        }
        assert!(Suite::parse("nosuch").is_err());
    }

    #[test]
    fn eta_suite_passes() {
        let report = run_suite(Suite::Eta, &VerifyConfig::default()).unwrap();
        assert!(report.passed, "{:?}", report.checks);
    }

    #[test]
    fn fine_suite_passes() {
        let report = run_suite(Suite::Fine, &VerifyConfig::default()).unwrap();
        assert!(report.passed, "{:?}", report.checks);
    }

    #[test]
    fn oracle_suite_passes_at_reduced_scale() {
        let cfg = VerifyConfig {
            oracle_agreement_limit: 2_000,
            practical_count_limit: 10_000,
            ..VerifyConfig::default()
        };
        let report = run_suite(Suite::Oracle, &cfg).unwrap();
        assert!(report.passed, "{:?}", report.checks);
    }

    #[test]
    fn oracle_suite_respects_ceiling() {
        let cfg = VerifyConfig {
            oracle_agreement_limit: 100,
            oracle_ceiling: 50,
            ..VerifyConfig::default()
        };
        assert!(matches!(
            run_suite(Suite::Oracle, &cfg),
            Err(Error::LimitExceeded(_))
        ));
    }
}
