//! Analytic scaffolding as executable formulas: the primorial index kappa,
//! the digit exponents omega_p and alpha_p, the Hoeffding tail bound with an
//! exact-rational small-case checker, the eta slack optimization, and
//! empirical exception reports for the row and sum bounds.
//!
//! Everything here is double precision except alpha_p and the exact binomial
//! tail, which use rationals: the tail-domination check is only meaningful
//! when the left side is computed without rounding. Exception reports assert
//! nothing beyond proof-visible constants; asymptotic statements with
//! unspecified constants are emitted as measurements, not checks.

use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{first_n_primes, is_prime_u64, PrimeTable};
use crate::rows::f_values_up_to;
use crate::{Error, Result};

/// ln 2, the natural bound on the row-exponent parameters.
pub const LN_2: f64 = std::f64::consts::LN_2;

/// Smallest k >= 1 with p_1 * ... * p_k >= x.
pub fn kappa(x: f64) -> u64 {
    assert!(x >= 1.0, "kappa requires x >= 1");
    let (k, _) = kappa_with_prime(x);
    k
}

/// kappa(x) together with the k-th prime itself.
pub fn kappa_with_prime(x: f64) -> (u64, u64) {
    assert!(x >= 1.0, "kappa requires x >= 1");
    // Exact integer comparison while the primorial fits; log-space beyond.
    let mut primes = first_n_primes(16);
    if x <= 1e30 {
        let target = x.ceil() as u128;
        let mut product: u128 = 1;
        let mut k = 0usize;
        loop {
            if k == primes.len() {
                primes = first_n_primes(primes.len() * 2);
            }
            product = product.saturating_mul(primes[k] as u128);
            k += 1;
            if product >= target {
                return (k as u64, primes[k - 1]);
            }
        }
    }
    let target = x.ln();
    let mut log_sum = 0.0f64;
    let mut k = 0usize;
    loop {
        if k == primes.len() {
            primes = first_n_primes(primes.len() * 2);
        }
        log_sum += (primes[k] as f64).ln();
        k += 1;
        if log_sum >= target {
            return (k as u64, primes[k - 1]);
        }
    }
}

/// omega_p = log((p + 1)/2) / log p, the exponent governing typical growth of
/// the Fine count.
pub fn omega_p(p: u64) -> f64 {
    debug_assert!(is_prime_u64(p), "{p} is not prime");
    ((p as f64 + 1.0) / 2.0).ln() / (p as f64).ln()
}

/// alpha_p = ceil((p - 1)/2) / p: the probability that a uniform base-p digit
/// exceeds (p - 1)/2. Exact rational.
pub fn alpha_p(p: u64) -> Ratio<u64> {
    debug_assert!(is_prime_u64(p), "{p} is not prime");
    Ratio::new((p - 1).div_ceil(2), p)
}

/// The Hoeffding bound e^{-2 eps^2 j} on P[X <= (alpha - eps) j] for a
/// binomial X with j trials.
pub fn hoeffding_tail(trials: u64, epsilon: f64) -> f64 {
    assert!(epsilon > 0.0, "epsilon must be positive");
    (-2.0 * epsilon * epsilon * trials as f64).exp()
}

/// Exact P[X <= threshold] for X ~ Binomial(trials, success), in rationals.
pub fn binomial_lower_tail(trials: u64, success: &BigRational, threshold: &BigRational) -> BigRational {
    if threshold.is_negative() {
        return BigRational::zero();
    }
    let top = threshold.floor().to_integer();
    let top = if top >= trials.into() {
        trials
    } else {
        top.to_u64().expect("floor fits u64 when below trials")
    };
    let fail = BigRational::one() - success;
    let mut coeff = BigUint::one();
    let mut tail = BigRational::zero();
    for i in 0..=top {
        if i > 0 {
            coeff = coeff * BigUint::from(trials - i + 1) / BigUint::from(i);
        }
        let term = BigRational::from_integer(coeff.clone().into())
            * success.pow(i as i32)
            * fail.pow((trials - i) as i32);
        tail += term;
    }
    tail
}

/// One case of the tail-domination check: exact tail at threshold
/// (alpha - eps) * j against the Hoeffding bound converted to an exact
/// rational. Returns (tail, bound, tail <= bound).
pub fn hoeffding_domination_case(
    trials: u64,
    alpha: Ratio<u64>,
    eps: Ratio<u64>,
) -> (BigRational, BigRational, bool) {
    let alpha_big = BigRational::new((*alpha.numer()).into(), (*alpha.denom()).into());
    let eps_big = BigRational::new((*eps.numer()).into(), (*eps.denom()).into());
    let threshold = (alpha_big.clone() - eps_big) * BigRational::from_integer(trials.into());
    let tail = binomial_lower_tail(trials, &alpha_big, &threshold);
    let eps_f = *eps.numer() as f64 / *eps.denom() as f64;
    let bound = BigRational::from_float(hoeffding_tail(trials, eps_f))
        .expect("Hoeffding bound is finite");
    let ok = tail <= bound;
    (tail, bound, ok)
}

/// The optimized slack parameters over the first s primes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EtaProfile {
    pub s: u32,
    pub primes: Vec<u64>,
    pub alpha_sum: f64,
    /// eta = (sum alpha_{p_i} - 1) / (sum sqrt(log p_i)).
    pub eta: f64,
    /// eps_j = eta * sqrt(log p_j); the construction forces
    /// sum_j (alpha_j - eps_j) = 1.
    pub epsilons: Vec<f64>,
    /// 1 - 2 eta^2: the tail exponent the profile yields.
    pub exponent: f64,
}

/// eta is only meaningful when the alpha sum clears 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum EtaOutcome {
    Applicable(EtaProfile),
    NotApplicable { s: u32, alpha_sum: f64 },
}

impl EtaOutcome {
    pub fn profile(&self) -> Option<&EtaProfile> {
        match self {
            EtaOutcome::Applicable(p) => Some(p),
            EtaOutcome::NotApplicable { .. } => None,
        }
    }
}

/// Slack profile over the first s primes.
pub fn eta_profile(s: u32) -> EtaOutcome {
    assert!(s >= 1, "s must be positive");
    let primes = first_n_primes(s as usize);
    let alpha_sum: f64 = primes.iter().map(|&p| alpha_p_f64(p)).sum();
    if alpha_sum <= 1.0 {
        return EtaOutcome::NotApplicable { s, alpha_sum };
    }
    let sqrt_sum: f64 = primes.iter().map(|&p| (p as f64).ln().sqrt()).sum();
    let eta = (alpha_sum - 1.0) / sqrt_sum;
    let epsilons = primes.iter().map(|&p| eta * (p as f64).ln().sqrt()).collect();
    EtaOutcome::Applicable(EtaProfile {
        s,
        primes,
        alpha_sum,
        eta,
        epsilons,
        exponent: 1.0 - 2.0 * eta * eta,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EtaSearch {
    pub s_max: u32,
    pub best_s: u32,
    pub best: EtaProfile,
    /// eta per s; None where the alpha sum does not clear 1.
    pub curve: Vec<(u32, Option<f64>)>,
}

/// Scans s = 1..=s_max and returns the s maximizing eta.
pub fn optimize_eta(s_max: u32) -> Result<EtaSearch> {
    if s_max < 16 {
        return Err(Error::InvalidArgument(format!(
            "search range must include the expected optimum; s_max = {s_max} < 16"
        )));
    }
    let mut curve = Vec::with_capacity(s_max as usize);
    let mut best: Option<EtaProfile> = None;
    for s in 1..=s_max {
        match eta_profile(s) {
            EtaOutcome::Applicable(p) => {
                curve.push((s, Some(p.eta)));
                if best.as_ref().is_none_or(|b| p.eta > b.eta) {
                    best = Some(p);
                }
            }
            EtaOutcome::NotApplicable { .. } => curve.push((s, None)),
        }
    }
    let best = best.expect("alpha sum clears 1 well before s = 16");
    Ok(EtaSearch {
        s_max,
        best_s: best.s,
        best,
        curve,
    })
}

/// Parameters for the row exception bound, 0 < gamma < delta < log 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    delta: f64,
    gamma: f64,
}

impl BoundParams {
    pub fn new(delta: f64, gamma: f64) -> Result<Self> {
        if !(0.0 < gamma && gamma < delta && delta < LN_2) {
            return Err(Error::InvalidArgument(format!(
                "need 0 < gamma < delta < log 2, got gamma = {gamma}, delta = {delta}"
            )));
        }
        Ok(BoundParams { delta, gamma })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Exhaustive census of rows violating f(n) < n^{1 - (log 2 - delta)/log log n}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowExceptionReport {
    pub limit: u64,
    pub delta: f64,
    pub gamma: f64,
    pub exception_count: u64,
    pub exceptions: Vec<u64>,
    /// The envelope x^{1 - (delta - gamma)/log log x} quoted for comparison;
    /// the implied constant is unspecified, so this is a measurement.
    pub envelope: f64,
}

/// Computes f(n) for 3 <= n <= limit and counts bound violations.
pub fn row_exception_report(limit: u64, params: BoundParams) -> Result<RowExceptionReport> {
    if limit < 3 {
        return Err(Error::InvalidArgument(format!(
            "row census needs limit >= 3, got {limit}"
        )));
    }
    let table = PrimeTable::new(limit.max(2))?;
    let f = f_values_up_to(limit, &table)?;
    let mut exceptions = Vec::new();
    for n in 3..=limit {
        let bound = row_bound(n, params.delta);
        if f[n as usize] as f64 >= bound {
            exceptions.push(n);
        }
    }
    let x = limit as f64;
    let envelope = x.powf(1.0 - (params.delta - params.gamma) / x.ln().ln());
    Ok(RowExceptionReport {
        limit,
        delta: params.delta,
        gamma: params.gamma,
        exception_count: exceptions.len() as u64,
        exceptions,
        envelope,
    })
}

/// The row bound n^{1 - (log 2 - delta)/log log n} for n >= 3.
pub fn row_bound(n: u64, delta: f64) -> f64 {
    let nf = n as f64;
    nf.powf(1.0 - (LN_2 - delta) / nf.ln().ln())
}

/// Exact sum of f(n) up to each requested limit, with the envelope
/// x^{2 - (log 2 / 2 - eps)/log log x}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowSumReport {
    pub epsilon: f64,
    pub rows: Vec<RowSumPoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RowSumPoint {
    pub limit: u64,
    pub sum_f: u64,
    pub envelope: f64,
    /// sum_f / limit^2: decays, since almost all entries are practical.
    pub density: f64,
}

/// Sums f(n) over n <= limit for each limit in `limits` (single row pass at
/// the largest one).
pub fn row_sum_report(limits: &[u64], epsilon: f64) -> Result<RowSumReport> {
    if limits.is_empty() {
        return Err(Error::InvalidArgument("no limits given".into()));
    }
    if epsilon <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    let mut sorted = limits.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let max = *sorted.last().expect("nonempty");
    if max < 3 {
        return Err(Error::InvalidArgument("largest limit must be >= 3".into()));
    }
    let table = PrimeTable::new(max)?;
    let f = f_values_up_to(max, &table)?;
    let mut rows = Vec::with_capacity(sorted.len());
    let mut running = 0u64;
    let mut next = 1u64;
    for &limit in &sorted {
        while next <= limit {
            running += f[next as usize];
            next += 1;
        }
        let x = limit as f64;
        rows.push(RowSumPoint {
            limit,
            sum_f: running,
            envelope: x.powf(2.0 - (0.5 * LN_2 - epsilon) / x.ln().ln()),
            density: running as f64 / (x * x),
        });
    }
    Ok(RowSumReport { epsilon, rows })
}

/// One row of the kappa growth table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KappaRow {
    pub x: f64,
    pub kappa: u64,
    pub p_kappa: u64,
    /// kappa(x) * log log x / log x; tends to 1 very slowly.
    pub kappa_ratio: f64,
    /// p_{kappa(x)} / log x; tends to 1 very slowly.
    pub p_ratio: f64,
}

/// Tabulates kappa growth for each x (x >= 16 so log log x is comfortably
/// positive). Convergence of both ratios to 1 is far beyond desk scale; the
/// table is a measurement.
pub fn kappa_table(xs: &[f64]) -> Result<Vec<KappaRow>> {
    if let Some(&bad) = xs.iter().find(|&&x| !x.is_finite() || x < 16.0) {
        return Err(Error::InvalidArgument(format!(
            "kappa table needs x >= 16, got {bad}"
        )));
    }
    Ok(xs
        .iter()
        .map(|&x| {
            let (k, p) = kappa_with_prime(x);
            KappaRow {
                x,
                kappa: k,
                p_kappa: p,
                kappa_ratio: k as f64 * x.ln().ln() / x.ln(),
                p_ratio: p as f64 / x.ln(),
            }
        })
        .collect())
}

/// Where the proof-chain inequalities start holding, found empirically.
///
/// `omega_holds_from`: least N with omega_{p_kappa(n)} < 1 - (log 2 -
/// gamma/4)/log log n for all n in [N, limit]; `kappa_holds_from` the same
/// for log kappa(n)/log n < (gamma/4)/log log n. Neither threshold comes from
/// the source inequalities themselves, which are only claimed for n large.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossoverReport {
    pub gamma: f64,
    pub limit: u64,
    pub omega_holds_from: Option<u64>,
    pub kappa_holds_from: Option<u64>,
}

/// Empirical crossover points for the two proof-chain inequalities, scanned
/// over 3 <= n <= limit. kappa(n) is constant between primorials, so each
/// interval is settled by bisection instead of a linear walk.
pub fn kappa_omega_crossover(gamma: f64, limit: u64) -> Result<CrossoverReport> {
    if !(gamma > 0.0 && gamma < LN_2) {
        return Err(Error::InvalidArgument(format!(
            "gamma must lie in (0, log 2), got {gamma}"
        )));
    }
    if limit < 3 {
        return Err(Error::InvalidArgument("limit must be >= 3".into()));
    }
    let omega_ineq = |n: u64, k: u64, p_k: u64| -> bool {
        let _ = k;
        omega_p(p_k) < 1.0 - (LN_2 - gamma / 4.0) / (n as f64).ln().ln()
    };
    let kappa_ineq = |n: u64, k: u64, _p_k: u64| -> bool {
        (k as f64).ln() / (n as f64).ln() < (gamma / 4.0) / (n as f64).ln().ln()
    };
    let omega_from = last_failure_over_intervals(limit, &omega_ineq).map(|n| n + 1);
    let kappa_from = last_failure_over_intervals(limit, &kappa_ineq).map(|n| n + 1);
    Ok(CrossoverReport {
        gamma,
        limit,
        omega_holds_from: omega_from.filter(|&n| n <= limit),
        kappa_holds_from: kappa_from.filter(|&n| n <= limit),
    })
}

/// Largest n in [3, limit] where `ineq(n, kappa(n), p_kappa(n))` fails, or
/// None if it never fails (in which case it holds from 3 on). If the largest
/// failure is `limit` itself the inequality never stabilizes in range.
fn last_failure_over_intervals(limit: u64, ineq: &dyn Fn(u64, u64, u64) -> bool) -> Option<u64> {
    let primes = first_n_primes(64);
    let mut last_failure: Option<u64> = None;
    let mut primorial: u128 = 1;
    let mut lo = 3u64; // interval start for kappa = k
    for (i, &p) in primes.iter().enumerate() {
        let k = (i + 1) as u64;
        primorial = primorial.saturating_mul(p as u128);
        let hi = primorial.min(limit as u128) as u64;
        if lo > hi {
            if primorial >= limit as u128 {
                break;
            }
            lo = (primorial as u64) + 1;
            continue;
        }
        // Within the interval the inequality is monotone-tailed: find the
        // largest failing n by checking hi first, then bisecting the
        // boundary between a failing prefix and a holding suffix.
        if !ineq(hi, k, p) {
            last_failure = Some(hi);
        } else {
            let (mut bad, mut good) = (None, hi);
            if !ineq(lo, k, p) {
                bad = Some(lo);
            }
            if let Some(mut b) = bad {
                while good - b > 1 {
                    let mid = b + (good - b) / 2;
                    if ineq(mid, k, p) {
                        good = mid;
                    } else {
                        b = mid;
                    }
                }
                last_failure = Some(b.max(last_failure.unwrap_or(0)));
            }
        }
        if primorial >= limit as u128 {
            break;
        }
        lo = (primorial as u64) + 1;
    }
    last_failure
}

/// Strict monotonicity check of omega over the first `count` primes;
/// used by the verification suite.
pub fn omega_strictly_increasing(count: usize) -> bool {
    let primes = first_n_primes(count);
    primes.windows(2).all(|w| omega_p(w[0]) < omega_p(w[1]))
}

/// alpha_p as a double, for the floating-point formulas.
pub fn alpha_p_f64(p: u64) -> f64 {
    let a = alpha_p(p);
    *a.numer() as f64 / *a.denom() as f64
}
