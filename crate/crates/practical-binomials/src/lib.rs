//! # practical-binomials
//!
//! Practicality of binomial coefficients at desk scale. A *practical number*
//! is a positive integer n such that every positive integer below n is a sum
//! of distinct divisors of n. This crate decides practicality for binomial
//! coefficients without ever materializing them: rows of Pascal's triangle
//! and central binomial coefficients C(2n, n) are handled entirely in
//! factored form, driven by digit theorems (Fine's row count, Kummer's carry
//! count) and by the classical sum-of-divisors chain criterion.
//!
//! ## Modules
//!
//! - [`arith`] — sieves with smallest-prime-factor tables, base-p digits,
//!   Legendre valuations, saturating sum-of-divisors.
//! - [`practical`] — the definition-level subset-sum oracle, the factored
//!   chain test, and three composition rules with checkable preconditions.
//! - [`rows`] — row n in factored form, the statistic f(n) counting
//!   non-practical entries, Fine's digit-product count and its brute-force
//!   cross-check.
//! - [`central`] — valuations of C(2n, n) by digit counting, the two-stage
//!   practicality decision with its d-shortcut, parallel range scans, and
//!   the base-3 search over powers of two.
//! - [`bounds`] — the analytic side as executable formulas: kappa, omega_p,
//!   alpha_p, Hoeffding tails checked in exact rationals, the eta slack
//!   optimization (maximized at s = 16), and empirical exception reports.
//! - [`verify`] — named cross-check suites behind `verify --suite <name>`.
//! - [`report`] — serializable report types with a stable JSON schema.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release --example practicality_basics
//! cargo run --release --example composition_rules
//! cargo run --release --example row_profiles
//! cargo run --release --example central_scan -- 100000
//! cargo run --release --example kummer_digits
//! cargo run --release --example eta_optimization
//! cargo run --release --example tail_bounds
//! cargo run --release --example bound_reports
//! cargo run --release --example pow2_base3
//! ```
//!
//! The thin `pracbin` binary exposes the same operations as subcommands with
//! JSON or CSV output; see the repository README.
//!
//! ## Quick start
//!
//! ```
//! use practical_binomials::arith::PrimeTable;
//! use practical_binomials::rows::row_profile;
//! use practical_binomials::central::scan_central;
//!
//! let table = PrimeTable::new(1024).unwrap();
//! let row = row_profile(8, &table, &[]).unwrap();
//! assert_eq!(row.f, 1); // only C(8, 4) = 70 is not practical
//!
//! let scan = scan_central(300, 16, None).unwrap();
//! assert_eq!(scan.exceptions, vec![4, 10, 256]);
//! ```

pub mod arith;
pub mod bounds;
pub mod central;
pub mod practical;
pub mod report;
pub mod rows;
pub mod verify;

/// Errors across the crate: argument validation and explicit scale ceilings.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use arith::{DigitVector, FactoredInteger, PrimeTable};
pub use practical::PracticalityVerdict;
pub use report::{ScanReport, VerifyReport};
