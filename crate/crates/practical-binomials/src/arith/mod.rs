//! Exact-arithmetic substrate: sieves, base-p digits, factorial and binomial
//! valuations, and saturating sum-of-divisors on factored integers.
//!
//! Everything here is a pure function of its inputs, and [`PrimeTable`] is
//! immutable after construction, so the whole module is safe to drive from
//! any number of concurrent workers.

mod digits;
mod factored;
mod sieve;
mod valuation;

pub use digits::{digits_base, digits_base_wide, DigitVector};
pub use factored::{sigma_saturating, FactoredInteger};
pub use sieve::{first_n_primes, is_prime_u64, PrimeTable, DEFAULT_SEGMENT};
pub use valuation::{binomial_valuation, factorial_valuation};

pub(crate) use factored::sigma_prime_power;
