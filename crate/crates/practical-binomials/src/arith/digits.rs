//! Base-p digit extraction. The digit vectors feed the two digit theorems used
//! throughout the crate: Fine's count of binomial coefficients in a row not
//! divisible by p, and Kummer's carry count for the valuation of C(2n, n).

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::sieve::is_prime_u64;

/// Digits of a nonnegative integer in a prime base, least significant first.
///
/// The representation of 0 is the empty vector; the last digit is otherwise
/// nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitVector {
    base: u64,
    digits: Vec<u64>,
}

impl DigitVector {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Digits, least significant first.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Reconstructs the integer the digits encode.
    pub fn value(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * self.base as u128 + d as u128)
    }
}

/// Base-p digits of n, least significant first. The base must be prime.
pub fn digits_base(n: u64, p: u64) -> Result<DigitVector> {
    digits_base_wide(n as u128, p)
}

/// As [`digits_base`] for values beyond u64 (needed for 2^64 in base 3).
pub fn digits_base_wide(n: u128, p: u64) -> Result<DigitVector> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidArgument(format!("base {p} is not prime")));
    }
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push((m % p as u128) as u64);
        m /= p as u128;
    }
    Ok(DigitVector { base: p, digits })
}
