//! p-adic valuations of factorials and binomial coefficients.
//!
//! Legendre's formula v_p(n!) = sum_{i>=1} floor(n / p^i) is the workhorse:
//! it gives binomial valuations by subtraction and doubles as the independent
//! oracle for the digit-counting formulas elsewhere in the crate.

use crate::{Error, Result};

use super::sieve::is_prime_u64;

/// v_p(n!) by Legendre's formula.
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    debug_assert!(is_prime_u64(p), "{p} is not prime");
    let mut sum = 0u64;
    let mut q = n / p;
    while q > 0 {
        sum += q;
        q /= p;
    }
    sum
}

/// v_p(C(n, k)) = v_p(n!) - v_p(k!) - v_p((n-k)!).
pub fn binomial_valuation(n: u64, k: u64, p: u64) -> Result<u64> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "binomial index k = {k} exceeds n = {n}"
        )));
    }
    let v = factorial_valuation(n, p) - factorial_valuation(k, p) - factorial_valuation(n - k, p);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial_valuation(10, 2), 8); // 5 + 2 + 1
        assert_eq!(factorial_valuation(4, 5), 0);
        assert_eq!(factorial_valuation(9, 3), 4); // 3 + 1
        assert_eq!(factorial_valuation(0, 7), 0);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_valuation(8, 4, 5).unwrap(), 1); // C(8,4) = 70
        assert_eq!(binomial_valuation(20, 10, 3).unwrap(), 0); // C(20,10) = 184756
        for n in [1u64, 5, 100] {
            assert_eq!(binomial_valuation(n, 0, 7).unwrap(), 0);
        }
        assert!(binomial_valuation(4, 5, 2).is_err());
    }

    #[test]
    fn symmetry_exhaustive() {
        for p in [2u64, 7] {
            for n in 0..=2000u64 {
                for k in 0..=n / 2 {
                    assert_eq!(
                        binomial_valuation(n, k, p).unwrap(),
                        binomial_valuation(n, n - k, p).unwrap()
                    );
                }
            }
        }
    }
}
