//! Generalized binomial coefficients `C(n, m) = n(n-1)...(n-m+1) / m!`.
//!
//! The integer `n` may be negative. Every consumer only needs the parity,
//! since binomials appear as exponents of signs and 2-torsion classes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact value of the generalized binomial coefficient.
pub fn binomial(n: i64, m: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..m as i64 {
        num *= BigInt::from(n - k);
        den *= BigInt::from(k + 1);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Parity of [`binomial`].
pub fn binomial_is_odd(n: i64, m: u32) -> bool {
    binomial(n, m).is_odd()
}

/// `(-1)^C(n, m)` as `+1` or `-1`.
pub fn sign_pow_binomial(n: i64, m: u32) -> i64 {
    if binomial_is_odd(n, m) {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinary_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 4), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(7, 0), BigInt::from(1));
    }

    #[test]
    fn negative_tops() {
        // C(-1, m) = (-1)^m
        for m in 0..6 {
            let expected = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(binomial(-1, m), BigInt::from(expected));
        }
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert!(binomial_is_odd(-1, 2));
    }

    #[test]
    fn pascal_rule() {
        for n in -8i64..12 {
            for m in 1u32..6 {
                assert_eq!(binomial(n + 1, m), binomial(n, m) + binomial(n, m - 1));
            }
        }
    }
}
