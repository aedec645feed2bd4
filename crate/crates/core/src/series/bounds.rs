//! Prime-factor counting and the explicit bound formulas used by the
//! fixed-point checkers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Prime factorization by trial division, smallest factor first.
pub fn factorize(n: &BigUint) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::invalid("cannot factor zero"));
    }
    let mut rest = n.clone();
    let mut factors = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        if (&rest % &d).is_zero() {
            let mut mult = 0u32;
            while (&rest % &d).is_zero() {
                rest /= &d;
                mult += 1;
            }
            factors.push((d.clone(), mult));
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        factors.push((rest, 1));
    }
    Ok(factors)
}

/// Number of prime factors counted with multiplicity; `alpha(1) = 0`.
pub fn alpha(n: &BigUint) -> Result<u64> {
    Ok(factorize(n)?
        .iter()
        .map(|(_, mult)| u64::from(*mult))
        .sum())
}

pub fn is_prime(n: &BigUint) -> bool {
    alpha(n).map(|a| a == 1).unwrap_or(false)
}

/// `9^a * h + (9^a - 1) / 8`; the division is exact.
pub fn bound_fstar_height(a: u64, h: u64) -> BigUint {
    let nine = BigUint::from(9u32).pow(a as u32);
    &nine * BigUint::from(h) + (&nine - BigUint::one()) / BigUint::from(8u32)
}

/// `2^a * (l + 1) - 1`.
pub fn bound_nonsoluble_length(a: u64, l: u64) -> BigUint {
    BigUint::from(2u32).pow(a as u32) * BigUint::from(l + 1) - BigUint::one()
}

/// `5^a * max(h, 1)`: the soluble-group height bound, with the fixed-point
/// free case folded in.
pub fn bound_soluble_height(a: u64, h: u64) -> BigUint {
    BigUint::from(5u32).pow(a as u32) * BigUint::from(h.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn alpha_counts_multiplicity() {
        assert_eq!(alpha(&b(12)).unwrap(), 3); // 2*2*3
        assert_eq!(alpha(&b(1)).unwrap(), 0);
        assert_eq!(alpha(&b(7)).unwrap(), 1);
        assert_eq!(alpha(&b(32736)).unwrap(), 8); // 2^5 * 3 * 11 * 31
        assert!(alpha(&BigUint::ZERO).is_err());
    }

    #[test]
    fn primality_is_alpha_one() {
        assert!(is_prime(&b(2)));
        assert!(is_prime(&b(31)));
        assert!(!is_prime(&b(1)));
        assert!(!is_prime(&b(60)));
    }

    #[test]
    fn factorization_of_a_wreath_order() {
        // 60^6: orders of repeated wreath products stay smooth
        let n = b(60).pow(6);
        let factors = factorize(&n).unwrap();
        assert_eq!(
            factors,
            vec![(b(2), 12), (b(3), 6), (b(5), 6)]
        );
    }

    #[test]
    fn fstar_height_bound_values() {
        // a = 1: 9h + 1
        assert_eq!(bound_fstar_height(1, 0), b(1));
        assert_eq!(bound_fstar_height(1, 3), b(28));
        // a = 0: identity bound
        assert_eq!(bound_fstar_height(0, 5), b(5));
        // a = 2: 81h + 10
        assert_eq!(bound_fstar_height(2, 1), b(91));
    }

    #[test]
    fn nonsoluble_length_bound_values() {
        // a = 1: 2l + 1
        assert_eq!(bound_nonsoluble_length(1, 0), b(1));
        assert_eq!(bound_nonsoluble_length(1, 4), b(9));
        assert_eq!(bound_nonsoluble_length(0, 7), b(7));
        assert_eq!(bound_nonsoluble_length(3, 1), b(15));
    }

    #[test]
    fn soluble_height_bound_values() {
        assert_eq!(bound_soluble_height(1, 1), b(5));
        assert_eq!(bound_soluble_height(1, 0), b(5)); // fixed-point free case
        assert_eq!(bound_soluble_height(2, 3), b(75));
        assert_eq!(bound_soluble_height(0, 4), b(4));
    }
}
