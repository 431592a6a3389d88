//! Möbius function and the Witt formula.
//!
//! `witt(n, d)` counts the basic commutators of weight `n` on `d` letters:
//!
//! ```text
//! chi_n(d) = (1/n) * sum over m | n of mu(m) * d^(n/m)
//! ```
//!
//! All arithmetic is exact; the final division by `n` is checked to have a
//! zero remainder, so a formula bug cannot silently truncate.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

/// The Möbius function: 1 at 1, 0 when a squared prime divides `m`,
/// `(-1)^s` when `m` is a product of `s` distinct primes.
pub fn mobius(m: u64) -> Result<i8> {
    if m == 0 {
        return Err(Error::Domain("mobius requires m >= 1".into()));
    }
    let mut rest = m;
    let mut distinct = 0u32;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            rest /= p;
            if rest % p == 0 {
                return Ok(0);
            }
            distinct += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        distinct += 1;
    }
    Ok(if distinct % 2 == 0 { 1 } else { -1 })
}

/// Divisors of `n` in increasing order.
fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// The Witt formula: the number of basic commutators of weight `n` on `d`
/// letters. Exact for any size of result.
pub fn witt(n: u64, d: u64) -> Result<BigUint> {
    if n == 0 || d == 0 {
        return Err(Error::Domain("witt requires n >= 1 and d >= 1".into()));
    }
    let base = BigUint::from(d);
    let mut positive = BigUint::zero();
    let mut negative = BigUint::zero();
    for m in divisors(n) {
        let term = base.pow((n / m) as u32);
        match mobius(m)? {
            1 => positive += term,
            -1 => negative += term,
            _ => {}
        }
    }
    debug_assert!(positive >= negative);
    let numerator = positive - negative;
    let (quotient, remainder) = numerator.div_rem(&BigUint::from(n));
    if !remainder.is_zero() {
        return Err(Error::Domain(format!(
            "witt({n}, {d}): sum not divisible by n; formula evaluation is broken"
        )));
    }
    Ok(quotient)
}

/// Memoized table of Witt counts, indexed by `(weight, letters)`.
///
/// `chi_1(d) = d` always holds, and every cached entry equals `witt(n, d)`.
#[derive(Debug, Default, Clone)]
pub struct WittTable {
    entries: HashMap<(u64, u64), BigUint>,
}

impl WittTable {
    pub fn new() -> Self {
        WittTable::default()
    }

    /// Cached `witt(n, d)`.
    pub fn get(&mut self, n: u64, d: u64) -> Result<BigUint> {
        if let Some(v) = self.entries.get(&(n, d)) {
            return Ok(v.clone());
        }
        let v = witt(n, d)?;
        self.entries.insert((n, d), v.clone());
        Ok(v)
    }

    /// `chi_n(d)` extended by `chi_n(0) = 0`, the empty-alphabet convention
    /// used when a bound's quotient group is trivial.
    pub fn get_or_zero(&mut self, n: u64, d: u64) -> Result<BigUint> {
        if d == 0 {
            return Ok(BigUint::zero());
        }
        self.get(n, d)
    }
}

/// `chi_n(d)` with the `d = 0` extension, uncached.
pub fn witt_or_zero(n: u64, d: u64) -> Result<BigUint> {
    if d == 0 {
        if n == 0 {
            return Err(Error::Domain("witt requires n >= 1".into()));
        }
        return Ok(BigUint::zero());
    }
    witt(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small_values() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(2).unwrap(), -1);
        assert_eq!(mobius(3).unwrap(), -1);
        assert_eq!(mobius(4).unwrap(), 0);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
    }

    #[test]
    fn mobius_rejects_zero() {
        assert!(mobius(0).is_err());
    }

    #[test]
    fn mobius_divisor_sums_vanish() {
        // sum over m | n of mu(m) is 1 at n = 1 and 0 otherwise.
        for n in 1u64..=1000 {
            let total: i64 = divisors(n)
                .into_iter()
                .map(|m| mobius(m).unwrap() as i64)
                .sum();
            assert_eq!(total, if n == 1 { 1 } else { 0 }, "n = {n}");
        }
    }

    #[test]
    fn witt_fixtures() {
        assert_eq!(witt(3, 3).unwrap(), BigUint::from(8u32));
        assert_eq!(witt(6, 2).unwrap(), BigUint::from(9u32));
        for d in 1u64..=8 {
            assert_eq!(witt(1, d).unwrap(), BigUint::from(d));
        }
    }

    #[test]
    fn witt_one_letter_vanishes_above_weight_one() {
        for n in 2u64..=12 {
            assert!(witt(n, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn witt_weight_two_is_binomial() {
        for d in 1u64..=50 {
            assert_eq!(witt(2, d).unwrap(), BigUint::from(d * (d - 1) / 2));
        }
    }

    #[test]
    fn witt_rejects_zero_arguments() {
        assert!(witt(0, 2).is_err());
        assert!(witt(2, 0).is_err());
    }

    #[test]
    fn table_caches_and_extends_to_zero_letters() {
        let mut table = WittTable::new();
        assert_eq!(table.get(3, 3).unwrap(), BigUint::from(8u32));
        assert_eq!(table.get(3, 3).unwrap(), BigUint::from(8u32));
        assert_eq!(table.get_or_zero(4, 0).unwrap(), BigUint::zero());
        assert_eq!(table.get(1, 5).unwrap(), BigUint::from(5u32));
    }
}
