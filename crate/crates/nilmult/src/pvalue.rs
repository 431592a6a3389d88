//! Exact positive integers kept in factored form.
//!
//! Bound evaluation produces values like `p^chi_4(9)` whose exponents are
//! far too large to materialize, so every side of an inequality is carried
//! as a map prime -> exponent. Multiplication and divisibility are always
//! exact; the order comparison falls back to materializing both sides only
//! when that is cheap, and reports `None` for sizes beyond that (which no
//! in-scope input reaches).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::abelian::{factorize, AbelianGroup};

/// A positive integer as a prime factorization. The empty map is 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PValue {
    factors: BTreeMap<u64, BigUint>,
}

/// Bits above which `to_biguint` refuses to materialize.
const MATERIALIZE_BIT_CAP: u64 = 1 << 22;

impl PValue {
    pub fn one() -> Self {
        PValue::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn from_u64(n: u64) -> Self {
        assert!(n > 0, "PValue represents positive integers");
        let factors = factorize(n)
            .into_iter()
            .map(|(p, e)| (p, BigUint::from(e)))
            .collect();
        PValue { factors }
    }

    /// `p^e` for a prime `p`.
    pub fn prime_power(p: u64, e: BigUint) -> Self {
        let mut factors = BTreeMap::new();
        if !e.is_zero() {
            factors.insert(p, e);
        }
        PValue { factors }
    }

    /// Order of an abelian group, assembled from the factorizations of its
    /// invariant factors so the integer itself is never formed.
    pub fn from_abelian_order(g: &AbelianGroup) -> Self {
        let mut acc = PValue::one();
        for &n in g.invariants() {
            acc = acc.mul(&PValue::from_u64(n));
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            let entry = factors.entry(*p).or_insert_with(BigUint::zero);
            *entry += e;
        }
        factors.retain(|_, e| !e.is_zero());
        PValue { factors }
    }

    pub fn pow(&self, e: u32) -> Self {
        let factors = self
            .factors
            .iter()
            .map(|(p, x)| (*p, x * BigUint::from(e)))
            .collect();
        let mut v = PValue { factors };
        v.factors.retain(|_, e| !e.is_zero());
        v
    }

    /// Exact divisibility test: every prime exponent of `self` is at most
    /// the matching exponent of `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(p, e)| {
            other
                .factors
                .get(p)
                .map(|f| e <= f)
                .unwrap_or(false)
        })
    }

    /// If the value is a power of a single prime, that prime and exponent.
    pub fn single_prime(&self) -> Option<(u64, &BigUint)> {
        if self.factors.len() == 1 {
            let (p, e) = self.factors.iter().next().unwrap();
            Some((*p, e))
        } else {
            None
        }
    }

    pub fn factors(&self) -> &BTreeMap<u64, BigUint> {
        &self.factors
    }

    /// Materialize when the result stays within the bit cap.
    pub fn to_biguint(&self) -> Option<BigUint> {
        let mut bits: u64 = 0;
        for (p, e) in &self.factors {
            let e = e.to_u64()?;
            bits = bits.checked_add(e.checked_mul(64 - p.leading_zeros() as u64)?)?;
            if bits > MATERIALIZE_BIT_CAP {
                return None;
            }
        }
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= BigUint::from(*p).pow(e.to_u64().unwrap() as u32);
        }
        Some(acc)
    }

    /// Exact `self <= other`, when decidable at reasonable cost: via
    /// divisibility, a shared single prime, or materialization.
    pub fn le(&self, other: &Self) -> Option<bool> {
        if self == other || self.divides(other) {
            return Some(true);
        }
        if let (Some((p, e)), Some((q, f))) = (self.single_prime(), other.single_prime()) {
            if p == q {
                return Some(e <= f);
            }
        }
        match (self.to_biguint(), other.to_biguint()) {
            (Some(a), Some(b)) => Some(a <= b),
            _ => None,
        }
    }

    /// Total order used for sorting comparison tables. Falls back to the
    /// factorization itself when magnitudes cannot be decided; in-scope
    /// values never hit that branch.
    pub fn sort_cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.le(other), other.le(self)) {
            (Some(true), Some(true)) => std::cmp::Ordering::Equal,
            (Some(true), _) => std::cmp::Ordering::Less,
            (_, Some(true)) => std::cmp::Ordering::Greater,
            _ => self.factors.cmp(&other.factors),
        }
    }
}

/// Renders the decimal value when it is small, otherwise a `p^e` product.
impl fmt::Display for PValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        if let Some(n) = self.to_biguint() {
            if n < BigUint::from(1_000_000_000_000u64) {
                return write!(f, "{n}");
            }
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| {
                if e.is_one() {
                    format!("{p}")
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// JSON form: a map from prime (decimal string) to exponent (decimal
/// string), e.g. `{"2":"315"}`; `{}` is 1. Exponents are strings because
/// they routinely exceed every native numeric range.
impl Serialize for PValue {
    fn serialize<S>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        let map: BTreeMap<String, String> = self
            .factors
            .iter()
            .map(|(p, e)| (p.to_string(), e.to_string()))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PValue {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        use serde::de::Error as _;
        let map = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut factors = BTreeMap::new();
        for (p, e) in map {
            let p: u64 = p
                .parse()
                .map_err(|_| D::Error::custom(format!("bad prime key {p:?}")))?;
            let e: BigUint = e
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            if !e.is_zero() {
                factors.insert(p, e);
            }
        }
        Ok(PValue { factors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factored_arithmetic() {
        let a = PValue::from_u64(12);
        let b = PValue::from_u64(10);
        let c = a.mul(&b);
        assert_eq!(c.to_biguint().unwrap(), BigUint::from(120u32));
        assert!(a.divides(&c));
        assert!(!c.divides(&a));
        assert_eq!(a.pow(2).to_biguint().unwrap(), BigUint::from(144u32));
    }

    #[test]
    fn comparisons() {
        let a = PValue::prime_power(2, BigUint::from(6u32));
        let b = PValue::prime_power(2, BigUint::from(8u32));
        assert_eq!(a.le(&b), Some(true));
        assert_eq!(b.le(&a), Some(false));
        let huge_a = PValue::prime_power(2, BigUint::from(10u64).pow(30));
        let huge_b = PValue::prime_power(2, BigUint::from(10u64).pow(30) + 1u32);
        assert_eq!(huge_a.le(&huge_b), Some(true));
        let c = PValue::from_u64(9);
        assert_eq!(c.le(&b), Some(true));
        assert_eq!(PValue::one().le(&a), Some(true));
    }

    #[test]
    fn display_small_and_large() {
        assert_eq!(PValue::from_u64(24).to_string(), "24");
        let huge = PValue::prime_power(3, BigUint::from(10u64).pow(20));
        assert_eq!(huge.to_string(), "3^100000000000000000000");
        assert_eq!(PValue::one().to_string(), "1");
    }

    #[test]
    fn abelian_order() {
        let g = AbelianGroup::canonicalize(&[12, 2]).unwrap();
        let v = PValue::from_abelian_order(&g);
        assert_eq!(v.to_biguint().unwrap(), BigUint::from(24u32));
    }
}
