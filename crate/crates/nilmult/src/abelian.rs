//! Finite abelian groups in invariant-factor form.
//!
//! A group is stored as its invariant factors `n_1, n_2, ..., n_k` with
//! `n_{i+1} | n_i` and every entry at least 2; the empty list is the trivial
//! group. The descending-chain convention keeps the multiplier formula for
//! abelian groups a direct transcription. Tensor products distribute over
//! the cyclic summands, with `Z_m (x) Z_n = Z_gcd(m,n)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite abelian group as a descending divisibility chain of invariant
/// factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    invariants: Vec<u64>,
}

/// Prime factorization of a positive machine integer, by trial division.
pub(crate) fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut factors = BTreeMap::new();
    let mut p = 2u64;
    while p * p <= n {
        while n % p == 0 {
            *factors.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        *factors.entry(n).or_insert(0) += 1;
    }
    factors
}

impl AbelianGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        AbelianGroup { invariants: vec![] }
    }

    /// The cyclic group of order `n` (`n = 1` gives the trivial group).
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::canonicalize(&[n])
    }

    /// Elementary abelian group `Z_p^d`.
    pub fn elementary(p: u64, d: usize) -> Result<Self> {
        Self::canonicalize(&vec![p; d])
    }

    /// Canonical invariant-factor form of a direct sum of cyclic groups of
    /// the given orders. Each order is split into prime powers; the j-th
    /// invariant factor is the product over all primes of the j-th largest
    /// power of that prime.
    pub fn canonicalize(cyclic_orders: &[u64]) -> Result<Self> {
        let mut prime_powers: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &m in cyclic_orders {
            if m == 0 {
                return Err(Error::Domain("cyclic order 0 is not a group".into()));
            }
            for (p, e) in factorize(m) {
                prime_powers.entry(p).or_default().push(e);
            }
        }
        let depth = prime_powers.values().map(Vec::len).max().unwrap_or(0);
        for exps in prime_powers.values_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        let mut invariants = Vec::with_capacity(depth);
        for j in 0..depth {
            let mut factor = 1u64;
            for (p, exps) in &prime_powers {
                if let Some(&e) = exps.get(j) {
                    factor = factor
                        .checked_mul(p.checked_pow(e).ok_or_else(|| {
                            Error::Domain(format!("invariant factor {p}^{e} overflows u64"))
                        })?)
                        .ok_or_else(|| {
                            Error::Domain("invariant factor overflows u64".into())
                        })?;
                }
            }
            if factor > 1 {
                invariants.push(factor);
            }
        }
        Ok(AbelianGroup { invariants })
    }

    /// Construct directly from an already-canonical chain. Checks the chain.
    pub fn from_invariants(invariants: Vec<u64>) -> Result<Self> {
        for pair in invariants.windows(2) {
            if pair[0] % pair[1] != 0 {
                return Err(Error::Domain(format!(
                    "{} does not divide {}: not an invariant-factor chain",
                    pair[1], pair[0]
                )));
            }
        }
        if invariants.iter().any(|&n| n < 2) {
            return Err(Error::Domain("invariant factors must be >= 2".into()));
        }
        Ok(AbelianGroup { invariants })
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Group order, the product of the invariant factors.
    pub fn order(&self) -> BigUint {
        self.invariants
            .iter()
            .fold(BigUint::one(), |acc, &n| acc * BigUint::from(n))
    }

    /// Exponent: the largest invariant factor, 1 for the trivial group.
    pub fn exponent(&self) -> u64 {
        self.invariants.first().copied().unwrap_or(1)
    }

    /// Minimal number of generators, the length of the chain.
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// Direct sum, re-canonicalized.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.invariants.clone();
        orders.extend_from_slice(&other.invariants);
        AbelianGroup::canonicalize(&orders).expect("canonical inputs stay canonical")
    }

    /// Tensor product over the cyclic summands: the sum of
    /// `Z_gcd(a_i, b_j)` over all pairs.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut orders = Vec::with_capacity(self.rank() * other.rank());
        for &a in &self.invariants {
            for &b in &other.invariants {
                orders.push(a.gcd(&b));
            }
        }
        AbelianGroup::canonicalize(&orders).expect("gcds are positive")
    }

    /// Iterated tensor power `base (x) rep (x) ... (x) rep` with `copies`
    /// copies of `rep`.
    pub fn tensor_power(base: &Self, rep: &Self, copies: u32) -> Result<Self> {
        if copies == 0 {
            return Err(Error::Domain("tensor power requires c >= 1".into()));
        }
        let mut acc = base.clone();
        for _ in 0..copies {
            acc = acc.tensor(rep);
        }
        Ok(acc)
    }
}

/// Writes `Z12 + Z2`; the trivial group prints as `trivial`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.invariants.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_sorted_prime_powers() {
        let g = AbelianGroup::canonicalize(&[2, 4]).unwrap();
        assert_eq!(g.invariants(), &[4, 2]);
    }

    #[test]
    fn canonicalize_mixed_primes() {
        let g = AbelianGroup::canonicalize(&[6, 4]).unwrap();
        assert_eq!(g.invariants(), &[12, 2]);
    }

    #[test]
    fn canonicalize_drops_ones_and_rejects_zero() {
        assert!(AbelianGroup::canonicalize(&[1, 1]).unwrap().is_trivial());
        assert!(AbelianGroup::canonicalize(&[0]).is_err());
    }

    /// Order census of a direct sum of cyclic groups: for each m dividing the
    /// exponent, how many elements have order m. Independent of the
    /// invariant-factor machinery.
    fn census(orders: &[u64]) -> BTreeMap<u64, u64> {
        fn lcm(a: u64, b: u64) -> u64 {
            a / a.gcd(&b) * b
        }
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        let mut tuple = vec![0u64; orders.len()];
        loop {
            let order = tuple
                .iter()
                .zip(orders)
                .map(|(&x, &n)| n / n.gcd(&x))
                .fold(1, lcm);
            *counts.entry(order).or_insert(0) += 1;
            let mut i = 0;
            loop {
                if i == orders.len() {
                    return counts;
                }
                tuple[i] += 1;
                if tuple[i] < orders[i] {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn canonicalize_preserves_order_census() {
        assert_eq!(census(&[6, 4]), census(&[12, 2]));
        assert_eq!(census(&[30, 4, 9]), {
            let g = AbelianGroup::canonicalize(&[30, 4, 9]).unwrap();
            census(g.invariants())
        });
    }

    #[test]
    fn direct_sum_examples() {
        let z4z2 = AbelianGroup::canonicalize(&[4, 2]).unwrap();
        assert_eq!(z4z2.direct_sum(&AbelianGroup::trivial()), z4z2);
        let z2 = AbelianGroup::cyclic(2).unwrap();
        assert_eq!(z2.direct_sum(&z2).invariants(), &[2, 2]);
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let z6 = AbelianGroup::cyclic(6).unwrap();
        assert_eq!(
            z4.direct_sum(&z6),
            AbelianGroup::canonicalize(&[4, 6]).unwrap()
        );
        assert_eq!(z4.direct_sum(&z6).invariants(), &[12, 2]);
    }

    #[test]
    fn tensor_examples() {
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let z6 = AbelianGroup::cyclic(6).unwrap();
        assert_eq!(z4.tensor(&z6).invariants(), &[2]);
        assert!(z4.tensor(&AbelianGroup::trivial()).is_trivial());
        let v = AbelianGroup::elementary(2, 2).unwrap();
        assert_eq!(v.tensor(&v).invariants(), &[2, 2, 2, 2]);
    }

    #[test]
    fn tensor_power_examples() {
        let zp = AbelianGroup::cyclic(2).unwrap();
        let v = AbelianGroup::elementary(2, 2).unwrap();
        let t = AbelianGroup::tensor_power(&zp, &v, 2).unwrap();
        assert_eq!(t.order(), BigUint::from(16u32));
        assert!(
            AbelianGroup::tensor_power(&AbelianGroup::trivial(), &v, 3)
                .unwrap()
                .is_trivial()
        );
        let z2 = AbelianGroup::cyclic(2).unwrap();
        let z4 = AbelianGroup::cyclic(4).unwrap();
        assert_eq!(
            AbelianGroup::tensor_power(&z2, &z4, 1).unwrap().invariants(),
            &[2]
        );
        assert!(AbelianGroup::tensor_power(&z2, &z4, 0).is_err());
    }

    #[test]
    fn order_exponent_rank() {
        let g = AbelianGroup::canonicalize(&[4, 2]).unwrap();
        assert_eq!(g.order(), BigUint::from(8u32));
        assert_eq!(g.exponent(), 4);
        assert_eq!(g.rank(), 2);
        let t = AbelianGroup::trivial();
        assert_eq!(t.order(), BigUint::one());
        assert_eq!(t.exponent(), 1);
        assert_eq!(t.rank(), 0);
        let g = AbelianGroup::canonicalize(&[12, 2]).unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        assert_eq!(g.exponent(), 12);
        assert_eq!(g.rank(), 2);
    }

    #[test]
    fn from_invariants_checks_chain() {
        assert!(AbelianGroup::from_invariants(vec![4, 2]).is_ok());
        assert!(AbelianGroup::from_invariants(vec![4, 3]).is_err());
        assert!(AbelianGroup::from_invariants(vec![4, 1]).is_err());
    }

    #[test]
    fn display() {
        let g = AbelianGroup::canonicalize(&[4, 2]).unwrap();
        assert_eq!(g.to_string(), "Z4 + Z2");
        assert_eq!(AbelianGroup::trivial().to_string(), "trivial");
    }
}
