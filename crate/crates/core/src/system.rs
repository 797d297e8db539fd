//! The part-system data model: a non-decreasing multiset `a_1 <= ... <= a_k`.
//!
//! Repeated values are kept at distinct positions, so a multiset like
//! `(1, 2, 2, 3, 3)` behaves as five distinguishable "colours" and every
//! recurrence over part slots applies to it unchanged.

use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::{Error, Result};

const MEMO_POWERS: usize = 8;

#[derive(Debug, Clone)]
pub struct PartSystem {
    parts: Vec<u64>,
    lcm: BigInt,
    sigma: BigInt,
    product: BigInt,
    power_sums: [OnceLock<BigInt>; MEMO_POWERS],
}

impl PartSystem {
    /// Validates and sorts a part list.
    pub fn new(parts: &[i64]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Validation("part list must be non-empty".into()));
        }
        if let Some(bad) = parts.iter().find(|&&a| a < 1) {
            return Err(Error::Validation(format!(
                "parts must be positive, got {bad}"
            )));
        }
        Self::from_positive(parts.iter().map(|&a| a as u64).collect())
    }

    pub fn from_u64(parts: &[u64]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Validation("part list must be non-empty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Validation("parts must be positive, got 0".into()));
        }
        Self::from_positive(parts.to_vec())
    }

    fn from_positive(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable();
        let lcm = parts
            .iter()
            .fold(BigInt::one(), |acc, &a| acc.lcm(&BigInt::from(a)));
        let sigma = parts.iter().map(|&a| BigInt::from(a)).sum();
        let product = parts.iter().map(|&a| BigInt::from(a)).product();
        Ok(Self {
            parts,
            lcm,
            sigma,
            product,
            power_sums: Default::default(),
        })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Largest part `a_k`.
    pub fn last(&self) -> u64 {
        *self.parts.last().expect("non-empty by construction")
    }

    /// `D = lcm(a_1, ..., a_k)`.
    pub fn lcm(&self) -> &BigInt {
        &self.lcm
    }

    /// The period `D` as a machine integer, for table indexing.
    pub fn period(&self) -> Result<usize> {
        usize::try_from(&self.lcm)
            .map_err(|_| Error::Capacity(format!("period {} does not fit in memory", self.lcm)))
    }

    /// `σ = a_1 + ... + a_k`.
    pub fn sigma(&self) -> &BigInt {
        &self.sigma
    }

    pub fn product(&self) -> &BigInt {
        &self.product
    }

    /// `s_m = a_1^m + ... + a_k^m`, memoised for small `m`.
    pub fn power_sum(&self, m: u32) -> BigInt {
        let compute = || {
            self.parts
                .iter()
                .map(|&a| BigInt::from(a).pow(m))
                .sum::<BigInt>()
        };
        match self.power_sums.get(m as usize) {
            Some(cell) => cell.get_or_init(compute).clone(),
            None => compute(),
        }
    }

    /// gcd of all parts.
    pub fn gcd(&self) -> u64 {
        self.parts.iter().fold(0, |g, &a| g.gcd(&a))
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&a| a == 1)
    }

    /// The system made of the first `k` parts.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.k() {
            return Err(Error::Validation(format!(
                "prefix length {k} outside 1..={}",
                self.k()
            )));
        }
        Self::from_positive(self.parts[..k].to_vec())
    }

    /// True iff every size-`j` sub-multiset (by index) has gcd 1.
    pub fn gcd_all_multisubsets(&self, j: usize) -> Result<bool> {
        Ok(self.non_coprime_multisubset(j)?.is_none())
    }

    /// Index positions of some size-`j` sub-multiset whose gcd exceeds 1.
    pub fn non_coprime_multisubset(&self, j: usize) -> Result<Option<Vec<usize>>> {
        if j == 0 || j > self.k() {
            return Err(Error::Validation(format!(
                "multisubset size {j} outside 1..={}",
                self.k()
            )));
        }
        Ok((0..self.k())
            .combinations(j)
            .find(|idx| idx.iter().fold(0u64, |g, &i| g.gcd(&self.parts[i])) > 1))
    }

    /// Smallest `j` for which every `j`-multisubset is coprime, if any.
    pub fn minimal_coprime_size(&self) -> Option<usize> {
        // monotone in j, so the first hit is the minimum
        (1..=self.k()).find(|&j| self.gcd_all_multisubsets(j).unwrap_or(false))
    }
}

impl PartialEq for PartSystem {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for PartSystem {}

impl fmt::Display for PartSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// `D_k = (k-1)! * a_1 * ... * a_k`.
pub(crate) fn leading_denominator(system: &PartSystem) -> BigInt {
    crate::arith::factorial(system.k() as u64 - 1) * system.product()
}
