//! Ground-truth evaluation of `p_A(n, k)`.
//!
//! Two structurally different evaluators are provided so that they can check
//! each other: [`count_table`] is the bottom-up slot-by-slot DP, and
//! [`TelescopedCounter`] is a top-down memoised recursion over the telescoped
//! sum `p(n, k) = Σ_i p(n - i·a_k, k - 1)`. The remaining functions are closed
//! forms valid for special systems.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{binomial, mod_inverse, rational, round_nearest_strict};
use crate::{Error, PartSystem, Result};

/// Exact values `p_A(n, k)` for `0 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    system: PartSystem,
    values: Vec<BigInt>,
}

impl PartitionTable {
    /// Wraps precomputed values (e.g. loaded from a cache file).
    pub fn from_values(system: PartSystem, values: Vec<BigInt>) -> Result<Self> {
        if values.first() != Some(&BigInt::one()) {
            return Err(Error::Validation("table must start with p(0) = 1".into()));
        }
        Ok(Self { system, values })
    }

    pub fn system(&self) -> &PartSystem {
        &self.system
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `p(n)`; panics past `n_max`.
    pub fn value(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    /// `p(n)` with `p(n) = 0` for negative `n`; `None` past `n_max`.
    pub fn get(&self, n: i64) -> Option<BigInt> {
        if n < 0 {
            return Some(BigInt::zero());
        }
        self.values.get(n as usize).cloned()
    }

    /// `Δ(n) = p(n)^2 - p(n+1) p(n-1)`; needs `1 <= n < n_max`.
    pub fn delta(&self, n: usize) -> Option<BigInt> {
        if n == 0 || n + 1 > self.n_max() {
            return None;
        }
        let p = &self.values[n];
        Some(p * p - &self.values[n + 1] * &self.values[n - 1])
    }
}

/// Bottom-up DP: each part slot is folded in once, in stored order.
pub fn count_table(system: &PartSystem, n_max: usize) -> PartitionTable {
    let mut values = vec![BigInt::zero(); n_max + 1];
    values[0] = BigInt::one();
    for &a in system.parts() {
        let a = a as usize;
        for n in a..=n_max {
            let (lo, hi) = values.split_at_mut(n);
            hi[0] += &lo[n - a];
        }
    }
    PartitionTable {
        system: system.clone(),
        values,
    }
}

/// Top-down evaluator over the telescoped sum, memoised on `(n, slot)`.
///
/// The memo persists across calls, so re-checking many points of the same
/// system costs little more than checking the largest one.
#[derive(Debug, Clone)]
pub struct TelescopedCounter {
    system: PartSystem,
    memo: HashMap<(i64, usize), BigInt>,
}

impl TelescopedCounter {
    pub fn new(system: &PartSystem) -> Self {
        Self {
            system: system.clone(),
            memo: HashMap::new(),
        }
    }

    pub fn count(&mut self, n: i64) -> BigInt {
        self.count_slots(n, self.system.k() - 1)
    }

    fn count_slots(&mut self, n: i64, slot: usize) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        let a = self.system.parts()[slot] as i64;
        if slot == 0 {
            return count_k1(a as u64, n);
        }
        if let Some(v) = self.memo.get(&(n, slot)) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let mut m = n;
        while m >= 0 {
            total += self.count_slots(m, slot - 1);
            m -= a;
        }
        self.memo.insert((n, slot), total.clone());
        total
    }
}

/// `p_A(n, k)` through the telescoped sum; zero for negative `n`.
pub fn count_one(system: &PartSystem, n: i64) -> BigInt {
    TelescopedCounter::new(system).count(n)
}

/// `p(n, 1)` for the single part `a_1`: 1 when `a_1 | n` and `n >= 0`, else 0.
pub fn count_k1(a1: u64, n: i64) -> BigInt {
    if n >= 0 && (n as u64).is_multiple_of(a1) {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// Popoviciu's closed form for two coprime parts and `n >= 1`:
/// `(n + a_1 a_1'(n) + a_2 a_2'(n)) / (a_1 a_2) - 1`, where `a_1'(n)` is the
/// representative in `[1, a_2]` of `-n / a_1 (mod a_2)` and symmetrically for
/// `a_2'(n)`.
pub fn popoviciu(system: &PartSystem, n: i64) -> Result<BigInt> {
    if system.k() != 2 {
        return Err(Error::Precondition(format!(
            "Popoviciu's formula needs exactly two parts, got {}",
            system.k()
        )));
    }
    if system.gcd() != 1 {
        return Err(Error::Precondition(format!(
            "parts of {system} are not coprime"
        )));
    }
    if n < 1 {
        return Err(Error::Precondition(format!("n must be positive, got {n}")));
    }
    let a1 = BigInt::from(system.parts()[0]);
    let a2 = BigInt::from(system.parts()[1]);
    let n = BigInt::from(n);
    let a1_prime = residue_in_one_to_m(&(-&n), &a1, &a2);
    let a2_prime = residue_in_one_to_m(&(-&n), &a2, &a1);
    let numerator = &n + &a1 * a1_prime + &a2 * a2_prime;
    let denominator = &a1 * &a2;
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "Popoviciu numerator {numerator} not divisible by {denominator}"
        )));
    }
    Ok(q - 1)
}

/// Solution `x` of `x·a ≡ target (mod m)` taken in `[1, m]`; `a` invertible mod `m`.
fn residue_in_one_to_m(target: &BigInt, a: &BigInt, m: &BigInt) -> BigInt {
    let inv = mod_inverse(a, m).expect("coprimality checked by caller");
    let x = (target * inv).mod_floor(m);
    if x.is_zero() {
        m.clone()
    } else {
        x
    }
}

/// Nearest-integer closed forms for parts `(1, 2, ..., k)`, `k ∈ {3, 4, 5}`.
///
/// Fails with a consistency error if the rounded argument is ever a
/// half-integer, which would mean the formula was mistranscribed.
pub fn nearest_int_formula(k: usize, n: u64) -> Result<BigInt> {
    let nn = BigInt::from(n);
    let half = BigInt::from(n / 2);
    let arg = match k {
        3 => rational((&nn + 3u32).pow(2), 12),
        4 => rational((&nn + 5) * (&nn * &nn + &nn + 22 + 18 * &half), 144),
        5 => rational(
            (&nn + 8) * (nn.pow(3) + 22 * &nn * &nn + 44 * &nn + 248 + 180 * &half),
            2880,
        ),
        _ => {
            return Err(Error::Precondition(format!(
                "closed forms exist for k in {{3, 4, 5}}, got {k}"
            )))
        }
    };
    round_nearest_strict(&arg)
}

/// `C(n + k - 1, k - 1)`: the count for `k` parts all equal to 1.
pub fn binomial_all_ones(k: usize, n: u64) -> BigInt {
    binomial(n + k as u64 - 1, k as u64 - 1)
}

/// `Δ_{A,k}(n) = p(n)^2 - p(n+1) p(n-1)` for `n >= 1`.
pub fn delta(system: &PartSystem, n: u64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Precondition("Δ(n) needs n >= 1".into()));
    }
    let table = count_table(system, n as usize + 1);
    Ok(table.delta(n as usize).expect("table covers n + 1"))
}
