//! Range verification: Bessenrodt–Ono and log-concavity scans, envelope and
//! quasi-polynomial checks.
//!
//! Every scan builds one [`PartitionTable`] and checks the range in parallel
//! chunks; violations come back in ascending order. Results only speak for
//! the scanned range.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use crate::arith::int;
use crate::bounds::{BoundEnvelope, EnvelopeKind};
use crate::exact::{count_table, PartitionTable, TelescopedCounter};
use crate::quasipoly::QuasiPolynomial;
use crate::{Error, PartSystem, Result};

const CHUNK: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Property {
    Bo,
    LogConcave,
    /// `p(n)^2 > (1 + 1/(u n^2))^e p(n+1) p(n-1)`.
    LogConcaveStrengthened {
        u: BigRational,
        e: u32,
    },
    Envelope(EnvelopeKind),
    QuasiPolynomial,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Bo => write!(f, "bo"),
            Self::LogConcave => write!(f, "logconcave"),
            Self::LogConcaveStrengthened { u, e } => {
                write!(f, "logconcave_strengthened(u={u},e={e})")
            }
            Self::Envelope(kind) => write!(f, "envelope({kind})"),
            Self::QuasiPolynomial => write!(f, "quasipolynomial"),
        }
    }
}

/// A failed comparison together with both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `p(a) p(b) <= p(a + b)`.
    Bo {
        a: u64,
        b: u64,
        lhs: BigInt,
        rhs: BigInt,
    },
    /// `p(n)^2 <= factor · p(n+1) p(n-1)`.
    LogConcave {
        n: u64,
        lhs: BigInt,
        rhs: BigRational,
    },
    /// `p(n)` outside the open interval `(lower, upper)`.
    Envelope {
        n: u64,
        value: BigInt,
        lower: BigRational,
        upper: BigRational,
    },
    /// The quasi-polynomial disagrees with the DP (or is not an integer).
    QuasiPolynomial {
        n: u64,
        expected: BigInt,
        got: Option<BigInt>,
    },
}

impl Violation {
    /// The scan coordinate the violation is attributed to (`b` for BO pairs).
    pub fn position(&self) -> u64 {
        match self {
            Self::Bo { b, .. } => *b,
            Self::LogConcave { n, .. }
            | Self::Envelope { n, .. }
            | Self::QuasiPolynomial { n, .. } => *n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub system: PartSystem,
    pub property: Property,
    pub lo: u64,
    pub hi: u64,
    pub violations: Vec<Violation>,
    /// Smallest `N` with no violation in `[N, hi]`, reported only when that
    /// clean tail spans at least one full period. Bounded by `hi`; not a proof.
    pub minimal_start: Option<u64>,
}

impl ScanReport {
    fn new(
        system: &PartSystem,
        property: Property,
        lo: u64,
        hi: u64,
        violations: Vec<Violation>,
    ) -> Self {
        let period = system.lcm().try_into().unwrap_or(u64::MAX);
        let start = violations
            .iter()
            .map(Violation::position)
            .max()
            .map_or(lo, |v| v + 1);
        let minimal_start = (start <= hi && hi - start + 1 >= period).then_some(start);
        Self {
            system: system.clone(),
            property,
            lo,
            hi,
            violations,
            minimal_start,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Recomputes every witness with the telescoped evaluator and checks that
    /// the recorded values and the failed comparison are reproduced.
    pub fn reverify(&self) -> bool {
        let mut counter = TelescopedCounter::new(&self.system);
        let mut p = |n: u64| counter.count(n as i64);
        self.violations.iter().all(|v| match v {
            Violation::Bo { a, b, lhs, rhs } => {
                let l = p(*a) * p(*b);
                let r = p(a + b);
                &l == lhs && &r == rhs && l <= r
            }
            Violation::LogConcave { n, lhs, rhs } => {
                let pn = p(*n);
                let l = &pn * &pn;
                let prod = p(n + 1) * p(n - 1);
                let factor = match &self.property {
                    Property::LogConcaveStrengthened { u, e } => strengthening_factor(u, *e, *n),
                    _ => int(1),
                };
                &l == lhs && &(factor * int(prod)) == rhs && int(l) <= *rhs
            }
            Violation::Envelope {
                n,
                value,
                lower,
                upper,
            } => {
                let v = p(*n);
                &v == value && !(lower < &int(v.clone()) && &int(v) < upper)
            }
            Violation::QuasiPolynomial { n, expected, got } => {
                &p(*n) == expected && got.as_ref() != Some(expected)
            }
        })
    }
}

/// `(1 + 1/(u n^2))^e`.
pub fn strengthening_factor(u: &BigRational, e: u32, n: u64) -> BigRational {
    let un2 = u * int(BigInt::from(n).pow(2));
    ((un2.clone() + int(1)) / un2).pow(e as i32)
}

/// Checks `p(a) p(b) > p(a + b)` for all `1 <= b <= a <= max`.
pub fn scan_bo(system: &PartSystem, max: u64) -> Result<ScanReport> {
    if max < 2 {
        return Err(Error::Precondition("scan_bo needs max >= 2".into()));
    }
    let table = count_table(system, 2 * max as usize);
    let violations = (1..max as usize + 1)
        .into_par_iter()
        .with_min_len(CHUNK / 8)
        .flat_map_iter(|b| bo_row(&table, b as u64, max))
        .collect();
    Ok(ScanReport::new(system, Property::Bo, 1, max, violations))
}

fn bo_row(table: &PartitionTable, b: u64, max: u64) -> Vec<Violation> {
    let pb = table.value(b as usize);
    (b..=max)
        .filter_map(|a| {
            let lhs = table.value(a as usize) * pb;
            let rhs = table.value((a + b) as usize);
            (&lhs <= rhs).then(|| Violation::Bo {
                a,
                b,
                lhs,
                rhs: rhs.clone(),
            })
        })
        .collect()
}

/// Checks `p(n)^2 > (1 + 1/(u n^2))^e p(n+1) p(n-1)` on `[lo, hi]`; with
/// `strengthen = None` the plain `Δ(n) > 0`.
///
/// With `u = P/Q` the comparison is done on integers as
/// `p(n)^2 (P n^2)^e > (P n^2 + Q)^e p(n+1) p(n-1)`.
pub fn scan_logconcavity(
    system: &PartSystem,
    lo: u64,
    hi: u64,
    strengthen: Option<(BigRational, u32)>,
) -> Result<ScanReport> {
    if lo < 1 || lo >= hi {
        return Err(Error::Precondition(format!(
            "need 1 <= lo < hi, got [{lo}, {hi}]"
        )));
    }
    if let Some((u, e)) = &strengthen {
        if !u.is_positive() || *e == 0 {
            return Err(Error::Precondition("need u > 0 and e >= 1".into()));
        }
    }
    let table = count_table(system, hi as usize + 1);
    let violations = (lo as usize..hi as usize + 1)
        .into_par_iter()
        .with_min_len(CHUNK)
        .filter_map(|n| {
            let n = n as u64;
            let pn = table.value(n as usize);
            let lhs = pn * pn;
            let prod = table.value(n as usize + 1) * table.value(n as usize - 1);
            let holds = match &strengthen {
                None => lhs > prod,
                Some((u, e)) => {
                    let un2_num = u.numer() * BigInt::from(n).pow(2);
                    let den = u.denom();
                    // factor = (un2_num + den)^e / un2_num^e
                    &lhs * un2_num.pow(*e) > &prod * (&un2_num + den).pow(*e)
                }
            };
            (!holds).then(|| {
                let factor = match &strengthen {
                    None => int(1),
                    Some((u, e)) => strengthening_factor(u, *e, n),
                };
                Violation::LogConcave {
                    n,
                    lhs,
                    rhs: factor * int(prod),
                }
            })
        })
        .collect();
    let property = match strengthen {
        None => Property::LogConcave,
        Some((u, e)) => Property::LogConcaveStrengthened { u, e },
    };
    Ok(ScanReport::new(system, property, lo, hi, violations))
}

/// Checks the strict sandwich of `env` on `[lo, hi]`.
pub fn verify_envelope(env: &BoundEnvelope, lo: u64, hi: u64) -> Result<ScanReport> {
    if lo < env.valid_from || lo > hi {
        return Err(Error::Precondition(format!(
            "need valid_from = {} <= lo <= hi, got [{lo}, {hi}]",
            env.valid_from
        )));
    }
    let table = count_table(&env.system, hi as usize);
    let violations = (lo as usize..hi as usize + 1)
        .into_par_iter()
        .with_min_len(CHUNK)
        .filter_map(|n| {
            let n = n as u64;
            let value = table.value(n as usize).clone();
            let (lower, upper) = env.bounds_at(n);
            let v = int(value.clone());
            (!(lower < v && v < upper)).then_some(Violation::Envelope {
                n,
                value,
                lower,
                upper,
            })
        })
        .collect();
    Ok(ScanReport::new(
        &env.system,
        Property::Envelope(env.kind),
        lo,
        hi,
        violations,
    ))
}

/// Checks `evaluate(qp, n) == p(n)` on `[lo, hi]`.
pub fn verify_quasipolynomial(qp: &QuasiPolynomial, lo: u64, hi: u64) -> Result<ScanReport> {
    if lo > hi {
        return Err(Error::Precondition(format!(
            "need lo <= hi, got [{lo}, {hi}]"
        )));
    }
    let table = count_table(qp.system(), hi as usize);
    let violations = (lo as usize..hi as usize + 1)
        .into_par_iter()
        .with_min_len(CHUNK)
        .filter_map(|n| {
            let n = n as u64;
            let expected = table.value(n as usize);
            let got = qp.evaluate(n).ok();
            (got.as_ref() != Some(expected)).then(|| Violation::QuasiPolynomial {
                n,
                expected: expected.clone(),
                got,
            })
        })
        .collect();
    Ok(ScanReport::new(
        qp.system(),
        Property::QuasiPolynomial,
        lo,
        hi,
        violations,
    ))
}

/// Smallest observed start of log-concavity, valid only up to `horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HorizonBoundedStart {
    pub start: Option<u64>,
    pub horizon: u64,
}

impl fmt::Display for HorizonBoundedStart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.start {
            Some(n) => write!(f, "{n} (checked up to n = {} only)", self.horizon),
            None => write!(f, "none up to n = {}", self.horizon),
        }
    }
}

/// Smallest `N >= 2` with `Δ(n) > 0` for every `N <= n <= horizon`.
pub fn minimal_logconcave_start(system: &PartSystem, horizon: u64) -> Result<HorizonBoundedStart> {
    if horizon < 3 {
        return Err(Error::Precondition("horizon must be at least 3".into()));
    }
    let report = scan_logconcavity(system, 2, horizon, None)?;
    Ok(HorizonBoundedStart {
        start: report.minimal_start,
        horizon,
    })
}

/// Positions `n` in `[lo, hi]` with `Δ(n) < 0`.
pub fn negative_delta_positions(table: &PartitionTable, lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi)
        .filter(|&n| table.delta(n as usize).is_some_and(|d| d.is_negative()))
        .collect()
}
