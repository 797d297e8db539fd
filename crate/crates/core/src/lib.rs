//! Exact computation of the restricted (and multicolor restricted) partition
//! function `p_A(n, k)`: the number of ways to write `n` as an unordered sum of
//! parts drawn from a fixed multiset `{a_1, ..., a_k}`.
//!
//! The crate is organised bottom-up:
//!
//! - [`system`], [`poly`], [`series`], [`arith`]: exact arithmetic and the
//!   [`PartSystem`] data model.
//! - [`exact`]: ground-truth evaluators (bottom-up DP, memoised telescoped sum,
//!   closed forms for special systems).
//! - [`quasipoly`]: the period-`lcm` quasi-polynomial of `p_A(n, k)`, built both
//!   from the residue-class tuple sum and by interpolation.
//! - [`asymptotics`]: symmetric `σ_m` coefficients, the polynomial part,
//!   Bernoulli numbers and exact Euler–Maclaurin summation.
//! - [`bounds`]: certified sandwich envelopes, inequality thresholds and the
//!   eventual Bessenrodt–Ono / log-concavity classification.
//! - [`scanner`]: finite-range verification of those inequalities.
//!
//! No floating point is used on any computation path.

pub mod arith;
pub mod asymptotics;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod poly;
pub mod quasipoly;
pub mod scanner;
pub mod series;
pub mod system;

pub use error::{Error, Result};
pub use poly::RationalPolynomial;
pub use series::TruncatedPowerSeries;
pub use system::PartSystem;

/// Arbitrary-precision signed integer used for every integer quantity.
pub type ExactInt = num_bigint::BigInt;
/// Normalised arbitrary-precision rational (positive denominator, reduced).
pub type ExactRational = num_rational::BigRational;
