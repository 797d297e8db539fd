//! Small exact-arithmetic helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)` for non-negative arguments; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by i + 1 at this point
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn int(value: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(value.into())
}

pub fn floor(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &BigRational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Smallest integer strictly greater than `q`.
pub fn next_integer_above(q: &BigRational) -> BigInt {
    floor(q) + 1
}

/// Nearest integer, rejecting exact half-integers instead of picking a side.
pub fn round_nearest_strict(q: &BigRational) -> Result<BigInt> {
    let twice = q * int(2);
    if twice.is_integer() && !q.is_integer() {
        return Err(Error::Consistency(format!(
            "nearest-integer argument {q} is a half-integer"
        )));
    }
    Ok(floor(&(q + rational(1, 2))))
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m` in `[0, m)`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, x, _) = extended_gcd(&a.mod_floor(m), m);
    if g.is_one() {
        Some(x.mod_floor(m))
    } else {
        None
    }
}

/// Rational upper bound `R` on `exp(x)` for `0 <= x <= 1`, with `R - exp(x) < tolerance`.
///
/// Sums the Taylor series to `N` terms and adds the geometric majorant of the
/// tail `x^{N+1}/(N+1)! * 1/(1 - x/(N+2))`.
pub fn exp_upper_bound(x: &BigRational, tolerance: &BigRational) -> BigRational {
    assert!(
        !x.is_negative() && x <= &int(1),
        "exp_upper_bound needs 0 <= x <= 1"
    );
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    let mut n: u64 = 0;
    loop {
        sum += &term;
        n += 1;
        term = term * x / int(n);
        // term is now x^n / n!; bound the remaining tail starting at this term
        let ratio = x / int(n + 1);
        let tail = &term / (BigRational::one() - ratio);
        if &tail < tolerance {
            return sum + tail;
        }
    }
}

/// The default tolerance for rational `e`-majorants: `10^-40`.
pub fn default_exp_tolerance() -> BigRational {
    rational(1, BigInt::from(10).pow(40))
}
