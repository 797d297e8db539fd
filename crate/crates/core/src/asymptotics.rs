//! Polynomial asymptotics of `p_A(n, k)` and exact Euler–Maclaurin sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, int, rational};
use crate::system::leading_denominator;
use crate::{Error, PartSystem, RationalPolynomial, Result, TruncatedPowerSeries};

/// `σ_0..σ_M`: coefficients of `t^m` in `∏ (a_i t/2) / sinh(a_i t/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTable {
    pub system: PartSystem,
    pub coeffs: Vec<BigRational>,
}

impl SigmaTable {
    pub fn sigma(&self, m: usize) -> &BigRational {
        &self.coeffs[m]
    }
}

pub fn sigma_table(system: &PartSystem, order: usize) -> SigmaTable {
    let mut product = TruncatedPowerSeries::one(order);
    let mut parts = system.parts().to_vec();
    parts.dedup();
    for a in parts {
        let multiplicity = system.parts().iter().filter(|&&b| b == a).count();
        // sinh(x)/x with x = a t / 2
        let half = rational(a, 2);
        let coefficients = (0..=order)
            .map(|m| {
                if m % 2 == 1 {
                    BigRational::zero()
                } else {
                    half.pow(m as i32) / int(factorial(m as u64 + 1))
                }
            })
            .collect();
        let factor = TruncatedPowerSeries::new(coefficients, order)
            .reciprocal()
            .expect("constant term is 1");
        for _ in 0..multiplicity {
            product = product.mul(&factor);
        }
    }
    SigmaTable {
        system: system.clone(),
        coeffs: product.coefficients().to_vec(),
    }
}

/// Leading coefficient `1 / ((k-1)! ∏ a_i)` of `p_A(n, k)`.
pub fn netto_leading(system: &PartSystem) -> Result<BigRational> {
    if system.k() < 2 {
        return Err(Error::Precondition("the leading term needs k >= 2".into()));
    }
    if system.gcd() != 1 {
        return Err(Error::Applicability(format!(
            "parts of {system} share the factor {}; the leading coefficient depends on the residue",
            system.gcd()
        )));
    }
    Ok(BigRational::new(BigInt::one(), leading_denominator(system)))
}

/// `(1/∏a) Σ_{i=0}^{k-j} σ_i (n + σ/2)^{k-1-i} / (k-1-i)!`, expanded.
///
/// Requires every `j`-element sub-multiset of the parts to have gcd 1.
pub fn almkvist_polynomial_part(system: &PartSystem, j: usize) -> Result<RationalPolynomial> {
    if !system.gcd_all_multisubsets(j)? {
        let witness = system.non_coprime_multisubset(j)?.unwrap_or_default();
        let values: Vec<u64> = witness.iter().map(|&i| system.parts()[i]).collect();
        return Err(Error::Applicability(format!(
            "{system}: the {j}-multisubset {values:?} is not coprime"
        )));
    }
    let k = system.k();
    let sigmas = sigma_table(system, k - j);
    let shift = RationalPolynomial::shifted_identity(rational(system.sigma().clone(), 2));
    let mut total = RationalPolynomial::zero();
    for i in 0..=k - j {
        let e = k - 1 - i;
        let c = sigmas.sigma(i) / int(factorial(e as u64));
        total = &total + &shift.pow(e as u32).scale(&c);
    }
    Ok(total.scale(&BigRational::new(BigInt::one(), system.product().clone())))
}

/// `B_0..B_M` with the convention `B_1 = +1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    pub values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn get(&self, s: usize) -> &BigRational {
        &self.values[s]
    }
}

pub fn bernoulli_table(order: usize) -> BernoulliTable {
    // Σ_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, which yields B_1 = -1/2
    let mut values: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=order as u64 {
        let s: BigRational = values
            .iter()
            .enumerate()
            .map(|(j, b)| b * int(binomial(m + 1, j as u64)))
            .sum();
        values.push(-s / int(m + 1));
    }
    if order >= 1 {
        values[1] = rational(1, 2);
    }
    BernoulliTable { values }
}

/// `Σ_{i=u}^{v} f(i)` through the Euler–Maclaurin formula with `⌊p/2⌋`
/// correction terms, plus a rational bound on the remainder.
///
/// For `p >= 2` the bound is `2·(33/20)/6^p · ∫_u^v |f^(p)|` (majorising
/// `ζ(p) <= ζ(2)` and `(2π)^p >= 6^p`); for `p = 1` it is `(1/2)∫|f'|`.
pub fn euler_maclaurin_poly_sum(
    f: &RationalPolynomial,
    u: i64,
    v: i64,
    p: usize,
) -> Result<(BigRational, BigRational)> {
    if u >= v {
        return Err(Error::Precondition(format!(
            "need u < v, got u = {u}, v = {v}"
        )));
    }
    if p == 0 {
        return Err(Error::Precondition("need p >= 1".into()));
    }
    let (lo, hi) = (int(u), int(v));
    let bernoulli = bernoulli_table(2 * (p / 2));
    let mut value = f.integrate(&lo, &hi) + (f.eval(&hi) + f.eval(&lo)) / int(2);
    for j in 1..=p / 2 {
        let d = f.nth_derivative(2 * j - 1);
        value += bernoulli.get(2 * j) / int(factorial(2 * j as u64)) * (d.eval(&hi) - d.eval(&lo));
    }
    let fp = f.nth_derivative(p);
    let bound = if fp.is_zero() {
        BigRational::zero()
    } else {
        let integral = abs_integral_upper_bound(&fp, &lo, &hi);
        let factor = if p == 1 {
            rational(1, 2)
        } else {
            rational(33, 10) / int(BigInt::from(6).pow(p as u32))
        };
        factor * integral
    };
    Ok((value, bound))
}

/// Rational upper bound on `∫_lo^hi |g|`.
///
/// Real roots of `g` are isolated with a Sturm sequence by bisection; the
/// integral is exact on root-free pieces, and each root is enclosed in a
/// piece narrower than `(hi - lo)/2^40` whose contribution is bounded by
/// width times a bound on `|g|` there.
pub fn abs_integral_upper_bound(
    g: &RationalPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> BigRational {
    if g.is_zero() {
        return BigRational::zero();
    }
    let squarefree = g.div_rem(&g.gcd(&g.derivative())).0;
    let sturm = sturm_sequence(&squarefree);
    let min_width = (hi - lo) / int(BigInt::one() << 40);
    let anti = g.antiderivative();
    let mut total = BigRational::zero();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let roots = sign_changes(&sturm, &a) - sign_changes(&sturm, &b);
        if roots == 0 {
            total += (anti.eval(&b) - anti.eval(&a)).abs();
        } else if &b - &a <= min_width {
            let mid = (&a + &b) / int(2);
            let radius = (&b - &a) / int(2);
            total += (&b - &a)
                * g.compose_shift(&mid)
                    .abs_bound_on(&-radius.clone(), &radius);
        } else {
            let mid = (&a + &b) / int(2);
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
    }
    total
}

fn sturm_sequence(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        seq.push(-&r);
    }
    seq.pop();
    seq
}

fn sign_changes(seq: &[RationalPolynomial], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}
