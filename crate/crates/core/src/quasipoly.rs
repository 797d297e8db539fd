//! Quasi-polynomial representation of `p_A(n, k)`.
//!
//! For every residue `r` modulo `D = lcm(a_1, ..., a_k)` there is a polynomial
//! of degree at most `k - 1` that agrees with `p_A(n, k)` on `n ≡ r (mod D)`.
//! It is built two ways: by the Cimpoeaş–Nicolae tuple sum and by exact
//! interpolation from DP values.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{binomial, factorial, int, rational};
use crate::exact::count_table;
use crate::{Error, PartSystem, RationalPolynomial, Result};

/// Default cap on the number of `(j_1, ..., j_k)` tuples the tuple sum may visit.
pub const DEFAULT_TUPLE_BUDGET: u64 = 10_000_000;

/// Row `n` of the unsigned Stirling numbers of the first kind, indices `0..=n`.
pub fn stirling1_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        // x^(m+1) = x^(m) · (x + m)
        let mut next = vec![BigInt::zero(); m + 2];
        for (i, c) in row.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * m;
        }
        row = next;
    }
    row
}

/// `[n, i]`: coefficient of `x^i` in `x(x+1)...(x+n-1)`; zero when `i > n`.
pub fn stirling1_unsigned(n: usize, i: usize) -> BigInt {
    if i > n {
        return BigInt::zero();
    }
    stirling1_row(n).swap_remove(i)
}

/// The rising factorial `x(x+1)...(x+n-1)` as a polynomial.
pub fn rising_factorial_coeffs(n: usize) -> RationalPolynomial {
    RationalPolynomial::from_integers(stirling1_row(n))
}

/// One polynomial per residue class modulo the period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    system: PartSystem,
    period: usize,
    polys: Vec<RationalPolynomial>,
}

/// Coefficients shared by every residue polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableCoefficients {
    /// Smallest degree `d` such that all coefficients of degree `>= d` agree
    /// across residues; equals `k` when not even the leading one does.
    pub lowest_degree: usize,
    /// The shared coefficients (degrees below `lowest_degree` are zero).
    pub common: RationalPolynomial,
}

impl StableCoefficients {
    /// Smallest `j` with every coefficient of degree `>= j - 1` stable.
    pub fn j_min(&self) -> usize {
        self.lowest_degree + 1
    }

    /// Whether degrees `>= j - 1` are all stable.
    pub fn covers(&self, j: usize) -> bool {
        j >= self.j_min()
    }
}

impl QuasiPolynomial {
    pub fn new(system: PartSystem, polys: Vec<RationalPolynomial>) -> Result<Self> {
        let period = system.period()?;
        if polys.len() != period {
            return Err(Error::Validation(format!(
                "expected {period} residue polynomials, got {}",
                polys.len()
            )));
        }
        Ok(Self {
            system,
            period,
            polys,
        })
    }

    pub fn system(&self) -> &PartSystem {
        &self.system
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn polys(&self) -> &[RationalPolynomial] {
        &self.polys
    }

    pub fn residue_poly(&self, r: usize) -> &RationalPolynomial {
        &self.polys[r]
    }

    /// `polys[n mod D](n)`, checked to be a non-negative integer.
    pub fn evaluate(&self, n: u64) -> Result<BigInt> {
        let r = (n % self.period as u64) as usize;
        let v = self.polys[r].eval_int(&BigInt::from(n));
        if !v.is_integer() || v.is_negative() {
            return Err(Error::Consistency(format!(
                "quasi-polynomial of {} gives {v} at n = {n}",
                self.system
            )));
        }
        Ok(v.to_integer())
    }

    pub fn stable_coefficients(&self) -> StableCoefficients {
        let k = self.system.k();
        let mut lowest = k;
        while lowest > 0 {
            let d = lowest - 1;
            let first = self.polys[0].coeff(d);
            if self.polys.iter().any(|p| p.coeff(d) != first) {
                break;
            }
            lowest = d;
        }
        let mut coeffs = vec![BigRational::zero(); k];
        for (d, c) in coeffs.iter_mut().enumerate().skip(lowest) {
            *c = self.polys[0].coeff(d);
        }
        StableCoefficients {
            lowest_degree: lowest,
            common: RationalPolynomial::new(coeffs),
        }
    }
}

/// Tuple sum with the default budget.
pub fn cnt_quasipolynomial(system: &PartSystem) -> Result<QuasiPolynomial> {
    cnt_quasipolynomial_with_budget(system, DEFAULT_TUPLE_BUDGET)
}

/// Builds the quasi-polynomial from the Cimpoeaş–Nicolae sum.
///
/// Each tuple `j` with `S = Σ a_i j_i` contributes
/// `C((n - S)/D + k - 1, k - 1) = (1/(k-1)!) Σ_i [k, i+1] ((n - S)/D)^i`
/// to the residue `S mod D`. Tuples are visited once and bucketed by `S`.
pub fn cnt_quasipolynomial_with_budget(
    system: &PartSystem,
    budget: u64,
) -> Result<QuasiPolynomial> {
    let period = system.period()?;
    let d = period as u64;
    let radices: Vec<u64> = system.parts().iter().map(|&a| d / a).collect();
    let tuples = radices
        .iter()
        .try_fold(1u64, |acc, &r| acc.checked_mul(r))
        .filter(|&t| t <= budget)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "tuple sum for {system} exceeds the budget of {budget} tuples; use fit_quasipolynomial"
            ))
        })?;

    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    let mut digits = vec![0u64; radices.len()];
    let mut sum = 0u64;
    for _ in 0..tuples {
        *histogram.entry(sum).or_default() += 1;
        for (i, digit) in digits.iter_mut().enumerate() {
            let a = system.parts()[i];
            *digit += 1;
            sum += a;
            if *digit < radices[i] {
                break;
            }
            sum -= a * *digit;
            *digit = 0;
        }
    }

    let k = system.k();
    let stirling = stirling1_row(k);
    let inv_d = rational(1, d);
    let mut polys = vec![RationalPolynomial::zero(); period];
    for (&s, &count) in &histogram {
        let t = RationalPolynomial::shifted_identity(int(-BigInt::from(s))).scale(&inv_d);
        let mut acc = RationalPolynomial::zero();
        for i in (0..k).rev() {
            acc = &(&acc * &t) + &RationalPolynomial::constant(int(stirling[i + 1].clone()));
        }
        let r = (s % d) as usize;
        polys[r] = &polys[r] + &acc.scale(&int(count));
    }
    let norm = rational(1, factorial(k as u64 - 1));
    let polys = polys.into_iter().map(|p| p.scale(&norm)).collect();
    QuasiPolynomial::new(system.clone(), polys)
}

/// Builds the quasi-polynomial by interpolating DP values.
///
/// Residue `r` is fitted through `n = r + tD`, `t = 0..k`, then checked on
/// the next `k` points of the same class.
pub fn fit_quasipolynomial(system: &PartSystem) -> Result<QuasiPolynomial> {
    let period = system.period()?;
    let k = system.k();
    let table = count_table(system, 2 * k * period);
    let polys = (0..period)
        .into_par_iter()
        .map(|r| {
            let xs: Vec<BigInt> = (0..k).map(|t| BigInt::from(r + t * period)).collect();
            let ys: Vec<BigInt> = (0..k)
                .map(|t| table.value(r + t * period).clone())
                .collect();
            let poly = interpolate(&xs, &ys)?;
            for t in k..2 * k {
                let n = r + t * period;
                if poly.eval_int(&BigInt::from(n)) != int(table.value(n).clone()) {
                    return Err(Error::Consistency(format!(
                        "fitted polynomial for residue {r} of {system} misses p({n})"
                    )));
                }
            }
            Ok(poly)
        })
        .collect::<Result<Vec<_>>>()?;
    QuasiPolynomial::new(system.clone(), polys)
}

/// Unique polynomial of degree `< xs.len()` through the given integer points.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Result<RationalPolynomial> {
    let matrix: Vec<Vec<BigInt>> = xs
        .iter()
        .map(|x| (0..xs.len()).map(|i| x.pow(i as u32)).collect())
        .collect();
    Ok(RationalPolynomial::new(solve_bareiss(matrix, ys.to_vec())?))
}

/// Solves `M c = b` over the rationals by fraction-free (Bareiss) elimination.
fn solve_bareiss(mut m: Vec<Vec<BigInt>>, rhs: Vec<BigInt>) -> Result<Vec<BigRational>> {
    let n = m.len();
    for (row, b) in m.iter_mut().zip(rhs) {
        row.push(b);
    }
    let mut prev = BigInt::one();
    for p in 0..n {
        let pivot = (p..n)
            .find(|&i| !m[i][p].is_zero())
            .ok_or_else(|| Error::Consistency("singular interpolation system".into()))?;
        m.swap(p, pivot);
        for i in p + 1..n {
            for j in p + 1..=n {
                let v = (&m[p][p] * &m[i][j] - &m[i][p] * &m[p][j]) / &prev;
                m[i][j] = v;
            }
            m[i][p] = BigInt::zero();
        }
        prev = m[p][p].clone();
    }
    let mut solution = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = int(m[i][n].clone());
        for j in i + 1..n {
            acc -= int(m[i][j].clone()) * &solution[j];
        }
        solution[i] = acc / int(m[i][i].clone());
    }
    Ok(solution)
}

/// `Σ_{i=m}^{k} [k, i]·C(i, m)`, which equals `[k+1, m+1]`.
pub fn stirling_binomial_sum(k: usize, m: usize) -> BigInt {
    let row = stirling1_row(k);
    (m..=k)
        .map(|i| &row[i] * binomial(i as u64, m as u64))
        .sum()
}
