//! Certified envelopes around `p_A(n, k)`, inequality thresholds, and the
//! eventual Bessenrodt–Ono / log-concavity classification.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{ceil, default_exp_tolerance, exp_upper_bound, factorial, floor, int, rational};
use crate::asymptotics::almkvist_polynomial_part;
use crate::system::leading_denominator;
use crate::{Error, PartSystem, RationalPolynomial, Result};

/// Which sandwich an envelope encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnvelopeKind {
    /// Leading term `± n^{k-2}`.
    LeadingTerm,
    /// Cubic part for four pairwise coprime parts, `± 16 (∏a)^3`.
    FourParts,
    /// Three top terms times `n^{k-3}`, `± E_k n^{k-4}`.
    ThreeTerm,
    /// Residue-independent part, `± F n^{j-2}`.
    StablePart,
}

impl EnvelopeKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::LeadingTerm => "leading-term",
            Self::FourParts => "four-parts",
            Self::ThreeTerm => "three-term",
            Self::StablePart => "stable-part",
        }
    }
}

impl fmt::Display for EnvelopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Claims `main(n) - err·n^d < p(n) < main(n) + err·n^d` for `n >= valid_from`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEnvelope {
    pub system: PartSystem,
    pub kind: EnvelopeKind,
    pub main: RationalPolynomial,
    pub err_coeff: BigRational,
    pub err_degree: i32,
    pub valid_from: u64,
}

impl BoundEnvelope {
    /// `err·n^d`; `n` must be positive when `d < 0`.
    pub fn error_at(&self, n: u64) -> BigRational {
        &self.err_coeff * int(n).pow(self.err_degree)
    }

    /// Lower and upper sandwich values at `n`.
    pub fn bounds_at(&self, n: u64) -> (BigRational, BigRational) {
        let centre = self.main.eval_int(&BigInt::from(n));
        let err = self.error_at(n);
        (&centre - &err, centre + err)
    }
}

fn pairwise_coprime(values: &[u64]) -> bool {
    values
        .iter()
        .enumerate()
        .all(|(i, a)| values[i + 1..].iter().all(|b| a.gcd(b) == 1))
}

fn applicability(system: &PartSystem, what: &str, need: &str) -> Error {
    Error::Applicability(format!("{what} for {system} needs {need}"))
}

/// `n^{k-1}/((k-1)!∏a) ± n^{k-2}`, valid from `n = 1`.
pub fn leading_term_envelope(system: &PartSystem) -> Result<BoundEnvelope> {
    let a = system.parts();
    if system.k() < 3 || !system.is_strictly_increasing() || a[0].gcd(&a[1]) != 1 {
        return Err(applicability(
            system,
            "the leading-term envelope",
            "k >= 3, strictly increasing parts and gcd(a_1, a_2) = 1",
        ));
    }
    let k = system.k();
    Ok(BoundEnvelope {
        system: system.clone(),
        kind: EnvelopeKind::LeadingTerm,
        main: RationalPolynomial::monomial(
            k - 1,
            BigRational::new(BigInt::one(), leading_denominator(system)),
        ),
        err_coeff: int(1),
        err_degree: k as i32 - 2,
        valid_from: 1,
    })
}

/// `αn³ + βn² + γn ± 16(∏a)³` for four strictly increasing pairwise coprime parts.
pub fn four_parts_envelope(system: &PartSystem) -> Result<BoundEnvelope> {
    if system.k() != 4 || !system.is_strictly_increasing() || !pairwise_coprime(system.parts()) {
        return Err(applicability(
            system,
            "the four-part envelope",
            "exactly four strictly increasing pairwise coprime parts",
        ));
    }
    let prod = int(system.product().clone());
    let sigma = int(system.sigma().clone());
    let s2 = int(system.power_sum(2));
    let alpha = int(1) / (int(6) * &prod);
    let beta = &sigma / (int(4) * &prod);
    let gamma = (int(3) * &sigma * &sigma - s2) / (int(24) * &prod);
    Ok(BoundEnvelope {
        system: system.clone(),
        kind: EnvelopeKind::FourParts,
        main: RationalPolynomial::new(vec![BigRational::zero(), gamma, beta, alpha]),
        err_coeff: int(16) * prod.pow(3),
        err_degree: 0,
        valid_from: 1,
    })
}

fn check_three_term(system: &PartSystem) -> Result<()> {
    if system.k() < 4 || !system.is_strictly_increasing() || !pairwise_coprime(&system.parts()[..4])
    {
        return Err(applicability(
            system,
            "E_k",
            "k >= 4, strictly increasing parts and a_1..a_4 pairwise coprime",
        ));
    }
    Ok(())
}

/// `k²(a_1a_2a_3)³ a_k^{k+3} / ∏a`, the constant of `E_k` before the factor
/// `e^{1/a_k}`. The formula alone; hypotheses are checked by [`ek_constant`].
pub fn ek_rational_part(system: &PartSystem) -> Result<BigRational> {
    if system.k() < 3 {
        return Err(Error::Precondition("E_k needs at least three parts".into()));
    }
    let a = system.parts();
    let k = system.k();
    let head = BigInt::from(a[0] * a[1] * a[2]).pow(3);
    let tail = BigInt::from(system.last()).pow(k as u32 + 3);
    Ok(BigRational::new(
        BigInt::from(k * k) * head * tail,
        system.product().clone(),
    ))
}

/// Rational upper bound on `E_k = k²(a_1a_2a_3)³ a_k^{k+3} e^{1/a_k} / ∏a`.
pub fn ek_constant(system: &PartSystem) -> Result<BigRational> {
    check_three_term(system)?;
    let base = ek_rational_part(system)?;
    Ok(base * exp_upper_bound(&rational(1, system.last()), &default_exp_tolerance()))
}

/// `(αn² + βn + γ)n^{k-3} ± E_k n^{k-4}`, valid from `n = a_k`.
pub fn three_term_envelope(system: &PartSystem) -> Result<BoundEnvelope> {
    let err = ek_constant(system)?;
    let k = system.k() as u64;
    let prod = int(system.product().clone());
    let sigma = int(system.sigma().clone());
    let s2 = int(system.power_sum(2));
    let alpha = int(1) / (int(factorial(k - 1)) * &prod);
    let beta = &sigma / (int(2 * factorial(k - 2)) * &prod);
    let gamma = (int(3) * &sigma * &sigma - s2) / (int(24 * factorial(k - 3)) * &prod);
    let main = RationalPolynomial::new(vec![gamma, beta, alpha])
        * RationalPolynomial::monomial(k as usize - 3, int(1));
    Ok(BoundEnvelope {
        system: system.clone(),
        kind: EnvelopeKind::ThreeTerm,
        main,
        err_coeff: err,
        err_degree: k as i32 - 4,
        valid_from: system.last(),
    })
}

/// `∏_{i=1}^{k}(1 + iDk)`.
fn shifted_lcm_product(system: &PartSystem) -> BigInt {
    let k = system.k() as u64;
    let dk = system.lcm() * k;
    (1..=k).map(|i| &dk * i + 1).product()
}

/// `F = ∏_{i=1}^{k}(1 + iDk) / (k! ∏a)`.
pub fn f_constant(system: &PartSystem) -> Result<BigRational> {
    if system.k() < 2 {
        return Err(Error::Precondition("F needs k >= 2".into()));
    }
    let k = system.k() as u64;
    Ok(BigRational::new(
        shifted_lcm_product(system),
        factorial(k) * system.product(),
    ))
}

/// Residue-independent part of degree `>= j-1` `± F n^{j-2}`, valid from `n = 1`.
///
/// `j` defaults to the smallest size for which every sub-multiset is coprime.
pub fn stable_part_envelope(system: &PartSystem, j: Option<usize>) -> Result<BoundEnvelope> {
    let err = f_constant(system)?;
    let j = match j {
        Some(j) => j,
        None => system.minimal_coprime_size().ok_or_else(|| {
            applicability(
                system,
                "the stable-part envelope",
                "gcd of all parts equal to 1",
            )
        })?,
    };
    let full = almkvist_polynomial_part(system, j)?;
    let main = RationalPolynomial::new(
        (0..system.k())
            .map(|d| {
                if d + 1 >= j {
                    full.coeff(d)
                } else {
                    BigRational::zero()
                }
            })
            .collect(),
    );
    Ok(BoundEnvelope {
        system: system.clone(),
        kind: EnvelopeKind::StablePart,
        main,
        err_coeff: err,
        err_degree: j as i32 - 2,
        valid_from: 1,
    })
}

/// The hypothesis family behind a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Two strictly increasing coprime parts: `a, b > 4a_1a_2`.
    CoprimePair,
    /// Parts `(1, 1)`: every `a, b >= 1`.
    OnesPair,
    /// `k >= 3`, strictly increasing, `gcd(a_1, a_2) = 1`: `a, b >= 2(k-1)!∏a + 2`.
    IncreasingCoprimeStart,
    /// Powers of two, `k >= 3`: `a, b > 2^{k(k-1)/2+1}(k-1)! + 1`.
    PowersOfTwo,
    /// Any multiset with gcd 1: `a, b > 2∏(1+iDk)/k + 2`.
    MultisetBo,
    /// Four strictly increasing pairwise coprime parts: `192(∏a)^4` / `288(∏a)^4`.
    FourPairwiseCoprime,
    /// `k > 4`, strictly increasing, first four pairwise coprime.
    FirstFourPairwiseCoprime,
    /// `k > 5`, strictly increasing, starting `1, 2, 3, 4, 5`.
    ConsecutivePrefix,
    /// Parts exactly `1..k`, `k >= 5`: `n > 432 k^{k+5}(k-1)! e^{1/k}`.
    Consecutive,
    /// Every `(k-2)`-multisubset coprime, `k >= 4`: `2∏(1+iDk)/k` (or `3∏/k`).
    MultisetLogConcave,
    /// All parts equal to 1.
    AllOnes,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Self::CoprimePair => "coprime-pair",
            Self::OnesPair => "ones-pair",
            Self::IncreasingCoprimeStart => "increasing-coprime-start",
            Self::PowersOfTwo => "powers-of-two",
            Self::MultisetBo => "multiset",
            Self::FourPairwiseCoprime => "four-pairwise-coprime",
            Self::FirstFourPairwiseCoprime => "first-four-pairwise-coprime",
            Self::ConsecutivePrefix => "consecutive-prefix",
            Self::Consecutive => "consecutive",
            Self::MultisetLogConcave => "multiset",
            Self::AllOnes => "all-ones",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A guaranteed-from point: the property holds for all arguments `>= value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub criterion: Criterion,
    /// The bound as stated, with every `e^{1/a}` replaced by a rational majorant.
    pub bound: BigRational,
    /// Whether the stated form is `x > bound` rather than `x >= bound`.
    pub strict: bool,
    /// Inclusive integer lower bound `n_min`.
    pub value: BigInt,
    pub condition: String,
    pub hypotheses_hold: bool,
    /// The other evaluated criteria, applicable or not.
    pub alternatives: Vec<Threshold>,
}

impl Threshold {
    fn new(
        criterion: Criterion,
        bound: BigRational,
        strict: bool,
        condition: &str,
        hypotheses_hold: bool,
    ) -> Self {
        let value = if strict {
            floor(&bound) + 1
        } else {
            ceil(&bound)
        };
        Self {
            criterion,
            bound,
            strict,
            value,
            condition: condition.to_string(),
            hypotheses_hold,
            alternatives: Vec::new(),
        }
    }
}

/// Picks the smallest applicable candidate; earlier candidates win ties.
fn select(mut candidates: Vec<Threshold>) -> Option<Threshold> {
    let best = candidates
        .iter()
        .enumerate()
        .filter(|(_, t)| t.hypotheses_hold)
        .min_by(|(i, a), (j, b)| a.value.cmp(&b.value).then(i.cmp(j)))
        .map(|(i, _)| i)?;
    let mut chosen = candidates.remove(best);
    chosen.alternatives = candidates;
    Some(chosen)
}

fn e_majorant(a: u64) -> BigRational {
    exp_upper_bound(&rational(1, a), &default_exp_tolerance())
}

fn is_powers_of_two(system: &PartSystem) -> bool {
    system.parts().iter().enumerate().all(|(i, &a)| a == 1 << i)
}

fn is_consecutive(system: &PartSystem) -> bool {
    system
        .parts()
        .iter()
        .enumerate()
        .all(|(i, &a)| a == i as u64 + 1)
}

/// Smallest `N` such that `p(a)p(b) > p(a+b)` is guaranteed for all `a, b >= N`.
pub fn bo_threshold(system: &PartSystem) -> Result<Threshold> {
    let c = classify(system);
    if !c.bo_holds_eventually {
        return Err(Error::Classification(format!(
            "{system} never satisfies the Bessenrodt–Ono inequality eventually: {}",
            c.bo_witness.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    let k = system.k();
    let a = system.parts();
    let prod = int(system.product().clone());
    let mut candidates = Vec::new();
    if k == 2 {
        candidates.push(Threshold::new(
            Criterion::CoprimePair,
            int(4) * &prod,
            true,
            "k = 2, a_1 < a_2, gcd(a_1, a_2) = 1",
            a[0] < a[1] && a[0].gcd(&a[1]) == 1,
        ));
        candidates.push(Threshold::new(
            Criterion::OnesPair,
            int(1),
            false,
            "parts (1, 1)",
            system.is_all_ones(),
        ));
    }
    if k >= 3 {
        let increasing = system.is_strictly_increasing() && a[0].gcd(&a[1]) == 1;
        candidates.push(Threshold::new(
            Criterion::IncreasingCoprimeStart,
            int(2 * factorial(k as u64 - 1)) * &prod + int(2),
            false,
            "k >= 3, strictly increasing, gcd(a_1, a_2) = 1",
            increasing,
        ));
        let exponent = (k * (k - 1) / 2 + 1) as u32;
        candidates.push(Threshold::new(
            Criterion::PowersOfTwo,
            int(BigInt::from(2).pow(exponent) * factorial(k as u64 - 1)) + int(1),
            true,
            "parts 1, 2, 4, ..., 2^{k-1}",
            is_powers_of_two(system),
        ));
    }
    candidates.push(Threshold::new(
        Criterion::MultisetBo,
        rational(2 * shifted_lcm_product(system), k as u64) + int(2),
        true,
        "k >= 2, gcd of all parts = 1",
        true,
    ));
    Ok(select(candidates).expect("the multiset criterion always applies"))
}

/// Guaranteed starting points for plain and `(1 + 1/n²)`-strengthened log-concavity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogConcavityThresholds {
    pub plain: Threshold,
    /// Absent when no criterion covers the strengthened form (parts `(1, 1)`).
    pub strengthened: Option<Threshold>,
}

pub fn logconcavity_threshold(system: &PartSystem) -> Result<LogConcavityThresholds> {
    let c = classify(system);
    if !c.logconcave_eventually {
        return Err(Error::Classification(format!(
            "{system} is not eventually log-concave: {}",
            c.logconcave_witness
                .map(|w| w.to_string())
                .unwrap_or_default()
        )));
    }
    let k = system.k();
    let kk = k as u64;
    let a = system.parts();
    let prod = int(system.product().clone());
    let mut plain = Vec::new();
    let mut strong = Vec::new();

    if system.is_all_ones() {
        let cond = "all parts equal to 1";
        plain.push(Threshold::new(
            Criterion::AllOnes,
            int(1),
            false,
            cond,
            true,
        ));
        if k >= 3 {
            strong.push(Threshold::new(
                Criterion::AllOnes,
                rational(kk, kk - 2),
                false,
                cond,
                true,
            ));
        }
    }
    if k == 4 {
        let cond = "k = 4, strictly increasing, pairwise coprime";
        let holds = system.is_strictly_increasing() && pairwise_coprime(a);
        let p4 = prod.pow(4);
        plain.push(Threshold::new(
            Criterion::FourPairwiseCoprime,
            int(192) * &p4,
            false,
            cond,
            holds,
        ));
        strong.push(Threshold::new(
            Criterion::FourPairwiseCoprime,
            int(288) * &p4,
            false,
            cond,
            holds,
        ));
    }
    if k > 4 {
        let cond = "k > 4, strictly increasing, a_1..a_4 pairwise coprime";
        let holds = system.is_strictly_increasing() && pairwise_coprime(&a[..4]);
        let head = BigInt::from(a[0] * a[1] * a[2]).pow(3);
        let bound = int(2
            * kk
            * kk
            * factorial(kk - 1)
            * head
            * BigInt::from(system.last()).pow(k as u32 + 3))
            * e_majorant(system.last());
        plain.push(Threshold::new(
            Criterion::FirstFourPairwiseCoprime,
            bound.clone(),
            true,
            cond,
            holds,
        ));
        strong.push(Threshold::new(
            Criterion::FirstFourPairwiseCoprime,
            bound,
            true,
            cond,
            holds,
        ));
    }
    if k > 5 {
        let cond = "k > 5, strictly increasing, starting 1, 2, 3, 4, 5";
        let holds = system.is_strictly_increasing() && a[..5] == [1, 2, 3, 4, 5];
        let bound =
            int(432 * kk * kk * factorial(kk - 1) * BigInt::from(system.last()).pow(k as u32 + 3))
                * e_majorant(system.last());
        plain.push(Threshold::new(
            Criterion::ConsecutivePrefix,
            bound.clone(),
            true,
            cond,
            holds,
        ));
        strong.push(Threshold::new(
            Criterion::ConsecutivePrefix,
            bound,
            true,
            cond,
            holds,
        ));
    }
    if k >= 5 {
        let bound =
            int(432 * BigInt::from(kk).pow(k as u32 + 5) * factorial(kk - 1)) * e_majorant(kk);
        plain.push(Threshold::new(
            Criterion::Consecutive,
            bound,
            true,
            "parts exactly 1, 2, ..., k with k >= 5",
            is_consecutive(system),
        ));
    }
    if k >= 4 {
        let cond = "k >= 4, every (k-2)-multisubset coprime";
        let holds = system.gcd_all_multisubsets(k - 2)?;
        let q = shifted_lcm_product(system);
        plain.push(Threshold::new(
            Criterion::MultisetLogConcave,
            rational(2 * &q, kk),
            false,
            cond,
            holds,
        ));
        let factor = if k == 4 { 3 } else { 2 };
        strong.push(Threshold::new(
            Criterion::MultisetLogConcave,
            rational(factor * q, kk),
            false,
            cond,
            holds,
        ));
    }

    Ok(LogConcavityThresholds {
        plain: select(plain).expect("classification guarantees a criterion"),
        strengthened: select(strong),
    })
}

/// Why an eventual property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    SinglePart,
    CommonDivisor(u64),
    /// `k` is 2 or 3 and the parts are not all 1.
    TooFewParts(usize),
    NonCoprimeMultisubset {
        indices: Vec<usize>,
        values: Vec<u64>,
        gcd: u64,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SinglePart => write!(f, "only one part"),
            Self::CommonDivisor(d) => write!(f, "every part is divisible by {d}"),
            Self::TooFewParts(k) => write!(f, "k = {k} < 4 and the parts are not all 1"),
            Self::NonCoprimeMultisubset { values, gcd, .. } => {
                write!(f, "the sub-multiset {values:?} has gcd {gcd}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub system: PartSystem,
    pub bo_holds_eventually: bool,
    pub logconcave_eventually: bool,
    pub bo_witness: Option<Witness>,
    pub logconcave_witness: Option<Witness>,
}

pub fn classify(system: &PartSystem) -> Classification {
    let k = system.k();
    let bo_witness = if k == 1 {
        Some(Witness::SinglePart)
    } else if system.gcd() > 1 {
        Some(Witness::CommonDivisor(system.gcd()))
    } else {
        None
    };
    let logconcave_witness = if k == 1 {
        Some(Witness::SinglePart)
    } else if system.is_all_ones() {
        None
    } else if k < 4 {
        Some(Witness::TooFewParts(k))
    } else {
        system
            .non_coprime_multisubset(k - 2)
            .expect("1 <= k - 2 <= k")
            .map(|indices| {
                let values: Vec<u64> = indices.iter().map(|&i| system.parts()[i]).collect();
                let gcd = values.iter().fold(0, |g, v| v.gcd(&g));
                Witness::NonCoprimeMultisubset {
                    indices,
                    values,
                    gcd,
                }
            })
    };
    Classification {
        system: system.clone(),
        bo_holds_eventually: bo_witness.is_none(),
        logconcave_eventually: logconcave_witness.is_none(),
        bo_witness,
        logconcave_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::count_table;

    fn sys(p: &[i64]) -> PartSystem {
        PartSystem::new(p).unwrap()
    }

    fn holds_on(env: &BoundEnvelope, hi: usize) -> bool {
        let t = count_table(&env.system, hi);
        (env.valid_from as usize..=hi).all(|n| {
            let (lo, up) = env.bounds_at(n as u64);
            let p = int(t.value(n).clone());
            lo < p && p < up
        })
    }

    #[test]
    fn leading_term_envelope_holds() {
        let e = leading_term_envelope(&sys(&[2, 3, 5])).unwrap();
        assert_eq!(e.main, RationalPolynomial::monomial(2, rational(1, 60)));
        assert_eq!(e.err_coeff, int(1));
        assert_eq!(e.err_degree, 1);
        for parts in [&[1i64, 2, 3][..], &[1, 2, 4], &[2, 3, 5]] {
            assert!(holds_on(&leading_term_envelope(&sys(parts)).unwrap(), 400));
        }
        assert!(leading_term_envelope(&sys(&[2, 4, 5])).is_err());
        assert!(leading_term_envelope(&sys(&[1, 1, 2])).is_err());
        assert!(leading_term_envelope(&sys(&[1, 2])).is_err());
    }

    #[test]
    fn four_part_envelope() {
        let e = four_parts_envelope(&sys(&[1, 2, 3, 5])).unwrap();
        assert_eq!(e.main.coeff(3), rational(1, 180));
        assert_eq!(e.main.coeff(2), rational(11, 120));
        assert_eq!(e.main.coeff(1), rational(9, 20));
        assert_eq!(e.err_coeff, int(16 * 27000));
        assert_eq!(e.valid_from, 1);
        assert!(holds_on(&e, 500));
        assert!(four_parts_envelope(&sys(&[1, 2, 3, 4])).is_err());
    }

    #[test]
    fn ek_values() {
        let s = sys(&[1, 2, 3, 5]);
        assert_eq!(ek_rational_part(&s).unwrap(), int(9_000_000));
        let ek = ek_constant(&s).unwrap();
        // 9e6 · e^{1/5} ≈ 10992624.82
        assert!(ek > rational(1_099_262_482, 100) && ek < rational(1_099_262_483, 100));
        assert_eq!(
            ek_rational_part(&sys(&[1, 2, 3, 4, 5])).unwrap(),
            rational(25 * 216 * 390625, 120)
        );
        assert!(ek_constant(&sys(&[1, 2, 4, 5])).is_err());
        assert!(ek_constant(&sys(&[1, 2, 3, 4, 5])).is_err());
        assert!(holds_on(&three_term_envelope(&s).unwrap(), 600));
    }

    #[test]
    fn f_values() {
        assert_eq!(f_constant(&sys(&[1, 1, 1])).unwrap(), rational(140, 3));
        assert_eq!(f_constant(&sys(&[2, 3])).unwrap(), rational(325, 12));
        assert!(f_constant(&sys(&[4])).is_err());
    }

    #[test]
    fn stable_part_envelope_holds() {
        let e = stable_part_envelope(&sys(&[2, 3]), None).unwrap();
        assert_eq!(e.main, RationalPolynomial::monomial(1, rational(1, 6)));
        assert_eq!(e.err_degree, 0);
        assert!(holds_on(&e, 500));
        assert!(holds_on(
            &stable_part_envelope(&sys(&[1, 2, 2, 3, 3]), None).unwrap(),
            300
        ));
        let ones = stable_part_envelope(&sys(&[1, 1, 1]), None).unwrap();
        assert_eq!(ones.err_degree, -1);
        assert!(holds_on(&ones, 100));
        assert!(matches!(
            stable_part_envelope(&sys(&[2, 4]), None),
            Err(Error::Applicability(_))
        ));
        assert!(matches!(
            stable_part_envelope(&sys(&[2, 3, 4]), Some(2)),
            Err(Error::Applicability(_))
        ));
    }

    #[test]
    fn bo_examples() {
        let pair = bo_threshold(&sys(&[1, 2])).unwrap();
        assert_eq!(pair.criterion, Criterion::CoprimePair);
        assert_eq!(
            (pair.bound.clone(), pair.strict, pair.value.clone()),
            (int(8), true, BigInt::from(9))
        );

        let pow2 = bo_threshold(&sys(&[1, 2, 4])).unwrap();
        assert_eq!(pow2.criterion, Criterion::IncreasingCoprimeStart);
        assert_eq!(pow2.value, BigInt::from(34));
        let variant = pow2
            .alternatives
            .iter()
            .find(|t| t.criterion == Criterion::PowersOfTwo)
            .unwrap();
        assert_eq!(
            (variant.bound.clone(), variant.value.clone()),
            (int(33), BigInt::from(34))
        );

        assert_eq!(
            bo_threshold(&sys(&[1, 2, 3])).unwrap().value,
            BigInt::from(26)
        );
        assert_eq!(bo_threshold(&sys(&[1, 1])).unwrap().value, BigInt::one());

        let multi = bo_threshold(&sys(&[2, 2, 3])).unwrap();
        assert_eq!(multi.criterion, Criterion::MultisetBo);

        assert!(matches!(
            bo_threshold(&sys(&[2, 4, 6])),
            Err(Error::Classification(_))
        ));
        assert!(matches!(
            bo_threshold(&sys(&[1])),
            Err(Error::Classification(_))
        ));
    }

    #[test]
    fn powers_of_two_variant_matches_increasing_start() {
        for k in 3..=8u32 {
            let parts: Vec<i64> = (0..k).map(|i| 1 << i).collect();
            let t = bo_threshold(&sys(&parts)).unwrap();
            let variant = t
                .alternatives
                .iter()
                .find(|t| t.criterion == Criterion::PowersOfTwo)
                .unwrap();
            let expected = BigInt::from(2).pow(k * (k - 1) / 2 + 1) * factorial(k as u64 - 1) + 1;
            assert_eq!(variant.bound, int(expected));
            assert_eq!(variant.value, t.value);
        }
    }

    #[test]
    fn increasing_threshold_monotone_in_parts() {
        for base in [[1u64, 2, 3], [1, 3, 4], [2, 3, 7]] {
            let t0 = bo_threshold(&PartSystem::from_u64(&base).unwrap())
                .unwrap()
                .value;
            let mut bigger = base;
            bigger[2] += 1;
            while bigger[0].gcd(&bigger[1]) != 1 {
                bigger[2] += 1;
            }
            let t1 = bo_threshold(&PartSystem::from_u64(&bigger).unwrap())
                .unwrap()
                .value;
            assert!(t1 >= t0);
        }
    }

    #[test]
    fn logconcavity_examples() {
        let four = logconcavity_threshold(&sys(&[1, 2, 3, 5])).unwrap();
        assert_eq!(four.plain.criterion, Criterion::FourPairwiseCoprime);
        assert_eq!(four.plain.value, BigInt::from(155_520_000u64));
        assert_eq!(
            four.strengthened.unwrap().value,
            BigInt::from(288u64 * 810_000)
        );

        let six = logconcavity_threshold(&sys(&[1, 2, 3, 4, 5, 6])).unwrap();
        assert_eq!(six.plain.criterion, Criterion::ConsecutivePrefix);
        assert_eq!(six.plain.value, BigInt::from(22_218_317_100_078u64));
        let cons = six
            .plain
            .alternatives
            .iter()
            .find(|t| t.criterion == Criterion::Consecutive)
            .unwrap();
        assert_eq!(cons.value, six.plain.value);

        let ones = logconcavity_threshold(&sys(&[1, 1, 1])).unwrap();
        assert_eq!(ones.plain.value, BigInt::one());
        assert_eq!(ones.strengthened.unwrap().value, BigInt::from(3));
        let pair = logconcavity_threshold(&sys(&[1, 1])).unwrap();
        assert!(pair.strengthened.is_none());

        let multi = logconcavity_threshold(&sys(&[1, 1, 2, 3])).unwrap();
        assert_eq!(multi.plain.criterion, Criterion::MultisetLogConcave);

        assert!(matches!(
            logconcavity_threshold(&sys(&[1, 2, 3])),
            Err(Error::Classification(_))
        ));
    }

    #[test]
    fn classification_examples() {
        let c = classify(&sys(&[2, 4, 6]));
        assert!(!c.bo_holds_eventually && !c.logconcave_eventually);
        assert_eq!(c.bo_witness, Some(Witness::CommonDivisor(2)));
        let c = classify(&sys(&[1, 2, 3]));
        assert!(c.bo_holds_eventually && !c.logconcave_eventually);
        assert_eq!(c.logconcave_witness, Some(Witness::TooFewParts(3)));
        let c = classify(&sys(&[1, 1]));
        assert!(c.bo_holds_eventually && c.logconcave_eventually);
        let c = classify(&sys(&[1, 2, 4, 6]));
        assert!(matches!(
            c.logconcave_witness,
            Some(Witness::NonCoprimeMultisubset { gcd: 2, .. })
        ));
        assert_eq!(classify(&sys(&[5])).bo_witness, Some(Witness::SinglePart));
    }
}
