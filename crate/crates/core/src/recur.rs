//! Fibonacci numbers in the convention `F_0 = F_1 = 1`, two-term linear
//! recurrences `A_{n+2} = a A_{n+1} + b A_n` with `A_0 = 1`, ratio
//! monotonicity by exact cross-multiplication, and brute-force checks of
//! the uniqueness property: equal products over majorizing strictly
//! decreasing index tuples must force identical tuples.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exact::BigNat;
use crate::poset::{canonicalize, majorizes};

/// Cached Fibonacci terms, convention `F_0 = F_1 = 1` (one index above the
/// classical `F_0 = 0` convention).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibSeq {
    terms: Vec<BigNat>,
}

impl FibSeq {
    /// Builds the cache `F_0 ... F_{n_max}`.
    pub fn up_to(n_max: u64) -> FibSeq {
        let mut terms = Vec::with_capacity(n_max as usize + 1);
        terms.push(BigNat::one());
        if n_max >= 1 {
            terms.push(BigNat::one());
        }
        for n in 2..=n_max {
            let next = &terms[n as usize - 1] + &terms[n as usize - 2];
            terms.push(next);
        }
        FibSeq { terms }
    }

    pub fn term(&self, n: u64) -> &BigNat {
        &self.terms[n as usize]
    }

    pub fn terms(&self) -> &[BigNat] {
        &self.terms
    }
}

/// Fibonacci value in the `F_0 = F_1 = 1` convention.
pub fn fib(n: u64) -> BigNat {
    let mut seq = FibSeq::up_to(n);
    seq.terms.pop().expect("cache holds at least one term")
}

/// Parameters of `A_{n+2} = a A_{n+1} + b A_n` with `A_0 = 1`; `a` is
/// positive and `b` negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    pub a: u64,
    pub b: i64,
    pub a1: u64,
}

impl fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, A1={})", self.a, self.b, self.a1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurError {
    /// `A_1^2 - a A_1 - b > 0` failed.
    HypothesisViolated,
    /// Term generation produced a negative value at index `n`.
    NegativeTerm { n: u64 },
    /// Consecutive term ratios tie or flip direction at position `n`.
    NotMonotone { n: usize },
}

impl fmt::Display for RecurError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecurError::HypothesisViolated => {
                write!(f, "hypothesis A1^2 - a*A1 - b > 0 does not hold")
            }
            RecurError::NegativeTerm { n } => write!(f, "term A_{n} is negative"),
            RecurError::NotMonotone { n } => {
                write!(f, "term ratios are not strictly monotone at n = {n}")
            }
        }
    }
}

impl core::error::Error for RecurError {}

/// Terms `A_0 ... A_{n_max}` of the recurrence, all checked non-negative.
pub fn recurrence_terms(spec: &RecurrenceSpec, n_max: u64) -> Result<Vec<BigNat>, RecurError> {
    assert!(spec.a >= 1, "coefficient a must be positive");
    assert!(spec.b <= -1, "coefficient b must be negative");
    let a1 = BigInt::from(spec.a1);
    let q = &a1 * &a1 - BigInt::from(spec.a) * &a1 - BigInt::from(spec.b);
    if !q.is_positive() {
        return Err(RecurError::HypothesisViolated);
    }
    let mut terms = Vec::with_capacity(n_max as usize + 1);
    terms.push(BigInt::one());
    if n_max >= 1 {
        terms.push(a1);
    }
    for n in 2..=n_max {
        let next = BigInt::from(spec.a) * &terms[n as usize - 1]
            + BigInt::from(spec.b) * &terms[n as usize - 2];
        if next.is_negative() {
            return Err(RecurError::NegativeTerm { n });
        }
        terms.push(next);
    }
    Ok(terms
        .into_iter()
        .map(|t| t.to_biguint().expect("signs were checked"))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioDirection {
    Increasing,
    Decreasing,
}

/// Establishes a uniform strict direction for the ratios `A_{n+1}/A_n` by
/// comparing `A_{n+1} A_{n-1}` with `A_n^2` in exact integers.
///
/// When `direction` is given, every comparison must go that way; otherwise
/// the direction is inferred from the first comparison and then enforced.
pub fn ratio_monotone_check(
    terms: &[BigNat],
    direction: Option<RatioDirection>,
) -> Result<RatioDirection, RecurError> {
    assert!(terms.len() >= 3, "need at least three terms");
    assert!(
        terms.iter().all(|t| !num_traits::Zero::is_zero(t)),
        "terms must be positive"
    );
    let mut dir = direction;
    for n in 1..terms.len() - 1 {
        let lhs = &terms[n + 1] * &terms[n - 1];
        let rhs = &terms[n] * &terms[n];
        let step = match lhs.cmp(&rhs) {
            core::cmp::Ordering::Greater => RatioDirection::Increasing,
            core::cmp::Ordering::Less => RatioDirection::Decreasing,
            core::cmp::Ordering::Equal => return Err(RecurError::NotMonotone { n }),
        };
        match dir {
            None => dir = Some(step),
            Some(d) if d != step => return Err(RecurError::NotMonotone { n }),
            _ => {}
        }
    }
    Ok(dir.expect("length >= 3 forces at least one comparison"))
}

/// Which indexed family supplies the terms `a_1, a_2, ...` of a uniqueness
/// search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermSource {
    /// `a_i = F_{2i}`.
    FibEven,
    /// `a_i = F_{2i+1}`.
    FibOdd,
    /// `a_i = A_i`; index 0 is excluded, mirroring `F_0`.
    Recurrence(RecurrenceSpec),
}

impl fmt::Display for TermSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermSource::FibEven => write!(f, "fib-even"),
            TermSource::FibOdd => write!(f, "fib-odd"),
            TermSource::Recurrence(spec) => write!(f, "recurrence{spec}"),
        }
    }
}

/// Outcome of a uniqueness search; empty `violations` means the property
/// held everywhere in range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessReport {
    pub source: TermSource,
    pub max_index: u64,
    pub max_tuple_len: usize,
    pub pairs_checked: u64,
    /// Distinct index tuples, first majorizing second, with equal products.
    pub violations: Vec<(Vec<u64>, Vec<u64>)>,
}

/// All strictly decreasing tuples over `[1, max_index]` with length in
/// `[1, max_len]`, in deterministic order (length, then lexicographic).
fn decreasing_tuples(max_index: u64, max_len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur: Vec<u64> = Vec::new();
    fn extend(cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>, max_index: u64, left: usize) {
        if left == 0 {
            return;
        }
        let top = cur.last().map(|&t| t - 1).unwrap_or(max_index);
        for next in (1..=top).rev() {
            cur.push(next);
            out.push(cur.clone());
            extend(cur, out, max_index, left - 1);
            cur.pop();
        }
    }
    extend(&mut cur, &mut out, max_index, max_len);
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

/// Searches for equal term products over distinct majorizing index tuples.
pub fn uniqueness_check(
    source: &TermSource,
    max_index: u64,
    max_tuple_len: usize,
) -> Result<UniquenessReport, RecurError> {
    assert!(max_index >= 1 && max_tuple_len >= 1);
    // terms[i] holds a_{i+1} for index i+1 in [1, max_index].
    let terms: Vec<BigNat> = match source {
        TermSource::FibEven => {
            let fibs = FibSeq::up_to(2 * max_index);
            (1..=max_index).map(|i| fibs.term(2 * i).clone()).collect()
        }
        TermSource::FibOdd => {
            let fibs = FibSeq::up_to(2 * max_index + 1);
            (1..=max_index)
                .map(|i| fibs.term(2 * i + 1).clone())
                .collect()
        }
        TermSource::Recurrence(spec) => recurrence_terms(spec, max_index)?
            .into_iter()
            .skip(1)
            .collect(),
    };
    let product = |tuple: &[u64]| -> BigNat {
        tuple
            .iter()
            .map(|&i| &terms[i as usize - 1])
            .fold(BigNat::one(), |acc, t| acc * t)
    };
    let tuples = decreasing_tuples(max_index, max_tuple_len);
    let seqs: Vec<_> = tuples
        .iter()
        .map(|t| canonicalize(t).expect("tuples are nonempty and positive"))
        .collect();
    let products: Vec<BigNat> = tuples.iter().map(|t| product(t)).collect();

    let mut pairs_checked = 0u64;
    let mut violations = Vec::new();
    for (i, ti) in tuples.iter().enumerate() {
        for (j, tj) in tuples.iter().enumerate() {
            if i == j || !majorizes(&seqs[i], &seqs[j]) {
                continue;
            }
            pairs_checked += 1;
            if products[i] == products[j] {
                violations.push((ti.clone(), tj.clone()));
            }
        }
    }
    Ok(UniquenessReport {
        source: *source,
        max_index,
        max_tuple_len,
        pairs_checked,
        violations,
    })
}

/// Confirms that the closed-form enclosure
/// `(alpha^(n+1) - beta^(n+1)) / (alpha - beta)` with
/// `alpha, beta = (1 +- sqrt 5)/2` contains the exact `F_n` for all
/// `n <= n_max`.
pub fn binet_enclosure_check(n_max: u64, precision: u32) -> bool {
    use crate::exact::RealInterval;
    use num_bigint::BigUint;

    let sqrt5 = RealInterval::nth_root_nat(&BigUint::from(5u32), 2, precision);
    let one = RealInterval::exact_one(precision);
    let alpha = one.add(&sqrt5).mul_pow2(-1);
    let beta = one.sub(&sqrt5).mul_pow2(-1);
    let fibs = FibSeq::up_to(n_max);
    for n in 0..=n_max {
        let num = alpha.powi(n + 1).sub(&beta.powi(n + 1));
        let value = num.div(&sqrt5);
        if !value.contains_int(&BigInt::from(fibs.term(n).clone())) {
            return false;
        }
    }
    true
}
