//! Rigorous enclosures of `ln Gamma` and the digamma function on positive
//! rationals.
//!
//! Strategy: shift the argument up with the recurrences
//! `Gamma(x+1) = x Gamma(x)` and `psi(x+1) = psi(x) + 1/x`, then apply the
//! Stirling asymptotic series at the shifted point. The series is
//! alternating-enveloping for real positive arguments, so truncating at any
//! point leaves a remainder no larger than the first omitted term; that term
//! is added to the enclosure symmetrically. Bernoulli numbers are generated
//! by the classic binomial recurrence, evaluated in interval arithmetic so
//! no exact-rational blowup occurs.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use super::interval::{ln_2pi_interval, ln_of_rational, RealInterval};
use super::{BigRat, ExactError};
use crate::escalation_steps;

/// The tunables of the Stirling evaluation, fixed in one record.
#[derive(Debug, Clone, Copy)]
pub struct StirlingConfig {
    /// Never evaluate the series below this argument.
    pub shift_floor: u32,
    /// Extra bits demanded of the reachable series minimum; together with
    /// the `~9 bits per unit of argument` decay rate of the best term this
    /// yields the shift target `max(shift_floor, (precision + tail_guard_bits) / 9)`.
    pub tail_guard_bits: u32,
    /// The series stops once a term drops below `2^-(precision + term_cutoff_guard)`.
    pub term_cutoff_guard: u32,
}

/// Default truncation rule; shared by `ln Gamma` and digamma.
pub const STIRLING: StirlingConfig = StirlingConfig {
    shift_floor: 10,
    tail_guard_bits: 24,
    term_cutoff_guard: 16,
};

fn shift_target(w: u32) -> u64 {
    let by_precision = (w + STIRLING.tail_guard_bits).div_ceil(9) as u64;
    (STIRLING.shift_floor as u64).max(by_precision)
}

/// Number of +1 shifts needed to move `x` to at least `target`.
fn shift_count(x: &BigRat, target: u64) -> u64 {
    // smallest m >= 0 with (num + m*den) / den >= target
    let need = BigInt::from(target) * x.denom() - x.numer();
    if !need.is_positive() {
        return 0;
    }
    let den = x.denom().magnitude();
    let m = (need.magnitude() + den - BigUint::one()) / den;
    let mut out: u64 = 0;
    for d in m.iter_u64_digits() {
        out = d;
    }
    out
}

/// Bernoulli numbers `B_2, B_4, ...` as interval enclosures; extend on demand.
struct BernoulliTable {
    w: u32,
    even: Vec<RealInterval>,
}

impl BernoulliTable {
    fn new(w: u32) -> BernoulliTable {
        BernoulliTable {
            w,
            even: Vec::new(),
        }
    }

    /// `B_{2i}` for `i >= 1`.
    fn get(&mut self, i: usize) -> RealInterval {
        while self.even.len() < i {
            self.push_next();
        }
        self.even[i - 1].clone()
    }

    fn push_next(&mut self) {
        let w = self.w;
        let i = self.even.len() + 1;
        let m = 2 * i as u64;
        // From sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_1 = -1/2 and odd
        // Bernoulli numbers above 1 vanishing:
        // (m+1) B_m = -(1 - (m+1)/2 + sum_{even j < m} C(m+1, j) B_j).
        let head = BigRat::one() - BigRat::new(BigInt::from(m + 1), BigInt::from(2));
        let mut sum = RealInterval::from_rational(&head, w);
        let mut c = BigUint::one();
        let mut j = 0u64;
        for k in 1..i {
            c = c * BigUint::from(m + 1 - j) * BigUint::from(m - j)
                / (BigUint::from(j + 1) * BigUint::from(j + 2));
            j += 2;
            let term = self.even[k - 1].mul(&RealInterval::exact_int(BigInt::from(c.clone()), w));
            sum = sum.add(&term);
        }
        let b = sum
            .div(&RealInterval::exact_u64(m + 1, w))
            .neg();
        self.even.push(b);
    }
}

/// Magnitude upper bound of an interval as a dyadic-exponent estimate:
/// true when `|v| < 2^k` for every `v` in the interval.
fn magnitude_below(iv: &RealInterval, k: i64) -> bool {
    let below = |d: &super::dyadic::Dyadic| d.is_zero() || d.abs().msb() < k;
    below(iv.lo_dyadic()) && below(iv.hi_dyadic())
}

fn magnitude_bound(iv: &RealInterval) -> super::dyadic::Dyadic {
    let a = iv.lo_dyadic().abs();
    let b = iv.hi_dyadic().abs();
    if a.cmp_value(&b) == Ordering::Greater {
        a
    } else {
        b
    }
}

/// Shared Stirling sum: `sum_j B_2j * r_j` where `r_j` is an exact-rational
/// coefficient sequence advanced by `step`, stopping on the cutoff or on
/// first divergence, and returning (partial sum, remainder magnitude bound).
fn stirling_sum(
    w: u32,
    first: BigRat,
    step: impl Fn(&BigRat, u64) -> BigRat,
    bern: &mut BernoulliTable,
) -> (RealInterval, super::dyadic::Dyadic) {
    let cutoff = -((w + STIRLING.term_cutoff_guard) as i64);
    let mut acc = RealInterval::exact_zero(w);
    let mut r = first;
    let mut prev_mag: Option<super::dyadic::Dyadic> = None;
    let mut j = 1u64;
    loop {
        let term = bern
            .get(j as usize)
            .mul(&RealInterval::from_rational(&r, w));
        let mag = magnitude_bound(&term);
        let grew = prev_mag
            .as_ref()
            .map(|p| mag.cmp_value(p) == Ordering::Greater)
            .unwrap_or(false);
        if magnitude_below(&term, cutoff) || grew {
            // Remainder after the previous term is at most this term.
            return (acc, mag);
        }
        acc = acc.add(&term);
        prev_mag = Some(mag);
        r = step(&r, j);
        j += 1;
    }
}

fn widen_by(iv: RealInterval, tail: &super::dyadic::Dyadic, w: u32) -> RealInterval {
    let lo = iv.lo_dyadic().sub_rounded(tail, w, super::dyadic::Dir::Down);
    let hi = iv.hi_dyadic().add_rounded(tail, w, super::dyadic::Dir::Up);
    RealInterval::from_bounds(lo, hi, w)
}

/// Rigorous enclosure of `ln Gamma(x)` for rational `x > 0`.
pub fn ln_gamma_interval(x: &BigRat, precision: u32) -> RealInterval {
    assert!(x.is_positive(), "ln Gamma requires x > 0");
    let w = precision + 32;
    let m = shift_count(x, shift_target(w));
    let y = x + BigRat::from_integer(BigInt::from(m));

    // Stirling at y: (y - 1/2) ln y - y + ln(2 pi)/2 + sum B_2j / (2j(2j-1) y^(2j-1)).
    let ln_y = ln_of_rational(&y, w);
    let half = BigRat::new(BigInt::one(), BigInt::from(2));
    let main = RealInterval::from_rational(&(&y - &half), w)
        .mul(&ln_y)
        .sub(&RealInterval::from_rational(&y, w))
        .add(&ln_2pi_interval(w).mul_pow2(-1));

    let ysq = &y * &y;
    let first = {
        // r_1 = 1 / (2 * 1 * y)
        (BigRat::new(BigInt::one(), BigInt::from(2)) / &y).reduced()
    };
    let step = |r: &BigRat, j: u64| {
        // r_{j+1} = r_j * (2j)(2j-1) / ((2j+2)(2j+1) y^2)
        let num = BigInt::from(2 * j) * BigInt::from(2 * j - 1);
        let den = BigInt::from(2 * j + 2) * BigInt::from(2 * j + 1);
        (r * BigRat::new(num, den) / &ysq).reduced()
    };
    let mut bern = BernoulliTable::new(w);
    let (series, tail) = stirling_sum(w, first, step, &mut bern);

    let shifted = widen_by(main.add(&series), &tail, w);

    // Undo the shift: ln Gamma(x) = ln Gamma(y) - ln prod_{j<m} (x + j).
    let result = if m == 0 {
        shifted
    } else {
        let mut pochhammer = BigRat::one();
        for j in 0..m {
            pochhammer *= x + BigRat::from_integer(BigInt::from(j));
        }
        shifted.sub(&ln_of_rational(&pochhammer, w))
    };
    result.with_precision(precision)
}

/// Rigorous enclosure of the digamma function `psi(x)` for rational `x > 0`.
pub fn digamma_interval(x: &BigRat, precision: u32) -> RealInterval {
    assert!(x.is_positive(), "digamma requires x > 0");
    let w = precision + 32;
    let m = shift_count(x, shift_target(w));
    let y = x + BigRat::from_integer(BigInt::from(m));

    // Stirling at y: ln y - 1/(2y) - sum B_2j / (2j y^2j).
    let ln_y = ln_of_rational(&y, w);
    let ysq = &y * &y;
    let half_over_y = BigRat::new(BigInt::one(), BigInt::from(2)) / &y;
    let first = (BigRat::new(BigInt::one(), BigInt::from(2)) / &ysq).reduced();
    let step = |r: &BigRat, j: u64| {
        // r_{j+1} = r_j * (2j) / ((2j+2) y^2)
        (r * BigRat::new(BigInt::from(2 * j), BigInt::from(2 * j + 2)) / &ysq).reduced()
    };
    let mut bern = BernoulliTable::new(w);
    let (series, tail) = stirling_sum(w, first, step, &mut bern);

    let shifted = widen_by(
        ln_y.sub(&RealInterval::from_rational(&half_over_y, w))
            .sub(&series),
        &tail,
        w,
    );

    // Undo the shift: psi(x) = psi(y) - sum_{j<m} 1/(x + j).
    let result = if m == 0 {
        shifted
    } else {
        let mut harmonic = BigRat::new(BigInt::from(0), BigInt::one());
        for j in 0..m {
            harmonic += (x + BigRat::from_integer(BigInt::from(j))).recip();
        }
        shifted.sub(&RealInterval::from_rational(&harmonic, w))
    };
    result.with_precision(precision)
}

/// Checks the two Gamma bounds at `x > 1` with internal precision
/// escalation:
/// `bound1`: `ln Gamma(x) > (x - 0.5) ln x - x`;
/// `bound2`: `psi(x) < ln x`.
///
/// Both verdicts come from disjoint enclosures, so `false` means the bound
/// is provably violated, not merely undecided; undecided escalates and ends
/// in `Unresolved`.
pub fn theorem_c_check(
    x: &BigRat,
    precision: u32,
    max_precision: u32,
) -> Result<(bool, bool), ExactError> {
    assert!(
        x > &BigRat::one(),
        "the Gamma bounds are stated for x > 1"
    );
    let half = BigRat::new(BigInt::one(), BigInt::from(2));
    let mut b1: Option<bool> = None;
    let mut b2: Option<bool> = None;
    let mut last = precision;
    for p in escalation_steps(precision, max_precision) {
        last = p;
        let w = p + 8;
        let ln_x = ln_of_rational(x, w);
        if b1.is_none() {
            let lg = ln_gamma_interval(x, w);
            let rhs = RealInterval::from_rational(&(x - &half), w)
                .mul(&ln_x)
                .sub(&RealInterval::from_rational(x, w));
            b1 = lg.try_order(&rhs).map(|o| o == Ordering::Greater);
        }
        if b2.is_none() {
            let psi = digamma_interval(x, w);
            b2 = psi.try_order(&ln_x).map(|o| o == Ordering::Less);
        }
        if let (Some(v1), Some(v2)) = (b1, b2) {
            return Ok((v1, v2));
        }
    }
    Err(ExactError::Unresolved { precision: last })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rat(n: i64, d: i64) -> BigRat {
        BigRat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_table_matches_known_values() {
        let mut t = BernoulliTable::new(128);
        assert!(t.get(1).contains_rational(&rat(1, 6)));
        assert!(t.get(2).contains_rational(&rat(-1, 30)));
        assert!(t.get(3).contains_rational(&rat(1, 42)));
        assert!(t.get(4).contains_rational(&rat(-1, 30)));
        assert!(t.get(5).contains_rational(&rat(5, 66)));
        assert!(t.get(6).contains_rational(&rat(-691, 2730)));
    }

    #[test]
    fn shift_count_examples() {
        assert_eq!(shift_count(&rat(1, 2), 10), 10);
        assert_eq!(shift_count(&rat(21, 2), 10), 0);
        assert_eq!(shift_count(&rat(19, 2), 10), 1);
        assert_eq!(shift_count(&rat(3, 1), 10), 7);
    }

    #[test]
    fn ln_gamma_at_integer_points() {
        // Gamma(1) = 1, Gamma(5) = 24.
        let lg1 = ln_gamma_interval(&rat(1, 1), 128);
        assert!(lg1.contains_rational(&BigRat::zero()));
        assert!(lg1.width_below_pow2(-120));

        let lg5 = ln_gamma_interval(&rat(5, 1), 128);
        let ln24 = ln_of_rational(&rat(24, 1), 128);
        // Enclosures of the same number: they must overlap, and the
        // difference must contain zero.
        assert!(lg5.sub(&ln24).contains_rational(&BigRat::zero()));
    }

    #[test]
    fn ln_gamma_half_matches_ln_sqrt_pi() {
        // First 50 digits of ln sqrt(pi).
        let reference = "0.57236494292470008707171367567652935582364740645765";
        let lg = ln_gamma_interval(&rat(1, 2), 200);
        let (lo, hi) = lg.decimal_bounds(50);
        assert!(
            lo.as_str() <= reference && reference <= hi.as_str(),
            "[{lo}, {hi}] should contain {reference}"
        );
    }

    #[test]
    fn digamma_at_one_is_minus_euler_gamma() {
        // First 50 digits of the Euler-Mascheroni constant; psi(1) = -gamma,
        // negated so the decimal-string comparison stays on positive values.
        let reference = "0.57721566490153286060651209008240243104215933593992";
        let psi = digamma_interval(&rat(1, 1), 200);
        let (lo, hi) = psi.neg().decimal_bounds(50);
        assert!(
            lo.as_str() <= reference && reference <= hi.as_str(),
            "[{lo}, {hi}] should contain {reference}"
        );
    }

    #[test]
    fn digamma_recurrence_step() {
        // psi(2) = psi(1) + 1.
        let psi1 = digamma_interval(&rat(1, 1), 160);
        let psi2 = digamma_interval(&rat(2, 1), 160);
        let diff = psi2.sub(&psi1);
        assert!(diff.contains_rational(&rat(1, 1)));
    }

    #[test]
    fn digamma_log_sandwich_at_three() {
        // ln 2 < psi(3) < ln 3.
        let psi3 = digamma_interval(&rat(3, 1), 128);
        let ln2 = ln_of_rational(&rat(2, 1), 128);
        let ln3 = ln_of_rational(&rat(3, 1), 128);
        assert!(ln2.strictly_less_than(&psi3));
        assert!(psi3.strictly_less_than(&ln3));
    }

    #[test]
    fn theorem_c_check_examples() {
        assert_eq!(theorem_c_check(&rat(2, 1), 128, 1024), Ok((true, true)));
        assert_eq!(theorem_c_check(&rat(10, 1), 128, 1024), Ok((true, true)));
        assert_eq!(
            theorem_c_check(&rat(10001, 10000), 128, 2048),
            Ok((true, true))
        );
    }

    #[test]
    fn ln_gamma_width_halves_with_precision() {
        let x = rat(7, 2);
        let mut prev: Option<super::super::dyadic::Dyadic> = None;
        for p in [128u32, 256, 512, 1024] {
            let iv = ln_gamma_interval(&x, p);
            let wdt = iv.width_exact();
            if let Some(pw) = prev {
                assert!(
                    wdt.mul_pow2(1).cmp_value(&pw) == Ordering::Less,
                    "width did not halve at {p} bits"
                );
            }
            prev = Some(wdt);
        }
    }
}
