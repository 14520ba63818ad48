//! Directed-rounded interval arithmetic over dyadic endpoints.
//!
//! Every constructor and operation keeps the represented real inside
//! `[lo, hi]`: lower endpoints round down, upper endpoints round up, and
//! series truncations carry explicit tail bounds. Elementary functions are
//! restricted to what the library needs: ln on positive values, exp, integer
//! powers, integer nth roots.

use alloc::string::String;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dyadic::{Dir, Dyadic};

/// A rigorous enclosure `[lo, hi]` of a real number.
///
/// `precision` records the mantissa budget the interval was built with; it is
/// carried into derived intervals so reports can state how tight a bound is.
#[derive(Debug, Clone)]
pub struct RealInterval {
    lo: Dyadic,
    hi: Dyadic,
    precision: u32,
}

/// Bounds compared by numeric value; the precision tag is bookkeeping and
/// takes no part in equality.
impl PartialEq for RealInterval {
    fn eq(&self, other: &RealInterval) -> bool {
        self.lo.cmp_value(&other.lo) == Ordering::Equal
            && self.hi.cmp_value(&other.hi) == Ordering::Equal
    }
}

impl Eq for RealInterval {}

impl RealInterval {
    pub(crate) fn from_bounds(lo: Dyadic, hi: Dyadic, precision: u32) -> RealInterval {
        debug_assert!(
            lo.cmp_value(&hi) != Ordering::Greater,
            "interval bounds out of order"
        );
        RealInterval { lo, hi, precision }
    }

    /// Degenerate interval holding one dyadic exactly.
    pub(crate) fn point(v: Dyadic, precision: u32) -> RealInterval {
        RealInterval {
            lo: v.clone(),
            hi: v,
            precision,
        }
    }

    pub fn exact_zero(precision: u32) -> RealInterval {
        RealInterval::point(Dyadic::zero(), precision)
    }

    pub fn exact_one(precision: u32) -> RealInterval {
        RealInterval::point(Dyadic::one(), precision)
    }

    pub fn exact_int(v: BigInt, precision: u32) -> RealInterval {
        RealInterval::point(Dyadic::from_bigint(v), precision)
    }

    pub fn exact_u64(v: u64, precision: u32) -> RealInterval {
        RealInterval::exact_int(BigInt::from(v), precision)
    }

    /// Tight enclosure of an exact rational.
    pub fn from_rational(r: &BigRational, precision: u32) -> RealInterval {
        let lo = Dyadic::from_ratio(r.numer(), r.denom(), precision, Dir::Down);
        let hi = Dyadic::from_ratio(r.numer(), r.denom(), precision, Dir::Up);
        RealInterval::from_bounds(lo, hi, precision)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub(crate) fn lo_dyadic(&self) -> &Dyadic {
        &self.lo
    }

    pub(crate) fn hi_dyadic(&self) -> &Dyadic {
        &self.hi
    }

    /// Decimal strings for both bounds, rounded outward, with exactly
    /// `frac_digits` digits after the point.
    pub fn decimal_bounds(&self, frac_digits: u32) -> (String, String) {
        (
            self.lo.to_decimal(frac_digits, Dir::Down),
            self.hi.to_decimal(frac_digits, Dir::Up),
        )
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            precision: self.precision,
        }
    }

    fn work(&self, other: &RealInterval) -> u32 {
        self.precision.max(other.precision)
    }

    pub fn add(&self, other: &RealInterval) -> RealInterval {
        let w = self.work(other);
        RealInterval::from_bounds(
            self.lo.add_rounded(&other.lo, w, Dir::Down),
            self.hi.add_rounded(&other.hi, w, Dir::Up),
            w,
        )
    }

    pub fn sub(&self, other: &RealInterval) -> RealInterval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RealInterval) -> RealInterval {
        let w = self.work(other);
        let corners = [
            self.lo.mul_exact(&other.lo),
            self.lo.mul_exact(&other.hi),
            self.hi.mul_exact(&other.lo),
            self.hi.mul_exact(&other.hi),
        ];
        let mut min = corners[0].clone();
        let mut max = corners[0].clone();
        for c in &corners[1..] {
            if c.cmp_value(&min) == Ordering::Less {
                min = c.clone();
            }
            if c.cmp_value(&max) == Ordering::Greater {
                max = c.clone();
            }
        }
        RealInterval::from_bounds(min.round(w, Dir::Down), max.round(w, Dir::Up), w)
    }

    /// Division; the divisor interval must not contain zero.
    pub fn div(&self, other: &RealInterval) -> RealInterval {
        assert!(
            other.lo.is_positive() || other.hi.is_negative(),
            "interval division requires a divisor bounded away from zero"
        );
        let w = self.work(other);
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let qd = a.div_rounded(b, w, Dir::Down);
                let qu = a.div_rounded(b, w, Dir::Up);
                lo = Some(match lo {
                    Some(cur) if cur.cmp_value(&qd) != Ordering::Greater => cur,
                    _ => qd,
                });
                hi = Some(match hi {
                    Some(cur) if cur.cmp_value(&qu) != Ordering::Less => cur,
                    _ => qu,
                });
            }
        }
        RealInterval::from_bounds(lo.unwrap(), hi.unwrap(), w)
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> RealInterval {
        RealInterval {
            lo: self.lo.mul_pow2(k),
            hi: self.hi.mul_pow2(k),
            precision: self.precision,
        }
    }

    /// `self^n` for a non-negative integer exponent; `n = 0` gives `[1, 1]`.
    pub fn powi(&self, n: u64) -> RealInterval {
        let w = self.precision;
        if n == 0 {
            return RealInterval::exact_one(w);
        }
        if n == 1 {
            return self.clone();
        }
        if !self.lo.is_negative() {
            return RealInterval::from_bounds(
                pow_dyadic(&self.lo, n, w, Dir::Down),
                pow_dyadic(&self.hi, n, w, Dir::Up),
                w,
            );
        }
        if self.hi.is_negative() || (self.hi.is_zero() && self.lo.is_negative()) {
            let p = self.neg().powi(n);
            return if n % 2 == 0 { p } else { p.neg() };
        }
        // Interval straddles zero.
        if n % 2 == 0 {
            let mag = if self.lo.abs().cmp_value(&self.hi.abs()) == Ordering::Greater {
                self.lo.abs()
            } else {
                self.hi.abs()
            };
            RealInterval::from_bounds(Dyadic::zero(), pow_dyadic(&mag, n, w, Dir::Up), w)
        } else {
            RealInterval::from_bounds(
                pow_dyadic(&self.lo.abs(), n, w, Dir::Up).neg(),
                pow_dyadic(&self.hi, n, w, Dir::Up),
                w,
            )
        }
    }

    /// Enclosure of `v^(1/q)` for a positive big natural and `q >= 1`.
    pub fn nth_root_nat(v: &BigUint, q: u32, precision: u32) -> RealInterval {
        assert!(!v.is_zero(), "nth root of zero is outside the domain");
        assert!(q >= 1);
        if q == 1 {
            return RealInterval::exact_int(BigInt::from(v.clone()), precision);
        }
        let k = precision as u64 + 4;
        let scaled: BigUint = v << (q as u64 * k);
        let r = scaled.nth_root(q);
        let lo = Dyadic {
            mant: BigInt::from(r.clone()),
            exp: -(k as i64),
        };
        let hi = Dyadic {
            mant: BigInt::from(r + BigUint::one()),
            exp: -(k as i64),
        };
        RealInterval::from_bounds(lo, hi, precision)
    }

    /// Natural logarithm; the interval must be strictly positive.
    pub fn ln(&self) -> RealInterval {
        assert!(
            self.lo.is_positive(),
            "ln requires a strictly positive interval"
        );
        let w = self.precision;
        let lo_encl = ln_of_ratio(&dyadic_numer(&self.lo), &dyadic_denom(&self.lo), w);
        let hi_encl = ln_of_ratio(&dyadic_numer(&self.hi), &dyadic_denom(&self.hi), w);
        RealInterval::from_bounds(lo_encl.lo, hi_encl.hi, w)
    }

    /// Exponential of the interval.
    pub fn exp(&self) -> RealInterval {
        let w = self.precision;
        let lo_encl = exp_of_dyadic(&self.lo, w);
        let hi_encl = exp_of_dyadic(&self.hi, w);
        RealInterval::from_bounds(lo_encl.lo, hi_encl.hi, w)
    }

    pub fn strictly_less_than(&self, other: &RealInterval) -> bool {
        self.hi.cmp_value(&other.lo) == Ordering::Less
    }

    pub fn strictly_greater_than(&self, other: &RealInterval) -> bool {
        self.lo.cmp_value(&other.hi) == Ordering::Greater
    }

    /// `Some(ordering)` when the two enclosures are disjoint, else `None`.
    pub fn try_order(&self, other: &RealInterval) -> Option<Ordering> {
        if self.strictly_less_than(other) {
            Some(Ordering::Less)
        } else if self.strictly_greater_than(other) {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        cmp_dyadic_rational(&self.lo, r) != Ordering::Greater
            && cmp_dyadic_rational(&self.hi, r) != Ordering::Less
    }

    pub fn contains_int(&self, v: &BigInt) -> bool {
        let d = Dyadic::from_bigint(v.clone());
        self.lo.cmp_value(&d) != Ordering::Greater && self.hi.cmp_value(&d) != Ordering::Less
    }

    /// Exact width `hi - lo`.
    pub(crate) fn width_exact(&self) -> Dyadic {
        self.hi.add_exact(&self.lo.neg())
    }

    /// True when `hi - lo < 2^k`.
    pub fn width_below_pow2(&self, k: i64) -> bool {
        let bound = Dyadic {
            mant: BigInt::one(),
            exp: k,
        };
        self.width_exact().cmp_value(&bound) == Ordering::Less
    }

    /// True when the relative width `(hi - lo) / |lo|` is below `2^k`.
    /// Requires an interval bounded away from zero.
    pub fn rel_width_below_pow2(&self, k: i64) -> bool {
        let mag = if self.lo.is_positive() {
            self.lo.clone()
        } else if self.hi.is_negative() {
            self.hi.abs()
        } else {
            return false;
        };
        let scaled = mag.mul_pow2(k);
        self.width_exact().cmp_value(&scaled) == Ordering::Less
    }

    /// Outward re-rounding to a (typically smaller) precision.
    pub fn with_precision(&self, precision: u32) -> RealInterval {
        RealInterval::from_bounds(
            self.lo.round(precision, Dir::Down),
            self.hi.round(precision, Dir::Up),
            precision,
        )
    }
}

fn dyadic_numer(d: &Dyadic) -> BigInt {
    if d.exp >= 0 {
        &d.mant << (d.exp as u64)
    } else {
        d.mant.clone()
    }
}

fn dyadic_denom(d: &Dyadic) -> BigInt {
    if d.exp >= 0 {
        BigInt::one()
    } else {
        BigInt::one() << ((-d.exp) as u64)
    }
}

/// Exact comparison of a dyadic against a rational (`den > 0`).
pub(crate) fn cmp_dyadic_rational(d: &Dyadic, r: &BigRational) -> Ordering {
    // d vs p/q  <=>  d*q vs p, with q > 0.
    let dq = Dyadic {
        mant: &d.mant * r.denom(),
        exp: d.exp,
    };
    dq.cmp_value(&Dyadic::from_bigint(r.numer().clone()))
}

/// `base^n` with every multiplication rounded in `dir`; base must be >= 0.
fn pow_dyadic(base: &Dyadic, n: u64, prec: u32, dir: Dir) -> Dyadic {
    debug_assert!(!base.is_negative());
    let mut acc = Dyadic::one();
    let mut sq = base.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul_rounded(&sq, prec, dir);
        }
        e >>= 1;
        if e > 0 {
            sq = sq.mul_rounded(&sq, prec, dir);
        }
    }
    acc
}

/// Enclosure of `atanh(tn/td)` for `0 <= tn/td <= 1/3`.
///
/// Series `sum t^(2i+1) / (2i+1)`; all terms are positive and the tail after
/// truncation is at most `t^(2N+1)/(2N+1) * 9/8` because `1/(1-t^2) <= 9/8`.
fn atanh_of_ratio(tn: &BigInt, td: &BigInt, w: u32) -> RealInterval {
    debug_assert!(!tn.is_negative() && td.is_positive());
    debug_assert!(&(tn * 3u32) <= td, "atanh series needs t <= 1/3");
    if tn.is_zero() {
        return RealInterval::exact_zero(w);
    }
    let t = RealInterval::from_bounds(
        Dyadic::from_ratio(tn, td, w, Dir::Down),
        Dyadic::from_ratio(tn, td, w, Dir::Up),
        w,
    );
    let tsq = t.mul(&t);
    let mut acc = t.clone();
    let mut pow = t;
    let mut odd = 1u64;
    loop {
        pow = pow.mul(&tsq);
        odd += 2;
        // Past this point every term is below the cutoff; close with a tail.
        if pow.hi.is_zero() || pow.hi.msb() < -(w as i64 + 2) {
            let tail = pow
                .hi
                .mul_rounded(&Dyadic::from_i64(9), w, Dir::Up)
                .div_rounded(&Dyadic::from_i64(8 * odd as i64), w, Dir::Up);
            return RealInterval::from_bounds(acc.lo, acc.hi.add_rounded(&tail, w, Dir::Up), w);
        }
        let term = pow.div(&RealInterval::exact_u64(odd, w));
        acc = acc.add(&term);
    }
}

/// Enclosure of `ln 2 = 2 atanh(1/3)`.
pub fn ln2_interval(precision: u32) -> RealInterval {
    let w = precision + 8;
    atanh_of_ratio(&BigInt::one(), &BigInt::from(3), w)
        .mul_pow2(1)
        .with_precision(precision)
}

/// Enclosure of `ln(num/den)` for positive integers.
fn ln_of_ratio(num: &BigInt, den: &BigInt, w: u32) -> RealInterval {
    debug_assert!(num.is_positive() && den.is_positive());
    // Range-reduce to m = (num/den) * 2^-k in [1, 2).
    let mut k = num.bits() as i64 - den.bits() as i64;
    let scaled_ge = |k: i64| -> bool {
        // num * 2^-k >= den ?
        if k >= 0 {
            *num >= (den << (k as u64))
        } else {
            (num << ((-k) as u64)) >= *den
        }
    };
    if !scaled_ge(k) {
        k -= 1;
    }
    debug_assert!(scaled_ge(k) && !scaled_ge(k + 1));
    let (pp, qq) = if k >= 0 {
        (num.clone(), den << (k as u64))
    } else {
        (num << ((-k) as u64), den.clone())
    };
    // t = (m-1)/(m+1) in [0, 1/3) for m in [1, 2).
    let tn = &pp - &qq;
    let td = &pp + &qq;
    let ln_m = atanh_of_ratio(&tn, &td, w).mul_pow2(1);
    let kk = RealInterval::exact_int(BigInt::from(k), w);
    ln2_interval(w).mul(&kk).add(&ln_m)
}

/// Enclosure of `ln r` for a positive rational.
pub fn ln_of_rational(r: &BigRational, precision: u32) -> RealInterval {
    assert!(r.is_positive(), "ln requires a positive argument");
    let w = precision + 8;
    ln_of_ratio(r.numer(), r.denom(), w).with_precision(precision)
}

/// Enclosure of `atan(1/c)` for an integer `c >= 2` (Machin terms).
fn atan_of_inv(c: u64, w: u32) -> RealInterval {
    let cd = BigInt::from(c);
    let x = RealInterval::from_bounds(
        Dyadic::from_ratio(&BigInt::one(), &cd, w, Dir::Down),
        Dyadic::from_ratio(&BigInt::one(), &cd, w, Dir::Up),
        w,
    );
    let xsq = x.mul(&x);
    let mut acc = x.clone();
    let mut pow = x;
    let mut odd = 1u64;
    let mut negate = true;
    loop {
        pow = pow.mul(&xsq);
        odd += 2;
        let term = pow.div(&RealInterval::exact_u64(odd, w));
        if pow.hi.is_zero() || pow.hi.msb() < -(w as i64 + 2) {
            // Alternating series: remainder magnitude at most the first
            // omitted term.
            let tail = term.hi.round(w, Dir::Up);
            return RealInterval::from_bounds(
                acc.lo.add_rounded(&tail.neg(), w, Dir::Down),
                acc.hi.add_rounded(&tail, w, Dir::Up),
                w,
            );
        }
        acc = if negate { acc.sub(&term) } else { acc.add(&term) };
        negate = !negate;
    }
}

/// Enclosure of pi via Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_interval(precision: u32) -> RealInterval {
    let w = precision + 8;
    let a = atan_of_inv(5, w).mul_pow2(4);
    let b = atan_of_inv(239, w).mul_pow2(2);
    a.sub(&b).with_precision(precision)
}

/// Enclosure of `ln(2 pi)`.
pub fn ln_2pi_interval(precision: u32) -> RealInterval {
    let w = precision + 8;
    ln2_interval(w)
        .add(&pi_interval(w).ln())
        .with_precision(precision)
}

/// Enclosure of `e^d` for a single dyadic.
fn exp_of_dyadic(d: &Dyadic, w: u32) -> RealInterval {
    if d.is_zero() {
        return RealInterval::exact_one(w);
    }
    let ln2 = ln2_interval(w);
    // Pick k near d / ln2; accuracy only affects tightness, not soundness.
    let k = {
        let q = d.div_rounded(ln2.lo_dyadic(), 32, Dir::Down);
        dyadic_to_i64_floor(&q)
    };
    let r = RealInterval::point(d.clone(), w).sub(&ln2.mul(&RealInterval::exact_int(
        BigInt::from(k),
        w,
    )));
    // |r| < 1 after reduction; the geometric tail bound below relies on it.
    let small = |d: &Dyadic| d.is_zero() || d.abs().msb() <= -1;
    assert!(
        small(&r.lo) && small(&r.hi),
        "exp argument reduction out of range"
    );
    let mut acc = RealInterval::exact_one(w);
    let mut term = RealInterval::exact_one(w);
    let mut i = 0u64;
    loop {
        i += 1;
        term = term.mul(&r).div(&RealInterval::exact_u64(i, w));
        let mag = if term.lo.abs().cmp_value(&term.hi.abs()) == Ordering::Greater {
            term.lo.abs()
        } else {
            term.hi.abs()
        };
        if mag.is_zero() || mag.msb() < -(w as i64 + 3) {
            // Geometric tail: |r| <= 3/4 and i+2 >= 3 give ratio <= 1/4,
            // so the remaining sum is under 2x the next term's magnitude.
            let tail = mag.mul_pow2(1);
            let res = RealInterval::from_bounds(
                acc.lo.add_rounded(&tail.neg(), w, Dir::Down),
                acc.hi.add_rounded(&tail, w, Dir::Up),
                w,
            );
            return res.mul_pow2(k);
        }
        acc = acc.add(&term);
    }
}

fn dyadic_to_i64_floor(d: &Dyadic) -> i64 {
    if d.is_zero() {
        return 0;
    }
    if d.msb() > 48 {
        // Out of the range this library ever reduces over.
        panic!("exponent reduction target too large");
    }
    let shifted = if d.exp >= 0 {
        &d.mant << (d.exp as u64)
    } else {
        super::dyadic::shr_floor(&d.mant, (-d.exp) as u64)
    };
    let mut v: i64 = 0;
    let mag: u64 = shifted
        .magnitude()
        .iter_u64_digits()
        .next()
        .unwrap_or(0);
    if shifted.is_negative() {
        v -= mag as i64;
    } else {
        v += mag as i64;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_enclosure_contains_value() {
        let third = rat(1, 3);
        let iv = RealInterval::from_rational(&third, 64);
        assert!(iv.contains_rational(&third));
        assert!(iv.width_below_pow2(-60));
    }

    #[test]
    fn arithmetic_contains_exact_results() {
        let a = RealInterval::from_rational(&rat(1, 3), 96);
        let b = RealInterval::from_rational(&rat(1, 6), 96);
        assert!(a.add(&b).contains_rational(&rat(1, 2)));
        assert!(a.sub(&b).contains_rational(&rat(1, 6)));
        assert!(a.mul(&b).contains_rational(&rat(1, 18)));
        assert!(a.div(&b).contains_rational(&rat(2, 1)));
    }

    #[test]
    fn powi_handles_signs() {
        let m = RealInterval::from_rational(&rat(-3, 2), 64);
        assert!(m.powi(2).contains_rational(&rat(9, 4)));
        assert!(m.powi(3).contains_rational(&rat(-27, 8)));
        let straddle = RealInterval::from_bounds(Dyadic::from_i64(-2), Dyadic::from_i64(3), 64);
        let sq = straddle.powi(2);
        assert!(sq.contains_rational(&rat(0, 1)));
        assert!(sq.contains_rational(&rat(9, 1)));
        assert!(!sq.contains_rational(&rat(-1, 1)));
        let cu = straddle.powi(3);
        assert!(cu.contains_rational(&rat(-8, 1)));
        assert!(cu.contains_rational(&rat(27, 1)));
    }

    #[test]
    fn sqrt2_matches_reference_digits() {
        // First 50 decimal digits of sqrt(2).
        let reference = "1.41421356237309504880168872420969807856967187537694";
        let iv = RealInterval::nth_root_nat(&BigUint::from(2u32), 2, 200);
        let (lo, hi) = iv.decimal_bounds(50);
        assert!(lo.as_str() <= reference && reference <= hi.as_str());
        assert!(iv.width_below_pow2(-190));
    }

    #[test]
    fn perfect_square_root_is_tight() {
        let iv = RealInterval::nth_root_nat(&BigUint::from(4u32), 2, 64);
        assert!(iv.contains_rational(&rat(2, 1)));
        assert!(iv.width_below_pow2(-60));
    }

    #[test]
    fn ln2_matches_reference_digits() {
        let reference = "0.69314718055994530941723212145817656807550013436026";
        let iv = ln2_interval(200);
        let (lo, hi) = iv.decimal_bounds(50);
        assert!(lo.as_str() <= reference && reference <= hi.as_str());
    }

    #[test]
    fn pi_matches_reference_digits() {
        let reference = "3.14159265358979323846264338327950288419716939937510";
        let iv = pi_interval(200);
        let (lo, hi) = iv.decimal_bounds(50);
        assert!(lo.as_str() <= reference && reference <= hi.as_str());
    }

    #[test]
    fn ln_of_rational_basics() {
        // ln 1 = 0
        let one = ln_of_rational(&rat(1, 1), 128);
        assert!(one.contains_rational(&rat(0, 1)));
        assert!(one.width_below_pow2(-120));
        // ln(1/2) = -ln 2
        let lnhalf = ln_of_rational(&rat(1, 2), 128);
        let ln2 = ln2_interval(128);
        assert!(lnhalf.add(&ln2).contains_rational(&rat(0, 1)));
        // ln(e) would need e; instead check ln(4) = 2 ln 2.
        let ln4 = ln_of_rational(&rat(4, 1), 128);
        assert!(ln4.sub(&ln2.mul_pow2(1)).contains_rational(&rat(0, 1)));
    }

    #[test]
    fn exp_inverts_ln_numerically() {
        let x = rat(7, 3);
        let lnx = ln_of_rational(&x, 160);
        let back = lnx.exp();
        assert!(back.contains_rational(&x));
        assert!(back.rel_width_below_pow2(-140));
    }

    #[test]
    fn exp_of_zero_and_negative() {
        let zero = RealInterval::exact_zero(96);
        assert!(zero.exp().contains_rational(&rat(1, 1)));
        let neg = RealInterval::from_rational(&rat(-1, 1), 160);
        let e_neg = neg.exp();
        // e^-1 * e^1 contains 1.
        let e_pos = RealInterval::from_rational(&rat(1, 1), 160).exp();
        assert!(e_neg.mul(&e_pos).contains_rational(&rat(1, 1)));
    }

    #[test]
    fn widths_shrink_when_precision_doubles() {
        let x = rat(22, 7);
        let mut prev: Option<Dyadic> = None;
        for p in [64u32, 128, 256, 512] {
            let iv = ln_of_rational(&x, p);
            let wdt = iv.width_exact();
            if let Some(pw) = prev {
                // Halving at least; in practice far better.
                assert!(
                    wdt.mul_pow2(1).cmp_value(&pw) == Ordering::Less,
                    "width did not halve at precision {p}"
                );
            }
            prev = Some(wdt);
        }
    }

    #[test]
    fn try_order_detects_separation() {
        let a = RealInterval::from_rational(&rat(1, 3), 64);
        let b = RealInterval::from_rational(&rat(2, 3), 64);
        assert_eq!(a.try_order(&b), Some(Ordering::Less));
        assert_eq!(b.try_order(&a), Some(Ordering::Greater));
        assert_eq!(a.try_order(&a.clone()), None);
    }

    #[test]
    fn decimal_bounds_bracket() {
        let iv = RealInterval::from_rational(&rat(1, 3), 80);
        let (lo, hi) = iv.decimal_bounds(10);
        assert_eq!(lo, "0.3333333333");
        assert_eq!(hi, "0.3333333334");
        assert!(lo.parse::<f64>().unwrap() <= hi.parse::<f64>().unwrap());
        let _ = iv.precision().to_string();
    }
}
