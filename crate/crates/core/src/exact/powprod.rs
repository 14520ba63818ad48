//! Formal products `prod base_i ^ (p_i / q_i)` with exact comparison.
//!
//! A `PowerProduct` represents a positive real exactly. Comparison clears
//! exponents: move negative-exponent factors across the inequality, raise
//! both sides to the lcm of the exponent denominators, and compare big
//! integers. A cost guard caps the intermediate size; past it, comparison
//! falls back to adaptive interval evaluation and reports `Unresolved`
//! rather than ever guessing.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::RealInterval;
use super::{BigNat, BigRat, ExactError};
use crate::escalation_steps;

/// Cost cap for exponent clearing, in estimated bits of the cleared
/// integers. Chosen to cover every desk-scale instance while guaranteeing
/// termination.
pub const BLOWUP_GUARD_BITS: u64 = 1 << 24;

/// A normalized formal product of natural bases raised to rational powers.
///
/// Normal form: bases strictly increasing, all bases >= 2 (ones are dropped),
/// no zero exponents. Two products built from the same factorizations are
/// equal as values iff their normal forms are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerProduct {
    factors: Vec<(BigNat, BigRat)>,
}

impl PowerProduct {
    /// The empty product, representing 1.
    pub fn one() -> PowerProduct {
        PowerProduct {
            factors: Vec::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Builds from raw `(base, exponent)` pairs; bases must be >= 1.
    pub fn from_factors(raw: Vec<(BigNat, BigRat)>) -> PowerProduct {
        for (b, _) in &raw {
            assert!(!b.is_zero(), "power product bases must be >= 1");
        }
        PowerProduct {
            factors: normalize(raw),
        }
    }

    /// A positive natural, split into prime factors below 1024 times a
    /// residual cofactor base. Deterministic, so equal inputs normalize
    /// identically.
    pub fn from_nat(n: &BigNat) -> PowerProduct {
        assert!(!n.is_zero(), "power product bases must be >= 1");
        let raw = factor_partial(n.clone())
            .into_iter()
            .map(|(b, e)| (b, BigRat::from_integer(BigInt::from(e))))
            .collect();
        PowerProduct {
            factors: normalize(raw),
        }
    }

    pub fn from_u64(n: u64) -> PowerProduct {
        PowerProduct::from_nat(&BigNat::from(n))
    }

    /// A positive rational as numerator times denominator^-1.
    pub fn from_rat(r: &BigRat) -> PowerProduct {
        assert!(r.is_positive(), "power products represent positive reals");
        let num = PowerProduct::from_nat(r.numer().magnitude());
        let den = PowerProduct::from_nat(r.denom().magnitude());
        num.mul(&den.inv())
    }

    /// `n!` in fully prime-factored form (Legendre exponent counts).
    pub fn factorial(n: u64) -> PowerProduct {
        let mut raw = Vec::new();
        for p in primes_up_to(n) {
            let mut e = 0u64;
            let mut pk = p;
            loop {
                e += n / pk;
                match pk.checked_mul(p) {
                    Some(next) if next <= n => pk = next,
                    _ => break,
                }
            }
            raw.push((BigNat::from(p), BigRat::from_integer(BigInt::from(e))));
        }
        PowerProduct { factors: normalize(raw) }
    }

    /// Factor list in normal form.
    pub fn factors(&self) -> &[(BigNat, BigRat)] {
        &self.factors
    }

    /// Product of two power products; exponents of shared bases add.
    pub fn mul(&self, other: &PowerProduct) -> PowerProduct {
        let mut raw: Vec<(BigNat, BigRat)> = self.factors.clone();
        raw.extend(other.factors.iter().cloned());
        PowerProduct {
            factors: normalize(raw),
        }
    }

    /// Raises every exponent by the rational factor `r`.
    pub fn pow_rat(&self, r: &BigRat) -> PowerProduct {
        if r.is_zero() {
            return PowerProduct::one();
        }
        let raw = self
            .factors
            .iter()
            .map(|(b, e)| (b.clone(), e * r))
            .collect();
        PowerProduct {
            factors: normalize(raw),
        }
    }

    pub fn pow_int(&self, k: i64) -> PowerProduct {
        self.pow_rat(&BigRat::from_integer(BigInt::from(k)))
    }

    pub fn inv(&self) -> PowerProduct {
        self.pow_int(-1)
    }

    /// Exact rational value when every exponent is an integer of tame size.
    pub fn as_rational(&self) -> Option<BigRat> {
        let mut acc = BigRat::one();
        for (b, e) in &self.factors {
            if !e.is_integer() {
                return None;
            }
            let k = e.numer();
            let mag = k.magnitude().to_u32()?;
            let p = BigRat::from_integer(BigInt::from(b.clone())).pow(mag as i32);
            if k.is_negative() {
                acc /= p;
            } else {
                acc *= p;
            }
        }
        Some(acc)
    }

    /// Estimated bit size of the exponent-cleared comparison of the ratio
    /// `self / other`; `None` for identical normal forms.
    fn cleared_cost_bits(ratio: &PowerProduct) -> u128 {
        let mut l = BigUint::one();
        for (_, e) in &ratio.factors {
            l = l.lcm(e.denom().magnitude());
        }
        let mut est_bits: u128 = 0;
        for (b, e) in &ratio.factors {
            let scaled = e.numer() * BigInt::from(&l / e.denom().magnitude());
            est_bits = est_bits.saturating_add(
                (scaled.magnitude().to_u128().unwrap_or(u128::MAX)).saturating_mul(b.bits() as u128),
            );
        }
        est_bits
    }

    /// Exact ordering by exponent clearing; `BlowupGuard` past the cost cap.
    pub fn compare_exact_only(&self, other: &PowerProduct) -> Result<Ordering, ExactError> {
        let ratio = self.mul(&other.inv());
        if ratio.factors.is_empty() {
            return Ok(Ordering::Equal);
        }
        let mut l = BigUint::one();
        for (_, e) in &ratio.factors {
            l = l.lcm(e.denom().magnitude());
        }
        // Cleared exponent of each factor is |numer| * (l / denom).
        let mut cleared: Vec<(&BigNat, BigInt)> = Vec::new();
        let mut est_bits: u128 = 0;
        for (b, e) in &ratio.factors {
            let scaled = e.numer() * BigInt::from(&l / e.denom().magnitude());
            est_bits = est_bits.saturating_add(
                (scaled.magnitude().to_u128().unwrap_or(u128::MAX)).saturating_mul(b.bits() as u128),
            );
            cleared.push((b, scaled));
        }
        if est_bits > BLOWUP_GUARD_BITS as u128 {
            return Err(ExactError::BlowupGuard {
                estimated_bits: est_bits.min(u64::MAX as u128) as u64,
            });
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (b, scaled) in cleared {
            let mag = scaled.magnitude().to_u32().ok_or(ExactError::BlowupGuard {
                estimated_bits: u64::MAX,
            })?;
            let p = b.pow(mag);
            if scaled.is_negative() {
                den *= p;
            } else {
                num *= p;
            }
        }
        Ok(num.cmp(&den))
    }

    /// Exact ordering, deciding by whichever rigorous route is cheapest.
    ///
    /// Identical normal forms are equal outright. A small cleared form is
    /// compared exactly. Otherwise escalating enclosures decide (disjoint
    /// intervals prove the order); exponent clearing is kept as the
    /// tie-breaker of last resort, and only a tie past the blowup guard
    /// reports `Unresolved`.
    pub fn compare(
        &self,
        other: &PowerProduct,
        max_precision: u32,
    ) -> Result<Ordering, ExactError> {
        let ratio = self.mul(&other.inv());
        if ratio.factors.is_empty() {
            return Ok(Ordering::Equal);
        }
        // Under this cost the cleared integers stay small enough that the
        // direct comparison beats any interval evaluation.
        const CHEAP_EXACT_BITS: u128 = 1 << 21;
        if Self::cleared_cost_bits(&ratio) <= CHEAP_EXACT_BITS {
            return self.compare_exact_only(other);
        }
        for p in escalation_steps(128, max_precision) {
            let a = self.interval_eval(p);
            let b = other.interval_eval(p);
            if let Some(ord) = a.try_order(&b) {
                return Ok(ord);
            }
        }
        match self.compare_exact_only(other) {
            Err(ExactError::BlowupGuard { .. }) => Err(ExactError::Unresolved {
                precision: max_precision,
            }),
            r => r,
        }
    }

    /// Rigorous enclosure of the represented value.
    ///
    /// Relative width stays well under `2^(1 - precision/2)` and tightens as
    /// `precision` grows.
    pub fn interval_eval(&self, precision: u32) -> RealInterval {
        let w = precision + 8 + ceil_log2(self.factors.len() + 2);
        let mut num = RealInterval::exact_one(w);
        let mut den = RealInterval::exact_one(w);
        for (b, e) in &self.factors {
            let pmag = e.numer().magnitude();
            let q = e
                .denom()
                .magnitude()
                .to_u32()
                .expect("exponent denominator fits u32 at desk scale");
            // Integer-root path when base^|p| stays small and the root
            // degree is tame; the scaled Newton iteration degrades badly
            // with the degree, so large q goes through exp((p/q) ln base).
            let pow_bits = pmag
                .to_u128()
                .unwrap_or(u128::MAX)
                .saturating_mul(b.bits() as u128);
            let factor = if pow_bits <= 4 * (w as u128 + 64) && q <= 64 {
                let n = b.pow(pmag.to_u32().expect("bounded by pow_bits check"));
                RealInterval::nth_root_nat(&n, q, w)
            } else {
                let lnb = RealInterval::exact_int(BigInt::from(b.clone()), w).ln();
                let scale = BigRat::new(BigInt::from(pmag.clone()), BigInt::from(q));
                lnb.mul(&RealInterval::from_rational(&scale, w)).exp()
            };
            if e.is_negative() {
                den = den.mul(&factor);
            } else {
                num = num.mul(&factor);
            }
        }
        num.div(&den).with_precision(precision)
    }

    /// Render as `b1^(e1)·b2^(e2)·...`, or `1` for the empty product.
    pub fn display_string(&self) -> String {
        use core::fmt::Write;
        if self.factors.is_empty() {
            return String::from("1");
        }
        let mut out = String::new();
        for (i, (b, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            if e.is_integer() && !e.is_negative() {
                let _ = write!(out, "{}^{}", b, e.numer());
            } else if e.is_integer() {
                let _ = write!(out, "{}^({})", b, e.numer());
            } else {
                let _ = write!(out, "{}^({}/{})", b, e.numer(), e.denom());
            }
        }
        out
    }
}

impl core::fmt::Display for PowerProduct {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.display_string())
    }
}

/// Stable operation name for [`PowerProduct::compare`] with the default cap.
pub fn pp_compare(x: &PowerProduct, y: &PowerProduct) -> Result<Ordering, ExactError> {
    x.compare(y, crate::DEFAULT_MAX_PRECISION)
}

/// Stable operation name for [`PowerProduct::mul`].
pub fn pp_mul(x: &PowerProduct, y: &PowerProduct) -> PowerProduct {
    x.mul(y)
}

/// Stable operation name for [`PowerProduct::interval_eval`].
pub fn pp_interval_eval(x: &PowerProduct, precision: u32) -> RealInterval {
    x.interval_eval(precision)
}

fn normalize(raw: Vec<(BigNat, BigRat)>) -> Vec<(BigNat, BigRat)> {
    let mut map: BTreeMap<BigNat, BigRat> = BTreeMap::new();
    for (b, e) in raw {
        if b.is_one() || e.is_zero() {
            continue;
        }
        match map.get_mut(&b) {
            Some(cur) => *cur += e,
            None => {
                map.insert(b, e);
            }
        }
    }
    map.into_iter().filter(|(_, e)| !e.is_zero()).collect()
}

fn ceil_log2(n: usize) -> u32 {
    (usize::BITS - n.saturating_sub(1).leading_zeros()).max(1)
}

/// Trial division by integers below 1024; the leftover cofactor (free of
/// factors below the bound) is kept as a base of its own.
fn factor_partial(mut n: BigNat) -> Vec<(BigNat, u64)> {
    let mut out = Vec::new();
    if n.is_one() {
        return out;
    }
    let mut d = 2u64;
    while d < 1024 {
        let db = BigNat::from(d);
        if &db * &db > n {
            break;
        }
        let mut e = 0u64;
        loop {
            let (q, r) = n.div_rem(&db);
            if r.is_zero() {
                n = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            out.push((db, e));
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    'outer: for c in 2..=n {
        for p in &out {
            if p * p > c {
                break;
            }
            if c % p == 0 {
                continue 'outer;
            }
        }
        out.push(c);
    }
    out
}
