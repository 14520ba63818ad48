//! Arbitrary-precision dyadic numbers `mant * 2^exp` with directed rounding.
//!
//! Every rounded operation takes an explicit direction, so interval code can
//! push lower bounds down and upper bounds up. Exact operations (negation,
//! addition before rounding, comparison) never lose information.

use alloc::string::{String, ToString};
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rounding direction: toward minus infinity or toward plus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Down,
    Up,
}

/// A dyadic rational `mant * 2^exp`. Not normalized; rounding controls size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub(crate) mant: BigInt,
    pub(crate) exp: i64,
}

/// `floor(m / 2^k)` for any sign of `m`.
pub(crate) fn shr_floor(m: &BigInt, k: u64) -> BigInt {
    if k == 0 {
        return m.clone();
    }
    match m.sign() {
        Sign::NoSign => BigInt::zero(),
        Sign::Plus => m >> k,
        Sign::Minus => {
            let mask = (BigUint::one() << k) - BigUint::one();
            let mag = (m.magnitude() + mask) >> k;
            -BigInt::from(mag)
        }
    }
}

/// `ceil(m / 2^k)` for any sign of `m`.
fn shr_ceil(m: &BigInt, k: u64) -> BigInt {
    -shr_floor(&-m, k)
}

fn shr_dir(m: &BigInt, k: u64, dir: Dir) -> BigInt {
    match dir {
        Dir::Down => shr_floor(m, k),
        Dir::Up => shr_ceil(m, k),
    }
}

fn div_dir(num: &BigInt, den: &BigInt, dir: Dir) -> BigInt {
    match dir {
        Dir::Down => num.div_floor(den),
        Dir::Up => num.div_ceil(den),
    }
}

impl Dyadic {
    pub fn zero() -> Dyadic {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_bigint(v: BigInt) -> Dyadic {
        Dyadic { mant: v, exp: 0 }
    }

    pub fn from_i64(v: i64) -> Dyadic {
        Dyadic {
            mant: BigInt::from(v),
            exp: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Position of the most significant bit: largest `e` with `|v| >= 2^e`.
    /// Meaningless for zero; callers must check.
    pub fn msb(&self) -> i64 {
        debug_assert!(!self.is_zero());
        self.mant.bits() as i64 - 1 + self.exp
    }

    /// Keeps at most `prec` mantissa bits, rounding in `dir`.
    pub fn round(&self, prec: u32, dir: Dir) -> Dyadic {
        let nbits = self.mant.bits();
        if nbits <= prec as u64 {
            return self.clone();
        }
        let k = nbits - prec as u64;
        Dyadic {
            mant: shr_dir(&self.mant, k, dir),
            exp: self.exp + k as i64,
        }
    }

    /// Exact sum; mantissa can grow by the exponent gap.
    pub fn add_exact(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (hi, lo) = if self.exp >= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let gap = (hi.exp - lo.exp) as u64;
        Dyadic {
            mant: (&hi.mant << gap) + &lo.mant,
            exp: lo.exp,
        }
    }

    pub fn add_rounded(&self, other: &Dyadic, prec: u32, dir: Dir) -> Dyadic {
        self.add_exact(other).round(prec, dir)
    }

    pub fn sub_rounded(&self, other: &Dyadic, prec: u32, dir: Dir) -> Dyadic {
        self.add_exact(&other.neg()).round(prec, dir)
    }

    pub fn mul_exact(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
        }
    }

    pub fn mul_rounded(&self, other: &Dyadic, prec: u32, dir: Dir) -> Dyadic {
        self.mul_exact(other).round(prec, dir)
    }

    /// Directed quotient `self / other`; `other` must be nonzero.
    pub fn div_rounded(&self, other: &Dyadic, prec: u32, dir: Dir) -> Dyadic {
        assert!(!other.is_zero(), "division by zero dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let extra = (other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let s = prec as i64 + 2 + extra;
        let scaled = &self.mant << (s as u64);
        Dyadic {
            mant: div_dir(&scaled, &other.mant, dir),
            exp: self.exp - other.exp - s,
        }
        .round(prec, dir)
    }

    /// Directed conversion of `num / den`; `den` must be positive.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32, dir: Dir) -> Dyadic {
        assert!(den.is_positive(), "denominator must be positive");
        if num.is_zero() {
            return Dyadic::zero();
        }
        let extra = (den.bits() as i64 - num.bits() as i64).max(0);
        let s = prec as i64 + 2 + extra;
        let scaled = num << (s as u64);
        Dyadic {
            mant: div_dir(&scaled, den, dir),
            exp: -s,
        }
        .round(prec, dir)
    }

    /// Exact ordering of the represented values.
    pub fn cmp_value(&self, other: &Dyadic) -> Ordering {
        match (self.mant.sign(), other.mant.sign()) {
            (Sign::NoSign, Sign::NoSign) => return Ordering::Equal,
            (Sign::Minus, Sign::NoSign) | (Sign::Minus, Sign::Plus) | (Sign::NoSign, Sign::Plus) => {
                return Ordering::Less
            }
            (Sign::Plus, Sign::NoSign) | (Sign::Plus, Sign::Minus) | (Sign::NoSign, Sign::Minus) => {
                return Ordering::Greater
            }
            _ => {}
        }
        self.add_exact(&other.neg()).mant.sign().cmp(&Sign::NoSign)
    }

    /// Decimal rendering with exactly `frac_digits` digits after the point,
    /// rounded in `dir` so the printed value brackets the true one.
    pub fn to_decimal(&self, frac_digits: u32, dir: Dir) -> String {
        let pow10 = BigInt::from(10u32).pow(frac_digits);
        let scaled = &self.mant * &pow10;
        let n = if self.exp >= 0 {
            scaled << (self.exp as u64)
        } else {
            shr_dir(&scaled, (-self.exp) as u64, dir)
        };
        let neg = n.is_negative();
        let mag = n.magnitude();
        let ten_k = pow10.magnitude();
        let int_part = mag / ten_k;
        let frac_part = mag % ten_k;
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if frac_digits > 0 {
            let frac_str = frac_part.to_string();
            out.push('.');
            for _ in 0..(frac_digits as usize - frac_str.len()) {
                out.push('0');
            }
            out.push_str(&frac_str);
        }
        out
    }
}
