//! Monotonicity certificates for integer-indexed maps into exactly
//! represented positive reals, and the product/sum inequalities those
//! certificates induce along the majorization order.
//!
//! A ratio certificate witnesses that `f(x)/f(x-1)` is strictly monotone
//! over `[1, x_max]`; a diff certificate does the same for consecutive
//! differences. Products are compared exactly; sums need interval
//! arithmetic with precision escalation because sums of radicals have no
//! cheap exact ordering.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;

use crate::exact::{BigRat, ExactError, PowerProduct, RealInterval};
use crate::poset::{majorizes, CanonicalSeq};
use crate::recur::{fib, recurrence_terms, RecurrenceSpec};
use crate::{escalation_steps, DEFAULT_MAX_PRECISION};

/// A map from non-negative integers to positive reals, every value exactly
/// representable as a power product.
pub trait PowerMap {
    fn value(&self, x: u64) -> PowerProduct;
}

/// The catalog of concrete maps whose inequalities this crate certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinF {
    /// `x!`, with `0! = 1`.
    Factorial,
    /// `x!/x^x`, with value 1 at 0.
    FactOverSelfPower,
    /// `x/((x-1)!)^(1/(x-1))` for `x >= 2`, with values 1, 3/2 at 0, 1.
    RatioRoot,
    /// `x^(x+1)/((x-1)!)^(1/(x-1))` for `x >= 2`, with values 1, 2 at 0, 1.
    RatioRootPower,
    /// `((x+1)!)^(1/(x+2))`.
    F1,
    /// `((x+2)!)^(1/(x+2))`.
    F2,
    /// `F_{2x}` in the convention `F_0 = F_1 = 1`.
    FibEvenIndex,
    /// `F_{2x+1}` in the same convention.
    FibOddIndex,
    /// `A_x` of a two-term linear recurrence; terms must stay positive.
    Recurrence(RecurrenceSpec),
}

impl PowerMap for BuiltinF {
    fn value(&self, x: u64) -> PowerProduct {
        match self {
            BuiltinF::Factorial => PowerProduct::factorial(x),
            BuiltinF::FactOverSelfPower => {
                if x == 0 {
                    PowerProduct::one()
                } else {
                    PowerProduct::factorial(x)
                        .mul(&PowerProduct::from_u64(x).pow_int(-(x as i64)))
                }
            }
            BuiltinF::RatioRoot => match x {
                0 => PowerProduct::one(),
                1 => PowerProduct::from_rat(&BigRat::new(BigInt::from(3), BigInt::from(2))),
                _ => PowerProduct::from_u64(x).mul(&root_of_factorial(x - 1).inv()),
            },
            BuiltinF::RatioRootPower => match x {
                0 => PowerProduct::one(),
                1 => PowerProduct::from_u64(2),
                _ => PowerProduct::from_u64(x)
                    .pow_int((x + 1) as i64)
                    .mul(&root_of_factorial(x - 1).inv()),
            },
            BuiltinF::F1 => PowerProduct::factorial(x + 1).pow_rat(&BigRat::new(
                BigInt::from(1),
                BigInt::from(x + 2),
            )),
            BuiltinF::F2 => PowerProduct::factorial(x + 2).pow_rat(&BigRat::new(
                BigInt::from(1),
                BigInt::from(x + 2),
            )),
            BuiltinF::FibEvenIndex => PowerProduct::from_nat(&fib(2 * x)),
            BuiltinF::FibOddIndex => PowerProduct::from_nat(&fib(2 * x + 1)),
            BuiltinF::Recurrence(spec) => {
                let terms = recurrence_terms(spec, x)
                    .expect("recurrence terms must stay non-negative for monotone analysis");
                let t = terms
                    .into_iter()
                    .next_back()
                    .expect("recurrence_terms returns at least A_0");
                assert!(
                    !num_traits::Zero::is_zero(&t),
                    "recurrence term is zero; not representable as a positive real"
                );
                PowerProduct::from_nat(&t)
            }
        }
    }
}

/// `((m)!)^(1/m)`.
fn root_of_factorial(m: u64) -> PowerProduct {
    PowerProduct::factorial(m).pow_rat(&BigRat::new(BigInt::from(1), BigInt::from(m)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    RatioIncreasing,
    RatioDecreasing,
    DiffIncreasing,
    DiffDecreasing,
}

impl CertificateKind {
    pub fn is_ratio(&self) -> bool {
        matches!(
            self,
            CertificateKind::RatioIncreasing | CertificateKind::RatioDecreasing
        )
    }

    pub fn is_diff(&self) -> bool {
        !self.is_ratio()
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertificateKind::RatioIncreasing => "ratio-increasing",
            CertificateKind::RatioDecreasing => "ratio-decreasing",
            CertificateKind::DiffIncreasing => "diff-increasing",
            CertificateKind::DiffDecreasing => "diff-decreasing",
        };
        f.write_str(s)
    }
}

/// Witness that every consecutive comparison over `[1, x_max]` was checked,
/// strict, and uniformly directed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonotoneCertificate {
    pub kind: CertificateKind,
    pub x_max: u64,
    /// Number of map values examined; equals `x_max` by construction.
    pub witness_checked: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityOutcome {
    StrictlyGreater,
    StrictlyLess,
    Equal,
}

impl fmt::Display for InequalityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InequalityOutcome::StrictlyGreater => "strictly-greater",
            InequalityOutcome::StrictlyLess => "strictly-less",
            InequalityOutcome::Equal => "equal",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonotoneError {
    /// The ratio hypothesis needs f(0) = 1.
    F0NotOne,
    /// Tie or direction flip between the comparisons at x and x + 1.
    NotMonotone { x: u64 },
    /// A profile comparison stayed undecided at the precision cap.
    UnresolvedAt { x: u64, precision: u32 },
    /// A sum comparison stayed undecided at the precision cap.
    Unresolved { precision: u32 },
    /// The computed ordering contradicts the certified direction.
    TheoremViolation {
        a: CanonicalSeq,
        b: CanonicalSeq,
        got: InequalityOutcome,
    },
}

impl fmt::Display for MonotoneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonotoneError::F0NotOne => write!(f, "hypothesis f(0) = 1 does not hold"),
            MonotoneError::NotMonotone { x } => {
                write!(f, "profile is not strictly monotone at x = {x}")
            }
            MonotoneError::UnresolvedAt { x, precision } => {
                write!(f, "comparison at x = {x} unresolved at {precision} bits")
            }
            MonotoneError::Unresolved { precision } => {
                write!(f, "sum comparison unresolved at {precision} bits")
            }
            MonotoneError::TheoremViolation { a, b, got } => {
                write!(f, "certified direction contradicted on {a} vs {b}: compared {got}")
            }
        }
    }
}

impl core::error::Error for MonotoneError {}

/// Certifies that `f(x)/f(x-1)` is strictly monotone over `[1, x_max]`,
/// comparing consecutive ratios exactly.
pub fn ratio_profile<F: PowerMap + ?Sized>(
    f: &F,
    x_max: u64,
) -> Result<MonotoneCertificate, MonotoneError> {
    assert!(x_max >= 2, "a profile needs at least two ratios");
    if !f.value(0).is_one() {
        return Err(MonotoneError::F0NotOne);
    }
    let mut prev_val = f.value(0);
    let mut prev_ratio: Option<PowerProduct> = None;
    let mut dir: Option<Ordering> = None;
    for x in 1..=x_max {
        let val = f.value(x);
        let ratio = val.mul(&prev_val.inv());
        if let Some(pr) = &prev_ratio {
            let ord = ratio
                .compare(pr, DEFAULT_MAX_PRECISION)
                .map_err(|e| match e {
                    ExactError::Unresolved { precision } => MonotoneError::UnresolvedAt {
                        x: x - 1,
                        precision,
                    },
                    ExactError::BlowupGuard { .. } => {
                        unreachable!("compare falls back to intervals on blowup")
                    }
                })?;
            if ord == Ordering::Equal {
                return Err(MonotoneError::NotMonotone { x: x - 1 });
            }
            match dir {
                None => dir = Some(ord),
                Some(d) if d != ord => return Err(MonotoneError::NotMonotone { x: x - 1 }),
                _ => {}
            }
        }
        prev_ratio = Some(ratio);
        prev_val = val;
    }
    let kind = match dir.expect("x_max >= 2 forces at least one comparison") {
        Ordering::Greater => CertificateKind::RatioIncreasing,
        Ordering::Less => CertificateKind::RatioDecreasing,
        Ordering::Equal => unreachable!("ties already rejected"),
    };
    Ok(MonotoneCertificate {
        kind,
        x_max,
        witness_checked: x_max,
    })
}

/// Certifies that `f(x) - f(x-1)` is strictly monotone over `[1, x_max]`.
///
/// Differences are invariant under the additive shift `f - f(0)`, so no
/// boundary condition on `f(0)` applies here. The comparison at x is
/// `f(x+1) + f(x-1)` vs `2 f(x)`, done exactly when all three values are
/// rational and by escalating intervals otherwise.
pub fn diff_profile<F: PowerMap + ?Sized>(
    f: &F,
    x_max: u64,
    precision: u32,
    max_precision: u32,
) -> Result<MonotoneCertificate, MonotoneError> {
    assert!(x_max >= 2, "a profile needs at least two differences");
    let mut dir: Option<Ordering> = None;
    for x in 1..x_max {
        let vs = [f.value(x - 1), f.value(x), f.value(x + 1)];
        let ord = if let (Some(r0), Some(r1), Some(r2)) = (
            vs[0].as_rational(),
            vs[1].as_rational(),
            vs[2].as_rational(),
        ) {
            (r2 + r0).cmp(&(r1 * BigRat::from_integer(BigInt::from(2))))
        } else {
            let mut resolved = None;
            for p in escalation_steps(precision, max_precision) {
                let outer = vs[2].interval_eval(p).add(&vs[0].interval_eval(p));
                let mid = vs[1].interval_eval(p).mul_pow2(1);
                if let Some(o) = outer.try_order(&mid) {
                    resolved = Some(o);
                    break;
                }
            }
            resolved.ok_or(MonotoneError::UnresolvedAt {
                x,
                precision: max_precision,
            })?
        };
        if ord == Ordering::Equal {
            return Err(MonotoneError::NotMonotone { x });
        }
        match dir {
            None => dir = Some(ord),
            Some(d) if d != ord => return Err(MonotoneError::NotMonotone { x }),
            _ => {}
        }
    }
    let kind = match dir.expect("x_max >= 2 forces at least one comparison") {
        Ordering::Greater => CertificateKind::DiffIncreasing,
        Ordering::Less => CertificateKind::DiffDecreasing,
        Ordering::Equal => unreachable!("ties already rejected"),
    };
    Ok(MonotoneCertificate {
        kind,
        x_max,
        witness_checked: x_max,
    })
}

fn outcome_of(ord: Ordering) -> InequalityOutcome {
    match ord {
        Ordering::Greater => InequalityOutcome::StrictlyGreater,
        Ordering::Less => InequalityOutcome::StrictlyLess,
        Ordering::Equal => InequalityOutcome::Equal,
    }
}

/// Exact comparison of `prod f(a_i)` vs `prod f(b_i)` for a pair with
/// `a` majorizing `b`, checked against the certificate's direction.
///
/// Returns `Equal` only for identical sequences; any outcome off the
/// certified direction is an error, not a value.
pub fn verify_product_inequality<F: PowerMap + ?Sized>(
    f: &F,
    a: &CanonicalSeq,
    b: &CanonicalSeq,
    cert: &MonotoneCertificate,
) -> Result<InequalityOutcome, MonotoneError> {
    assert!(majorizes(a, b), "pairs must satisfy the majorization relation");
    assert!(cert.kind.is_ratio(), "product inequalities need a ratio certificate");
    assert!(
        cert.x_max >= a.max_part().max(b.max_part()),
        "certificate range must cover every part"
    );
    if a == b {
        return Ok(InequalityOutcome::Equal);
    }
    let prod = |s: &CanonicalSeq| {
        s.parts()
            .iter()
            .fold(PowerProduct::one(), |acc, &p| acc.mul(&f.value(p)))
    };
    let ord = prod(a)
        .compare(&prod(b), DEFAULT_MAX_PRECISION)
        .map_err(|e| match e {
            ExactError::Unresolved { precision } => MonotoneError::Unresolved { precision },
            ExactError::BlowupGuard { .. } => {
                unreachable!("compare falls back to intervals on blowup")
            }
        })?;
    let expected = match cert.kind {
        CertificateKind::RatioIncreasing => Ordering::Greater,
        CertificateKind::RatioDecreasing => Ordering::Less,
        _ => unreachable!("kind checked above"),
    };
    if ord == expected {
        Ok(outcome_of(ord))
    } else {
        Err(MonotoneError::TheoremViolation {
            a: a.clone(),
            b: b.clone(),
            got: outcome_of(ord),
        })
    }
}

/// Orders the shifted sums `sum (f(a_i) - f(0))` vs `sum (f(b_i) - f(0))`.
///
/// Rearranged as `sum f(a_i) + (k - n) f(0)` vs `sum f(b_i)` with
/// `n = len(a) <= k = len(b)` so intervals are only ever added.
pub fn compare_shifted_sums<F: PowerMap + ?Sized>(
    f: &F,
    a: &CanonicalSeq,
    b: &CanonicalSeq,
    precision: u32,
    max_precision: u32,
) -> Result<Ordering, MonotoneError> {
    assert!(a.len() <= b.len(), "caller must pass the shorter sequence first");
    let f0 = f.value(0);
    let pad = (b.len() - a.len()) as u64;
    let left: Vec<PowerProduct> = a.parts().iter().map(|&p| f.value(p)).collect();
    let right: Vec<PowerProduct> = b.parts().iter().map(|&p| f.value(p)).collect();

    let all_rational = |vals: &[PowerProduct]| {
        vals.iter()
            .map(|v| v.as_rational())
            .collect::<Option<Vec<BigRat>>>()
    };
    if let (Some(ls), Some(rs), Some(f0r)) =
        (all_rational(&left), all_rational(&right), f0.as_rational())
    {
        let lsum = ls.into_iter().fold(BigRat::from_integer(BigInt::from(0)), |s, v| s + v)
            + f0r * BigRat::from_integer(BigInt::from(pad));
        let rsum = rs.into_iter().fold(BigRat::from_integer(BigInt::from(0)), |s, v| s + v);
        return Ok(lsum.cmp(&rsum));
    }

    for p in escalation_steps(precision, max_precision) {
        let mut lsum = RealInterval::exact_zero(p);
        for v in &left {
            lsum = lsum.add(&v.interval_eval(p));
        }
        if pad > 0 {
            lsum = lsum.add(&f0.interval_eval(p).mul(&RealInterval::exact_u64(pad, p)));
        }
        let mut rsum = RealInterval::exact_zero(p);
        for v in &right {
            rsum = rsum.add(&v.interval_eval(p));
        }
        if let Some(ord) = lsum.try_order(&rsum) {
            return Ok(ord);
        }
    }
    Err(MonotoneError::Unresolved {
        precision: max_precision,
    })
}

/// Interval comparison of the shifted sums for a pair with `a` majorizing
/// `b`, checked against the diff certificate's direction.
pub fn verify_sum_inequality<F: PowerMap + ?Sized>(
    f: &F,
    a: &CanonicalSeq,
    b: &CanonicalSeq,
    cert: &MonotoneCertificate,
    precision: u32,
    max_precision: u32,
) -> Result<InequalityOutcome, MonotoneError> {
    assert!(majorizes(a, b), "pairs must satisfy the majorization relation");
    assert!(cert.kind.is_diff(), "sum inequalities need a diff certificate");
    assert!(
        cert.x_max >= a.max_part().max(b.max_part()),
        "certificate range must cover every part"
    );
    if a == b {
        return Ok(InequalityOutcome::Equal);
    }
    let ord = compare_shifted_sums(f, a, b, precision, max_precision)?;
    let expected = match cert.kind {
        CertificateKind::DiffIncreasing => Ordering::Greater,
        CertificateKind::DiffDecreasing => Ordering::Less,
        _ => unreachable!("kind checked above"),
    };
    if ord == expected {
        Ok(outcome_of(ord))
    } else {
        Err(MonotoneError::TheoremViolation {
            a: a.clone(),
            b: b.clone(),
            got: outcome_of(ord),
        })
    }
}
