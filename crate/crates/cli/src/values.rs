//! Input parsing and JSON encoding for the core types.
//!
//! Every numeric value is serialized as an integer or a decimal string;
//! native floats never appear, so reports are bit-stable across platforms.

use majorder_core::dioph::SideValue;
use majorder_core::exact::{PowerProduct, RealInterval};
use majorder_core::monotone::{BuiltinF, PowerMap};
use majorder_core::poset::canonicalize;
use majorder_core::recur::RecurrenceSpec;
use majorder_core::{BigRat, CanonicalSeq};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::UsageError;

/// Fractional digits printed for interval bounds.
pub const DECIMAL_DIGITS: u32 = 30;

pub fn parse_sequence(raw: &str) -> Result<CanonicalSeq, UsageError> {
    let mut parts = Vec::new();
    for piece in raw.split(',') {
        let piece = piece.trim();
        let value: u64 = piece.parse().map_err(|_| {
            UsageError(format!(
                "sequence entry {piece:?} is not a positive integer (input {raw:?})"
            ))
        })?;
        parts.push(value);
    }
    canonicalize(&parts).map_err(|e| UsageError(format!("invalid sequence {raw:?}: {e}")))
}

/// Accepts an integer, a decimal like 1.1, a fraction like 7/3, or the
/// letter e (a 50-digit rational stand-in).
pub fn parse_positive_rational(raw: &str) -> Result<BigRat, UsageError> {
    let s = raw.trim();
    if s == "e" {
        return Ok(e_approx());
    }
    let bad = |detail: &str| UsageError(format!("cannot parse {raw:?} as a rational: {detail}"));
    let value = if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = den.trim().parse().map_err(|_| bad("bad denominator"))?;
        if den == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        BigRat::new(num, den)
    } else if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad fractional digits"));
        }
        let int_part: BigInt = if int_part.is_empty() {
            BigInt::from(0)
        } else {
            int_part.parse().map_err(|_| bad("bad integer part"))?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac: BigInt = frac_part.parse().map_err(|_| bad("bad fractional digits"))?;
        BigRat::new(int_part * &scale + frac, scale)
    } else {
        let n: BigInt = s.parse().map_err(|_| bad("not a number"))?;
        BigRat::from_integer(n)
    };
    if value <= BigRat::from_integer(BigInt::from(0)) {
        return Err(bad("value must be positive"));
    }
    Ok(value)
}

/// Rational stand-in for Euler's number, accurate to 5e-51; documented on
/// the gamma suite, whose verdicts all hold on an open neighborhood wider
/// than that.
pub fn e_approx() -> BigRat {
    let num = BigInt::parse_bytes(
        b"271828182845904523536028747135266249775724709369996",
        10,
    )
    .expect("literal digits");
    BigRat::new(num, BigInt::from(10u32).pow(50))
}

pub fn seq_parts(s: &CanonicalSeq) -> Value {
    Value::Array(s.parts().iter().map(|&p| json!(p)).collect())
}

pub fn seq_table(s: &CanonicalSeq) -> Value {
    json!({
        "parts": seq_parts(s),
        "prefix_sums": s.prefix_sums(),
        "total_sum": s.sum(),
        "length": s.len(),
    })
}

pub fn enclosure_json(iv: &RealInterval) -> Value {
    let (lower, upper) = iv.decimal_bounds(DECIMAL_DIGITS);
    json!({
        "lower": lower,
        "upper": upper,
        "precision_bits": iv.precision(),
    })
}

pub fn side_json(side: &SideValue) -> Value {
    match side {
        SideValue::Nat(n) => json!({"kind": "nat", "value": n.to_string()}),
        SideValue::Rat(r) => json!({"kind": "rat", "value": r.to_string()}),
        SideValue::Product(p) => json!({"kind": "product", "value": p.display_string()}),
        SideValue::Enclosure(iv) => {
            let (lower, upper) = iv.decimal_bounds(DECIMAL_DIGITS);
            json!({
                "kind": "enclosure",
                "lower": lower,
                "upper": upper,
                "precision_bits": iv.precision(),
            })
        }
    }
}

/// The nine catalog maps; the recurrence entry is the worked sample.
pub fn catalog() -> Vec<BuiltinF> {
    vec![
        BuiltinF::Factorial,
        BuiltinF::FactOverSelfPower,
        BuiltinF::RatioRoot,
        BuiltinF::RatioRootPower,
        BuiltinF::F1,
        BuiltinF::F2,
        BuiltinF::FibEvenIndex,
        BuiltinF::FibOddIndex,
        BuiltinF::Recurrence(RecurrenceSpec { a: 3, b: -1, a1: 3 }),
    ]
}

pub fn builtin_name(f: &BuiltinF) -> String {
    match f {
        BuiltinF::Factorial => "factorial".into(),
        BuiltinF::FactOverSelfPower => "fact-selfpow".into(),
        BuiltinF::RatioRoot => "ratio-root".into(),
        BuiltinF::RatioRootPower => "ratio-root-power".into(),
        BuiltinF::F1 => "f1".into(),
        BuiltinF::F2 => "f2".into(),
        BuiltinF::FibEvenIndex => "fib-even".into(),
        BuiltinF::FibOddIndex => "fib-odd".into(),
        BuiltinF::Recurrence(spec) => format!("recurrence{spec}"),
    }
}

pub fn builtin_from_name(name: &str) -> Option<BuiltinF> {
    catalog().into_iter().find(|f| builtin_name(f) == name)
}

/// Precomputed map values so sweeps do not rebuild factorial products for
/// every pair.
pub struct CachedMap {
    values: Vec<PowerProduct>,
}

impl CachedMap {
    pub fn new(f: &BuiltinF, x_max: u64) -> CachedMap {
        CachedMap {
            values: (0..=x_max).map(|x| f.value(x)).collect(),
        }
    }
}

impl PowerMap for CachedMap {
    fn value(&self, x: u64) -> PowerProduct {
        self.values[x as usize].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences_parse_and_canonicalize() {
        assert_eq!(parse_sequence("3,1").unwrap().parts(), &[3, 1]);
        assert_eq!(parse_sequence(" 1, 3 ").unwrap().parts(), &[3, 1]);
        assert!(parse_sequence("3,x").is_err());
        assert!(parse_sequence("0,1").is_err());
        assert!(parse_sequence("").is_err());
    }

    #[test]
    fn rationals_parse_in_all_supported_shapes() {
        let rat = |n: i64, d: i64| BigRat::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(parse_positive_rational("5").unwrap(), rat(5, 1));
        assert_eq!(parse_positive_rational("1.1").unwrap(), rat(11, 10));
        assert_eq!(parse_positive_rational("7/3").unwrap(), rat(7, 3));
        assert_eq!(parse_positive_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_positive_rational("0").is_err());
        assert!(parse_positive_rational("-2").is_err());
        assert!(parse_positive_rational("1/0").is_err());
        assert!(parse_positive_rational("nope").is_err());
        let e = parse_positive_rational("e").unwrap();
        assert!(e > rat(27182, 10000) && e < rat(27183, 10000));
    }

    #[test]
    fn every_catalog_name_round_trips() {
        for f in catalog() {
            let name = builtin_name(&f);
            assert_eq!(builtin_from_name(&name), Some(f), "{name}");
        }
        assert_eq!(builtin_from_name("no-such-map"), None);
    }
}
