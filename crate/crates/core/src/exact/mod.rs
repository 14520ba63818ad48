//! Exact arithmetic: arbitrary-precision naturals and rationals, factorials,
//! formal power products with rational exponents, directed-rounding interval
//! evaluation, and rigorous log-Gamma / digamma enclosures.

pub(crate) mod dyadic;
pub mod gamma;
pub mod interval;
pub mod powprod;

pub use gamma::{digamma_interval, ln_gamma_interval, theorem_c_check, StirlingConfig, STIRLING};
pub use interval::{ln2_interval, ln_2pi_interval, ln_of_rational, pi_interval, RealInterval};
pub use powprod::{pp_compare, pp_interval_eval, pp_mul, PowerProduct, BLOWUP_GUARD_BITS};

/// Arbitrary-precision non-negative integer.
pub type BigNat = num_bigint::BigUint;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by construction.
pub type BigRat = num_rational::BigRational;

/// Failure modes of exact comparison; never a wrong answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// Exponent clearing would build integers past the configured cost cap.
    BlowupGuard { estimated_bits: u64 },
    /// Interval escalation exhausted the precision budget with the
    /// enclosures still overlapping.
    Unresolved { precision: u32 },
}

impl core::fmt::Display for ExactError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ExactError::BlowupGuard { estimated_bits } => write!(
                f,
                "exact comparison abandoned: estimated {estimated_bits}-bit intermediates"
            ),
            ExactError::Unresolved { precision } => write!(
                f,
                "comparison unresolved at maximum precision {precision}"
            ),
        }
    }
}

impl core::error::Error for ExactError {}

/// `n!` as an exact big natural; `factorial(0) = 1`.
pub fn factorial(n: u64) -> BigNat {
    let mut acc = BigNat::from(1u32);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigNat::from(1u32));
        assert_eq!(factorial(1), BigNat::from(1u32));
        assert_eq!(factorial(5), BigNat::from(120u32));
        assert_eq!(factorial(10), BigNat::from(3628800u32));
    }

    #[test]
    fn factorial_satisfies_recurrence() {
        let mut prev = factorial(0);
        for n in 1..=200u64 {
            let cur = factorial(n);
            assert_eq!(cur, &prev * n, "n = {n}");
            prev = cur;
        }
    }
}
