//! Exact-arithmetic building blocks for the majorization order on
//! positive-integer sequences and the factorial/Fibonacci inequalities
//! that live on top of it.
//!
//! The crate is `no_std` + `alloc`: every operation is pure, exact (big
//! integers, big rationals, formal power products) or rigorously enclosed
//! (directed-rounding intervals), and deterministic. IO, parallelism and
//! report formats live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod dioph;
pub mod exact;
pub mod monotone;
pub mod poset;
pub mod recur;

pub use exact::{BigNat, BigRat};
pub use poset::{CanonicalSeq, DominanceResult};

/// Escalation cap used by callers that do not pass an explicit one.
/// The CLI overrides it with `MAJORDER_MAX_PRECISION`.
pub const DEFAULT_MAX_PRECISION: u32 = 8192;

/// Precision ladder for adaptive interval comparisons: geometric from
/// `start` (at least 128 when room allows) up to and including `cap`.
pub fn escalation_steps(start: u32, cap: u32) -> impl Iterator<Item = u32> {
    let first = start.max(32).min(cap);
    let mut next = Some(first);
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur >= cap {
            None
        } else {
            Some((cur.saturating_mul(2)).min(cap))
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::escalation_steps;

    #[test]
    fn escalation_ladder_doubles_up_to_cap() {
        let steps: Vec<u32> = escalation_steps(128, 1024).collect();
        assert_eq!(steps, vec![128, 256, 512, 1024]);
    }

    #[test]
    fn escalation_ladder_handles_uneven_cap() {
        let steps: Vec<u32> = escalation_steps(128, 300).collect();
        assert_eq!(steps, vec![128, 256, 300]);
    }

    #[test]
    fn escalation_ladder_with_small_cap_is_single_shot() {
        let steps: Vec<u32> = escalation_steps(128, 64).collect();
        assert_eq!(steps, vec![64]);
    }
}
