//! The majorization partial order on finite sequences of positive integers.
//!
//! `(a_1, ..., a_n)` majorizes `(b_1, ..., b_k)` when three conditions hold:
//! `n <= k`, every prefix sum `a_1 + ... + a_i` dominates the matching prefix
//! of `b` for `i <= n`, and the total sum of `a` dominates the total sum of
//! `b`. Sequences are kept in canonical non-increasing form; the relation is
//! reflexive, and total sums need not be equal.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

/// A nonempty, non-increasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalSeq {
    parts: Vec<u64>,
}

/// Outcome of comparing two canonical sequences under majorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceResult {
    Equal,
    FirstMajorizesStrictly,
    SecondMajorizesStrictly,
    Incomparable,
}

/// Rejected raw input for [`canonicalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqError {
    EmptySequence,
    NonPositiveEntry,
}

impl core::fmt::Display for SeqError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SeqError::EmptySequence => write!(f, "sequence must be nonempty"),
            SeqError::NonPositiveEntry => write!(f, "sequence entries must be >= 1"),
        }
    }
}

impl core::error::Error for SeqError {}

impl CanonicalSeq {
    /// Parts in non-increasing order.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Largest part; well defined because sequences are nonempty.
    pub fn max_part(&self) -> u64 {
        self.parts[0]
    }

    /// Prefix sums `a_1, a_1 + a_2, ...`.
    pub fn prefix_sums(&self) -> Vec<u64> {
        let mut acc = 0u64;
        self.parts
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }
}

impl core::fmt::Debug for CanonicalSeq {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl core::fmt::Display for CanonicalSeq {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        core::fmt::Debug::fmt(self, f)
    }
}

/// Sorts raw entries into canonical non-increasing form.
pub fn canonicalize(raw: &[u64]) -> Result<CanonicalSeq, SeqError> {
    if raw.is_empty() {
        return Err(SeqError::EmptySequence);
    }
    if raw.iter().any(|&p| p == 0) {
        return Err(SeqError::NonPositiveEntry);
    }
    let mut parts = raw.to_vec();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Ok(CanonicalSeq { parts })
}

/// The constant sequence `value` repeated `count` times.
pub fn rectangle(value: u64, count: usize) -> CanonicalSeq {
    assert!(value >= 1, "rectangle value must be >= 1");
    assert!(count >= 1, "rectangle count must be >= 1");
    CanonicalSeq {
        parts: alloc::vec![value; count],
    }
}

/// True when `a` majorizes `b` (non-strict; every sequence majorizes itself).
pub fn majorizes(a: &CanonicalSeq, b: &CanonicalSeq) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut pa = 0u64;
    let mut pb = 0u64;
    for i in 0..a.len() {
        pa += a.parts[i];
        pb += b.parts[i];
        if pa < pb {
            return false;
        }
    }
    a.sum() >= b.sum()
}

/// Classifies an ordered pair under the majorization relation.
pub fn compare(a: &CanonicalSeq, b: &CanonicalSeq) -> DominanceResult {
    if a == b {
        DominanceResult::Equal
    } else if majorizes(a, b) {
        DominanceResult::FirstMajorizesStrictly
    } else if majorizes(b, a) {
        DominanceResult::SecondMajorizesStrictly
    } else {
        DominanceResult::Incomparable
    }
}

/// All canonical sequences with sum at most `max_sum` (and, when given,
/// length at most `max_len`), each exactly once.
///
/// Order is fixed: ascending sum, then ascending length, then the partitions
/// of that shape in lexicographically descending part order. The first items
/// are `(1), (2), (1,1), (3), (2,1), (1,1,1), ...`.
pub fn enumerate_sequences(max_sum: u64, max_len: Option<usize>) -> SeqStream {
    assert!(max_sum >= 1, "max_sum must be >= 1");
    SeqStream {
        max_sum,
        max_len,
        sum: 0,
        len: 0,
        pending: VecDeque::new(),
    }
}

/// Restartable cursor over [`enumerate_sequences`] output.
pub struct SeqStream {
    max_sum: u64,
    max_len: Option<usize>,
    sum: u64,
    len: usize,
    pending: VecDeque<CanonicalSeq>,
}

impl Iterator for SeqStream {
    type Item = CanonicalSeq;

    fn next(&mut self) -> Option<CanonicalSeq> {
        loop {
            if let Some(seq) = self.pending.pop_front() {
                return Some(seq);
            }
            // Advance to the next (sum, length) bucket.
            let len_cap = |sum: u64| -> usize {
                let by_sum = sum as usize;
                match self.max_len {
                    Some(l) => by_sum.min(l),
                    None => by_sum,
                }
            };
            if self.sum == 0 || self.len >= len_cap(self.sum) {
                if self.sum >= self.max_sum {
                    return None;
                }
                self.sum += 1;
                self.len = 1;
            } else {
                self.len += 1;
            }
            let mut bucket = Vec::new();
            fill_partitions(self.sum, self.len, self.sum, &mut Vec::new(), &mut bucket);
            self.pending = bucket.into();
        }
    }
}

/// Appends all partitions of `sum` into exactly `len` parts, each at most
/// `max_first`, in lexicographically descending order.
fn fill_partitions(
    sum: u64,
    len: usize,
    max_first: u64,
    prefix: &mut Vec<u64>,
    out: &mut Vec<CanonicalSeq>,
) {
    if len == 1 {
        if sum >= 1 && sum <= max_first {
            let mut parts = prefix.clone();
            parts.push(sum);
            out.push(CanonicalSeq { parts });
        }
        return;
    }
    // First part f needs f >= ceil(sum/len) so the rest fits under f, and
    // f <= sum - (len-1) so the rest stays positive.
    let lo = sum.div_ceil(len as u64);
    let hi = (sum - (len as u64 - 1)).min(max_first);
    let mut f = hi;
    while f >= lo {
        prefix.push(f);
        fill_partitions(sum - f, len - 1, f, prefix, out);
        prefix.pop();
        if f == 0 {
            break;
        }
        f -= 1;
    }
}

/// All ordered pairs `(a, b)` with both sums at most `max_sum` and
/// `majorizes(a, b)`, including the reflexive pairs, in enumeration order
/// of `a` then of `b`.
pub fn comparable_pairs(max_sum: u64) -> PairStream {
    let all: Vec<CanonicalSeq> = enumerate_sequences(max_sum, None).collect();
    PairStream {
        all,
        i: 0,
        j: 0,
    }
}

/// Restartable cursor over [`comparable_pairs`] output.
pub struct PairStream {
    all: Vec<CanonicalSeq>,
    i: usize,
    j: usize,
}

impl Iterator for PairStream {
    type Item = (CanonicalSeq, CanonicalSeq);

    fn next(&mut self) -> Option<(CanonicalSeq, CanonicalSeq)> {
        while self.i < self.all.len() {
            while self.j < self.all.len() {
                let a = &self.all[self.i];
                let b = &self.all[self.j];
                self.j += 1;
                if majorizes(a, b) {
                    return Some((a.clone(), b.clone()));
                }
            }
            self.i += 1;
            self.j = 0;
        }
        None
    }
}
