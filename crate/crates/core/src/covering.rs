//! Greedy selection of a disjoint subcollection of integer intervals.
//!
//! The longest interval is taken first, then repeatedly the longest one
//! disjoint from everything taken so far. Every input then meets a chosen
//! interval at least as long as itself, so tripling the chosen intervals
//! covers the union of the inputs and the chosen lengths sum to at least a
//! third of that union.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::signal::IntegerInterval;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringSelection {
    /// Positions in the input collection, in the order they were selected.
    pub chosen: Vec<usize>,
    /// Number of integers covered by the union of all inputs.
    pub union_size: BigInt,
    /// Sum of the lengths of the chosen intervals.
    pub chosen_length_sum: BigInt,
}

impl CoveringSelection {
    /// `3 · chosen_length_sum ≥ union_size`.
    pub fn meets_third_bound(&self) -> bool {
        &self.chosen_length_sum * 3 >= self.union_size
    }
}

/// Ties between equally long intervals go to the smaller `lo`, then to the
/// earlier input position.
pub fn greedy_disjoint(intervals: &[IntegerInterval]) -> Result<CoveringSelection> {
    if intervals.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let lengths: Vec<BigInt> = intervals.iter().map(IntegerInterval::len).collect();
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by(|&a, &b| {
        (Reverse(&lengths[a]), intervals[a].lo(), a).cmp(&(Reverse(&lengths[b]), intervals[b].lo(), b))
    });

    // Chosen intervals keyed by lo; they are disjoint so ordering by lo also orders hi.
    let mut taken: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    let mut chosen = Vec::new();
    let mut chosen_length_sum = BigInt::zero();
    for i in order {
        let candidate = &intervals[i];
        let clash_below = taken
            .range(..=candidate.lo().clone())
            .next_back()
            .is_some_and(|(_, hi)| hi >= candidate.lo());
        let clash_above = taken
            .range(candidate.lo().clone()..)
            .next()
            .is_some_and(|(lo, _)| lo <= candidate.hi());
        if clash_below || clash_above {
            continue;
        }
        taken.insert(candidate.lo().clone(), candidate.hi().clone());
        chosen_length_sum += &lengths[i];
        chosen.push(i);
    }

    Ok(CoveringSelection {
        chosen,
        union_size: union_size(intervals),
        chosen_length_sum,
    })
}

/// `[lo - len, hi + len]`: the interval with a translate attached on each side.
pub fn triple(interval: &IntegerInterval) -> IntegerInterval {
    let len = interval.len();
    IntegerInterval::new(interval.lo() - &len, interval.hi() + &len)
        .expect("tripling preserves lo <= hi")
}

/// Sorted, pairwise disjoint and non-adjacent intervals with the same union.
pub fn merge(intervals: &[IntegerInterval]) -> Vec<IntegerInterval> {
    let mut sorted: Vec<&IntegerInterval> = intervals.iter().collect();
    sorted.sort_by(|a, b| a.lo().cmp(b.lo()));
    let mut merged: Vec<(BigInt, BigInt)> = Vec::new();
    for iv in sorted {
        match merged.last_mut() {
            Some((_, hi)) if *iv.lo() <= &*hi + 1 => {
                if iv.hi() > hi {
                    *hi = iv.hi().clone();
                }
            }
            _ => merged.push((iv.lo().clone(), iv.hi().clone())),
        }
    }
    merged
        .into_iter()
        .map(|(lo, hi)| IntegerInterval::new(lo, hi).expect("merged bounds are ordered"))
        .collect()
}

/// `|∪ intervals|`, computed by merging rather than enumerating points.
pub fn union_size(intervals: &[IntegerInterval]) -> BigInt {
    merge(intervals).iter().map(IntegerInterval::len).sum()
}

/// Whether `∪ cover ⊇ ∪ inner`.
pub fn covers(cover: &[IntegerInterval], inner: &[IntegerInterval]) -> bool {
    let blocks = merge(cover);
    inner.iter().all(|iv| {
        let pos = blocks.partition_point(|b| b.lo() <= iv.lo());
        pos > 0 && blocks[pos - 1].contains_interval(iv)
    })
}

pub fn pairwise_disjoint(intervals: &[&IntegerInterval]) -> bool {
    let mut sorted: Vec<&IntegerInterval> = intervals.to_vec();
    sorted.sort_by(|a, b| a.lo().cmp(b.lo()));
    sorted.windows(2).all(|w| w[0].hi() < w[1].lo())
}
