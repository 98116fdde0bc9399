//! Seeded random instances for the verification suites.

use freqlab::{IntegerInterval, Rational, Signal};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Between 1 and `max_points` support points in `[-span, span]`, values
/// `p/q` with `1 ≤ p ≤ 12`, `1 ≤ q ≤ 6`.
pub fn sparse_signal(rng: &mut impl Rng, max_points: usize, span: i64) -> Signal {
    let count = rng.gen_range(1..=max_points);
    let mut pairs = std::collections::BTreeMap::new();
    while pairs.len() < count {
        let index = rng.gen_range(-span..=span);
        let value = Rational::new(rng.gen_range(1..=12).into(), rng.gen_range(1..=6).into());
        pairs.insert(index, value);
    }
    Signal::from_pairs(pairs.into_iter().map(|(i, v)| (BigInt::from(i), v)))
        .expect("distinct indices")
}

/// Between 1 and `max_count` intervals with both ends in `[-span, span]`.
pub fn interval_collection(rng: &mut impl Rng, max_count: usize, span: i64) -> Vec<IntegerInterval> {
    let count = rng.gen_range(1..=max_count);
    (0..count)
        .map(|_| {
            let a = rng.gen_range(-span..=span);
            let b = rng.gen_range(-span..=span);
            IntegerInterval::new(a.min(b), a.max(b)).expect("ordered")
        })
        .collect()
}

/// A positive rational `p/q` with `1 ≤ p, q ≤ 40`.
pub fn positive_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(1..=40).into(), rng.gen_range(1..=40).into())
}
