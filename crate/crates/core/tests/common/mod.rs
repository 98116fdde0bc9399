//! Brute-force reference computations shared by the integration tests.
//!
//! Nothing here goes through candidate radii or cached prefix sums: window
//! sums are grown one radius at a time from point lookups.

#![allow(dead_code)]

use freqlab::maximal::ExtremalSet;
use freqlab::{Rational, Signal};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

/// `(M, E, F)` by checking every radius in `0..=bound`.
pub fn brute_force(f: &Signal, n: i64, bound: u64) -> (Rational, Vec<u64>, u64) {
    let n = BigInt::from(n);
    let mut sum = f.value_at(&n);
    let mut best = sum.clone();
    let mut radii = vec![0u64];
    for r in 1..=bound {
        let rb = BigInt::from(r);
        sum += f.value_at(&(&n - &rb)) + f.value_at(&(&n + &rb));
        let avg = &sum / Rational::from_integer(BigInt::from(2 * r + 1));
        if avg > best {
            best = avg;
            radii = vec![r];
        } else if avg == best {
            radii.push(r);
        }
    }
    let freq = radii[0];
    (best, radii, freq)
}

/// Bilinear analogue; terms vanish once `n - k` leaves the support of `f`.
pub fn brute_force_bilinear(f: &Signal, g: &Signal, n: i64, bound: u64) -> (Rational, Vec<u64>, u64) {
    let n = BigInt::from(n);
    let mut sum = f.value_at(&n) * g.value_at(&n);
    let mut best = sum.clone();
    let mut radii = vec![0u64];
    for r in 1..=bound {
        let rb = BigInt::from(r);
        sum += f.value_at(&(&n - &rb)) * g.value_at(&(&n + &rb));
        sum += f.value_at(&(&n + &rb)) * g.value_at(&(&n - &rb));
        let avg = &sum / Rational::from_integer(BigInt::from(2 * r + 1));
        if avg > best {
            best = avg;
            radii = vec![r];
        } else if avg == best {
            radii.push(r);
        }
    }
    (best, radii.clone(), radii[0])
}

pub fn radii_u64(set: &ExtremalSet) -> Vec<u64> {
    match set {
        ExtremalSet::All => panic!("expected a finite extremal set"),
        ExtremalSet::Radii(rs) => rs.iter().map(|r| u64::try_from(r).unwrap()).collect(),
    }
}

pub fn u(r: u64) -> BigUint {
    BigUint::from(r)
}

pub fn signal(pairs: &[(i64, i64, i64)]) -> Signal {
    Signal::from_pairs(
        pairs
            .iter()
            .map(|&(i, p, q)| (BigInt::from(i), Rational::new(p.into(), q.into()))),
    )
    .unwrap()
}

/// Sparse signals with up to `max_points` support points in `[-span, span]`
/// and small positive rational values.
pub fn arb_signal(max_points: usize, span: i64) -> impl Strategy<Value = Signal> {
    prop::collection::btree_map(-span..=span, (1i64..=12, 1i64..=6), 0..=max_points).prop_map(
        |points| {
            Signal::from_pairs(
                points
                    .into_iter()
                    .map(|(i, (p, q))| (BigInt::from(i), Rational::new(p.into(), q.into()))),
            )
            .unwrap()
        },
    )
}

pub fn arb_nonzero_signal(max_points: usize, span: i64) -> impl Strategy<Value = Signal> {
    arb_signal(max_points, span).prop_filter("non-zero", |f| !f.is_zero())
}

pub fn naive_window_sum(f: &Signal, lo: i64, hi: i64) -> Rational {
    (lo..=hi).fold(Rational::zero(), |acc, k| acc + f.value_at(&BigInt::from(k)))
}
