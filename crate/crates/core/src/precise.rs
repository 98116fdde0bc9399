//! Certified enclosures for the few irrational quantities the generators need.
//!
//! Real numbers are represented as dyadic intervals `[lo, hi] · 2^-bits` that
//! are guaranteed to contain the true value. Floors and ceilings of
//! expressions built from them are then computed exactly at both ends; when
//! the two ends agree the result is certified, otherwise the caller retries
//! with more bits.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// `lo · 2^-bits ≤ x ≤ hi · 2^-bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    pub lo: BigUint,
    pub hi: BigUint,
    pub bits: u32,
}

impl DyadicInterval {
    pub fn lo_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.lo.clone()), BigInt::one() << self.bits)
    }

    pub fn hi_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.hi.clone()), BigInt::one() << self.bits)
    }

    /// Width in units of `2^-bits`.
    pub fn width(&self) -> BigUint {
        &self.hi - &self.lo
    }
}

/// Enclosure of `atanh(a/b)` for `0 ≤ a/b ≤ 1/3`, from the odd power series.
///
/// Each truncating step loses at most one unit, so after `K` terms the
/// computed sum undershoots the partial sum by at most `2K` units; the
/// remaining tail is kept below one unit by the choice of `K`.
fn atanh_small(a: &BigUint, b: &BigUint, bits: u32) -> DyadicInterval {
    debug_assert!(a * 3u8 <= *b);
    if a.is_zero() {
        return DyadicInterval { lo: BigUint::zero(), hi: BigUint::zero(), bits };
    }
    // Tail after K terms is at most (1/3)^(2K+1) · 9/8, below 2^-bits once 3^(2K+1) ≥ 2^(bits+1).
    let target = BigUint::one() << (bits + 1);
    let mut terms = 0u32;
    let mut pow3 = BigUint::from(3u8);
    while pow3 < target {
        pow3 *= 9u8;
        terms += 1;
    }
    terms = terms.max(1);

    let a2 = a * a;
    let b2 = b * b;
    let mut t = (a << bits) / b;
    let mut sum = BigUint::zero();
    for i in 0..terms {
        sum += &t / (2 * i + 1);
        t = t * &a2 / &b2;
    }
    let err = BigUint::from(2 * terms + 1);
    DyadicInterval { hi: &sum + err, lo: sum, bits }
}

/// Enclosure of `ln m` for `m ≥ 1`, with `bits` fractional bits.
///
/// Writes `m = 2^k · y` with `1 ≤ y < 2`, then
/// `ln m = k·2·atanh(1/3) + 2·atanh((m - 2^k)/(m + 2^k))`.
pub fn ln_enclosure(m: &BigUint, bits: u32) -> DyadicInterval {
    assert!(!m.is_zero(), "ln of zero");
    let k = m.bits() - 1;
    let pow = BigUint::one() << k;
    let ln2 = atanh_small(&BigUint::one(), &BigUint::from(3u8), bits);
    let rest = atanh_small(&(m - &pow), &(m + &pow), bits);
    let scale = BigUint::from(k) * 2u8;
    DyadicInterval {
        lo: &ln2.lo * &scale + &rest.lo * 2u8,
        hi: &ln2.hi * &scale + &rest.hi * 2u8,
        bits,
    }
}

/// `⌊x^(1/k)⌋`.
pub fn floor_root(x: &BigUint, k: u32) -> BigUint {
    x.nth_root(k)
}

/// `⌈x^(1/k)⌉`.
pub fn ceil_root(x: &BigUint, k: u32) -> BigUint {
    let r = x.nth_root(k);
    if r.pow(k) == *x {
        r
    } else {
        r + 1u8
    }
}

pub fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    a.div_ceil(b)
}

/// Largest `V` with `V ≤ 2^out_bits / (m · L^(p/q))` where `L = x · 2^-bits`, `x > 0`.
///
/// `⌊y^(1/q)⌋ = ⌊⌊y⌋^(1/q)⌋` and `⌊z/m⌋ = ⌊⌊z⌋/m⌋` keep this exact.
pub fn floor_scaled_reciprocal(m: &BigUint, x: &BigUint, bits: u32, p: u32, q: u32, out_bits: u32) -> BigUint {
    let numer = BigUint::one() << (out_bits as u64 * q as u64 + bits as u64 * p as u64);
    let y = numer / x.pow(p);
    floor_root(&y, q) / m
}

/// Smallest `I` with `I ≥ m · L^(p/q)` where `L = x · 2^-bits`.
pub fn ceil_scaled_power(m: &BigUint, x: &BigUint, bits: u32, p: u32, q: u32) -> BigUint {
    let z = m.pow(q) * x.pow(p);
    let den = BigUint::one() << (bits as u64 * p as u64);
    ceil_root(&ceil_div(&z, &den), q)
}

/// Largest `V` with `V ≤ 2^out_bits · L^(p/q)` where `L = x · 2^-bits`.
pub fn floor_scaled_power(x: &BigUint, bits: u32, p: u32, q: u32, out_bits: u32) -> BigUint {
    let z = x.pow(p) << (out_bits as u64 * q as u64);
    let den = BigUint::one() << (bits as u64 * p as u64);
    floor_root(&(z / den), q)
}
