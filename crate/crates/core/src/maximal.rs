//! Centered averages, the discrete maximal function and the frequency function.
//!
//! For a fixed center `n` the window sum `Σ_{|k| ≤ r} |f(n+k)|` only changes at
//! radii `r = |s - n|` with `s` in the support. Between two such radii the
//! average is a constant divided by `2r + 1`, so it strictly decreases; the
//! maximum, and every radius attaining it, is found among `{0}` and the
//! support distances. The search walks those radii outwards and stops once
//! `‖f‖₁ / (2r + 1)` falls strictly below the best average seen, since no
//! later radius can reach or tie it.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::signal::{IntegerInterval, Signal};

/// The set `E` of radii attaining the supremum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremalSet {
    /// Every non-negative radius; only for an identically vanishing average.
    All,
    /// Sorted, non-empty, finite.
    Radii(Vec<BigUint>),
}

impl ExtremalSet {
    pub fn contains(&self, r: &BigUint) -> bool {
        match self {
            ExtremalSet::All => true,
            ExtremalSet::Radii(radii) => radii.binary_search(r).is_ok(),
        }
    }
}

/// `M f(n)`, `E_{f,n}` and `F f(n)` at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyResult {
    pub maximal_value: Rational,
    pub extremal_radii: ExtremalSet,
    pub frequency: BigUint,
    pub zero_signal: bool,
}

/// `B(f,g)(n)`, `E_{f,g,n}` and `F(f,g)(n)` at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFrequencyResult {
    pub maximal_value: Rational,
    pub extremal_radii: ExtremalSet,
    pub frequency: BigUint,
    /// `B(f,g)(n) = 0`, so every radius attains the supremum.
    pub degenerate: bool,
}

/// `A_r f(n) = (2r+1)⁻¹ Σ_{k=-r}^{r} |f(n+k)|`.
pub fn average(f: &Signal, n: &BigInt, r: &BigUint) -> Rational {
    let window = IntegerInterval::centered(n, r);
    f.window_sum(&window) / Rational::from_integer(odd_width(r))
}

/// A radius `r₀` with `E_{f,n} ⊆ [0, r₀]`: the distance from `n` to the far
/// end of the support hull. At `r₀` the window holds all of `‖f‖₁`, and
/// `(2r+1)·A_r f(n) ≤ ‖f‖₁` rules out every larger radius.
pub fn radius_bound(f: &Signal, n: &BigInt) -> Result<BigUint> {
    let hull = f
        .support_hull()
        .ok_or(Error::ZeroSignal("radius_bound"))?;
    let left = (n - hull.lo()).abs();
    let right = (hull.hi() - n).abs();
    Ok(left.max(right).magnitude().clone())
}

/// `{0} ∪ {|s - n| : s ∈ supp f}`, sorted and deduplicated.
pub fn candidate_radii(f: &Signal, n: &BigInt) -> Result<Vec<BigUint>> {
    if f.is_zero() {
        return Err(Error::ZeroSignal("candidate_radii"));
    }
    let mut radii: Vec<BigUint> = Shells::new(f, n).map(|(r, _)| r.magnitude().clone()).collect();
    if radii.first().is_none_or(|r| !r.is_zero()) {
        radii.insert(0, BigUint::zero());
    }
    Ok(radii)
}

pub fn analyze(f: &Signal, n: &BigInt) -> FrequencyResult {
    if f.is_zero() {
        return FrequencyResult {
            maximal_value: Rational::zero(),
            extremal_radii: ExtremalSet::All,
            frequency: BigUint::zero(),
            zero_signal: true,
        };
    }
    let total = f.scaled_l1();
    // Best average so far is best_sum / best_width.
    let mut best_sum = BigInt::zero();
    let mut best_width = BigInt::one();
    let mut best_radii: Vec<BigInt> = vec![BigInt::zero()];
    let mut sum = BigInt::zero();

    for (r, shell) in Shells::new(f, n) {
        let width = odd_width_signed(&r);
        if !r.is_zero() && total * &best_width < &best_sum * &width {
            break;
        }
        sum += shell;
        if r.is_zero() {
            best_sum = sum.clone();
            continue;
        }
        match (&sum * &best_width).cmp(&(&best_sum * &width)) {
            Ordering::Greater => {
                best_sum = sum.clone();
                best_width = width;
                best_radii.clear();
                best_radii.push(r);
            }
            Ordering::Equal => best_radii.push(r),
            Ordering::Less => {}
        }
    }

    let radii: Vec<BigUint> = best_radii.into_iter().map(|r| r.magnitude().clone()).collect();
    FrequencyResult {
        maximal_value: Rational::new(best_sum, best_width * f.denominator()),
        frequency: radii[0].clone(),
        extremal_radii: ExtremalSet::Radii(radii),
        zero_signal: false,
    }
}

/// One row of a frequency profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRow {
    pub n: BigInt,
    pub maximal_value: Rational,
    pub frequency: BigUint,
}

/// [`analyze`] at every point of `range`, in increasing `n`.
///
/// Runs on the current rayon pool; the output order does not depend on it.
pub fn frequency_profile(f: &Signal, range: &IntegerInterval) -> Result<Vec<ProfileRow>> {
    let len = range
        .len_u64()
        .and_then(|l| usize::try_from(l).ok())
        .ok_or_else(|| Error::RangeTooLarge(range.len().to_string()))?;
    Ok((0..len)
        .into_par_iter()
        .map(|i| {
            let n = range.lo() + BigInt::from(i);
            let res = analyze(f, &n);
            ProfileRow {
                n,
                maximal_value: res.maximal_value,
                frequency: res.frequency,
            }
        })
        .collect())
}

/// Least `m ≥ 0` with `Σ_{|j| ≤ m} |f(j)| ≥ ‖f‖₁ / 2`.
pub fn half_mass_radius(f: &Signal) -> Result<BigUint> {
    if f.is_zero() {
        return Err(Error::ZeroSignal("half_mass_radius"));
    }
    let total = f.scaled_l1();
    let mut sum = BigInt::zero();
    for (r, shell) in Shells::new(f, &BigInt::zero()) {
        sum += shell;
        if BigInt::from(2u8) * &sum >= *total {
            return Ok(r.magnitude().clone());
        }
    }
    unreachable!("the full support carries all of the mass")
}

/// `B_r(f,g)(n) = (2r+1)⁻¹ Σ_{k=-r}^{r} |f(n-k) g(n+k)|`.
pub fn bilinear_average(f: &Signal, g: &Signal, n: &BigInt, r: &BigUint) -> Rational {
    let window = IntegerInterval::centered(n, r);
    let start = f.lower_bound(window.lo());
    let twice_n = n * 2;
    let mut sum = Rational::zero();
    for (s, v) in f.entries().skip(start) {
        if s > window.hi() {
            break;
        }
        let partner = g.value_at(&(&twice_n - s));
        if !partner.is_zero() {
            sum += v * partner;
        }
    }
    sum / Rational::from_integer(odd_width(r))
}

/// Maximizes `B_r(f,g)(n)` over `{0} ∪ {|k| : n-k ∈ supp f, n+k ∈ supp g}`,
/// the only radii at which the sum gains a term.
pub fn bilinear_analyze(f: &Signal, g: &Signal, n: &BigInt) -> BilinearFrequencyResult {
    let twice_n = n * 2;
    let gi = g.indices();
    let gv = g.scaled_values();
    // (|k|, f(n-k)·g(n+k)) in units of 1/(denom_f·denom_g)
    let mut terms: Vec<(BigInt, BigInt)> = Vec::new();
    for (s, fv) in f.indices().iter().zip(f.scaled_values()) {
        let t = &twice_n - s;
        if let Ok(j) = gi.binary_search(&t) {
            terms.push(((n - s).abs(), fv * &gv[j]));
        }
    }
    terms.sort_by(|a, b| a.0.cmp(&b.0));

    let mut best_sum = BigInt::zero();
    let mut best_width = BigInt::one();
    let mut best_radii: Vec<BigInt> = vec![BigInt::zero()];
    let mut sum = BigInt::zero();
    let mut i = 0;
    while i < terms.len() {
        let r = terms[i].0.clone();
        while i < terms.len() && terms[i].0 == r {
            sum += &terms[i].1;
            i += 1;
        }
        if r.is_zero() {
            best_sum = sum.clone();
            continue;
        }
        let width = odd_width_signed(&r);
        match (&sum * &best_width).cmp(&(&best_sum * &width)) {
            Ordering::Greater => {
                best_sum = sum.clone();
                best_width = width;
                best_radii.clear();
                best_radii.push(r);
            }
            Ordering::Equal => best_radii.push(r),
            Ordering::Less => {}
        }
    }

    if best_sum.is_zero() {
        return BilinearFrequencyResult {
            maximal_value: Rational::zero(),
            extremal_radii: ExtremalSet::All,
            frequency: BigUint::zero(),
            degenerate: true,
        };
    }
    let radii: Vec<BigUint> = best_radii.into_iter().map(|r| r.magnitude().clone()).collect();
    BilinearFrequencyResult {
        maximal_value: Rational::new(best_sum, best_width * f.denominator() * g.denominator()),
        frequency: radii[0].clone(),
        extremal_radii: ExtremalSet::Radii(radii),
        degenerate: false,
    }
}

fn odd_width(r: &BigUint) -> BigInt {
    BigInt::from(r.clone()) * 2 + 1
}

fn odd_width_signed(r: &BigInt) -> BigInt {
    r * 2 + 1
}

/// Walks the support outwards from a center, yielding each distinct distance
/// `r = |s - center|` (ascending) with the scaled mass of the points at
/// exactly that distance. Distance zero is yielded first even when the center
/// is not in the support, with zero mass.
struct Shells<'a> {
    indices: &'a [BigInt],
    scaled: &'a [BigInt],
    center: BigInt,
    /// Next unvisited position to the left is `left - 1`.
    left: usize,
    right: usize,
    started: bool,
}

impl<'a> Shells<'a> {
    fn new(f: &'a Signal, center: &BigInt) -> Self {
        let pos = f.lower_bound(center);
        Self {
            indices: f.indices(),
            scaled: f.scaled_values(),
            center: center.clone(),
            left: pos,
            right: pos,
            started: false,
        }
    }
}

impl Iterator for Shells<'_> {
    type Item = (BigInt, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            let mut mass = BigInt::zero();
            if self.right < self.indices.len() && self.indices[self.right] == self.center {
                mass = self.scaled[self.right].clone();
                self.right += 1;
            }
            return Some((BigInt::zero(), mass));
        }
        let dl = (self.left > 0).then(|| &self.center - &self.indices[self.left - 1]);
        let dr = (self.right < self.indices.len()).then(|| &self.indices[self.right] - &self.center);
        let r = match (&dl, &dr) {
            (None, None) => return None,
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (Some(a), Some(b)) => a.min(b).clone(),
        };
        let mut mass = BigInt::zero();
        if dl.as_ref() == Some(&r) {
            self.left -= 1;
            mass += &self.scaled[self.left];
        }
        if dr.as_ref() == Some(&r) {
            mass += &self.scaled[self.right];
            self.right += 1;
        }
        Some((r, mass))
    }
}
