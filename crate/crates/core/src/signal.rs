//! Sparse, finitely supported signals on the integers.
//!
//! A [`Signal`] stores `|f|`: a strictly increasing list of indices with
//! strictly positive rational values. All values are additionally kept as
//! integers over one common denominator, with running partial sums, so that
//! a window sum is two binary searches and one big-integer subtraction.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The integers `lo..=hi`; never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerInterval {
    lo: BigInt,
    hi: BigInt,
}

impl IntegerInterval {
    pub fn new(lo: impl Into<BigInt>, hi: impl Into<BigInt>) -> Result<Self> {
        let (lo, hi) = (lo.into(), hi.into());
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Self { lo, hi })
    }

    /// `[center - radius, center + radius]`.
    pub fn centered(center: &BigInt, radius: &BigUint) -> Self {
        let r = BigInt::from(radius.clone());
        Self {
            lo: center - &r,
            hi: center + &r,
        }
    }

    pub fn lo(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi(&self) -> &BigInt {
        &self.hi
    }

    /// Number of integers in the interval, `hi - lo + 1`.
    pub fn len(&self) -> BigInt {
        &self.hi - &self.lo + 1
    }

    pub fn contains(&self, n: &BigInt) -> bool {
        &self.lo <= n && n <= &self.hi
    }

    pub fn contains_interval(&self, other: &IntegerInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &IntegerInterval) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn translate(&self, shift: &BigInt) -> Self {
        Self {
            lo: &self.lo + shift,
            hi: &self.hi + shift,
        }
    }

    /// Iteration count as a machine word, if it fits.
    pub fn len_u64(&self) -> Option<u64> {
        u64::try_from(self.len()).ok()
    }
}

impl fmt::Display for IntegerInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Clone, Debug)]
pub struct Signal {
    indices: Vec<BigInt>,
    values: Vec<Rational>,
    /// Least common denominator of all values (1 for the zero signal).
    denom: BigInt,
    /// `values[i] * denom`.
    scaled: Vec<BigInt>,
    /// `cumulative[i] = scaled[0] + ... + scaled[i - 1]`; one longer than `scaled`.
    cumulative: Vec<BigInt>,
    l1: Rational,
}

impl PartialEq for Signal {
    fn eq(&self, other: &Self) -> bool {
        self.indices == other.indices && self.values == other.values
    }
}

impl Eq for Signal {}

impl Signal {
    pub fn zero() -> Self {
        Self::from_sorted_unchecked(Vec::new(), Vec::new())
    }

    /// Builds a signal from `(index, value)` pairs in any order.
    ///
    /// Values are replaced by their absolute values and zeros are dropped.
    /// A repeated index is an error even if one of its values is zero.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigInt, Rational)>,
    {
        let mut pairs: Vec<(BigInt, Rational)> = pairs.into_iter().collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateIndex(w[0].0.to_string()));
        }
        let (indices, values) = pairs
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.abs()))
            .unzip();
        Ok(Self::from_sorted_unchecked(indices, values))
    }

    /// Like [`Signal::from_pairs`] but requires strictly increasing indices and
    /// strictly positive values, as produced by generators and the text reader.
    pub fn from_sorted(indices: Vec<BigInt>, values: Vec<Rational>) -> Result<Self> {
        assert_eq!(indices.len(), values.len());
        for w in indices.windows(2) {
            match w[0].cmp(&w[1]) {
                Ordering::Less => {}
                Ordering::Equal => return Err(Error::DuplicateIndex(w[0].to_string())),
                Ordering::Greater => {
                    return Err(Error::InvalidParameter(format!(
                        "indices not increasing: {} then {}",
                        w[0], w[1]
                    )))
                }
            }
        }
        if let Some(v) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::InvalidParameter(format!(
                "stored values must be positive, got {v}"
            )));
        }
        Ok(Self::from_sorted_unchecked(indices, values))
    }

    fn from_sorted_unchecked(indices: Vec<BigInt>, values: Vec<Rational>) -> Self {
        let denom = values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scaled: Vec<BigInt> = values
            .iter()
            .map(|v| v.numer() * (&denom / v.denom()))
            .collect();
        let mut cumulative = Vec::with_capacity(scaled.len() + 1);
        let mut acc = BigInt::zero();
        cumulative.push(acc.clone());
        for s in &scaled {
            acc += s;
            cumulative.push(acc.clone());
        }
        let l1 = Rational::new(acc, denom.clone());
        Self {
            indices,
            values,
            denom,
            scaled,
            cumulative,
            l1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.indices.is_empty()
    }

    /// Number of support points.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[BigInt] {
        &self.indices
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BigInt, &Rational)> + '_ {
        self.indices.iter().zip(self.values.iter())
    }

    pub fn l1_norm(&self) -> &Rational {
        &self.l1
    }

    /// Running sums `Σ_{j ≤ i} value_j`, aligned with the entries.
    pub fn partial_sums(&self) -> Vec<Rational> {
        self.cumulative[1..]
            .iter()
            .map(|c| Rational::new(c.clone(), self.denom.clone()))
            .collect()
    }

    pub fn value_at(&self, n: &BigInt) -> Rational {
        match self.indices.binary_search(n) {
            Ok(i) => self.values[i].clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// `Σ_{j ∈ interval} |f(j)|`.
    pub fn window_sum(&self, interval: &IntegerInterval) -> Rational {
        Rational::new(self.scaled_window_sum(interval), self.denom.clone())
    }

    pub fn support_hull(&self) -> Option<IntegerInterval> {
        match (self.indices.first(), self.indices.last()) {
            (Some(lo), Some(hi)) => Some(IntegerInterval {
                lo: lo.clone(),
                hi: hi.clone(),
            }),
            _ => None,
        }
    }

    /// `k ↦ f(k - shift)`.
    pub fn translate(&self, shift: &BigInt) -> Self {
        let indices = self.indices.iter().map(|i| i + shift).collect();
        Self::from_sorted_unchecked(indices, self.values.clone())
    }

    /// `k ↦ f(-k)`.
    pub fn reflect(&self) -> Self {
        let indices = self.indices.iter().rev().map(|i| -i).collect();
        let values = self.values.iter().rev().cloned().collect();
        Self::from_sorted_unchecked(indices, values)
    }

    /// `k ↦ c·f(k)` for `c > 0`.
    pub fn scale(&self, c: &Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "scale factor must be positive, got {c}"
            )));
        }
        let values = self.values.iter().map(|v| v * c).collect();
        Ok(Self::from_sorted_unchecked(self.indices.clone(), values))
    }

    /// Common denominator of the integer representation.
    pub(crate) fn denominator(&self) -> &BigInt {
        &self.denom
    }

    pub(crate) fn scaled_values(&self) -> &[BigInt] {
        &self.scaled
    }

    /// `l1_norm * denominator`.
    pub(crate) fn scaled_l1(&self) -> &BigInt {
        self.cumulative.last().expect("cumulative is never empty")
    }

    /// Position of the first index `>= n`.
    pub(crate) fn lower_bound(&self, n: &BigInt) -> usize {
        self.indices.partition_point(|i| i < n)
    }

    /// Window sum scaled by [`Signal::denominator`].
    pub(crate) fn scaled_window_sum(&self, interval: &IntegerInterval) -> BigInt {
        let start = self.lower_bound(&interval.lo);
        let end = self.indices.partition_point(|i| i <= &interval.hi);
        if start >= end {
            return BigInt::zero();
        }
        &self.cumulative[end] - &self.cumulative[start]
    }
}
