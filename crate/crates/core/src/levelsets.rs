//! Level-set censuses of the frequency function.
//!
//! With `C = p/q` every membership test is a comparison of integers:
//!
//! - `K_{C,N} = {|n| ≤ N : F f(n) ≤ |n|/C}`, i.e. `p·F ≤ q·|n|`;
//! - `S_C ∩ [-N, N]` where `|n|/(2C) ≤ F f(n) ≤ |n|/C`, i.e. additionally `q·|n| ≤ 2p·F`;
//! - `K_{C,N,θ}` with `F f(n) ≤ θ(n)`, for `θ ≡ 0` or `θ(n) = ⌊|n|/C⌋`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::maximal::analyze;
use crate::precise::{floor_scaled_power, ln_enclosure};
use crate::rational::Rational;
use crate::signal::Signal;

/// Fractional bits used for the logarithmic diagnostic column.
pub const LOG_DENSITY_BITS: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theta {
    /// `θ(n) = 0`.
    Zero,
    /// `θ(n) = ⌊|n|/C⌋`, which gives back `K_{C,N}`.
    Linear,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelParams {
    c: Rational,
    epsilon: Rational,
    theta: Theta,
}

impl LevelParams {
    pub fn new(c: Rational, epsilon: Rational, theta: Theta) -> Result<Self> {
        if c <= Rational::one() {
            return Err(Error::InvalidParameter(format!("C must exceed 1, got {c}")));
        }
        if !epsilon.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        Ok(Self { c, epsilon, theta })
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    pub fn theta(&self) -> Theta {
        self.theta
    }

    pub fn with_theta(&self, theta: Theta) -> Self {
        Self { theta, ..self.clone() }
    }

    /// `F ≤ |n|/C`.
    pub fn in_k(&self, n: &BigInt, freq: &BigUint) -> bool {
        BigInt::from(freq.clone()) * self.c.numer() <= n.abs() * self.c.denom()
    }

    /// `|n|/(2C) ≤ F ≤ |n|/C`.
    pub fn in_s(&self, n: &BigInt, freq: &BigUint) -> bool {
        let pf = BigInt::from(freq.clone()) * self.c.numer();
        let qn = n.abs() * self.c.denom();
        qn <= &pf * 2 && pf <= qn
    }

    /// `F ≤ θ(n)`.
    pub fn in_theta(&self, n: &BigInt, freq: &BigUint) -> bool {
        match self.theta {
            Theta::Zero => freq.is_zero(),
            Theta::Linear => self.in_k(n, freq),
        }
    }
}

/// `F f(n)` for every `n ∈ [-N, N]`, in increasing `n`.
pub fn frequency_scan(f: &Signal, n_max: u64) -> Result<Vec<(BigInt, BigUint)>> {
    let n_max = i64::try_from(n_max).map_err(|_| Error::RangeTooLarge(format!("2·{n_max}+1")))?;
    if n_max.checked_mul(2).is_none() {
        return Err(Error::RangeTooLarge(format!("2·{n_max}+1")));
    }
    Ok((-n_max..=n_max)
        .into_par_iter()
        .map(|n| {
            let n = BigInt::from(n);
            let freq = analyze(f, &n).frequency;
            (n, freq)
        })
        .collect())
}

/// `K_{C,N}`, sorted.
pub fn census_k(f: &Signal, params: &LevelParams, n_max: u64) -> Result<Vec<BigInt>> {
    select(f, n_max, |n, freq| params.in_k(n, freq))
}

/// `S_C ∩ [-N, N]`, sorted.
pub fn census_s(f: &Signal, params: &LevelParams, n_max: u64) -> Result<Vec<BigInt>> {
    select(f, n_max, |n, freq| params.in_s(n, freq))
}

/// `K_{C,N,θ}` for the θ in `params`, sorted.
pub fn census_theta(f: &Signal, params: &LevelParams, n_max: u64) -> Result<Vec<BigInt>> {
    select(f, n_max, |n, freq| params.in_theta(n, freq))
}

fn select(
    f: &Signal,
    n_max: u64,
    keep: impl Fn(&BigInt, &BigUint) -> bool,
) -> Result<Vec<BigInt>> {
    Ok(frequency_scan(f, n_max)?
        .into_iter()
        .filter(|(n, freq)| keep(n, freq))
        .map(|(n, _)| n)
        .collect())
}

/// Which count the density columns are computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityOf {
    /// `K_{C,N}` or `K_{C,N,θ}`, following the θ of the parameters.
    K,
    S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSetCensus {
    pub n_grid: Vec<u64>,
    /// `|K_{C,N,θ}|` per grid point (`|K_{C,N}|` for linear θ).
    pub counts_k: Vec<u64>,
    pub counts_s: Vec<u64>,
    /// Members of the `K` set at the largest grid point.
    pub members_k: Vec<BigInt>,
    /// Members of the `S` set at the largest grid point.
    pub members_s: Vec<BigInt>,
    pub density: Vec<Rational>,
    /// `count · ln^(1+ε) N / N`, truncated to [`LOG_DENSITY_BITS`] fractional bits.
    pub log_density: Vec<String>,
}

pub fn density_curves(f: &Signal, params: &LevelParams, n_grid: &[u64]) -> Result<LevelSetCensus> {
    census_curves(f, params, n_grid, DensityOf::K)
}

/// One scan at the largest `N`; smaller grid points are read off the same members.
pub fn census_curves(
    f: &Signal,
    params: &LevelParams,
    n_grid: &[u64],
    density_of: DensityOf,
) -> Result<LevelSetCensus> {
    if n_grid.is_empty() || n_grid.contains(&0) {
        return Err(Error::InvalidParameter("grid values must be positive".into()));
    }
    if n_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("grid must be strictly increasing".into()));
    }
    let n_top = *n_grid.last().expect("grid is non-empty");
    let scan = frequency_scan(f, n_top)?;
    let members_k: Vec<BigInt> = scan
        .iter()
        .filter(|(n, freq)| params.in_theta(n, freq))
        .map(|(n, _)| n.clone())
        .collect();
    let members_s: Vec<BigInt> = scan
        .iter()
        .filter(|(n, freq)| params.in_s(n, freq))
        .map(|(n, _)| n.clone())
        .collect();

    let count_within = |members: &[BigInt], n_max: u64| -> u64 {
        let bound = BigInt::from(n_max);
        members.iter().filter(|n| n.abs() <= bound).count() as u64
    };
    let counts_k: Vec<u64> = n_grid.iter().map(|&n| count_within(&members_k, n)).collect();
    let counts_s: Vec<u64> = n_grid.iter().map(|&n| count_within(&members_s, n)).collect();
    let chosen = match density_of {
        DensityOf::K => &counts_k,
        DensityOf::S => &counts_s,
    };
    let density = chosen
        .iter()
        .zip(n_grid)
        .map(|(&count, &n)| Rational::new(BigInt::from(count), BigInt::from(n)))
        .collect();
    let log_density = chosen
        .iter()
        .zip(n_grid)
        .map(|(&count, &n)| log_density(count, n, &params.epsilon))
        .collect();

    Ok(LevelSetCensus {
        n_grid: n_grid.to_vec(),
        counts_k,
        counts_s,
        members_k,
        members_s,
        density,
        log_density,
    })
}

/// Decimal rendering of `count · ln^(1+ε) N / N`, from a lower enclosure of
/// `ln N`, truncated to 64 fractional bits and printed with 19 decimals.
pub fn log_density(count: u64, n: u64, epsilon: &Rational) -> String {
    let exponent = Rational::one() + epsilon;
    let (p, q) = match (exponent.numer().to_u32(), exponent.denom().to_u32()) {
        (Some(p), Some(q)) => (p, q),
        _ => return "nan".to_string(),
    };
    let work = LOG_DENSITY_BITS + 32;
    let ln = ln_enclosure(&BigUint::from(n), work);
    let power = floor_scaled_power(&ln.lo, work, p, q, LOG_DENSITY_BITS);
    let fixed = power * BigUint::from(count) / BigUint::from(n);
    format_fixed(&fixed, LOG_DENSITY_BITS, 19)
}

fn format_fixed(value: &BigUint, bits: u32, digits: u32) -> String {
    let whole = value >> bits;
    let frac = value - (&whole << bits);
    let scaled = (frac * BigUint::from(10u8).pow(digits)) >> bits;
    format!("{whole}.{scaled:0>width$}", width = digits as usize)
}
