//! Generators for the counterexample signal families.
//!
//! Irrational sample values are materialized as dyadic floors
//! `⌊2^B · v⌋ / 2^B`. The floor is computed exactly from a certified
//! enclosure of `v`; if the enclosure straddles an integer boundary the
//! working precision is doubled until it does not.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::precise::{ceil_scaled_power, floor_scaled_reciprocal, ln_enclosure};
use crate::rational::{dyadic, format_fraction, Rational};
use crate::signal::Signal;

pub const DEFAULT_PRECISION_BITS: u32 = 128;

/// Working precision at which certification gives up.
pub const MAX_WORKING_BITS: u32 = 1 << 14;

/// Smallest admissible `C` for the spike-pair and composite-jump families.
pub const MIN_SPIKE_C: u64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SquaresPower,
    SquaresLog,
    StretchedLog,
    SpikePair,
    CompositeJump,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::SquaresPower,
        Family::SquaresLog,
        Family::StretchedLog,
        Family::SpikePair,
        Family::CompositeJump,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SquaresPower => "squares_power",
            Family::SquaresLog => "squares_log",
            Family::StretchedLog => "stretched_log",
            Family::SpikePair => "spike_pair",
            Family::CompositeJump => "composite_jump",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.replace('-', "_"))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// Parameters for one generated signal.
///
/// `cutoff` is the largest `m` for the three power/log families and the
/// largest `C` for `composite_jump`; `c` is the spike-pair `C`, or the
/// smallest `C` for `composite_jump`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub epsilon: Rational,
    pub cutoff: u64,
    pub c: u64,
    pub precision_bits: u32,
}

impl GeneratorSpec {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            epsilon: Rational::one(),
            cutoff: 10,
            c: MIN_SPIKE_C,
            precision_bits: DEFAULT_PRECISION_BITS,
        }
    }

    pub fn generate(&self) -> Result<Generated> {
        match self.family {
            Family::SquaresPower => squares_power(&self.epsilon, self.cutoff, self.precision_bits),
            Family::SquaresLog => squares_log(&self.epsilon, self.cutoff, self.precision_bits),
            Family::StretchedLog => stretched_log(&self.epsilon, self.cutoff, self.precision_bits),
            Family::SpikePair => spike_pair(self.c).map(Generated::exact),
            Family::CompositeJump => composite_jump(self.c, self.cutoff).map(Generated::exact),
        }
    }

    /// `key=value` pairs describing the parameters that affect the output.
    pub fn metadata(&self) -> Vec<(String, String)> {
        let mut out = vec![("family".to_string(), self.family.name().to_string())];
        match self.family {
            Family::SquaresPower | Family::SquaresLog | Family::StretchedLog => {
                out.push(("epsilon".into(), format_fraction(&self.epsilon)));
                out.push(("cutoff".into(), self.cutoff.to_string()));
                out.push(("precision_bits".into(), self.precision_bits.to_string()));
            }
            Family::SpikePair => out.push(("C".into(), self.c.to_string())),
            Family::CompositeJump => {
                out.push(("C_min".into(), self.c.to_string()));
                out.push(("C_max".into(), self.cutoff.to_string()));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub signal: Signal,
    /// Some stored value is a dyadic floor rather than the exact sample.
    pub approximate: bool,
}

impl Generated {
    fn exact(signal: Signal) -> Self {
        Self { signal, approximate: false }
    }
}

/// `1 + ε` as a reduced `p/q` with machine-word parts.
fn exponent_parts(q: &Rational, what: &str) -> Result<(u32, u32)> {
    let p = q.numer().to_u32();
    let d = q.denom().to_u32();
    match (p, d) {
        (Some(p), Some(d)) => Ok((p, d)),
        _ => Err(Error::InvalidParameter(format!("{what} exponent {q} too large"))),
    }
}

fn check_epsilon(epsilon: &Rational) -> Result<()> {
    if epsilon.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")))
    }
}

fn nonzero_floor(v: BigUint, m: u64, bits: u32) -> Result<Rational> {
    if v.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "sample at m={m} rounds to zero at {bits} bits"
        )));
    }
    Ok(dyadic(BigInt::from(v), bits))
}

/// `f(m²) = m^-(1+ε)` for `1 ≤ m ≤ cutoff`.
pub fn squares_power(epsilon: &Rational, cutoff: u64, precision_bits: u32) -> Result<Generated> {
    check_epsilon(epsilon)?;
    if cutoff == 0 {
        return Err(Error::EmptySupport("squares_power needs cutoff >= 1".into()));
    }
    let exponent = Rational::one() + epsilon;
    let (p, q) = exponent_parts(&exponent, "squares_power")?;
    let exact = q == 1;
    let values: Vec<Rational> = (1..=cutoff)
        .into_par_iter()
        .map(|m| {
            let mb = BigUint::from(m);
            if exact {
                Ok(Rational::new(BigInt::one(), BigInt::from(mb.pow(p))))
            } else {
                // ⌊2^B m^(-p/q)⌋ = ⌊(2^(Bq) / m^p)^(1/q)⌋
                let y = (BigUint::one() << (precision_bits as u64 * q as u64)) / mb.pow(p);
                nonzero_floor(crate::precise::floor_root(&y, q), m, precision_bits)
            }
        })
        .collect::<Result<_>>()?;
    let indices = (1..=cutoff).map(|m| BigInt::from(m) * BigInt::from(m)).collect();
    Ok(Generated {
        signal: Signal::from_sorted(indices, values)?,
        approximate: !exact,
    })
}

/// Certified `⌊2^B / (m · ln^(p/q) m)⌋`, plus optionally `⌈m · ln^(a/b) m⌉`.
fn log_sample(
    m: u64,
    value_exp: (u32, u32),
    index_exp: Option<(u32, u32)>,
    precision_bits: u32,
) -> Result<(BigUint, Option<BigUint>)> {
    let mb = BigUint::from(m);
    let mut bits = precision_bits + 32;
    loop {
        let ln = ln_enclosure(&mb, bits);
        let (p, q) = value_exp;
        let v_hi = floor_scaled_reciprocal(&mb, &ln.lo, bits, p, q, precision_bits);
        let v_lo = floor_scaled_reciprocal(&mb, &ln.hi, bits, p, q, precision_bits);
        let index = index_exp.map(|(a, b)| {
            (
                ceil_scaled_power(&mb, &ln.lo, bits, a, b),
                ceil_scaled_power(&mb, &ln.hi, bits, a, b),
            )
        });
        let value_ok = v_lo == v_hi;
        let index_ok = index.as_ref().is_none_or(|(lo, hi)| lo == hi);
        if value_ok && index_ok {
            return Ok((v_lo, index.map(|(lo, _)| lo)));
        }
        if bits >= MAX_WORKING_BITS {
            let what = if value_ok {
                format!("support index at m={m}")
            } else {
                format!("sample value at m={m}")
            };
            return Err(Error::Uncertified { what, max_bits: MAX_WORKING_BITS });
        }
        bits = (bits * 2).min(MAX_WORKING_BITS);
    }
}

fn check_log_cutoff(family: &str, cutoff: u64) -> Result<()> {
    if cutoff < 10 {
        return Err(Error::EmptySupport(format!(
            "{family} starts at m = 10, cutoff {cutoff} leaves no support"
        )));
    }
    Ok(())
}

/// `f(m²) = 1 / (m · ln^(1+ε/2) m)` for `10 ≤ m ≤ cutoff`.
pub fn squares_log(epsilon: &Rational, cutoff: u64, precision_bits: u32) -> Result<Generated> {
    check_epsilon(epsilon)?;
    check_log_cutoff("squares_log", cutoff)?;
    let value_exp = exponent_parts(&(Rational::one() + epsilon / Rational::from_integer(2.into())), "squares_log")?;
    let values: Vec<Rational> = (10..=cutoff)
        .into_par_iter()
        .map(|m| {
            let (v, _) = log_sample(m, value_exp, None, precision_bits)?;
            nonzero_floor(v, m, precision_bits)
        })
        .collect::<Result<_>>()?;
    let indices = (10..=cutoff).map(|m| BigInt::from(m) * BigInt::from(m)).collect();
    Ok(Generated {
        signal: Signal::from_sorted(indices, values)?,
        approximate: true,
    })
}

/// `f(⌈m · ln^(1+ε) m⌉) = 1 / (m · ln^(1+ε/2) m)` for `10 ≤ m ≤ cutoff`.
pub fn stretched_log(epsilon: &Rational, cutoff: u64, precision_bits: u32) -> Result<Generated> {
    check_epsilon(epsilon)?;
    check_log_cutoff("stretched_log", cutoff)?;
    let value_exp = exponent_parts(&(Rational::one() + epsilon / Rational::from_integer(2.into())), "stretched_log")?;
    let index_exp = exponent_parts(&(Rational::one() + epsilon), "stretched_log")?;
    let samples: Vec<(u64, BigUint, BigUint)> = (10..=cutoff)
        .into_par_iter()
        .map(|m| {
            let (v, idx) = log_sample(m, value_exp, Some(index_exp), precision_bits)?;
            Ok((m, v, idx.expect("index requested")))
        })
        .collect::<Result<_>>()?;
    let mut indices: Vec<BigInt> = Vec::with_capacity(samples.len());
    let mut values = Vec::with_capacity(samples.len());
    for (m, v, idx) in samples {
        let idx = BigInt::from(idx);
        if indices.last().is_some_and(|prev| *prev >= idx) {
            return Err(Error::IndexCollision { m, index: idx.to_string() });
        }
        values.push(nonzero_floor(v, m, precision_bits)?);
        indices.push(idx);
    }
    Ok(Generated {
        signal: Signal::from_sorted(indices, values)?,
        approximate: true,
    })
}

fn check_spike_c(c: u64) -> Result<()> {
    if c < MIN_SPIKE_C {
        return Err(Error::InvalidParameter(format!(
            "C must be at least {MIN_SPIKE_C}, got {c}"
        )));
    }
    Ok(())
}

/// `{-3C ↦ 2C, 0 ↦ 1, 3C ↦ 2C}`.
pub fn spike_pair(c: u64) -> Result<Signal> {
    check_spike_c(c)?;
    let reach = BigInt::from(3 * c);
    let side = Rational::from_integer(BigInt::from(2 * c));
    Signal::from_sorted(
        vec![-reach.clone(), BigInt::zero(), reach],
        vec![side.clone(), Rational::one(), side],
    )
}

/// `Σ_{C=c_min}^{c_max} 2^-C · f_C(· - 4^C)`, with `f_C` the spike pair.
pub fn composite_jump(c_min: u64, c_max: u64) -> Result<Signal> {
    check_spike_c(c_min)?;
    if c_max < c_min {
        return Err(Error::InvalidParameter(format!(
            "C_max {c_max} is below C_min {c_min}"
        )));
    }
    let mut indices = Vec::new();
    let mut values = Vec::new();
    for c in c_min..=c_max {
        let shift: u32 = c
            .try_into()
            .map_err(|_| Error::InvalidParameter(format!("C = {c} too large")))?;
        let center = BigInt::one() << (2 * shift as u64);
        let weight = dyadic(BigInt::one(), shift);
        let reach = BigInt::from(3 * c);
        let side = &weight * Rational::from_integer(BigInt::from(2 * c));
        indices.extend([&center - &reach, center.clone(), &center + &reach]);
        values.extend([side.clone(), weight, side]);
    }
    Signal::from_sorted(indices, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, ratio};

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn squares_power_exact_for_integer_exponent() {
        let g = squares_power(&from_int(1), 3, 128).unwrap();
        assert!(!g.approximate);
        assert_eq!(g.signal.indices(), &[b(1), b(4), b(9)]);
        assert_eq!(g.signal.values(), &[from_int(1), ratio(1, 4), ratio(1, 9)]);

        let g = squares_power(&from_int(1), 1, 128).unwrap();
        assert_eq!(g.signal.values(), &[from_int(1)]);
    }

    #[test]
    fn squares_power_rejects_bad_parameters() {
        assert!(squares_power(&from_int(0), 3, 128).is_err());
        assert!(squares_power(&ratio(-1, 2), 3, 128).is_err());
        assert!(squares_power(&from_int(1), 0, 128).is_err());
    }

    #[test]
    fn log_families_need_m_at_least_ten() {
        assert!(matches!(squares_log(&from_int(1), 9, 128), Err(Error::EmptySupport(_))));
        assert!(matches!(stretched_log(&from_int(1), 9, 128), Err(Error::EmptySupport(_))));
    }

    #[test]
    fn squares_log_support() {
        let g = squares_log(&ratio(1, 3), 12, 128).unwrap();
        assert_eq!(g.signal.indices(), &[b(100), b(121), b(144)]);
        assert!(g.approximate);
    }

    #[test]
    fn stretched_log_first_index() {
        let g = stretched_log(&from_int(1), 10, 128).unwrap();
        assert_eq!(g.signal.indices(), &[b(54)]);
        let g = stretched_log(&from_int(1), 12, 128).unwrap();
        assert_eq!(g.signal.len(), 3);
        assert!(g.signal.indices().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn spike_pair_definition() {
        let f = spike_pair(100).unwrap();
        assert_eq!(f.indices(), &[b(-300), b(0), b(300)]);
        assert_eq!(f.values(), &[from_int(200), from_int(1), from_int(200)]);
        assert_eq!(f.l1_norm(), &from_int(401));
        assert!(spike_pair(99).is_err());
    }

    #[test]
    fn composite_jump_single_block() {
        let f = composite_jump(100, 100).unwrap();
        let center: BigInt = BigInt::one() << 200;
        assert_eq!(f.indices(), &[&center - 300, center.clone(), &center + 300]);
        let w = dyadic(BigInt::one(), 100);
        assert_eq!(f.values(), &[&w * from_int(200), w.clone(), &w * from_int(200)]);
        assert_eq!(f.l1_norm(), &(&w * from_int(401)));
    }

    #[test]
    fn composite_jump_blocks_are_ordered() {
        let f = composite_jump(100, 102).unwrap();
        assert_eq!(f.len(), 9);
        assert!(f.indices().windows(2).all(|w| w[0] < w[1]));
        assert!(composite_jump(99, 102).is_err());
        assert!(composite_jump(101, 100).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for fam in Family::ALL {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
        }
        assert_eq!("spike-pair".parse::<Family>().unwrap(), Family::SpikePair);
        assert!("nope".parse::<Family>().is_err());
    }
}
