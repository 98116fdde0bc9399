//! Exact computation of the discrete Hardy–Littlewood maximal function
//! `M f(n) = sup_r A_r f(n)` and of the frequency function `F f(n)`, the
//! least radius at which that supremum is attained.
//!
//! Everything in this crate is exact: sample values are arbitrary-precision
//! rationals and indices are arbitrary-precision integers, so ties between
//! averages are decided without rounding.
//!
//! - [`signal`]: sparse finitely supported signals with cached prefix sums.
//! - [`maximal`]: averages, the maximal and frequency functions, bilinear analogues.
//! - [`covering`]: greedy longest-first disjoint interval selection.
//! - [`levelsets`]: censuses of `K_{C,N}`, `S_C` and their densities.
//! - [`examples`]: generators for the counterexample signal families.
//! - [`precise`]: certified enclosures of logarithms and integer roots.
//! - [`text`]: the `freqlab-signal v1` and interval list text formats.

pub mod covering;
pub mod error;
pub mod examples;
pub mod levelsets;
pub mod maximal;
pub mod precise;
pub mod rational;
pub mod signal;
pub mod text;

pub use error::{Error, Result};
pub use rational::Rational;
pub use signal::{IntegerInterval, Signal};
