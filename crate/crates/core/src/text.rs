//! Text formats.
//!
//! Signals (`freqlab-signal v1`):
//!
//! ```text
//! #freqlab-signal v1
//! # family=spike_pair
//! -300 200/1
//! 0 1/1
//! 300 200/1
//! ```
//!
//! The header line is mandatory. Every other line is blank, a `#` comment, or
//! `<index> <numerator>/<denominator>` with strictly increasing indices and
//! positive values. Writing always emits reduced fractions, so
//! `read_signal(write_signal(f)) == f`.
//!
//! Interval lists: one `<lo> <hi>` pair per line, `#` comments allowed.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::signal::{IntegerInterval, Signal};

pub const SIGNAL_HEADER: &str = "#freqlab-signal v1";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str, skip: usize) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .skip(skip)
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn write_signal(f: &Signal, metadata: &[(String, String)]) -> String {
    let mut out = String::new();
    out.push_str(SIGNAL_HEADER);
    out.push('\n');
    for (key, value) in metadata {
        let _ = writeln!(out, "# {key}={value}");
    }
    for (index, value) in f.entries() {
        let _ = writeln!(out, "{index} {}", rational::format_fraction(value));
    }
    out
}

pub fn read_signal(text: &str) -> Result<Signal> {
    match text.lines().next() {
        Some(first) if first.trim_end() == SIGNAL_HEADER => {}
        _ => return Err(parse_err(1, format!("expected header `{SIGNAL_HEADER}`"))),
    }
    let mut indices: Vec<BigInt> = Vec::new();
    let mut values: Vec<Rational> = Vec::new();
    for (line, content) in content_lines(text, 1) {
        let mut parts = content.split_whitespace();
        let (Some(index), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(parse_err(line, "expected `<index> <numerator>/<denominator>`"));
        };
        let index: BigInt = index
            .parse()
            .map_err(|_| parse_err(line, format!("invalid index `{index}`")))?;
        let value = rational::parse(value).map_err(|e| parse_err(line, e))?;
        if !value.is_positive() {
            return Err(parse_err(line, format!("value must be positive, got {value}")));
        }
        if indices.last().is_some_and(|prev| *prev >= index) {
            return Err(parse_err(line, format!("index {index} is not strictly increasing")));
        }
        indices.push(index);
        values.push(value);
    }
    Signal::from_sorted(indices, values)
}

/// `# key=value` lines of a signal file.
pub fn read_metadata(text: &str) -> Vec<(String, String)> {
    text.lines()
        .skip(1)
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.trim().split_once('='))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

pub fn write_intervals(intervals: &[IntegerInterval]) -> String {
    let mut out = String::new();
    for iv in intervals {
        let _ = writeln!(out, "{} {}", iv.lo(), iv.hi());
    }
    out
}

pub fn read_intervals(text: &str) -> Result<Vec<IntegerInterval>> {
    let mut out = Vec::new();
    for (line, content) in content_lines(text, 0) {
        let mut parts = content.split_whitespace();
        let (Some(lo), Some(hi), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(parse_err(line, "expected `<lo> <hi>`"));
        };
        let lo: BigInt = lo.parse().map_err(|_| parse_err(line, format!("invalid bound `{lo}`")))?;
        let hi: BigInt = hi.parse().map_err(|_| parse_err(line, format!("invalid bound `{hi}`")))?;
        out.push(IntegerInterval::new(lo, hi).map_err(|e| parse_err(line, e.to_string()))?);
    }
    Ok(out)
}
