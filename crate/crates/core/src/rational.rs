//! Exact rationals backed by [`num_rational::BigRational`].
//!
//! `Ratio` keeps every value in lowest terms with a positive denominator, so
//! equality and hashing are structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn from_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Parses `p/q` or a bare integer `p`. Whitespace around the parts is not accepted.
pub fn parse(text: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid numerator in rational `{text}`"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("invalid denominator in rational `{text}`"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in rational `{text}`"));
    }
    Ok(Rational::new(num, den))
}

pub fn parse_param(name: &str, text: &str) -> Result<Rational> {
    parse(text).map_err(|e| Error::InvalidParameter(format!("{name}: {e}")))
}

/// Always `num/den`, including `/1` for integers.
pub fn format_fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `num/den`, or just `num` when the denominator is one.
pub fn format_compact(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format_fraction(q)
    }
}

/// `mantissa / 2^bits`.
pub fn dyadic(mantissa: BigInt, bits: u32) -> Rational {
    Rational::new(mantissa, BigInt::one() << bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(parse("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse("-3").unwrap(), from_int(-3));
        assert_eq!(parse("3/-6").unwrap(), ratio(-1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("1.5").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_fraction(&from_int(5)), "5/1");
        assert_eq!(format_compact(&from_int(5)), "5");
        assert_eq!(format_compact(&ratio(1, 15)), "1/15");
        assert_eq!(format_compact(&from_int(0)), "0");
    }
}
