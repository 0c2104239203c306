//! Parsing and formatting of exact rationals in `p/q` form.
//!
//! Probabilities are carried as [`BigRational`] throughout. Support
//! membership is a strict `> 0` test, so nothing in this crate ever
//! rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatioError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("too many `/` in `{0}`")]
    TooManySlashes(String),
}

/// Parses `"p/q"` or a bare integer `"p"` into a reduced rational.
pub fn parse_ratio(s: &str) -> Result<BigRational, ParseRatioError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRatioError::Empty);
    }
    let parts: Vec<&str> = s.split('/').collect();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseRatioError::BadInteger(t.to_string()))
    };
    match parts.as_slice() {
        [p] => Ok(BigRational::from_integer(parse_int(p)?)),
        [p, q] => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(ParseRatioError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(numer, denom))
        }
        _ => Err(ParseRatioError::TooManySlashes(s.to_string())),
    }
}

/// Formats a rational as `p/q`, or just `p` when the denominator is 1.
pub fn format_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Integer ceiling of a nonnegative rational.
pub fn ceil_to_usize(r: &BigRational) -> usize {
    assert!(!r.is_negative());
    let c = r.ceil();
    let (digits_sign, digits) = c.numer().to_u64_digits();
    match (digits_sign, digits.as_slice()) {
        (num_bigint::Sign::NoSign, _) => 0,
        (_, [d]) => *d as usize,
        _ => panic!("ceiling does not fit usize"),
    }
}
