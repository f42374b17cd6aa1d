//! Exact rational numbers.
//!
//! All masses, beliefs and probability bounds are [`Rational`]s: arbitrary
//! precision, always in lowest terms with a positive denominator, so equality
//! is structural. Nothing in this crate goes through floating point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `numer / denom` as a reduced rational. Panics if `denom == 0`.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"`, `"n"` or a plain decimal such as `"0.25"`.
///
/// Decimals are converted digit by digit, so `"0.1"` is exactly `1/10`.
/// Exponents, infinities and NaN are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::ParseRational(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = parse_int(n.trim()).ok_or_else(err)?;
        let d: BigInt = parse_int(d.trim()).ok_or_else(err)?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let (negative, whole) = match whole.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        let digits_ok = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if !digits_ok(whole) || !digits_ok(frac) || (whole.is_empty() && frac.is_empty()) {
            return Err(err());
        }
        let joined = format!("{whole}{frac}");
        let numer: BigInt = joined.parse().map_err(|_| err())?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    parse_int(s).map(Rational::from_integer).ok_or_else(err)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
