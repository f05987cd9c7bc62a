//! Exact rational scalars, their text form, and the nonnegative extended
//! values used for measures of unbounded sets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{LabError, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| if r.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// Exact binary value of a finite float.
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| LabError::InvalidArgument(format!("{x} is not finite")))
}

/// Rounds `x` to the nearest multiple of `2^-bits`, keeping denominators small.
pub fn dyadic(x: f64, bits: u32) -> Result<Rational> {
    if !x.is_finite() {
        return Err(LabError::InvalidArgument(format!("{x} is not finite")));
    }
    let scale = f64::powi(2.0, bits as i32);
    let n = (x * scale).round();
    let num = BigInt::from(n as i128);
    Ok(Rational::new(num, BigInt::one() << bits as usize))
}

/// Parses `"3/7"`, `"-2"`, `"0.25"` or `"1.5e-3"` exactly.
pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("no digits in {s:?}"));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("not a number: {s:?}"));
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut num: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().unwrap() };
    if negative {
        num = -num;
    }
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        Rational::from_integer(num * num::pow(ten, shift as usize))
    } else {
        Rational::new(num, num::pow(ten, (-shift) as usize))
    };
    Ok(value)
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fifteen significant digits, the precision used in every report.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let s = format!("{:.14e}", x);
    // normalise "1.23400000000000e0" into plain decimal when reasonable
    let v: f64 = s.parse().unwrap();
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let t = format!("{:.*}", decimals, v);
        if t.contains('.') {
            t.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            t
        }
    } else {
        s
    }
}

/// A nonnegative value that may be infinite, e.g. the measure of a half-line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedNonneg {
    Finite(Rational),
    Infinite,
}

impl ExtendedNonneg {
    pub fn zero() -> Self {
        ExtendedNonneg::Finite(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtendedNonneg::Finite(v) if v.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedNonneg::Infinite)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedNonneg::Finite(v) => Some(v),
            ExtendedNonneg::Infinite => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedNonneg::Finite(v) => to_f64(v),
            ExtendedNonneg::Infinite => f64::INFINITY,
        }
    }
}

impl Add for ExtendedNonneg {
    type Output = ExtendedNonneg;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtendedNonneg::Finite(a), ExtendedNonneg::Finite(b)) => ExtendedNonneg::Finite(a + b),
            _ => ExtendedNonneg::Infinite,
        }
    }
}

impl PartialOrd for ExtendedNonneg {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedNonneg {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedNonneg::Finite(a), ExtendedNonneg::Finite(b)) => a.cmp(b),
            (ExtendedNonneg::Finite(_), ExtendedNonneg::Infinite) => Ordering::Less,
            (ExtendedNonneg::Infinite, ExtendedNonneg::Finite(_)) => Ordering::Greater,
            (ExtendedNonneg::Infinite, ExtendedNonneg::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtendedNonneg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNonneg::Finite(v) => write!(f, "{}", format_rational(v)),
            ExtendedNonneg::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/7").unwrap(), ratio(3, 7));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("2").unwrap(), rat(2));
        assert_eq!(parse_rational("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&rat(-4)), "-4");
        assert_eq!(format_sig(1.0954451150103321), "1.09544511501033");
        assert_eq!(format_sig(0.5), "0.5");
    }

    #[test]
    fn infinite_absorbs_and_dominates() {
        let a = ExtendedNonneg::Finite(rat(5));
        assert_eq!(a.clone() + ExtendedNonneg::Infinite, ExtendedNonneg::Infinite);
        assert!(ExtendedNonneg::Infinite > a);
    }

    #[test]
    fn dyadic_rounding() {
        assert_eq!(dyadic(0.5, 4).unwrap(), ratio(1, 2));
        assert_eq!(dyadic(0.3, 2).unwrap(), ratio(1, 4));
    }
}
