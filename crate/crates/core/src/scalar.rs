//! Exact rational scalars.
//!
//! Everything in the crate except the n-th root fallback is computed over
//! [`Rational`], an arbitrary-precision fraction. Text encoding is `"p/q"`
//! (or `"p"` when the denominator is one); decimal strings such as `"0.25"`
//! are accepted on input and converted exactly.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num / den` as a rational. Panics when `den == 0`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
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

/// Parses `"p/q"`, `"p"`, or a finite decimal like `"-1.25"`.
pub fn parse(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
        let den = BigInt::from_str(den.trim()).map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = frac.len() as u32;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal {text:?}")));
        }
        let whole_part = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => BigInt::from_str(w).map_err(|_| Error::Parse(format!("bad decimal {text:?}")))?,
        };
        let frac_part = BigInt::from_str(frac).map_err(|_| Error::Parse(format!("bad decimal {text:?}")))?;
        let scale = BigInt::from(10u32).pow(digits);
        let magnitude = whole_part.abs() * &scale + frac_part;
        let num = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(num, scale));
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| Error::Parse(format!("bad number {text:?}")))
}

pub fn format(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn max<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    values.into_iter().max().cloned()
}

/// Exact n-th root of a non-negative rational, when it is rational.
pub fn exact_nth_root(value: &Rational, n: u32) -> Option<Rational> {
    if value.is_negative() || n == 0 {
        return None;
    }
    let root_of = |k: &BigInt| {
        let r = k.nth_root(n);
        (num_traits::pow(r.clone(), n as usize) == *k).then_some(r)
    };
    let num = root_of(value.numer())?;
    let den = root_of(value.denom())?;
    Some(Rational::new(num, den))
}

/// Binary64 n-th root of a non-negative rational.
pub fn approx_nth_root(value: &Rational, n: u32) -> f64 {
    let v = to_f64(value);
    match n {
        1 => v,
        2 => v.sqrt(),
        3 => v.cbrt(),
        _ => v.powf(1.0 / f64::from(n)),
    }
}

pub fn pow(value: &Rational, n: u32) -> Rational {
    num_traits::pow(value.clone(), n as usize)
}
