//! Exact rational scalars.
//!
//! Every coefficient handled by the exact layer is a [`Rational`], an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator.

use num::bigint::{BigInt, Sign};
use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    frac(1, 2)
}

/// Parses `"p/q"`, `"p"`, or a finite decimal such as `"-0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let s = text.trim();
    let bad = || ParseError::Rational(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, fracpart)) = s.split_once('.') {
        if fracpart.is_empty() || !fracpart.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let whole_val: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits.parse().map_err(|_| bad())?
        };
        let frac_val: BigInt = fracpart.parse().map_err(|_| bad())?;
        let scale = num::pow(BigInt::from(10), fracpart.len());
        let mut r = Rational::new(whole_val * &scale + frac_val, scale);
        if negative {
            r = -r;
        }
        return Ok(r);
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators or denominators: divide in floating point piecewise.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Best rational approximation of a float with bounded denominator, used only
/// when a user supplies floating inputs to an exact routine.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root when `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = isqrt(r.numer())?;
    let d = isqrt(r.denom())?;
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("-0.25").unwrap(), frac(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), frac(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn denominators_stay_positive() {
        let r = parse_rational("3/-4").unwrap();
        assert_eq!(format_rational(&r), "-3/4");
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&frac(2, 1)), None);
        assert_eq!(rational_sqrt(&frac(-1, 1)), None);
        assert_eq!(rational_sqrt(&zero()), Some(zero()));
    }
}
