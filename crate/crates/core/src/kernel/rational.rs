//! Rational scalars. Backed by `num_rational::BigRational`, which keeps every
//! value reduced with a positive denominator and prints `p/q` (or `p` when
//! the denominator is one).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p/q`, `p`, or a decimal-free integer with optional sign.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.trim_start_matches('+').parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(Rational::new(n, d))
}

pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse("6/-4").unwrap(), frac(-3, 2));
        assert_eq!(parse(" -3/2 ").unwrap().to_string(), "-3/2");
        assert_eq!(parse("4/2").unwrap().to_string(), "2");
        assert_eq!(parse("0/5").unwrap(), frac(0, 1));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
