//! Exact rational scalars and their text form.
//!
//! All probabilities, matrix entries, and series coefficients in this crate
//! are [`Rat`] values. The canonical text form is `p/q` in lowest terms with
//! `q > 0`; a bare integer stands for denominator 1. Both forms parse.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::ToPrimitive;

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

/// Parses `p/q` or a bare integer, in optional leading `-` form.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num.parse().map_err(|_| ParseRatError(s.to_owned()))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| ParseRatError(s.to_owned()))?,
        None => BigInt::from(1),
    };
    if d == BigInt::from(0) {
        return Err(ParseRatError(s.to_owned()));
    }
    Ok(Rat::new(n, d))
}

/// Failure to parse a rational from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a rational (expected `p` or `p/q` with q != 0): {0:?}")]
pub struct ParseRatError(pub String);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rat("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(parse_rat(" 6/-4 ").unwrap(), ratio(-3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(ratio(6, 4).to_string(), "3/2");
        assert_eq!(ratio(-6, 4).to_string(), "-3/2");
        assert_eq!(rat(5).to_string(), "5");
    }
}
