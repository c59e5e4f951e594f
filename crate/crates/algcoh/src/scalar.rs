//! Exact rational scalars and their text form.

use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational scalar used throughout the crate.
pub type Scalar = BigRational;

/// Builds a scalar from an integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds a scalar from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a scalar as `p` for integers and `p/q` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        let mut out = s.numer().to_string();
        out.push('/');
        out.push_str(&s.denom().to_string());
        out
    }
}

/// Parses a scalar written as `p` or `p/q` with optional leading sign.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num_text.parse().map_err(|_| Error::ParseScalar)?;
    let den: BigInt = den_text.parse().map_err(|_| Error::ParseScalar)?;
    if den.is_zero() {
        return Err(Error::ParseScalar);
    }
    Ok(BigRational::new(num, den))
}

/// Returns true when the scalar is exactly zero.
pub fn is_zero(s: &Scalar) -> bool {
    s.is_zero()
}

/// Returns -1, 0, or 1 according to the sign of the scalar.
pub fn signum(s: &Scalar) -> i32 {
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_scalar(&int(5)), "5");
        assert_eq!(format_scalar(&int(-3)), "-3");
        assert_eq!(format_scalar(&ratio(1, 2)), "1/2");
        assert_eq!(format_scalar(&ratio(-2, 4)), "-1/2");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert_eq!(parse_scalar("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_scalar(" -3 / 4 ").unwrap(), ratio(-3, 4));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn parse_round_trips_format() {
        for s in [int(0), int(12), ratio(-7, 3), ratio(22, 7)] {
            assert_eq!(parse_scalar(&format_scalar(&s)).unwrap(), s);
        }
    }
}
