//! Exact rational arithmetic shared across the crate.
//!
//! Payoffs, squared magnitudes, and characteristic numbers are all kept as
//! arbitrary-precision rationals so that sign tests, simplex membership, and
//! the exceptional-case equalities are decided exactly, never by a
//! floating-point threshold.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Exact rational number. Always stored in canonical reduced form with a
/// nonzero denominator, so equality and ordering are decidable.
pub type Rational = BigRational;

/// Shorthand for `numer/denom`.
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer-valued rational.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest double to an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational magnitude exceeds f64 range")
}

/// Serde adapter rendering rationals as `"p/q"` strings (or plain integer
/// strings when the denominator is one), the interchange format used by all
/// JSON schemas in this crate.
pub mod rational_string {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.trim().parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_integer_or_fraction() {
        assert_eq!(ratio(6, 2).to_string(), "3");
        assert_eq!(ratio(-2, 5).to_string(), "-2/5");
        assert_eq!(ratio(1, -4).to_string(), "-1/4");
    }

    #[test]
    fn parse_round_trips() {
        for text in ["3", "-7", "3/10", "-2/5"] {
            let r: Rational = text.parse().unwrap();
            assert_eq!(r.to_string(), text);
        }
    }
}
