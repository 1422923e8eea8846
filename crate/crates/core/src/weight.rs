//! Exact vertex-weight domains.
//!
//! Every algorithm in this crate only ever adds and compares weights, so the
//! weight type is a trait. Sums of three weights are formed in a wider
//! companion type ([`Weight::Wide`]) so that no intermediate value can
//! overflow or round.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use thiserror::Error;

/// Exact rational weight, numerator and denominator held in 64 bits.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("floating-point weight `{0}` is not supported; use an integer or p/q")]
    Float(String),
    #[error("weight `{0}` does not fit the weight domain")]
    Overflow(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("`{0}` is not a valid weight")]
    Invalid(String),
}

/// A totally ordered, exactly additive weight domain.
pub trait Weight: Copy + Ord + Hash + Debug + Display + Send + Sync + 'static {
    /// Overflow-free domain for sums and differences of a few weights.
    type Wide: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + Add<Output = Self::Wide>
        + Sub<Output = Self::Wide>;

    fn to_wide(self) -> Self::Wide;

    /// Parses a single whitespace-free token.
    fn parse_token(token: &str) -> Result<Self, WeightError>;

    /// `value / 3` when that quotient is exactly representable.
    fn exact_third(value: &Self::Wide) -> Option<Self::Wide>;
}

fn reject_float(token: &str) -> Result<(), WeightError> {
    let looks_float = token.contains('.')
        || token.eq_ignore_ascii_case("nan")
        || token.to_ascii_lowercase().contains("inf")
        || (token.contains(['e', 'E']) && token.parse::<f64>().is_ok());
    if looks_float {
        Err(WeightError::Float(token.to_string()))
    } else {
        Ok(())
    }
}

fn parse_i64(token: &str) -> Result<i64, WeightError> {
    reject_float(token)?;
    match token.parse::<i64>() {
        Ok(v) => Ok(v),
        Err(e) => match e.kind() {
            std::num::IntErrorKind::PosOverflow | std::num::IntErrorKind::NegOverflow => {
                Err(WeightError::Overflow(token.to_string()))
            }
            _ => Err(WeightError::Invalid(token.to_string())),
        },
    }
}

impl Weight for i64 {
    type Wide = i128;

    #[inline]
    fn to_wide(self) -> i128 {
        self as i128
    }

    fn parse_token(token: &str) -> Result<Self, WeightError> {
        parse_i64(token)
    }

    fn exact_third(value: &i128) -> Option<i128> {
        (value % 3 == 0).then(|| value / 3)
    }
}

impl Weight for Rational {
    type Wide = BigRational;

    fn to_wide(self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn parse_token(token: &str) -> Result<Self, WeightError> {
        let (p, q) = match token.split_once('/') {
            Some((p, q)) => (parse_i64(p)?, parse_i64(q)?),
            None => (parse_i64(token)?, 1),
        };
        if q == 0 {
            return Err(WeightError::ZeroDenominator(token.to_string()));
        }
        // Ratio::new normalizes; negating i64::MIN in that step would overflow.
        if p == i64::MIN || q == i64::MIN {
            return Err(WeightError::Overflow(token.to_string()));
        }
        Ok(Ratio::new(p, q))
    }

    fn exact_third(value: &BigRational) -> Option<BigRational> {
        Some(value / BigRational::from_integer(BigInt::from(3)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_tokens() {
        assert_eq!(i64::parse_token("-3"), Ok(-3));
        assert_eq!(i64::parse_token("+7"), Ok(7));
        assert!(matches!(i64::parse_token("1.5"), Err(WeightError::Float(_))));
        assert!(matches!(i64::parse_token("1e3"), Err(WeightError::Float(_))));
        assert!(matches!(
            i64::parse_token("9223372036854775808"),
            Err(WeightError::Overflow(_))
        ));
        assert!(matches!(i64::parse_token("1/2"), Err(WeightError::Invalid(_))));
        assert!(matches!(i64::parse_token("x"), Err(WeightError::Invalid(_))));
    }

    #[test]
    fn rational_tokens() {
        assert_eq!(Rational::parse_token("2/4"), Ok(Ratio::new(1, 2)));
        assert_eq!(Rational::parse_token("-3"), Ok(Ratio::from_integer(-3)));
        assert_eq!(Rational::parse_token("3/-6"), Ok(Ratio::new(-1, 2)));
        assert!(matches!(
            Rational::parse_token("1/0"),
            Err(WeightError::ZeroDenominator(_))
        ));
        assert!(matches!(Rational::parse_token("0.5"), Err(WeightError::Float(_))));
    }

    #[test]
    fn wide_sums_do_not_overflow() {
        let s = i64::MAX.to_wide() + i64::MAX.to_wide() + i64::MAX.to_wide();
        assert_eq!(s, 3 * (i64::MAX as i128));
        assert_eq!(i64::exact_third(&s), Some(i64::MAX as i128));
        assert_eq!(i64::exact_third(&4), None);
    }

    #[test]
    fn rational_third() {
        let w = Rational::new(1, 2).to_wide();
        assert_eq!(Rational::exact_third(&w), Some(Rational::new(1, 6).to_wide()));
    }
}
