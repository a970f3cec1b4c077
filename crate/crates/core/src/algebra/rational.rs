use num_bigint::BigInt;
use num_rational::BigRational;

use super::AlgebraError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p/q` or `p` (optional sign, no decimals, no spaces inside).
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed.contains(['.', 'e', 'E', ' ']) {
        return Err(AlgebraError::ParseRational(text.to_string()));
    }
    trimmed
        .parse::<Rational>()
        .map_err(|_| AlgebraError::ParseRational(text.to_string()))
}

/// Canonical text form used in reports and CSV output: `p/q`, or `p` when the
/// denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}
