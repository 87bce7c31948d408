use num_bigint::BigInt;
use num_rational::BigRational;

use super::NumberError;

/// Exact fraction of big integers, always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// Shorthand for `num/den` with small integer parts.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` (optional sign, no whitespace inside).
pub fn parse_rational(s: &str) -> Result<Rational, NumberError> {
    let s = s.trim();
    let err = || NumberError::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den == BigInt::from(0) {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}
