//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already keeps itself reduced with a positive
//! denominator, so [`Rational`] is a plain alias; this module adds the
//! constructors, exact roots and string forms the rest of the crate needs.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Reduce `num/den` to canonical form (gcd 1, positive denominator, zero as 0/1).
pub fn rat_normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num.into(), den))
}

/// Small-integer shorthand. Panics on a zero denominator, so keep it to literals.
pub fn rat(num: i64, den: i64) -> Rational {
    rat_normalize(num, den).expect("literal rational with zero denominator")
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root when `q` is the square of a non-negative rational.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Exact real fifth root, if one exists in ℚ.
pub fn fifth_root_exact(q: &Rational) -> Option<Rational> {
    let neg = q.is_negative();
    let n = q.numer().abs().nth_root(5);
    let d = q.denom().nth_root(5);
    let root = Rational::new(n, d);
    let root = if neg { -root } else { root };
    let mut p = Rational::one();
    for _ in 0..5 {
        p *= &root;
    }
    (&p == q).then_some(root)
}

/// Parse `"p/q"`, `"p"`, or a finite decimal such as `"-0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((int_part, frac)) = s.split_once('.') {
        if s.contains('/') || frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad rational '{s}'")));
        }
        let digits = format!("{int_part}{frac}");
        let num = BigInt::from_str(&digits).map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return rat_normalize(num, den);
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            let d = BigInt::from_str(d.trim()).map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            rat_normalize(n, d)
        }
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| Error::Parse(format!("bad rational '{s}'"))),
    }
}

/// `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// serde adapter storing a [`Rational`] as its `"p/q"` string.
pub mod serde_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(rat_normalize(4, -8).unwrap().to_string(), "-1/2");
        let z = rat_normalize(0, 7).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(rat_normalize(9, 3).unwrap().to_string(), "3");
        assert_eq!(rat_normalize(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn roots() {
        assert_eq!(sqrt_exact(&rat(16, 25)), Some(rat(4, 5)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-4, 1)), None);
        assert_eq!(fifth_root_exact(&rat(-32, 243)), Some(rat(-2, 3)));
        assert_eq!(fifth_root_exact(&rat(2, 1)), None);
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("3/5").unwrap(), rat(3, 5));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
