use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::Field;
use super::ScalarError;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds the canonical reduced form of `num/den`.
pub fn rat_normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational, ScalarError> {
    let den = den.into();
    if den.is_zero() {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(BigRational::new(num.into(), den))
}

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let rn = n.sqrt();
    if &(&rn * &rn) != n {
        return None;
    }
    let rd = d.sqrt();
    if &(&rd * &rd) != d {
        return None;
    }
    Some(BigRational::new(rn, rd))
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale down huge operands before converting.
            let bits = x.numer().bits().max(x.denom().bits());
            let shift = bits.saturating_sub(1000) as usize;
            let n = (x.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (x.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, `p/q`. Whitespace must already be stripped.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::Parse(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = parse_int(n).ok_or_else(bad)?;
    let d: BigInt = parse_int(d).ok_or_else(bad)?;
    rat_normalize(n, d)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('+').unwrap_or(s);
    let body = digits.strip_prefix('-').unwrap_or(digits);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Strips square factors found by trial division from a positive integer.
/// Returns `(outside, inside)` with `n = outside^2 * inside`.
pub(crate) fn split_square_part(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.sign() == Sign::Plus);
    let mut inside = n.clone();
    let mut outside = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1000u32);
    while p <= limit && &p * &p <= inside {
        let sq = &p * &p;
        while (&inside % &sq).is_zero() {
            inside /= &sq;
            outside *= &p;
        }
        p += 1u32;
    }
    let r = inside.sqrt();
    if &r * &r == inside {
        outside *= &r;
        inside = BigInt::one();
    }
    (outside, inside)
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(n: i64) -> Self {
        rat(n)
    }
}
