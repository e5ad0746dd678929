use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;

use super::field::Field;
use super::rational::{format_rational, parse_rational, rat, rational_sqrt, rational_to_f64, Rational};
use super::ScalarError;

/// Gaussian rational `re + im·i`. In real mode `im` is always zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Scalar { re, im: Rational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(rat(n))
    }

    pub fn i() -> Self {
        Scalar { re: Rational::zero(), im: rat(1) }
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar { re: rat(re), im: rat(im) }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Closed right half-plane: `re > 0`, or `re = 0` and `im >= 0`.
    pub fn in_right_half_plane(&self) -> bool {
        self.re.is_positive() || (self.re.is_zero() && !self.im.is_negative())
    }

    /// Sign of a real scalar, `None` when the value has an imaginary part.
    pub fn real_sign(&self) -> Option<std::cmp::Ordering> {
        if !self.is_real() {
            return None;
        }
        Some(self.re.cmp(&Rational::zero()))
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// The square root lying in the closed right half-plane, when it exists
    /// in the Gaussian rationals.
    pub fn exact_sqrt(&self) -> Option<Scalar> {
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return rational_sqrt(&self.re).map(Scalar::real);
            }
            return rational_sqrt(&-&self.re).map(|r| Scalar { re: Rational::zero(), im: r });
        }
        // |z| must be rational; then re(root)^2 = (re + |z|)/2.
        let n = rational_sqrt(&self.norm())?;
        let half = (&self.re + &n) / rat(2);
        let x = rational_sqrt(&half)?;
        let y = &self.im / (&x * rat(2));
        Some(Scalar { re: x, im: y })
    }

    pub fn is_square(&self) -> bool {
        self.exact_sqrt().is_some()
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::int(1);
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::real(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn one() -> Self {
        Scalar::int(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        let n = self.norm();
        Some(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }
    fn from_i64(n: i64) -> Self {
        Scalar::int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

// integer operands skip the gcd reductions, which dominate table arithmetic
fn radd(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

fn rsub(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() - b.numer())
    } else {
        a - b
    }
}

fn rmul(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() || b.is_zero() {
        Rational::zero()
    } else if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

forward_binop!(Add, add, |a, b| Scalar { re: radd(&a.re, &b.re), im: radd(&a.im, &b.im) });
forward_binop!(Sub, sub, |a, b| Scalar { re: rsub(&a.re, &b.re), im: rsub(&a.im, &b.im) });
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return Scalar::real(rmul(&a.re, &b.re));
    }
    Scalar {
        re: rsub(&rmul(&a.re, &b.re), &rmul(&a.im, &b.im)),
        im: radd(&rmul(&a.re, &b.im), &rmul(&a.im, &b.re)),
    }
});
forward_binop!(Div, div, |a, b| a * &b.inv().expect("division by zero scalar"));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&format_rational(&self.re));
        }
        let im_abs = self.im.abs();
        let im_txt = if im_abs == rat(1) { String::new() } else { format_rational(&im_abs) };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_txt}i");
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", format_rational(&self.re), sign, im_txt)
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// Accepts `p`, `p/q`, `p/q+r/s i`, `p/q-r/s i`, `r/s i`, `i`, `-i`;
    /// whitespace is ignored.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ScalarError::Parse(text.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar::real(parse_rational(&s).map_err(|e| match e {
                ScalarError::ZeroDenominator => e,
                _ => bad(),
            })?));
        };
        // split at the last sign that is not the leading character
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last();
        let (re_txt, im_txt) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let im = match im_txt {
            "" | "+" => rat(1),
            "-" => rat(-1),
            t => parse_rational(t).map_err(|e| match e {
                ScalarError::ZeroDenominator => e,
                _ => bad(),
            })?,
        };
        let re = if re_txt.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re_txt).map_err(|e| match e {
                ScalarError::ZeroDenominator => e,
                _ => bad(),
            })?
        };
        Ok(Scalar { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::ratio;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn text_format_round_trip() {
        for t in ["0", "5", "-1/2", "i", "-i", "2i", "-3/4i", "1+i", "1/2-3/4i", "-7+2i"] {
            assert_eq!(s(t).to_string(), t, "{t}");
        }
        assert_eq!(s(" 1 / 2 + 3 / 4 i "), Scalar::new(ratio(1, 2), ratio(3, 4)));
        assert_eq!(s("1+1i"), Scalar::gaussian(1, 1));
        assert_eq!(s("4/2"), Scalar::int(2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1+/2i".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Scalar::gaussian(1, 1);
        assert_eq!(&a * &a, Scalar::gaussian(0, 2));
        assert_eq!(a.inv().unwrap(), Scalar::new(ratio(1, 2), ratio(-1, 2)));
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::int(-1));
    }

    #[test]
    fn gaussian_square_roots() {
        assert_eq!(Scalar::int(4).exact_sqrt(), Some(Scalar::int(2)));
        assert_eq!(Scalar::int(-1).exact_sqrt(), Some(Scalar::i()));
        assert_eq!(Scalar::gaussian(0, 2).exact_sqrt(), Some(Scalar::gaussian(1, 1)));
        assert_eq!(Scalar::gaussian(-3, 4).exact_sqrt(), Some(Scalar::gaussian(1, 2)));
        assert_eq!(Scalar::gaussian(3, -4).exact_sqrt(), Some(Scalar::gaussian(2, -1)));
        assert_eq!(Scalar::int(2).exact_sqrt(), None);
        assert_eq!(Scalar::gaussian(1, 1).exact_sqrt(), None);
        let r = Scalar::gaussian(-5, -12).exact_sqrt().unwrap();
        assert!(r.in_right_half_plane());
        assert_eq!(&r * &r, Scalar::gaussian(-5, -12));
    }
}
