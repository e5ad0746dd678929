use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::Signed;

use super::field::Field;
use super::gaussian::Scalar;
use super::rational::{split_square_part, Rational};
use super::{FieldMode, ScalarError};

/// Maximum number of independent radicals accepted by [`ext_arith`].
pub const MAX_TOWER_DEPTH: usize = 2;

// Intermediate results of operator arithmetic may briefly exceed the public
// cap before trimming.
const INTERNAL_DEPTH: usize = 4;

/// Element of `Q(i)(√r₁, √r₂, …)`.
///
/// `coeffs[mask]` multiplies the product of `√rⱼ` over the bits `j` set in
/// `mask`. Every `√r` denotes the principal root (real part positive, or zero
/// real part with non-negative imaginary part). Radicands are kept
/// independent modulo squares, so the representation of a value in a given
/// tower is unique.
#[derive(Clone, Debug)]
pub struct ExtScalar {
    rads: Vec<Scalar>,
    coeffs: Vec<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtOp {
    Add,
    Mul,
    Inv,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExtResult {
    Value(ExtScalar),
    Bool(bool),
}

/// Square root of `x` as a tower element.
pub fn scalar_sqrt(x: &Scalar, mode: FieldMode) -> Result<ExtScalar, ScalarError> {
    if mode == FieldMode::Real && (!x.is_real() || x.re.is_negative()) {
        return Err(ScalarError::NegativeRadicand);
    }
    let (c, rad) = reduce_radicand(x);
    Ok(match rad {
        None => ExtScalar::from(c),
        Some(r) => ExtScalar { rads: vec![r], coeffs: vec![Scalar::zero(), c] },
    })
}

/// Arithmetic with an explicit tower-depth check.
pub fn ext_arith(a: &ExtScalar, b: &ExtScalar, op: ExtOp) -> Result<ExtResult, ScalarError> {
    let check = |v: &ExtScalar| {
        if v.depth() > MAX_TOWER_DEPTH {
            Err(ScalarError::UnsupportedTower)
        } else {
            Ok(())
        }
    };
    match op {
        ExtOp::Inv => {
            check(a)?;
            let r = a.try_inv().ok_or(ScalarError::DivisionByZero)?;
            Ok(ExtResult::Value(r))
        }
        _ => {
            let (tower, ca, cb) = join(a, b, MAX_TOWER_DEPTH)?;
            let (x, y) = (
                ExtScalar { rads: tower.clone(), coeffs: ca },
                ExtScalar { rads: tower, coeffs: cb },
            );
            Ok(match op {
                ExtOp::Add => ExtResult::Value(x.add_same(&y)),
                ExtOp::Mul => ExtResult::Value(x.mul_same(&y)),
                ExtOp::Eq => ExtResult::Bool(x.sub_same(&y).is_zero()),
                ExtOp::Inv => unreachable!(),
            })
        }
    }
}

/// Writes `√x = c·√r` with `r` stripped of obvious square factors, or
/// `√x = c` when `x` is a square in `Q(i)`.
fn reduce_radicand(x: &Scalar) -> (Scalar, Option<Scalar>) {
    if let Some(s) = x.exact_sqrt() {
        return (s, None);
    }
    if x.is_real() {
        let neg = x.re.is_negative();
        let a = x.re.abs();
        // √(n/d) = √(n·d)/d
        let nd = a.numer() * a.denom();
        let (o, s) = split_square_part(&nd);
        let c = Rational::new(o, a.denom().clone());
        let c = if neg { Scalar::new(Rational::zero(), c) } else { Scalar::real(c) };
        return (c, Some(Scalar::real(Rational::from_integer(s))));
    }
    let l = x.re.denom().lcm(x.im.denom());
    let l2 = Rational::from_integer(&l * &l);
    let w = Scalar::new(&x.re * &l2, &x.im * &l2);
    let g = w.re.numer().gcd(w.im.numer());
    let (o, _) = split_square_part(&g);
    let o2 = Rational::from_integer(&o * &o);
    let w = Scalar::new(&w.re / &o2, &w.im / &o2);
    (Scalar::real(Rational::new(o, l)), Some(w))
}

fn csqrt((re, im): (f64, f64)) -> (f64, f64) {
    let r = re.hypot(im);
    let a = ((r + re) / 2.0).max(0.0).sqrt();
    let b = ((r - re) / 2.0).max(0.0).sqrt();
    if im < 0.0 {
        (a, -b)
    } else {
        (a, b)
    }
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn radical_product(rads: &[Scalar], mask: usize) -> Scalar {
    let mut p = Scalar::int(1);
    for (j, r) in rads.iter().enumerate() {
        if mask & (1 << j) != 0 {
            p = p * r;
        }
    }
    p
}

fn radical_product_c64(rads: &[Scalar], mask: usize) -> (f64, f64) {
    let mut p = (1.0, 0.0);
    for (j, r) in rads.iter().enumerate() {
        if mask & (1 << j) != 0 {
            p = cmul(p, csqrt(r.to_c64()));
        }
    }
    p
}

/// Monomial product `(c₁·√m₁)(c₂·√m₂)` inside a tower.
fn mul_monomial(rads: &[Scalar], (c1, m1): (&Scalar, usize), (c2, m2): (&Scalar, usize)) -> (Scalar, usize) {
    let c = c1 * c2 * radical_product(rads, m1 & m2);
    (c, m1 ^ m2)
}

/// Locates `√r` in `tower` as `c·∏√rⱼ`, if `r` is dependent on it modulo
/// squares.
fn express_radical(tower: &[Scalar], r: &Scalar) -> Option<(Scalar, usize)> {
    for mask in 1..(1usize << tower.len()) {
        let p = radical_product(tower, mask);
        let q = r / &p;
        if let Some(c) = q.exact_sqrt() {
            // pick the sign matching principal roots numerically
            let lhs = csqrt(r.to_c64());
            let rhs = cmul(c.to_c64(), radical_product_c64(tower, mask));
            let dp = (lhs.0 - rhs.0).powi(2) + (lhs.1 - rhs.1).powi(2);
            let dm = (lhs.0 + rhs.0).powi(2) + (lhs.1 + rhs.1).powi(2);
            let c = if dp <= dm { c } else { -c };
            return Some((c, mask));
        }
    }
    None
}

/// Rewrites `a` and `b` over a common tower.
fn join(a: &ExtScalar, b: &ExtScalar, limit: usize) -> Result<(Vec<Scalar>, Vec<Scalar>, Vec<Scalar>), ScalarError> {
    if a.rads == b.rads {
        return Ok((a.rads.clone(), a.coeffs.clone(), b.coeffs.clone()));
    }
    let mut tower = a.rads.clone();
    let mut images = Vec::with_capacity(b.rads.len());
    for r in &b.rads {
        match express_radical(&tower, r) {
            Some(img) => images.push(img),
            None => {
                if tower.len() >= limit {
                    return Err(ScalarError::UnsupportedTower);
                }
                tower.push(r.clone());
                images.push((Scalar::int(1), 1 << (tower.len() - 1)));
            }
        }
    }
    let size = 1usize << tower.len();
    let mut ca = a.coeffs.clone();
    ca.resize(size, Scalar::zero());
    let mut cb = vec![Scalar::zero(); size];
    for (mask, coeff) in b.coeffs.iter().enumerate() {
        if Field::is_zero(coeff) {
            continue;
        }
        let mut mono = (coeff.clone(), 0usize);
        for (j, (c, m)) in images.iter().enumerate() {
            if mask & (1 << j) != 0 {
                mono = mul_monomial(&tower, (&mono.0, mono.1), (c, *m));
            }
        }
        cb[mono.1] = &cb[mono.1] + &mono.0;
    }
    Ok((tower, ca, cb))
}

impl ExtScalar {
    pub fn zero() -> Self {
        ExtScalar::from(Scalar::zero())
    }

    pub fn one() -> Self {
        ExtScalar::from(Scalar::int(1))
    }

    /// Number of adjoined radicals.
    pub fn depth(&self) -> usize {
        self.rads.len()
    }

    pub fn radicands(&self) -> &[Scalar] {
        &self.rads
    }

    /// Coefficient of the radical-free part.
    pub fn base(&self) -> &Scalar {
        &self.coeffs[0]
    }

    /// Nonzero `(radical mask, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !Field::is_zero(*c))
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.rads.is_empty() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    pub fn to_c64(&self) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for (mask, c) in self.terms() {
            let t = cmul(c.to_c64(), radical_product_c64(&self.rads, mask));
            acc.0 += t.0;
            acc.1 += t.1;
        }
        acc
    }

    /// True when the value lies in the closed right half-plane.
    pub fn in_right_half_plane(&self) -> bool {
        if let Some(s) = self.as_scalar() {
            return s.in_right_half_plane();
        }
        let sq = self * self;
        if let Some(s) = sq.as_scalar() {
            if s.is_real() {
                let (re, im) = self.to_c64();
                // real square: the value is real or purely imaginary
                return if s.re.is_negative() { im > 0.0 } else { re > 0.0 };
            }
        }
        let (re, im) = self.to_c64();
        let scale = re.abs().max(im.abs()).max(1e-300);
        if re.abs() > 1e-12 * scale {
            re > 0.0
        } else {
            im >= 0.0
        }
    }

    /// `±self`, whichever lies in the closed right half-plane.
    pub fn half_plane_representative(&self) -> ExtScalar {
        if self.in_right_half_plane() {
            self.clone()
        } else {
            -self
        }
    }

    pub fn try_inv(&self) -> Option<ExtScalar> {
        if self.is_zero() {
            return None;
        }
        if self.rads.is_empty() {
            return self.coeffs[0].inv().map(ExtScalar::from);
        }
        let bit = 1usize << (self.rads.len() - 1);
        let conj = ExtScalar {
            rads: self.rads.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| if m & bit != 0 { -c } else { c.clone() })
                .collect(),
        };
        let norm = self.mul_same(&conj);
        debug_assert!(norm.rads.len() < self.rads.len());
        Some(&conj * &norm.try_inv()?)
    }

    fn trimmed(mut self) -> Self {
        let mut j = 0;
        while j < self.rads.len() {
            let bit = 1usize << j;
            let used = self.coeffs.iter().enumerate().any(|(m, c)| m & bit != 0 && !Field::is_zero(c));
            if used {
                j += 1;
                continue;
            }
            // drop radical j: keep coefficients with bit j clear, compacting masks
            self.rads.remove(j);
            let mut out = vec![Scalar::zero(); 1 << self.rads.len()];
            for (m, c) in self.coeffs.into_iter().enumerate() {
                if m & bit != 0 {
                    continue;
                }
                let low = m & (bit - 1);
                let high = (m >> (j + 1)) << j;
                out[low | high] = c;
            }
            self.coeffs = out;
        }
        self
    }

    fn add_same(&self, o: &ExtScalar) -> ExtScalar {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        ExtScalar { rads: self.rads.clone(), coeffs }.trimmed()
    }

    fn sub_same(&self, o: &ExtScalar) -> ExtScalar {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        ExtScalar { rads: self.rads.clone(), coeffs }.trimmed()
    }

    fn mul_same(&self, o: &ExtScalar) -> ExtScalar {
        let mut out = vec![Scalar::zero(); self.coeffs.len()];
        for (m1, c1) in self.terms() {
            for (m2, c2) in o.terms() {
                let (c, m) = mul_monomial(&self.rads, (c1, m1), (c2, m2));
                out[m] = &out[m] + &c;
            }
        }
        ExtScalar { rads: self.rads.clone(), coeffs: out }.trimmed()
    }

    fn joined(&self, o: &ExtScalar) -> (ExtScalar, ExtScalar) {
        let (tower, a, b) = join(self, o, INTERNAL_DEPTH).expect("quadratic tower exceeded internal depth");
        (ExtScalar { rads: tower.clone(), coeffs: a }, ExtScalar { rads: tower, coeffs: b })
    }
}

impl From<Scalar> for ExtScalar {
    fn from(s: Scalar) -> Self {
        ExtScalar { rads: Vec::new(), coeffs: vec![s] }
    }
}

impl From<&Scalar> for ExtScalar {
    fn from(s: &Scalar) -> Self {
        ExtScalar::from(s.clone())
    }
}

impl From<i64> for ExtScalar {
    fn from(n: i64) -> Self {
        ExtScalar::from(Scalar::int(n))
    }
}

impl PartialEq for ExtScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.rads == other.rads {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.joined(other);
        a.sub_same(&b).is_zero()
    }
}

impl PartialEq<Scalar> for ExtScalar {
    fn eq(&self, other: &Scalar) -> bool {
        self.as_scalar().as_ref() == Some(other)
    }
}

impl Field for ExtScalar {
    fn zero() -> Self {
        ExtScalar::zero()
    }
    fn one() -> Self {
        ExtScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv()
    }
    fn from_i64(n: i64) -> Self {
        ExtScalar::from(n)
    }
}

macro_rules! ext_binop {
    ($tr:ident, $method:ident, $same:ident) => {
        impl<'a> $tr<&'a ExtScalar> for &'a ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: &'a ExtScalar) -> ExtScalar {
                if self.rads == rhs.rads {
                    return self.$same(rhs);
                }
                let (a, b) = self.joined(rhs);
                a.$same(&b)
            }
        }
        impl<'a> $tr<&'a ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: &'a ExtScalar) -> ExtScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: ExtScalar) -> ExtScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<ExtScalar> for &'a ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: ExtScalar) -> ExtScalar {
                self.$method(&rhs)
            }
        }
    };
}

ext_binop!(Add, add, add_same);
ext_binop!(Sub, sub, sub_same);
ext_binop!(Mul, mul, mul_same);

impl<'a> Div<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn div(self, rhs: &'a ExtScalar) -> ExtScalar {
        self * &rhs.try_inv().expect("division by zero")
    }
}

impl Div<ExtScalar> for ExtScalar {
    type Output = ExtScalar;
    fn div(self, rhs: ExtScalar) -> ExtScalar {
        &self / &rhs
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar { rads: self.rads.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

fn coeff_text(c: &Scalar) -> String {
    if !c.is_real() && !c.re.is_zero() {
        format!("({c})")
    } else {
        c.to_string()
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (mask, c) in self.terms() {
            if mask == 0 {
                parts.push(c.to_string());
                continue;
            }
            let mut rad = String::new();
            for (j, r) in self.rads.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    if !rad.is_empty() {
                        rad.push('*');
                    }
                    rad.push_str(&format!("sqrt({r})"));
                }
            }
            let one = Scalar::int(1);
            let term = if *c == one {
                rad
            } else if *c == -&one {
                format!("-{rad}")
            } else {
                format!("{}*{rad}", coeff_text(c))
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if p.starts_with('-') {
                out.push_str(p);
            } else {
                out.push('+');
                out.push_str(p);
            }
        }
        f.write_str(&out)
    }
}
