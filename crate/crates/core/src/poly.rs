//! Small exact polynomial toolkit: sparse multivariate polynomials for
//! identity tests, dense univariate polynomials for characteristic
//! polynomials.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Field, Scalar};

pub const MAX_VARS: usize = 6;

pub type Monomial = [u8; MAX_VARS];

/// Sparse polynomial in up to six variables with Gaussian rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term([0; MAX_VARS], c);
        p
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        let mut m = [0; MAX_VARS];
        m[i] = 1;
        let mut p = Poly::zero();
        p.add_term(m, Scalar::int(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t * point[i].pow(e as u32);
                }
            }
            acc = acc + t;
        }
        acc
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m = [0u8; MAX_VARS];
                for i in 0..MAX_VARS {
                    m[i] = m1[i] + m2[i];
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

/// Determinant of a 2×2 or 3×3 matrix of polynomials.
pub fn poly_det(rows: &[Vec<Poly>]) -> Poly {
    match rows.len() {
        1 => rows[0][0].clone(),
        2 => &(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0]),
        3 => {
            let minor = |a: usize, b: usize, c: usize, d: usize| -> Poly {
                &(&rows[1][a] * &rows[2][b]) - &(&rows[1][c] * &rows[2][d])
            };
            let t0 = &rows[0][0] * &minor(1, 2, 2, 1);
            let t1 = &rows[0][1] * &minor(0, 2, 2, 0);
            let t2 = &rows[0][2] * &minor(0, 1, 1, 0);
            &(&t0 - &t1) + &t2
        }
        n => panic!("poly_det supports n <= 3, got {n}"),
    }
}

/// Dense univariate polynomial, coefficients from low to high degree,
/// without trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &Scalar::int(i as i64)).collect())
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().expect("nonzero leading coefficient");
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let q = &rem[top] * &lead_inv;
            let shift = top - dd;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&q * c);
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Complex roots by Durand–Kerner iteration; approximate.
    pub fn approx_roots(&self) -> Vec<(f64, f64)> {
        let Some(n) = self.degree() else { return Vec::new() };
        if n == 0 {
            return Vec::new();
        }
        let m = self.monic();
        let c: Vec<(f64, f64)> = m.coeffs.iter().map(Scalar::to_c64).collect();
        let eval = |z: (f64, f64)| {
            let mut acc = (0.0, 0.0);
            for k in (0..=n).rev() {
                acc = (acc.0 * z.0 - acc.1 * z.1 + c[k].0, acc.0 * z.1 + acc.1 * z.0 + c[k].1);
            }
            acc
        };
        let mut roots: Vec<(f64, f64)> = (0..n)
            .map(|k| {
                let ang = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                (0.9 * ang.cos(), 0.9 * ang.sin())
            })
            .collect();
        for _ in 0..500 {
            let mut delta = 0.0f64;
            for i in 0..n {
                let zi = roots[i];
                let mut den = (1.0, 0.0);
                for (j, zj) in roots.iter().enumerate() {
                    if i != j {
                        let d = (zi.0 - zj.0, zi.1 - zj.1);
                        den = (den.0 * d.0 - den.1 * d.1, den.0 * d.1 + den.1 * d.0);
                    }
                }
                let num = eval(zi);
                let norm = den.0 * den.0 + den.1 * den.1;
                if norm == 0.0 {
                    continue;
                }
                let q = ((num.0 * den.0 + num.1 * den.1) / norm, (num.1 * den.0 - num.0 * den.1) / norm);
                roots[i] = (zi.0 - q.0, zi.1 - q.1);
                delta = delta.max(q.0.abs() + q.1.abs());
            }
            if delta < 1e-15 {
                break;
            }
        }
        roots
    }
}

/// Discriminant of the monic cubic `X³ + pX² + qX + r`.
pub fn cubic_discriminant(p: &Scalar, q: &Scalar, r: &Scalar) -> Scalar {
    let n = |k: i64| Scalar::int(k);
    // p²q² − 4q³ − 4p³r − 27r² + 18pqr
    let p2 = p * p;
    let q2 = q * q;
    &p2 * &q2 - &n(4) * &(&q2 * q) - &n(4) * &(&(&p2 * p) * r) - &n(27) * &(r * r) + &(&n(18) * p) * &(q * r)
}
