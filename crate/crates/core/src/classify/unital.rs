//! Three-dimensional algebras with an identity.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{
    checked_profile, contradiction, coords, ext_recip, ext_scaled, ext_vec, finish, is_zero_vec, lin, ratio,
    recip, require_dim, scaled, sub, Basis, ClassifyResult, Trace, WitnessStatus,
};
use crate::algebra::{find_identity, is_commutative, unit, Element, StructureTable};
use crate::catalog::{Family, Label};
use crate::error::Result;
use crate::linalg::{span_rank, Matrix};
use crate::poly::{cubic_discriminant, UniPoly};
use crate::scalar::{scalar_sqrt, ExtScalar, Field, FieldMode, Rational, Scalar};

pub fn classify_unital3(a: &StructureTable) -> Result<ClassifyResult> {
    require_dim(a, 3)?;
    let profile = checked_profile(a)?;
    let one = find_identity(a).ok_or_else(|| contradiction("input has no identity"))?;
    let mut trace = Trace::default();
    let (label, basis) = unital3(a, &one, &mut trace)?;
    finish(a, label, profile, trace, basis)
}

pub(crate) fn unital3(a: &StructureTable, one: &Element, trace: &mut Trace) -> Result<(Label, Basis)> {
    // det(1, x, x²) has degree at most three, so it vanishes on the whole
    // grid only when it vanishes identically
    let h = crate::algebra::grid(3).find(|x| span_rank(&[one.clone(), x.clone(), a.mul_vec(x, x)]) == 3);
    match h {
        Some(h) => unitally_straight(a, one, &h, trace),
        None if is_commutative(a) => {
            trace.push("unital(i)", &[]);
            let trace_form: Vec<Scalar> = (0..3).map(|i| (0..3).fold(Scalar::zero(), |acc, s| &acc + a.get(i, s, s))).collect();
            let kernel = Matrix::from_rows(vec![trace_form]).nullspace();
            let mut rows = vec![one.clone()];
            rows.extend(kernel);
            Ok((Label::fixed(Family::U3_0), Basis::rational(rows)))
        }
        None => {
            let e: Vec<Element> = (0..3).map(|i| unit(3, i)).collect();
            let f0 = (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j)))
                .map(|(i, j)| scaled(&sub(&a.mul_vec(&e[i], &e[j]), &a.mul_vec(&e[j], &e[i])), &recip(&Scalar::int(2))))
                .find(|v| !is_zero_vec(v))
                .ok_or_else(|| contradiction("commutator vanishes"))?;
            let x = e
                .iter()
                .find(|v| span_rank(&[one.clone(), f0.clone(), v.to_vec()]) == 3)
                .expect("some basis vector completes the span")
                .clone();
            let fx = a.mul_vec(&f0, &x);
            let xf = a.mul_vec(&x, &f0);
            let two_f = lin(&[(Scalar::int(2), &f0)]);
            let c = ratio(&sub(&fx, &xf), &two_f).ok_or_else(|| contradiction("commutator not on the line of f"))?;
            let av = ratio(&lin(&[(Scalar::one(), &fx), (Scalar::one(), &xf)]), &two_f)
                .ok_or_else(|| contradiction("anticommutator not on the line of f"))?;
            trace.push("unital(ii)", &[("a", av.to_string()), ("c", c.to_string())]);
            let g1 = lin(&[(recip(&c), &x), (-&(&av * &recip(&c)), one)]);
            Ok((Label::fixed(Family::U3_1), Basis::rational(vec![one.clone(), f0, g1])))
        }
    }
}

fn unitally_straight(a: &StructureTable, one: &Element, h: &Element, trace: &mut Trace) -> Result<(Label, Basis)> {
    let h2 = a.mul_vec(h, h);
    let h3 = a.mul_vec(&h2, h);
    let rel = coords(&[one.clone(), h.clone(), h2.clone()], &h3)?;
    let (c, b, av) = (rel[0].clone(), rel[1].clone(), rel[2].clone());
    let p = UniPoly::new(vec![-&c, -&b, -&av, Scalar::one()]);
    let g = p.gcd(&p.derivative());
    let mode = a.mode();
    let values = vec![("a", av.to_string()), ("b", b.to_string()), ("c", c.to_string())];
    // `q(h)` for a monic quadratic or linear factor given by its coefficients
    let eval2 = |s: &ExtScalar, p0: &ExtScalar| -> Vec<ExtScalar> {
        (0..3)
            .map(|i| {
                ExtScalar::from(&h2[i]) - s.clone() * &ExtScalar::from(&h[i]) + p0.clone() * &ExtScalar::from(&one[i])
            })
            .collect()
    };
    match g.degree() {
        Some(0) => {
            let disc = cubic_discriminant(&-&av, &-&b, &-&c);
            let real_pair = mode == FieldMode::Complex || disc.real_sign() == Some(Ordering::Greater);
            let family = if real_pair { Family::U3_2 } else { Family::U3_2m };
            trace.push(
                if real_pair { "unital-straight(i)" } else { "unital-straight(i-m)" },
                &[values[0].clone(), values[1].clone(), values[2].clone(), ("disc", disc.to_string())],
            );
            let Some(r) = base_roots(&p, mode).into_iter().next() else {
                return Ok((Label::fixed(family), Basis::Omitted(WitnessStatus::OmittedCubicRoot)));
            };
            let (quot, _) = p.div_rem(&UniPoly::new(vec![-&r, Scalar::one()]));
            let (pq, qq) = (quot.coeffs()[1].clone(), quot.coeffs()[0].clone());
            if real_pair {
                let half = Scalar::real(Rational::new(1.into(), 2.into()));
                let d = &(&pq * &pq) - &(&Scalar::int(4) * &qq);
                let sq = scalar_sqrt(&d, mode)?;
                let mid = ExtScalar::from(-&(&pq * &half));
                let roots = [ExtScalar::from(r.clone()), mid.clone() + sq.clone() * &ExtScalar::from(&half), mid - sq * &ExtScalar::from(&half)];
                let rows = (0..3)
                    .map(|i| {
                        let (rj, rk) = (&roots[(i + 1) % 3], &roots[(i + 2) % 3]);
                        let den = (roots[i].clone() - rj.clone()) * &(roots[i].clone() - rk.clone());
                        let num = eval2(&(rj.clone() + rk.clone()), &(rj.clone() * rk));
                        num.into_iter().map(|x| x * &ext_recip(&den)).collect()
                    })
                    .collect();
                Ok((Label::fixed(family), Basis::Rows(rows)))
            } else {
                let qa = quot.eval(&r);
                let e: Vec<ExtScalar> =
                    eval2(&ExtScalar::from(-&pq), &ExtScalar::from(&qq)).into_iter().map(|x| x * &ExtScalar::from(recip(&qa))).collect();
                let f: Vec<ExtScalar> = ext_vec(one).into_iter().zip(&e).map(|(u, x)| u - x.clone()).collect();
                let half = Scalar::real(Rational::new(1.into(), 2.into()));
                let shift = lin(&[(Scalar::one(), h), (&pq * &half, one)]);
                // g = (h + p/2)·f, with f written in the basis (1, h, h²)
                let fa = {
                    let fe: Vec<Scalar> = f.iter().map(|x| x.as_scalar().expect("rational idempotent")).collect();
                    a.mul_vec(&shift, &fe)
                };
                let w = &qq - &(&(&pq * &pq) * &(&half * &half));
                let g = ext_scaled(&fa, &ext_recip(&scalar_sqrt(&w, mode)?));
                Ok((Label::fixed(family), Basis::Rows(vec![e, f, g])))
            }
        }
        Some(1) => {
            let alpha = -&g.coeffs()[0];
            let beta = &av - &(&Scalar::int(2) * &alpha);
            trace.push(
                "unital-straight(ii)",
                &[values[0].clone(), values[1].clone(), values[2].clone(), ("alpha", alpha.to_string()), ("beta", beta.to_string())],
            );
            let u = sub(h, &lin(&[(alpha.clone(), one)]));
            let u2 = a.mul_vec(&u, &u);
            let d = &beta - &alpha;
            let e = lin(&[(recip(&(&d * &d)), &u2)]);
            let f = sub(one, &e);
            let gv = a.mul_vec(&u, &f);
            Ok((Label::fixed(Family::U3_3), Basis::rational(vec![e, f, gv])))
        }
        Some(2) => {
            let alpha = &av * &recip(&Scalar::int(3));
            trace.push(
                "unital-straight(iii)",
                &[values[0].clone(), values[1].clone(), values[2].clone(), ("alpha", alpha.to_string())],
            );
            let u = sub(h, &lin(&[(alpha, one)]));
            let u2 = a.mul_vec(&u, &u);
            Ok((Label::fixed(Family::U3_4), Basis::rational(vec![one.clone(), u, u2])))
        }
        _ => Err(contradiction("unexpected characteristic polynomial")),
    }
}

/// Roots of `p` in the base field (Gaussian rationals over C, rationals
/// over R), found from numerical approximations and checked exactly.
pub(crate) fn base_roots(p: &UniPoly, mode: FieldMode) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    for (re, im) in p.approx_roots() {
        if mode == FieldMode::Real && im.abs() > 1e-6 {
            continue;
        }
        let (Some(r), Some(i)) = (approx_rational(re), approx_rational(im)) else { continue };
        let z = if mode == FieldMode::Real { Scalar::real(r) } else { Scalar::new(r, i) };
        if p.eval(&z).is_zero() && !out.contains(&z) {
            out.push(z);
        }
    }
    out
}

/// Best rational approximation with denominator below 10⁶, by continued
/// fractions.
fn approx_rational(x: f64) -> Option<Rational> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::from(0), BigInt::from(1));
    let (mut k0, mut k1) = (BigInt::from(1), BigInt::from(0));
    let mut y = x;
    for _ in 0..40 {
        let q = y.floor();
        let qi = BigInt::from(q as i64);
        let h2 = &qi * &h1 + &h0;
        let k2 = &qi * &k1 + &k0;
        if k2.abs() > BigInt::from(1_000_000) {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - q;
        let approx = h1.to_f64()? / k1.to_f64()?;
        if frac.abs() < 1e-12 || (approx - x).abs() < 1e-9 * x.abs().max(1.0) {
            break;
        }
        y = 1.0 / frac;
    }
    if k1 == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(h1, k1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_reconstruction() {
        assert_eq!(approx_rational(0.75), Some(Rational::new(3.into(), 4.into())));
        assert_eq!(approx_rational(-2.0000000001), Some(Rational::from_integer((-2).into())));
        let p = UniPoly::new(vec![Scalar::int(-6), Scalar::int(11), Scalar::int(-6), Scalar::int(1)]);
        let mut r = base_roots(&p, FieldMode::Real);
        r.sort_by(|x, y| x.to_c64().0.partial_cmp(&y.to_c64().0).unwrap());
        assert_eq!(r, vec![Scalar::int(1), Scalar::int(2), Scalar::int(3)]);
    }
}
