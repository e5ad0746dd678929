//! Non-unital waved algebras of dimension three.

use std::cmp::Ordering;

use super::low::{cubic_relation, curled2_basis, straight2_type, Straight2};
use super::{
    checked_profile, contradiction, coords, ext_recip, ext_scaled, ext_vec, finish, lift, lin, ratio, recip,
    require_shape, scaled, sub, subalgebra_table, Basis, ClassifyResult, Trace,
};
use crate::algebra::{
    element_shape, find_noncurled_element, square_span, unit, Element, InvariantProfile, Shape, StructureTable,
};
use crate::catalog::{Family, Label};
use crate::error::{Error, Result};
use crate::linalg::{span_rank, Matrix};
use crate::scalar::{scalar_sqrt, ExtScalar, Field, FieldMode, Scalar};

pub fn classify_waved3(a: &StructureTable) -> Result<ClassifyResult> {
    require_shape(a, Shape::Waved)?;
    let profile = checked_profile(a)?;
    let mut trace = Trace::default();
    let (label, basis) = waved3(a, &profile, &mut trace)?;
    finish(a, label, profile, trace, basis)
}

/// Data read off the form `Q` with `xy = Q(x, y)·e` on a complement of
/// `A² = Ke`.
#[derive(Clone, PartialEq, Debug)]
pub struct WavedParameter {
    pub family: Family,
    pub det_q: Scalar,
    pub det_s: Scalar,
    pub det_t: Scalar,
    pub lambda: Scalar,
    pub k_squared: Scalar,
}

pub fn waved_parameter(a: &StructureTable) -> Result<WavedParameter> {
    let sq = square_span(a);
    if a.dim() != 3 || sq.len() != 1 {
        return Err(contradiction("A² is not a line"));
    }
    let e = &sq[0];
    let comp: Vec<Element> = (0..3).map(|i| unit(3, i)).filter(|u| span_rank(&[e.clone(), u.clone()]) == 2).collect();
    let (u1, u2) = (0..comp.len())
        .flat_map(|i| (i + 1..comp.len()).map(move |j| (i, j)))
        .map(|(i, j)| (comp[i].clone(), comp[j].clone()))
        .find(|(x, y)| span_rank(&[e.clone(), x.clone(), y.clone()]) == 3)
        .expect("a complement exists");
    let u = [u1, u2];
    let mut q = [[Scalar::zero(), Scalar::zero()], [Scalar::zero(), Scalar::zero()]];
    for i in 0..2 {
        for j in 0..2 {
            let p = a.mul_vec(&u[i], &u[j]);
            q[i][j] = if p.iter().all(Scalar::is_zero) {
                Scalar::zero()
            } else {
                ratio(&p, e).ok_or_else(|| contradiction("product outside A²"))?
            };
        }
    }
    let half = recip(&Scalar::int(2));
    let s12 = &(&q[0][1] + &q[1][0]) * &half;
    let t12 = &(&q[0][1] - &q[1][0]) * &half;
    let det_q = &(&q[0][0] * &q[1][1]) - &(&q[0][1] * &q[1][0]);
    let det_s = &(&q[0][0] * &q[1][1]) - &(&s12 * &s12);
    let det_t = &t12 * &t12;
    if det_q != &det_s + &det_t {
        return Err(contradiction("det Q differs from det S + det T"));
    }
    if det_q.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let lambda = &det_t / &det_q;
    let four = Scalar::int(4);
    let minus = a.mode() == FieldMode::Real && det_q.real_sign() == Some(Ordering::Less);
    let (family, k_squared) = if minus { (Family::W3_3m, -&(&four * &lambda)) } else { (Family::W3_3, &four * &lambda) };
    Ok(WavedParameter { family, det_q, det_s, det_t, lambda, k_squared })
}

/// Label from the invariants alone.
fn tree_label(a: &StructureTable, p: &InvariantProfile, trace: &mut Trace) -> Result<Label> {
    use Family::*;
    let family = match (p.alpha, p.beta, p.gamma) {
        (1, 2, 2) if !p.commutative => W3_2,
        (1, 2, 2) if !p.square_of_square_zero => W3_4,
        (1, 2, 2) => W3_1,
        (1, 1, 1) => {
            let w = waved_parameter(a)?;
            trace.push(
                "waved-form",
                &[
                    ("detQ", w.det_q.to_string()),
                    ("detS", w.det_s.to_string()),
                    ("detT", w.det_t.to_string()),
                    ("lambda", w.lambda.to_string()),
                    ("k^2", w.k_squared.to_string()),
                ],
            );
            return Label::with_k_squared(w.family, w.k_squared, a.mode());
        }
        (2, 2, _) => W3_5,
        (2, 1, _) => W3_6,
        (3, 1, _) if p.zeropotent_plane => W3_10,
        (3, 0, _) if p.zeropotent_plane => W3_9,
        (3, 1, _) => W3_7,
        (3, 0, _) => W3_8,
        _ => return Err(Error::ProfileNotInCatalog(p.to_string())),
    };
    Ok(Label::fixed(family))
}

pub(crate) fn waved3(a: &StructureTable, profile: &InvariantProfile, trace: &mut Trace) -> Result<(Label, Basis)> {
    let label = tree_label(a, profile, trace)?;
    let (found, rows) = construct(a, &label, trace)?;
    if found != label {
        return Err(contradiction(&format!("invariants give {label} but the construction gives {found}")));
    }
    Ok((label, Basis::Rows(rows)))
}

fn straight_kind(a: &StructureTable, x: &[Scalar]) -> Result<(Straight2, Scalar, Scalar)> {
    let (c, b) = cubic_relation(a, x)?;
    Ok((straight2_type(&b, &c, a.mode()), b, c))
}

fn kind_letter(k: Straight2) -> &'static str {
    match k {
        Straight2::Nil => "a",
        Straight2::Idempotent => "b",
        Straight2::Split => "c",
        Straight2::Dual => "d",
        Straight2::Rotation => "r",
    }
}

/// Builds two straight planes `A' = ⟨f, f²⟩`, `A'' = ⟨g, g²⟩` and works
/// from their intersection.
fn construct(a: &StructureTable, label: &Label, trace: &mut Trace) -> Result<(Label, Vec<Vec<ExtScalar>>)> {
    let f = find_noncurled_element(a).ok_or_else(|| contradiction("no non-curled element"))?;
    let f2 = a.mul_vec(&f, &f);
    let g0 = (0..3)
        .map(|i| unit(3, i))
        .find(|u: &Element| span_rank(&[f.clone(), f2.clone(), u.clone()]) == 3)
        .expect("plane has a complement");
    let g = if element_shape(a, &g0)? == Shape::Curled {
        let sym = lin(&[(Scalar::one(), &a.mul_vec(&f, &g0)), (Scalar::one(), &a.mul_vec(&g0, &f))]);
        let b = coords(&[f.clone(), f2.clone(), g0.clone()], &sym)?[1].clone();
        (1..=4)
            .map(Scalar::int)
            .filter(|l| *l != -&b)
            .map(|l| lin(&[(l, &f), (Scalar::one(), &g0)]))
            .find(|g| element_shape(a, g).map(|s| s != Shape::Curled).unwrap_or(false))
            .ok_or_else(|| contradiction("no non-curled second generator"))?
    } else {
        g0
    };
    let g2 = a.mul_vec(&g, &g);
    let (kf, _, _) = straight_kind(a, &f)?;
    let (kg, _, _) = straight_kind(a, &g)?;
    let m = Matrix::from_rows((0..3).map(|s| vec![f[s].clone(), f2[s].clone(), -&g[s], -&g2[s]]).collect());
    let null = m.nullspace();
    if null.len() != 1 {
        return Err(contradiction("planes do not meet in a line"));
    }
    let u = lin(&[(null[0][0].clone(), &f), (null[0][1].clone(), &f2)]);
    let lambda = ratio(&a.mul_vec(&u, &u), &u).ok_or_else(|| contradiction("intersection is not a subalgebra"))?;
    let pair = format!("{}{}", kind_letter(kf), kind_letter(kg));
    use Straight2::*;
    match (kf, kg) {
        (Nil, Nil) => nil_pair(a, label, &f, &f2, &g, &g2, trace),
        _ if !lambda.is_zero() && matches!(kf, Idempotent | Split) && matches!(kg, Idempotent | Split) => {
            let eps = scaled(&u, &recip(&lambda));
            let xf = left_kernel(a, &eps, &f, &f2)?;
            let xg = left_kernel(a, &eps, &g, &g2)?;
            let plane = vec![xf, xg];
            let sub_t = subalgebra_table(a, &plane)?;
            let (sub_family, local) = curled2_basis(&sub_t, trace)?;
            let family = match sub_family {
                Family::A2_0 => Family::W3_4,
                Family::A2_1 => Family::W3_7,
                _ => Family::W3_8,
            };
            let case = match pair.as_str() {
                "bb" => "waved(bb1)",
                "cc" => "waved(cc3)",
                _ => "waved(bc2)",
            };
            trace.push(case, &[("lambda", lambda.to_string()), ("plane", sub_family.to_string())]);
            let mut rows = vec![eps];
            rows.extend(lift(&plane, &local));
            Ok((Label::fixed(family), rows.iter().map(|r| ext_vec(r)).collect()))
        }
        (Idempotent, Idempotent) if lambda.is_zero() => {
            let p1 = idempotent_of(a, &f)?;
            let p2 = idempotent_of(a, &g)?;
            let plane = vec![p1, p2];
            let sub_t = subalgebra_table(a, &plane)?;
            let (sub_family, local) = curled2_basis(&sub_t, trace)?;
            let family = match sub_family {
                Family::A2_1 => Family::W3_5,
                Family::A2_2 => Family::W3_6,
                _ => return Err(contradiction("idempotents span a null plane")),
            };
            trace.push("waved(bb2)", &[("plane", sub_family.to_string())]);
            let mut rows = vec![u];
            rows.extend(lift(&plane, &local));
            Ok((Label::fixed(family), rows.iter().map(|r| ext_vec(r)).collect()))
        }
        (Dual, Dual) if lambda.is_zero() => {
            let i1 = unit_of(a, &f)?;
            let i2 = unit_of(a, &g)?;
            let fg = a.mul_vec(&i1, &i2);
            let gf = a.mul_vec(&i2, &i1);
            let family = if fg == i1 && gf == i2 {
                Family::W3_9
            } else if fg == i2 && gf == i1 {
                Family::W3_10
            } else {
                return Err(contradiction("identities of the two planes combine unexpectedly"));
            };
            trace.push("waved(dd2)", &[("class", family.to_string())]);
            let rows = [u, i1.clone(), sub(&i2, &i1)];
            Ok((Label::fixed(family), rows.iter().map(|r| ext_vec(r)).collect()))
        }
        _ => Err(Error::InternalContradiction(format!("waved case ({pair}) with lambda = {lambda}"))),
    }
}

/// The line `{x ∈ ⟨p, q⟩ : εx = 0}`.
fn left_kernel(a: &StructureTable, eps: &[Scalar], p: &[Scalar], q: &[Scalar]) -> Result<Element> {
    let ep = a.mul_vec(eps, p);
    let eq = a.mul_vec(eps, q);
    let m = Matrix::from_rows((0..3).map(|s| vec![ep[s].clone(), eq[s].clone()]).collect());
    let null = m.nullspace();
    if null.len() != 1 {
        return Err(contradiction("idempotent does not split its plane"));
    }
    Ok(lin(&[(null[0][0].clone(), p), (null[0][1].clone(), q)]))
}

/// `(x/b)²` for `x³ = b·x²`.
fn idempotent_of(a: &StructureTable, x: &[Scalar]) -> Result<Element> {
    let (c, b) = cubic_relation(a, x)?;
    if !c.is_zero() || b.is_zero() {
        return Err(contradiction("plane is not of idempotent type"));
    }
    let y = scaled(x, &recip(&b));
    Ok(a.mul_vec(&y, &y))
}

/// `(x² − b·x)/c` for `x³ = b·x² + c·x`.
fn unit_of(a: &StructureTable, x: &[Scalar]) -> Result<Element> {
    let (c, b) = cubic_relation(a, x)?;
    if c.is_zero() {
        return Err(contradiction("plane has no identity"));
    }
    let x2 = a.mul_vec(x, x);
    Ok(scaled(&sub(&x2, &scaled(x, &b)), &recip(&c)))
}

#[allow(clippy::too_many_arguments)]
fn nil_pair(
    a: &StructureTable,
    label: &Label,
    f: &Element,
    e: &Element,
    g: &Element,
    g2: &Element,
    trace: &mut Trace,
) -> Result<(Label, Vec<Vec<ExtScalar>>)> {
    let off = || contradiction("nilpotent planes meet off their squares");
    let l = ratio(g2, e).ok_or_else(off)?;
    let prod = |x: &Element, y: &Element| -> Result<Scalar> {
        let p = a.mul_vec(x, y);
        if p.iter().all(Scalar::is_zero) {
            Ok(Scalar::zero())
        } else {
            ratio(&p, e).ok_or_else(off)
        }
    };
    let av = prod(f, g)?;
    let ap = prod(g, f)?;
    let g1 = sub(&scaled(f, &av), g);
    let s = &l - &(&av * &ap);
    let values = [("a", av.to_string()), ("a'", ap.to_string()), ("l", l.to_string())];
    let ext = |rows: Vec<Element>| rows.iter().map(|r| ext_vec(r)).collect::<Vec<_>>();
    if s.is_zero() {
        if av == ap {
            trace.push("waved(aa1)", &values);
            return Ok((Label::fixed(Family::W3_1), ext(vec![e.clone(), g1, f.clone()])));
        }
        trace.push("waved(aa2)", &values);
        let g2n = scaled(&g1, &recip(&(&av - &ap)));
        return Ok((Label::fixed(Family::W3_2), ext(vec![e.clone(), sub(f, &g2n), g2n])));
    }
    let minus = a.mode() == FieldMode::Real && s.real_sign() == Some(Ordering::Less);
    let (family, case, root) = if minus {
        (Family::W3_3m, "waved(aa4)", scalar_sqrt(&-&s, a.mode())?)
    } else {
        (Family::W3_3, "waved(aa3)", scalar_sqrt(&s, a.mode())?)
    };
    let inv = ext_recip(&root);
    let mut k = ExtScalar::from(&av - &ap) * &inv;
    let mut gk = ext_scaled(&g1, &inv);
    if let Some(target) = label.param.as_ref().map(|p| &p.k) {
        if *target != k {
            k = -k;
            gk = gk.into_iter().map(|x| -x).collect();
        }
    }
    trace.push(case, &[values[0].clone(), values[1].clone(), values[2].clone(), ("k", k.to_string())]);
    let k2 = (k.clone() * &k).as_scalar().ok_or_else(|| contradiction("k^2 is irrational"))?;
    let found = Label::with_k_squared(family, k2, a.mode())?;
    Ok((found, vec![ext_vec(e), ext_vec(f), gk]))
}
