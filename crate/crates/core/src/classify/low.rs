//! Dimensions one and two.

use super::{
    checked_profile, contradiction, coords, ext_recip, ext_scaled, ext_vec, finish, is_zero_vec, lin, ratio, recip,
    require_dim, scaled, sub, Basis, ClassifyResult, Trace,
};
use crate::algebra::{algebra_shape, find_straight_element, powers, unit, Element, Shape, StructureTable};
use crate::catalog::{canonical_table, curled2_table, enumerate_curled2, primed2_tables, Family, Label};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::{scalar_sqrt, Field, FieldMode, Scalar};

pub fn classify_dim1(a: &StructureTable) -> Result<ClassifyResult> {
    require_dim(a, 1)?;
    let profile = checked_profile(a)?;
    let mut trace = Trace::default();
    let (label, basis) = dim1(a, &mut trace)?;
    finish(a, label, profile, trace, basis)
}

pub fn classify_dim2(a: &StructureTable) -> Result<ClassifyResult> {
    require_dim(a, 2)?;
    let profile = checked_profile(a)?;
    let mut trace = Trace::default();
    let (label, basis) = dim2(a, &mut trace)?;
    finish(a, label, profile, trace, basis)
}

pub(crate) fn dim1(a: &StructureTable, trace: &mut Trace) -> Result<(Label, Basis)> {
    let k = a.get(0, 0, 0).clone();
    trace.push("dim1", &[("k", k.to_string())]);
    if k.is_zero() {
        Ok((Label::fixed(Family::A1_0), Basis::rational(vec![vec![Scalar::one()]])))
    } else {
        Ok((Label::fixed(Family::A1_1), Basis::rational(vec![vec![recip(&k)]])))
    }
}

pub(crate) fn dim2(a: &StructureTable, trace: &mut Trace) -> Result<(Label, Basis)> {
    match algebra_shape(a) {
        Shape::Curled => {
            let (family, rows) = curled2_basis(a, trace)?;
            Ok((Label::fixed(family), Basis::rational(rows)))
        }
        _ => straight2(a, trace),
    }
}

/// Class of a curled two-dimensional table and a basis (rows in the
/// table's coordinates) on which it takes the canonical form.
pub(crate) fn curled2_basis(a: &StructureTable, trace: &mut Trace) -> Result<(Family, Vec<Element>)> {
    let mut basis: Vec<Element> = (0..2).map(|i| unit(2, i)).collect();
    for b in basis.iter_mut() {
        let sq = a.mul_vec(b, b);
        let k = ratio(&sq, b).unwrap_or_else(Scalar::zero);
        if !k.is_zero() && !is_zero_vec(&sq) {
            *b = scaled(b, &recip(&k));
        } else if !is_zero_vec(&sq) {
            return Err(contradiction("curled element with a square off its line"));
        }
    }
    let ef = coords(&basis, &a.mul_vec(&basis[0], &basis[1]))?;
    let fe = coords(&basis, &a.mul_vec(&basis[1], &basis[0]))?;
    let sq: Vec<Scalar> = (0..2).map(|i| ratio(&a.mul_vec(&basis[i], &basis[i]), &basis[i]).unwrap_or_else(Scalar::zero)).collect();
    let bit = |x: &Scalar| {
        if x.is_zero() {
            Some(0u8)
        } else if *x == Scalar::one() {
            Some(1)
        } else {
            None
        }
    };
    let sol: Option<Vec<u8>> = [&sq[0], &sq[1], &ef[0], &ef[1], &fe[0], &fe[1]].into_iter().map(bit).collect();
    let sol: [u8; 6] = sol
        .and_then(|s| s.try_into().ok())
        .ok_or_else(|| contradiction("curled structure constants outside {0, 1}"))?;
    if !enumerate_curled2().contains(&sol) {
        return Err(contradiction("curled tuple is not a solution"));
    }
    let mode = a.mode();
    let table = curled2_table(sol, mode);
    let swap = int_matrix(&[&[0, 1], &[1, 0]]);
    let shear = int_matrix(&[&[1, 1], &[0, 1]]);
    let primed = primed2_tables(mode);
    let mut found = None;
    for family in [Family::A2_0, Family::A2_1, Family::A2_2] {
        if table == canonical_table(&Label::fixed(family), mode)? {
            found = Some((family, family.name(), Matrix::identity(2)));
        }
    }
    let targets = [(Family::A2_2, &swap), (Family::A2_1, &swap), (Family::A2_1, &shear), (Family::A2_2, &shear)];
    for ((name, t), (family, m)) in primed.iter().zip(targets) {
        if table == *t {
            found = Some((family, name, m.clone()));
        }
    }
    let (family, name, m) = found.ok_or_else(|| contradiction("curled tuple without a known class"))?;
    trace.push(
        "curled2",
        &[("tuple", format!("{sol:?}")), ("form", name.to_string()), ("class", family.to_string())],
    );
    // witness to the canonical form is N0⁻¹·M, so the canonical basis is M⁻¹·N0
    let n0 = Matrix::from_rows(basis);
    let rows = (&m.inverse().expect("unimodular") * &n0).to_rows();
    Ok((family, rows))
}

fn int_matrix(rows: &[&[i64]]) -> Matrix<Scalar> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
}

/// `(c, b)` with `x³ = b·x² + c·x`.
pub(crate) fn cubic_relation(a: &StructureTable, x: &[Scalar]) -> Result<(Scalar, Scalar)> {
    let p = powers(a, x, 3);
    let c = coords(&p[..2], &p[2])?;
    Ok((c[0].clone(), c[1].clone()))
}

/// Type of a two-dimensional straight algebra generated by `x`, from
/// `x³ = b·x² + c·x`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Straight2 {
    /// `A2_3`
    Nil,
    /// `A2_4`
    Idempotent,
    /// `A2_5`
    Split,
    /// `A2_5m`
    Rotation,
    /// `A2_6`
    Dual,
}

pub(crate) fn straight2_type(b: &Scalar, c: &Scalar, mode: FieldMode) -> Straight2 {
    if c.is_zero() {
        return if b.is_zero() { Straight2::Nil } else { Straight2::Idempotent };
    }
    let d = &(b * b) + &(&Scalar::int(4) * c);
    if d.is_zero() {
        Straight2::Dual
    } else if mode == FieldMode::Real && d.real_sign() == Some(std::cmp::Ordering::Less) {
        Straight2::Rotation
    } else {
        Straight2::Split
    }
}

fn straight2(a: &StructureTable, trace: &mut Trace) -> Result<(Label, Basis)> {
    let g = find_straight_element(a).ok_or_else(|| contradiction("no straight element"))?;
    let (c, b) = cubic_relation(a, &g)?;
    let kind = straight2_type(&b, &c, a.mode());
    let g2 = a.mul_vec(&g, &g);
    let values = [("b", b.to_string()), ("c", c.to_string())];
    let (family, basis) = match kind {
        Straight2::Nil => {
            trace.push("straight2(a)", &values);
            (Family::A2_3, Basis::rational(vec![g2, g]))
        }
        Straight2::Idempotent => {
            trace.push("straight2(b)", &values);
            let f = scaled(&g, &recip(&b));
            let e = a.mul_vec(&f, &f);
            (Family::A2_4, Basis::rational(vec![e.clone(), sub(&f, &e)]))
        }
        _ => {
            let e = scaled(&sub(&g2, &scaled(&g, &b)), &recip(&c));
            let h = lin(&[(Scalar::int(2), &g), (-&b, &e)]);
            let d = &(&b * &b) + &(&Scalar::int(4) * &c);
            let (family, case, f) = match kind {
                Straight2::Dual => (Family::A2_6, "straight2(d)", ext_vec(&h)),
                Straight2::Split => {
                    (Family::A2_5, "straight2(c)", ext_scaled(&h, &ext_recip(&scalar_sqrt(&d, a.mode())?)))
                }
                _ => (Family::A2_5m, "straight2(r)", ext_scaled(&h, &ext_recip(&scalar_sqrt(&-&d, a.mode())?))),
            };
            trace.push(case, &[values[0].clone(), values[1].clone(), ("D", d.to_string())]);
            (family, Basis::Rows(vec![ext_vec(&e), f]))
        }
    };
    Ok((Label::fixed(family), basis))
}
