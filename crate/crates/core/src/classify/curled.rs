//! Curled algebras of dimension three.

use super::low::curled2_basis;
use super::{
    checked_profile, contradiction, finish, lift, ratio, recip, require_shape, scaled, subalgebra_table, Basis,
    ClassifyResult, Trace,
};
use crate::algebra::{satisfies_criterion, unit, Element, InvariantProfile, Shape, StructureTable};
use crate::catalog::{canonical_table, curled3_intermediates, expected_invariants, known_witnesses, Family, Label};
use crate::error::Result;
use crate::linalg::{span_rank, Matrix};
use crate::scalar::{Field, Scalar};

pub fn classify_curled3(a: &StructureTable) -> Result<ClassifyResult> {
    require_shape(a, Shape::Curled)?;
    let profile = checked_profile(a)?;
    let mut trace = Trace::default();
    let (label, basis) = curled3(a, &profile, &mut trace)?;
    finish(a, label, profile, trace, basis)
}

const CURLED: [Family; 5] = [Family::C3_0, Family::C3_1, Family::C3_2, Family::C3_3, Family::C3_4];

pub(crate) fn curled3(a: &StructureTable, profile: &InvariantProfile, trace: &mut Trace) -> Result<(Label, Basis)> {
    if profile.unital {
        return Err(contradiction("curled algebra with an identity"));
    }
    let mode = a.mode();
    let mut by_profile = None;
    for family in CURLED {
        if expected_invariants(&Label::fixed(family), mode)? == *profile {
            by_profile = Some(family);
        }
    }
    let family = by_profile.ok_or_else(|| contradiction("curled profile matches no class"))?;
    let (found, rows) = match independent_pair(a) {
        Some((e, f)) => pair_case(a, e, f, trace)?,
        None => plane_case(a, trace)?,
    };
    if found != family {
        return Err(contradiction(&format!("invariants give {family} but the construction gives {found}")));
    }
    Ok((Label::fixed(family), Basis::rational(rows)))
}

/// Scales `x` so that `x² ∈ {0, x}`.
fn normalize(a: &StructureTable, x: Element) -> Result<(Element, bool)> {
    let sq = a.mul_vec(&x, &x);
    let k = ratio(&sq, &x).ok_or_else(|| contradiction("curled element with a square off its line"))?;
    if k.is_zero() {
        Ok((x, false))
    } else {
        Ok((scaled(&x, &recip(&k)), true))
    }
}

/// First `e, f` with coordinates in `0..3` such that `e, f, ef` are
/// independent. `det(e, f, ef)` has degree two in each coordinate, so
/// this grid decides whether such a pair exists at all.
fn independent_pair(a: &StructureTable) -> Option<(Element, Element)> {
    let small: Vec<Element> =
        (1..27).map(|n: i64| vec![Scalar::int(n / 9), Scalar::int(n / 3 % 3), Scalar::int(n % 3)]).collect();
    for e in &small {
        for f in &small {
            if span_rank(&[e.clone(), f.clone(), a.mul_vec(e, f)]) == 3 {
                return Some((e.clone(), f.clone()));
            }
        }
    }
    None
}

fn pair_case(a: &StructureTable, e: Element, f: Element, trace: &mut Trace) -> Result<(Family, Vec<Element>)> {
    let (e, ke) = normalize(a, e)?;
    let (f, kf) = normalize(a, f)?;
    let g = a.mul_vec(&e, &f);
    let minus = |v: &Element, w: &Element| -> Element { v.iter().zip(w).map(|(x, y)| x - y).collect() };
    let (case, family, rows) = match (ke, kf) {
        (false, false) => ("curled(a1)", Family::C3_1, vec![scaled(&g, &Scalar::int(-1)), f, e]),
        (false, true) => ("curled(a2)", Family::C3_2, vec![minus(&e, &g), f, g]),
        (true, false) => ("curled(a3)", Family::C3_2, vec![g.clone(), e, minus(&f, &g)]),
        (true, true) => ("curled(a4)", Family::C3_2, vec![minus(&e, &g), f.clone(), minus(&g, &f)]),
    };
    trace.push(case, &[("e^2", bit(ke)), ("f^2", bit(kf))]);
    Ok((family, rows))
}

fn bit(b: bool) -> String {
    if b { "x" } else { "0" }.to_string()
}

/// Every plane is a subalgebra: extend a classified plane by a third
/// basis vector and read off the intermediate table.
fn plane_case(a: &StructureTable, trace: &mut Trace) -> Result<(Family, Vec<Element>)> {
    let mode = a.mode();
    let plane: Vec<Element> = (0..2).map(|i| unit(3, i)).collect();
    let sub = subalgebra_table(a, &plane)?;
    let (sub_family, local) = curled2_basis(&sub, trace)?;
    let mut rows = lift(&plane, &local);
    let (g, kg) = normalize(a, unit(3, 2))?;
    rows.push(g);
    let table = a.in_basis(&Matrix::from_rows(rows.clone()))?;
    let values = [("plane", sub_family.to_string()), ("g^2", bit(kg))];
    if table.is_zero_table() {
        trace.push("curled(c0)", &values);
        return Ok((Family::C3_0, rows));
    }
    let candidates = candidate_matrices();
    let mut known: Vec<(String, StructureTable, Family)> =
        CURLED.iter().map(|&f| Ok((f.to_string(), canonical_table(&Label::fixed(f), mode)?, f))).collect::<Result<_>>()?;
    known.extend(curled3_intermediates(mode).into_iter().map(|(n, t, f)| (n.to_string(), t, f)));
    let (name, family) = known
        .iter()
        .find(|(_, t, _)| *t == table)
        .map(|(n, _, f)| (n.clone(), *f))
        .ok_or_else(|| contradiction("curled extension table outside the known cases"))?;
    let target = canonical_table(&Label::fixed(family), mode)?;
    let m = candidates
        .iter()
        .find(|m| satisfies_criterion(&table, &target, m))
        .ok_or_else(|| contradiction("no known matrix for the curled extension table"))?;
    let case = match name.split_once('.') {
        Some((group, _)) => format!("curled({group})"),
        None => "curled(c)".to_string(),
    };
    trace.push(&case, &[values[0].clone(), values[1].clone(), ("form", name)]);
    // canonical basis M⁻¹·N0
    let n0 = Matrix::from_rows(rows);
    Ok((family, (&m.inverse().expect("invertible") * &n0).to_rows()))
}

/// Identity, the closed-form matrices for the intermediate tables, and the
/// two matrices found for the tables that land on `C3_4`.
pub(crate) fn candidate_matrices() -> Vec<Matrix<Scalar>> {
    let int = |rows: [[i64; 3]; 3]| Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect());
    let mut out = vec![Matrix::identity(3)];
    out.extend(known_witnesses().into_iter().filter(|w| w.matrix.rows() == 3 && w.name.starts_with('c')).map(|w| w.matrix));
    out.push(int([[1, 0, 0], [0, 0, 1], [0, 1, 0]]));
    out.push(int([[1, 0, 0], [0, 1, 1], [0, 0, 1]]));
    out
}
