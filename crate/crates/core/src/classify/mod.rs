//! Classification pipelines: dispatch by dimension, unitality and shape,
//! then follow the case analysis to a label and, when the coefficients stay
//! quadratic, an explicit transformation matrix.

mod curled;
mod low;
mod straight;
mod unital;
mod waved;

use std::fmt;

use serde::Serialize;

pub use curled::classify_curled3;
pub use low::{classify_dim1, classify_dim2};
pub use straight::classify_straight3;
pub use unital::classify_unital3;
pub use waved::{classify_waved3, waved_parameter, WavedParameter};

use crate::algebra::{
    algebra_shape, find_identity, invariant_profile, satisfies_criterion, Element, InvariantProfile, Shape,
    StructureTable,
};
use crate::catalog::{canonical_ext_table, Label};
use crate::error::{Error, Result};
use crate::linalg::{coordinates, Matrix};
use crate::scalar::{ExtScalar, Field, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum WitnessStatus {
    ExactVerified,
    OmittedCubicRoot,
    OmittedUnsupported,
}

impl fmt::Display for WitnessStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessStatus::ExactVerified => "exact, verified",
            WitnessStatus::OmittedCubicRoot => "omitted: needs a cubic irrationality",
            WitnessStatus::OmittedUnsupported => "omitted: unsupported",
        })
    }
}

/// One case of the derivation, with the scalars it bound.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct TraceStep {
    pub case: String,
    pub values: Vec<(String, String)>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.case)?;
        for (i, (k, v)) in self.values.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { " " } else { ", " })?;
        }
        Ok(())
    }
}

#[derive(Default, Debug)]
pub(crate) struct Trace(Vec<TraceStep>);

impl Trace {
    pub(crate) fn push(&mut self, case: &str, values: &[(&str, String)]) {
        self.0.push(TraceStep {
            case: case.to_string(),
            values: values.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        });
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyResult {
    pub label: Label,
    pub profile: InvariantProfile,
    pub trace: Vec<TraceStep>,
    /// Matrix satisfying the isomorphism equations from the input table to
    /// the canonical table of `label`.
    pub witness: Option<Matrix<ExtScalar>>,
    pub witness_status: WitnessStatus,
}

/// New basis (rows in input coordinates) on which the input table becomes
/// the canonical one, or the reason it is not available.
pub(crate) enum Basis {
    Rows(Vec<Vec<ExtScalar>>),
    Omitted(WitnessStatus),
}

impl Basis {
    pub(crate) fn rational(rows: Vec<Element>) -> Basis {
        Basis::Rows(rows.iter().map(|r| ext_vec(r)).collect())
    }
}

pub fn classify(a: &StructureTable) -> Result<ClassifyResult> {
    let profile = checked_profile(a)?;
    let mut trace = Trace::default();
    let (label, basis) = match a.dim() {
        1 => low::dim1(a, &mut trace)?,
        2 => low::dim2(a, &mut trace)?,
        3 => match find_identity(a) {
            Some(one) => unital::unital3(a, &one, &mut trace)?,
            None => match profile.shape {
                Shape::Curled => curled::curled3(a, &profile, &mut trace)?,
                Shape::Straight => straight::straight3(a, &mut trace)?,
                Shape::Waved => waved::waved3(a, &profile, &mut trace)?,
            },
        },
        d => return Err(Error::UnsupportedDimension(d)),
    };
    finish(a, label, profile, trace, basis)
}

pub(crate) fn checked_profile(a: &StructureTable) -> Result<InvariantProfile> {
    if !(1..=3).contains(&a.dim()) {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    a.check_mode()?;
    invariant_profile(a)
}

pub(crate) fn finish(
    a: &StructureTable,
    label: Label,
    profile: InvariantProfile,
    trace: Trace,
    basis: Basis,
) -> Result<ClassifyResult> {
    let (witness, witness_status) = match basis {
        Basis::Omitted(status) => (None, status),
        Basis::Rows(rows) => {
            let n = Matrix::from_rows(rows);
            let w = n.inverse().ok_or_else(|| contradiction("constructed basis is dependent"))?;
            let target = canonical_ext_table(&label, a.mode())?;
            let ext = a.to_ext();
            if !satisfies_criterion(&ext, &target, &w) {
                return Err(contradiction(&format!("constructed basis does not reach {label}")));
            }
            // a canonical input gets the plain witness
            let w = if ext == target { Matrix::identity(a.dim()) } else { w };
            (Some(w), WitnessStatus::ExactVerified)
        }
    };
    Ok(ClassifyResult { label, profile, trace: trace.0, witness, witness_status })
}

pub(crate) fn contradiction(what: &str) -> Error {
    Error::InternalContradiction(what.to_string())
}

pub(crate) fn require_dim(a: &StructureTable, dim: usize) -> Result<()> {
    if a.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: a.dim() });
    }
    Ok(())
}

/// Shape guard shared by the three-dimensional entry points.
pub(crate) fn require_shape(a: &StructureTable, shape: Shape) -> Result<()> {
    require_dim(a, 3)?;
    if find_identity(a).is_some() || algebra_shape(a) != shape {
        return Err(contradiction(&format!("input is not a non-unital {shape} algebra")));
    }
    Ok(())
}

/// `Σ cᵢ·vᵢ`.
pub(crate) fn lin(terms: &[(Scalar, &[Scalar])]) -> Element {
    let d = terms[0].1.len();
    let mut out = vec![Scalar::zero(); d];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o = &*o + &(c * x);
        }
    }
    out
}

/// Inverse of a scalar already known to be nonzero.
pub(crate) fn recip(x: &Scalar) -> Scalar {
    x.inv().expect("nonzero scalar")
}

pub(crate) fn ext_recip(x: &ExtScalar) -> ExtScalar {
    x.inv().expect("nonzero scalar")
}

pub(crate) fn scaled(v: &[Scalar], c: &Scalar) -> Element {
    v.iter().map(|x| x * c).collect()
}

pub(crate) fn sub(v: &[Scalar], w: &[Scalar]) -> Element {
    v.iter().zip(w).map(|(x, y)| x - y).collect()
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `c` with `v = c·w`, when `w ≠ 0` and `v` is a multiple of `w`.
pub(crate) fn ratio(v: &[Scalar], w: &[Scalar]) -> Option<Scalar> {
    let i = w.iter().position(|x| !x.is_zero())?;
    let c = &v[i] / &w[i];
    v.iter().zip(w).all(|(x, y)| *x == &c * y).then_some(c)
}

pub(crate) fn coords(basis: &[Element], v: &[Scalar]) -> Result<Vec<Scalar>> {
    coordinates(basis, v).ok_or_else(|| contradiction("element outside the expected span"))
}

pub(crate) fn ext_vec(v: &[Scalar]) -> Vec<ExtScalar> {
    v.iter().map(ExtScalar::from).collect()
}

pub(crate) fn ext_scaled(v: &[Scalar], c: &ExtScalar) -> Vec<ExtScalar> {
    v.iter().map(|x| c * &ExtScalar::from(x)).collect()
}

/// Table of the subalgebra spanned by `basis`, when it is closed.
pub(crate) fn subalgebra_table(a: &StructureTable, basis: &[Element]) -> Result<StructureTable> {
    let k = basis.len();
    let mut t = StructureTable::zero(k, a.mode());
    for i in 0..k {
        for j in 0..k {
            let p = a.mul_vec(&basis[i], &basis[j]);
            t.set_product(i, j, &coords(basis, &p)?);
        }
    }
    Ok(t)
}

/// Expresses vectors given in subalgebra coordinates in the ambient basis.
pub(crate) fn lift(basis: &[Element], local: &[Element]) -> Vec<Element> {
    local
        .iter()
        .map(|c| {
            let terms: Vec<(Scalar, &[Scalar])> = c.iter().cloned().zip(basis.iter().map(|b| b.as_slice())).collect();
            lin(&terms)
        })
        .collect()
}
