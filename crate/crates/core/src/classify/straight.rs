//! Non-unital straight algebras of dimension three.

use super::low::{straight2_type, Straight2};
use super::{
    checked_profile, contradiction, coords, ext_recip, ext_scaled, ext_vec, finish, lin, recip, require_shape, sub,
    Basis, ClassifyResult, Trace,
};
use crate::algebra::{find_straight_element, powers, Shape, StructureTable};
use crate::catalog::{Family, Label};
use crate::error::{Error, Result};
use crate::scalar::{scalar_sqrt, Field, Scalar};

pub fn classify_straight3(a: &StructureTable) -> Result<ClassifyResult> {
    require_shape(a, Shape::Straight)?;
    let profile = checked_profile(a)?;
    let mut trace = Trace::default();
    let (label, basis) = straight3(a, &mut trace)?;
    finish(a, label, profile, trace, basis)
}

pub(crate) fn straight3(a: &StructureTable, trace: &mut Trace) -> Result<(Label, Basis)> {
    let h = find_straight_element(a).ok_or_else(|| contradiction("no straight element"))?;
    let p = powers(a, &h, 4);
    let rel = coords(&p[..3], &p[3])?;
    let (c, b, av) = (rel[0].clone(), rel[1].clone(), rel[2].clone());
    let values = [("a", av.to_string()), ("b", b.to_string()), ("c", c.to_string())];
    if !c.is_zero() {
        return Err(Error::InternalContradiction(format!("straight element with h^4 = {av}h^3 + {b}h^2 + {c}h in a non-unital algebra")));
    }
    let (h1, h2, h3) = (&p[0], &p[1], &p[2]);
    let kind = straight2_type(&av, &b, a.mode());
    let (family, basis) = match kind {
        Straight2::Nil => {
            trace.push("straight(i)", &values);
            (Family::S3_1, Basis::rational(vec![h1.clone(), h2.clone(), h3.clone()]))
        }
        Straight2::Idempotent => {
            trace.push("straight(ii)", &values);
            let ia = recip(&av);
            let e = lin(&[(&(&ia * &ia) * &ia, h3)]);
            let f = sub(&lin(&[(ia.clone(), h1)]), &e);
            let g = sub(&lin(&[(&ia * &ia, h2)]), &e);
            (Family::S3_2, Basis::rational(vec![e, f, g]))
        }
        _ => {
            let g = lin(&[(Scalar::one(), h3), (-&av, h2), (-&b, h1)]);
            let ib = recip(&b);
            let e = lin(&[(&(&(&av * &av) + &b) * &(&ib * &ib), h2), (-&(&av * &(&ib * &ib)), h3)]);
            let v = lin(&[(ib.clone(), h3), (-&(&av * &ib), h2)]);
            let w = lin(&[(Scalar::int(2), &v), (-&av, &e)]);
            let d = &(&av * &av) + &(&Scalar::int(4) * &b);
            let (family, case, f) = match kind {
                Straight2::Dual => (Family::S3_4, "straight(iv)", ext_vec(&w)),
                Straight2::Split => (Family::S3_3, "straight(iii)", ext_scaled(&w, &ext_recip(&scalar_sqrt(&d, a.mode())?))),
                _ => (Family::S3_3m, "straight(iii-m)", ext_scaled(&w, &ext_recip(&scalar_sqrt(&-&d, a.mode())?))),
            };
            trace.push(case, &[values[0].clone(), values[1].clone(), values[2].clone(), ("D", d.to_string())]);
            (family, Basis::Rows(vec![ext_vec(&e), f, ext_vec(&g)]))
        }
    };
    Ok((Label::fixed(family), basis))
}
