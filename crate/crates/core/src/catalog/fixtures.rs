//! Intermediate tables that appear on the way to the canonical forms, with
//! the transformation matrices that carry them there.

use super::{Family, Label};
use crate::algebra::StructureTable;
use crate::linalg::Matrix;
use crate::scalar::{FieldMode, Scalar};

/// Curled two-dimensional table for a solution `(k, ℓ, a, b, c, d)`:
/// `e² = ke`, `f² = ℓf`, `ef = ae + bf`, `fe = ce + df`.
pub fn curled2_table(sol: [u8; 6], mode: FieldMode) -> StructureTable {
    let [k, l, a, b, c, d] = sol.map(i64::from);
    StructureTable::from_products(2, mode, &[(0, 0, &[k, 0]), (1, 1, &[0, l]), (0, 1, &[a, b]), (1, 0, &[c, d])])
}

/// The four tables that turn out isomorphic to `A2_1` or `A2_2`, named
/// `A'2_3` through `A'2_6`.
pub fn primed2_tables(mode: FieldMode) -> Vec<(&'static str, StructureTable)> {
    vec![
        ("A'2_3", curled2_table([1, 0, 0, 0, 0, 1], mode)),
        ("A'2_4", curled2_table([1, 0, 0, 1, 0, 0], mode)),
        ("A'2_5", curled2_table([1, 1, 0, 1, 1, 0], mode)),
        ("A'2_6", curled2_table([1, 1, 1, 0, 0, 1], mode)),
    ]
}

fn t3(mode: FieldMode, products: &[(usize, usize, &[i64])]) -> StructureTable {
    StructureTable::from_products(3, mode, products)
}

fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
}

/// Curled tables met when a two-dimensional subalgebra is extended by an
/// element `g` with `g² ∈ {0, g}`, with their canonical class.
pub fn curled3_intermediates(mode: FieldMode) -> Vec<(&'static str, StructureTable, Family)> {
    use Family::*;
    vec![
        ("c1.1", t3(mode, &[(2, 0, &[1, 0, 0]), (2, 1, &[0, 1, 0]), (2, 2, &[0, 0, 1])]), C3_3),
        ("c1.2", t3(mode, &[(1, 2, &[0, 1, 0]), (2, 0, &[1, 0, 0]), (2, 2, &[0, 0, 1])]), C3_2),
        ("c1.3", t3(mode, &[(0, 2, &[1, 0, 0]), (2, 1, &[0, 1, 0]), (2, 2, &[0, 0, 1])]), C3_2),
        ("c1.4", t3(mode, &[(0, 2, &[1, 0, 0]), (1, 2, &[0, 1, 0]), (2, 2, &[0, 0, 1])]), C3_4),
        ("c2a.1", t3(mode, &[(1, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (2, 1, &[0, 0, 1])]), C3_2),
        ("c2a.2", t3(mode, &[(1, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (1, 2, &[0, 0, 1])]), C3_3),
        (
            "c2b.1",
            t3(
                mode,
                &[
                    (1, 0, &[1, 0, 0]),
                    (1, 1, &[0, 1, 0]),
                    (1, 2, &[0, 0, 1]),
                    (2, 0, &[1, 0, 0]),
                    (2, 1, &[0, 1, 0]),
                    (2, 2, &[0, 0, 1]),
                ],
            ),
            C3_3,
        ),
        (
            "c2b.2",
            t3(
                mode,
                &[
                    (1, 0, &[1, 0, 0]),
                    (1, 1, &[0, 1, 0]),
                    (1, 2, &[0, 1, 0]),
                    (2, 0, &[1, 0, 0]),
                    (2, 1, &[0, 0, 1]),
                    (2, 2, &[0, 0, 1]),
                ],
            ),
            C3_2,
        ),
        ("c3.1", t3(mode, &[(0, 1, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (1, 2, &[0, 0, 1])]), C3_2),
        ("c3.2", t3(mode, &[(0, 1, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (2, 1, &[0, 0, 1])]), C3_4),
        (
            "c3.3",
            t3(
                mode,
                &[
                    (0, 1, &[1, 0, 0]),
                    (0, 2, &[1, 0, 0]),
                    (1, 1, &[0, 1, 0]),
                    (1, 2, &[0, 1, 0]),
                    (2, 1, &[0, 0, 1]),
                    (2, 2, &[0, 0, 1]),
                ],
            ),
            C3_4,
        ),
        (
            "c3.4",
            t3(
                mode,
                &[
                    (0, 1, &[1, 0, 0]),
                    (0, 2, &[1, 0, 0]),
                    (1, 1, &[0, 1, 0]),
                    (1, 2, &[0, 0, 1]),
                    (2, 1, &[0, 1, 0]),
                    (2, 2, &[0, 0, 1]),
                ],
            ),
            C3_2,
        ),
    ]
}

/// A transformation matrix from `source` to `target` that is known in
/// closed form.
#[derive(Clone, Debug)]
pub struct KnownWitness {
    pub name: &'static str,
    pub source: StructureTable,
    pub target: StructureTable,
    pub matrix: Matrix<Scalar>,
}

pub fn known_witnesses() -> Vec<KnownWitness> {
    let real = FieldMode::Real;
    let canon = |f: Family| super::canonical_table(&Label::fixed(f), real).expect("fixed label");
    let primed = primed2_tables(real);
    let swap = m(&[&[0, 1], &[1, 0]]);
    let shear = m(&[&[1, 1], &[0, 1]]);
    let inter = curled3_intermediates(real);
    let find = |name: &str| inter.iter().find(|(n, _, _)| *n == name).expect("fixture").1.clone();
    let w = |name, source, target, matrix| KnownWitness { name, source, target, matrix };
    let mut out = vec![
        w("A2_1 -> A'2_4", canon(Family::A2_1), primed[1].1.clone(), swap.clone()),
        w("A2_2 -> A'2_3", canon(Family::A2_2), primed[0].1.clone(), swap),
        w("A'2_5 -> A2_1", primed[2].1.clone(), canon(Family::A2_1), shear.clone()),
        w("A'2_6 -> A2_2", primed[3].1.clone(), canon(Family::A2_2), shear),
        w("c1.2 -> C3_2", find("c1.2"), canon(Family::C3_2), m(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])),
        w("c1.3 -> C3_2", find("c1.3"), canon(Family::C3_2), m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])),
        w("c2a.2 -> C3_3", find("c2a.2"), canon(Family::C3_3), m(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])),
        w("c2b.1 -> C3_3", find("c2b.1"), canon(Family::C3_3), m(&[&[1, 0, 0], &[0, -1, 1], &[0, 0, 1]])),
        w("c2b.2 -> C3_2", find("c2b.2"), canon(Family::C3_2), m(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, -1]])),
        w("c3.1 -> C3_2", find("c3.1"), canon(Family::C3_2), m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])),
        w("c3.4 -> C3_2", find("c3.4"), canon(Family::C3_2), m(&[&[0, 0, 1], &[0, 1, 0], &[-1, 1, 0]])),
    ];
    for k in [1, 2, 3] {
        let fam = |f, k| super::canonical_table(&Label::with_k(f, Scalar::int(k)), real).expect("rational k");
        let flip = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        out.push(w("W3_3(k) -> W3_3(-k)", fam(Family::W3_3, k), fam_neg(Family::W3_3, k), flip.clone()));
        out.push(w("W3_3m(k) -> W3_3m(-k)", fam(Family::W3_3m, k), fam_neg(Family::W3_3m, k), flip));
        // over C: g -> -ig turns g² = -e into g² = e and gf = ke into gf = ike
        let rotate = Matrix::diag(vec![Scalar::int(1), Scalar::int(1), Scalar::gaussian(0, -1)]);
        let source = fam(Family::W3_3m, k).with_mode(FieldMode::Complex);
        let target = super::canonical_table(&Label::with_k(Family::W3_3, Scalar::gaussian(0, k)), FieldMode::Complex)
            .expect("gaussian k");
        out.push(w("W3_3m(k) -> W3_3(ik)", source, target, rotate));
    }
    out
}

/// Family table with the literal parameter `-k` (not normalized).
fn fam_neg(family: Family, k: i64) -> StructureTable {
    super::family_table(family, Scalar::int(-k), FieldMode::Real)
}
