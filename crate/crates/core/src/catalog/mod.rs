//! Canonical multiplication tables, their expected invariants and metadata.

mod fixtures;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use fixtures::{curled2_table, curled3_intermediates, known_witnesses, primed2_tables, KnownWitness};

use crate::algebra::{ExtTable, InvariantProfile, Shape, StructureTable, Table};
use crate::error::{Error, Result};
use crate::scalar::{scalar_sqrt, ExtScalar, Field, FieldMode, Scalar};

macro_rules! families {
    ($($v:ident => $name:literal, $dim:literal;)*) => {
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
        pub enum Family {
            $($v,)*
        }

        impl Family {
            pub const ALL: &'static [Family] = &[$(Family::$v,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Family::$v => $name,)*
                }
            }

            pub fn dim(self) -> usize {
                match self {
                    $(Family::$v => $dim,)*
                }
            }
        }
    };
}

families! {
    A1_0 => "A1_0", 1;
    A1_1 => "A1_1", 1;
    A2_0 => "A2_0", 2;
    A2_1 => "A2_1", 2;
    A2_2 => "A2_2", 2;
    A2_3 => "A2_3", 2;
    A2_4 => "A2_4", 2;
    A2_5 => "A2_5", 2;
    A2_5m => "A2_5m", 2;
    A2_6 => "A2_6", 2;
    U3_0 => "U3_0", 3;
    U3_1 => "U3_1", 3;
    U3_2 => "U3_2", 3;
    U3_2m => "U3_2m", 3;
    U3_3 => "U3_3", 3;
    U3_4 => "U3_4", 3;
    C3_0 => "C3_0", 3;
    C3_1 => "C3_1", 3;
    C3_2 => "C3_2", 3;
    C3_3 => "C3_3", 3;
    C3_4 => "C3_4", 3;
    S3_1 => "S3_1", 3;
    S3_2 => "S3_2", 3;
    S3_3 => "S3_3", 3;
    S3_3m => "S3_3m", 3;
    S3_4 => "S3_4", 3;
    W3_1 => "W3_1", 3;
    W3_2 => "W3_2", 3;
    W3_3 => "W3_3", 3;
    W3_3m => "W3_3m", 3;
    W3_4 => "W3_4", 3;
    W3_5 => "W3_5", 3;
    W3_6 => "W3_6", 3;
    W3_7 => "W3_7", 3;
    W3_8 => "W3_8", 3;
    W3_9 => "W3_9", 3;
    W3_10 => "W3_10", 3;
}

impl Family {
    pub fn parse(text: &str) -> Option<Family> {
        let t = text.trim();
        Family::ALL.iter().copied().find(|f| f.name().eq_ignore_ascii_case(t))
    }

    /// Exists only over the reals.
    pub fn real_only(self) -> bool {
        matches!(self, Family::A2_5m | Family::U3_2m | Family::S3_3m | Family::W3_3m)
    }

    pub fn is_parametric(self) -> bool {
        matches!(self, Family::W3_3 | Family::W3_3m)
    }

    pub fn available_in(self, mode: FieldMode) -> bool {
        mode == FieldMode::Real || !self.real_only()
    }

    /// Stored, not computed. Dimensions one and two follow from the
    /// explicit subalgebra lists of the two-dimensional algebras.
    pub fn indecomposable(self) -> bool {
        use Family::*;
        matches!(
            self,
            A1_0 | A1_1
                | A2_1
                | A2_2
                | A2_3
                | A2_5m
                | A2_6
                | U3_0
                | U3_1
                | U3_4
                | C3_1
                | C3_2
                | C3_3
                | C3_4
                | S3_1
                | W3_2
                | W3_3
                | W3_3m
                | W3_9
                | W3_10
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Family parameter: `k²` is always a Gaussian rational, `k` may need a
/// square root.
#[derive(Clone, Debug)]
pub struct FamilyParam {
    pub k_squared: Scalar,
    pub k: ExtScalar,
}

#[derive(Clone, Debug)]
pub struct Label {
    pub family: Family,
    pub param: Option<FamilyParam>,
}

impl PartialEq for Label {
    fn eq(&self, other: &Label) -> bool {
        self.family == other.family
            && self.param.as_ref().map(|p| &p.k_squared) == other.param.as_ref().map(|p| &p.k_squared)
    }
}

impl Eq for Label {}

impl Label {
    pub fn fixed(family: Family) -> Label {
        Label { family, param: None }
    }

    /// Family member from an explicit `k`.
    pub fn with_k(family: Family, k: Scalar) -> Label {
        let k_squared = &k * &k;
        // for real k the half-plane rule picks k >= 0
        let k = if k.in_right_half_plane() { k } else { -&k };
        Label { family, param: Some(FamilyParam { k_squared, k: ExtScalar::from(k) }) }
    }

    /// Family member from `k²`, choosing the normalized square root.
    pub fn with_k_squared(family: Family, k_squared: Scalar, mode: FieldMode) -> Result<Label> {
        let k = scalar_sqrt(&k_squared, mode)?.half_plane_representative();
        Ok(Label { family, param: Some(FamilyParam { k_squared, k }) })
    }

    pub fn is_stub(&self) -> bool {
        self.family.is_parametric() && self.param.is_none()
    }

    pub fn k_squared(&self) -> Option<&Scalar> {
        self.param.as_ref().map(|p| &p.k_squared)
    }

    /// Short form used in file names and JSON, e.g. `W3_3(k^2=4)`.
    pub fn key(&self) -> String {
        match &self.param {
            Some(p) => format!("{}(k^2={})", self.family, p.k_squared),
            None => self.family.name().to_string(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.param {
            Some(p) => write!(f, "{}, k^2 = {}", self.family, p.k_squared),
            None if self.family.is_parametric() => write!(f, "{}(k) family", self.family),
            None => f.write_str(self.family.name()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Metadata {
    pub commutative: bool,
    pub unital: bool,
    pub zeropotent: bool,
    pub indecomposable: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: Label,
    pub table: StructureTable,
    pub expected_profile: InvariantProfile,
    pub metadata: Metadata,
}

type Products = &'static [(usize, usize, &'static [i64])];

fn fixed_products(family: Family) -> Option<Products> {
    use Family::*;
    Some(match family {
        A1_0 => &[],
        A1_1 => &[(0, 0, &[1])],
        A2_0 => &[],
        A2_1 => &[(1, 0, &[1, 0]), (1, 1, &[0, 1])],
        A2_2 => &[(0, 1, &[1, 0]), (1, 1, &[0, 1])],
        A2_3 => &[(1, 1, &[1, 0])],
        A2_4 => &[(0, 0, &[1, 0])],
        A2_5 => &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1]), (1, 1, &[1, 0])],
        A2_5m => &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1]), (1, 1, &[-1, 0])],
        A2_6 => &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1])],
        U3_0 => &[(0, 0, &[1, 0, 0]), (0, 1, &[0, 1, 0]), (1, 0, &[0, 1, 0]), (0, 2, &[0, 0, 1]), (2, 0, &[0, 0, 1])],
        U3_1 => &[
            (0, 0, &[1, 0, 0]),
            (0, 1, &[0, 1, 0]),
            (1, 0, &[0, 1, 0]),
            (0, 2, &[0, 0, 1]),
            (2, 0, &[0, 0, 1]),
            (1, 2, &[0, 1, 0]),
            (2, 1, &[0, -1, 0]),
            (2, 2, &[1, 0, 0]),
        ],
        U3_2 => &[(0, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
        U3_2m => &[(0, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (1, 2, &[0, 0, 1]), (2, 1, &[0, 0, 1]), (2, 2, &[0, -1, 0])],
        U3_3 => &[(0, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (1, 2, &[0, 0, 1]), (2, 1, &[0, 0, 1])],
        U3_4 => &[
            (0, 0, &[1, 0, 0]),
            (0, 1, &[0, 1, 0]),
            (1, 0, &[0, 1, 0]),
            (0, 2, &[0, 0, 1]),
            (2, 0, &[0, 0, 1]),
            (1, 1, &[0, 0, 1]),
        ],
        C3_0 => &[],
        C3_1 => &[(1, 2, &[1, 0, 0]), (2, 1, &[-1, 0, 0])],
        C3_2 => &[(1, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (2, 1, &[0, 0, 1])],
        C3_3 => &[(2, 0, &[1, 0, 0]), (2, 1, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
        C3_4 => &[(0, 2, &[1, 0, 0]), (1, 2, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
        S3_1 => &[(0, 0, &[0, 1, 0]), (0, 1, &[0, 0, 1]), (1, 0, &[0, 0, 1])],
        S3_2 => &[(0, 0, &[1, 0, 0]), (1, 1, &[0, 0, 1])],
        S3_3 => &[(0, 0, &[1, 0, 0]), (0, 1, &[0, 1, 0]), (1, 0, &[0, 1, 0]), (1, 1, &[1, 0, 0])],
        S3_3m => &[(0, 0, &[1, 0, 0]), (0, 1, &[0, 1, 0]), (1, 0, &[0, 1, 0]), (1, 1, &[-1, 0, 0])],
        S3_4 => &[(0, 0, &[1, 0, 0]), (0, 1, &[0, 1, 0]), (1, 0, &[0, 1, 0])],
        W3_1 => &[(2, 2, &[1, 0, 0])],
        W3_2 => &[(2, 1, &[1, 0, 0])],
        W3_4 => &[(0, 0, &[1, 0, 0])],
        W3_5 => &[(2, 1, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
        W3_6 => &[(1, 2, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
        W3_7 => &[(0, 0, &[1, 0, 0]), (2, 1, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
        W3_8 => &[(0, 0, &[1, 0, 0]), (1, 2, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
        W3_9 => &[(0, 1, &[1, 0, 0]), (1, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (2, 1, &[0, 0, 1])],
        W3_10 => &[(0, 1, &[1, 0, 0]), (1, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (1, 2, &[0, 0, 1])],
        W3_3 | W3_3m => return None,
    })
}

/// `f² = e, gf = k·e, g² = ±e`.
fn family_table<F: Field>(family: Family, k: F, mode: FieldMode) -> Table<F> {
    let mut t = Table::zero(3, mode);
    let sign = if family == Family::W3_3m { -F::one() } else { F::one() };
    t.set(1, 1, 0, F::one());
    t.set(2, 1, 0, k);
    t.set(2, 2, 0, sign);
    t
}

/// Table store. The standard instance holds the printed tables; tests can
/// derive altered copies to check that the self-test notices.
#[derive(Clone, Debug)]
pub struct Catalog {
    fixed: BTreeMap<Family, StructureTable>,
}

impl Default for Catalog {
    fn default() -> Self {
        let fixed = Family::ALL
            .iter()
            .filter_map(|&f| {
                fixed_products(f).map(|p| (f, StructureTable::from_products(f.dim(), FieldMode::Complex, p)))
            })
            .collect();
        Catalog { fixed }
    }
}

impl Catalog {
    pub fn standard() -> &'static Catalog {
        static STANDARD: OnceLock<Catalog> = OnceLock::new();
        STANDARD.get_or_init(Catalog::default)
    }

    /// Copy with the stored table of `family` replaced.
    pub fn with_table(mut self, family: Family, table: StructureTable) -> Catalog {
        self.fixed.insert(family, table);
        self
    }

    fn check_label(label: &Label, mode: FieldMode) -> Result<()> {
        if !label.family.available_in(mode) {
            return Err(Error::RealOnlyLabel(label.family.name().to_string()));
        }
        if label.is_stub() {
            return Err(Error::MissingParameter(label.family.name().to_string()));
        }
        Ok(())
    }

    pub fn table(&self, label: &Label, mode: FieldMode) -> Result<StructureTable> {
        Self::check_label(label, mode)?;
        let t = match &label.param {
            Some(p) => {
                let k = p.k.as_scalar().ok_or(Error::IrrationalParameter)?;
                family_table(label.family, k, mode)
            }
            None => self.fixed[&label.family].clone().with_mode(mode),
        };
        t.check_mode()?;
        Ok(t)
    }

    /// Like [`Catalog::table`] but accepts irrational family parameters.
    pub fn ext_table(&self, label: &Label, mode: FieldMode) -> Result<ExtTable> {
        Self::check_label(label, mode)?;
        match &label.param {
            Some(p) => Ok(family_table(label.family, p.k.clone(), mode)),
            None => Ok(self.table(label, mode)?.to_ext()),
        }
    }

    pub fn entry(&self, label: &Label, mode: FieldMode) -> Result<CatalogEntry> {
        Ok(CatalogEntry {
            label: label.clone(),
            table: self.table(label, mode)?,
            expected_profile: expected_invariants(label, mode)?,
            metadata: metadata(label)?,
        })
    }
}

pub fn canonical_table(label: &Label, mode: FieldMode) -> Result<StructureTable> {
    Catalog::standard().table(label, mode)
}

pub fn canonical_ext_table(label: &Label, mode: FieldMode) -> Result<ExtTable> {
    Catalog::standard().ext_table(label, mode)
}

/// All labels of the given dimension; parametric families appear as stubs.
pub fn catalog_list(mode: FieldMode, dim: usize) -> Vec<Label> {
    Family::ALL
        .iter()
        .filter(|f| f.dim() == dim && f.available_in(mode))
        .map(|&f| Label::fixed(f))
        .collect()
}

/// Family members sampled by the test suite.
pub fn sample_k(mode: FieldMode) -> Vec<Scalar> {
    let mut ks = vec![Scalar::int(0), Scalar::int(1), Scalar::int(2)];
    if mode == FieldMode::Complex {
        ks.push(Scalar::gaussian(1, 1));
    }
    ks
}

/// Fixed labels plus the sampled family members.
pub fn sampled_labels(mode: FieldMode, dim: usize) -> Vec<Label> {
    let mut out = Vec::new();
    for l in catalog_list(mode, dim) {
        if l.is_stub() {
            for k in sample_k(mode) {
                out.push(Label::with_k(l.family, k));
            }
        } else {
            out.push(l);
        }
    }
    out
}

pub fn expected_invariants(label: &Label, mode: FieldMode) -> Result<InvariantProfile> {
    use Family::*;
    use Shape::*;
    Catalog::check_label(label, mode)?;
    let p = |alpha, beta, gamma, commutative, unital, shape, zeropotent, sq, plane| InvariantProfile {
        alpha,
        beta,
        gamma,
        commutative,
        unital,
        shape,
        zeropotent,
        square_of_square_zero: sq,
        zeropotent_plane: plane,
    };
    Ok(match label.family {
        A1_0 => p(0, 1, 1, true, false, Curled, true, true, false),
        A1_1 => p(1, 0, 0, true, true, Curled, false, false, false),
        A2_0 => p(0, 2, 2, true, false, Curled, true, true, false),
        A2_1 => p(2, 1, 0, false, false, Curled, false, false, false),
        A2_2 => p(2, 0, 1, false, false, Curled, false, false, false),
        A2_3 => p(1, 1, 1, true, false, Straight, false, true, false),
        A2_4 => p(1, 1, 1, true, false, Straight, false, false, false),
        A2_5 | A2_5m | A2_6 => p(2, 0, 0, true, true, Straight, false, false, false),
        U3_0 => p(3, 0, 0, true, true, Waved, false, false, true),
        U3_1 => p(3, 0, 0, false, true, Waved, false, false, false),
        U3_2 | U3_2m | U3_3 | U3_4 => p(3, 0, 0, true, true, Straight, false, false, false),
        C3_0 => p(0, 3, 3, true, false, Curled, true, true, true),
        C3_1 => p(1, 1, 1, false, false, Curled, true, true, true),
        C3_2 => p(3, 1, 1, false, false, Curled, false, false, true),
        C3_3 => p(3, 2, 0, false, false, Curled, false, false, true),
        C3_4 => p(3, 0, 2, false, false, Curled, false, false, true),
        S3_1 => p(2, 1, 1, true, false, Straight, false, true, true),
        S3_2 | S3_3 | S3_3m => p(2, 1, 1, true, false, Straight, false, false, false),
        S3_4 => p(2, 1, 1, true, false, Straight, false, false, true),
        W3_1 => p(1, 2, 2, true, false, Waved, false, true, true),
        W3_2 => p(1, 2, 2, false, false, Waved, false, true, true),
        W3_4 => p(1, 2, 2, true, false, Waved, false, false, true),
        W3_5 => p(2, 2, 1, false, false, Waved, false, false, true),
        W3_6 => p(2, 1, 2, false, false, Waved, false, false, true),
        W3_7 => p(3, 1, 0, false, false, Waved, false, false, false),
        W3_8 => p(3, 0, 1, false, false, Waved, false, false, false),
        W3_9 => p(3, 0, 1, false, false, Waved, false, false, true),
        W3_10 => p(3, 1, 0, false, false, Waved, false, false, true),
        W3_3 | W3_3m => {
            let k2 = label.k_squared().expect("checked above");
            let commutative = k2.is_zero();
            // the form y² + kyz ± z² splits over the reals unless
            // k² - 4 < 0 in the + case
            let plane = match (mode, label.family) {
                (FieldMode::Real, W3_3) => k2.re >= crate::scalar::rat(4),
                _ => true,
            };
            p(1, 1, 1, commutative, false, Waved, false, true, plane)
        }
    })
}

pub fn metadata(label: &Label) -> Result<Metadata> {
    use Family::*;
    let f = label.family;
    let commutative = match f {
        A2_1 | A2_2 | U3_1 | C3_1 | C3_2 | C3_3 | C3_4 | W3_2 | W3_5 | W3_6 | W3_7 | W3_8 | W3_9 | W3_10 => false,
        W3_3 | W3_3m => label.k_squared().ok_or_else(|| Error::MissingParameter(f.name().to_string()))?.is_zero(),
        _ => true,
    };
    Ok(Metadata {
        commutative,
        unital: matches!(f, A1_1 | A2_5 | A2_5m | A2_6 | U3_0 | U3_1 | U3_2 | U3_2m | U3_3 | U3_4),
        zeropotent: matches!(f, A1_0 | A2_0 | C3_0 | C3_1),
        indecomposable: f.indecomposable(),
    })
}

/// Name of an invariant separating two labels of the same dimension and
/// mode, or `None` when they are the same class.
pub fn separator(a: &Label, pa: &InvariantProfile, b: &Label, pb: &InvariantProfile) -> Option<&'static str> {
    if a == b {
        return None;
    }
    let fields: [(&str, bool); 9] = [
        ("alpha", pa.alpha != pb.alpha),
        ("beta", pa.beta != pb.beta),
        ("gamma", pa.gamma != pb.gamma),
        ("commutative", pa.commutative != pb.commutative),
        ("unital", pa.unital != pb.unital),
        ("shape", pa.shape != pb.shape),
        ("zeropotent", pa.zeropotent != pb.zeropotent),
        ("square_of_square_zero", pa.square_of_square_zero != pb.square_of_square_zero),
        ("zeropotent_plane", pa.zeropotent_plane != pb.zeropotent_plane),
    ];
    if let Some((name, _)) = fields.iter().find(|(_, differs)| *differs) {
        return Some(name);
    }
    use Family::*;
    Some(match (a.family, b.family) {
        (x, y) if x == y => "family_parameter",
        (U3_2 | U3_2m | U3_3 | U3_4, _) => "root_pattern",
        (S3_2 | S3_3 | S3_3m, _) => "residue_algebra",
        (A2_5 | A2_5m | A2_6, _) => "discriminant_sign",
        (W3_3 | W3_3m, _) => "form_determinant_sign",
        _ => "label",
    })
}

/// Solutions `(k, ℓ, a, b, c, d)` of the equations for a curled
/// two-dimensional algebra with `e² = ke`, `f² = ℓf`, `ef = ae + bf`,
/// `fe = ce + df`, scanned in lexicographic order.
pub fn enumerate_curled2() -> Vec<[u8; 6]> {
    let mut out = Vec::new();
    for k in 0..=1u8 {
        for l in 0..=1u8 {
            for a in [0, l] {
                for b in [0, k] {
                    for c in [0, l] {
                        for d in [0, k] {
                            let (ki, li) = (k as i32, l as i32);
                            let (ai, bi, ci, di) = (a as i32, b as i32, c as i32, d as i32);
                            let ok = ai * bi == 0
                                && ci * di == 0
                                && bi * bi == ki * bi
                                && ai * ai == li * ai
                                && ci * ci == li * ci
                                && di * di == ki * di
                                && ki * (ai - ci) == ai * di - bi * ci
                                && li * (di - bi) == ai * di - bi * ci
                                && ki == bi + di
                                && li == ai + ci;
                            if ok && !out.contains(&[k, l, a, b, c, d]) {
                                out.push([k, l, a, b, c, d]);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
