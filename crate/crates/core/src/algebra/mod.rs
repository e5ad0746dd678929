//! Structure-constant tables and the operations that transport them.

mod invariants;

pub use invariants::{
    algebra_shape, element_shape, find_identity, find_noncurled_element, find_straight_element, grid, invariant_profile,
    is_commutative, is_zeropotent, powers, left_annihilator, right_annihilator, square_of_square_zero, square_span, zeropotent_plane,
    InvariantProfile, Shape,
};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{ExtScalar, Field, FieldMode, Scalar};

/// Coordinates of an algebra element in the table's basis.
pub type Element = Vec<Scalar>;

/// Structure constants `c[i][j][s]`: `eᵢeⱼ = Σₛ c[i][j][s]·eₛ`.
#[derive(Clone, PartialEq, Debug)]
pub struct Table<F> {
    dim: usize,
    mode: FieldMode,
    c: Vec<F>,
}

pub type StructureTable = Table<Scalar>;

/// Table whose constants may involve square roots, as needed for some
/// family members.
pub type ExtTable = Table<ExtScalar>;

impl<F: Field> Table<F> {
    pub fn zero(dim: usize, mode: FieldMode) -> Self {
        Table { dim, mode, c: vec![F::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn get(&self, i: usize, j: usize, s: usize) -> &F {
        &self.c[(i * self.dim + j) * self.dim + s]
    }

    pub fn set(&mut self, i: usize, j: usize, s: usize, v: F) {
        let d = self.dim;
        self.c[(i * d + j) * d + s] = v;
    }

    /// Sets `eᵢeⱼ` to the given coordinate vector.
    pub fn set_product(&mut self, i: usize, j: usize, v: &[F]) {
        assert_eq!(v.len(), self.dim);
        for (s, x) in v.iter().enumerate() {
            self.set(i, j, s, x.clone());
        }
    }

    /// Coordinates of `eᵢeⱼ`.
    pub fn product(&self, i: usize, j: usize) -> Vec<F> {
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].to_vec()
    }

    pub fn constants(&self) -> &[F] {
        &self.c
    }

    pub fn with_mode(mut self, mode: FieldMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Table<G> {
        Table { dim: self.dim, mode: self.mode, c: self.c.iter().map(f).collect() }
    }

    /// Bilinear product of coordinate vectors; no dimension checks.
    pub fn mul_vec(&self, x: &[F], y: &[F]) -> Vec<F> {
        let d = self.dim;
        let mut out = vec![F::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi.clone() * yj;
                for (s, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, s);
                    if !c.is_zero() {
                        *o = o.clone() + w.clone() * c;
                    }
                }
            }
        }
        out
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        Ok(self.mul_vec(x, y))
    }

    /// Basis triples `(i, j, k)` with `(eᵢeⱼ)eₖ ≠ eᵢ(eⱼeₖ)`.
    pub fn check_associativity(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        let basis: Vec<Vec<F>> = (0..d).map(|i| unit(d, i)).collect();
        let mut bad = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let ij = self.product(i, j);
                for k in 0..d {
                    let left = self.mul_vec(&ij, &basis[k]);
                    let right = self.mul_vec(&basis[i], &self.product(j, k));
                    if left != right {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn is_associative(&self) -> bool {
        self.check_associativity().is_empty()
    }

    /// The table `B` for which `M` is a transformation matrix from `self`
    /// to `B`, i.e. `φ(eₛ) = Σₜ mₛₜ fₜ` satisfies the homomorphism
    /// equations.
    pub fn change_basis(&self, m: &Matrix<F>) -> Result<Table<F>> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: m.rows() });
        }
        let n = m.inverse().ok_or(Error::SingularMatrix)?;
        Ok(self.transport(&n, m))
    }

    /// The table of the same algebra on the basis whose rows (in current
    /// coordinates) are the rows of `n`.
    pub fn in_basis(&self, n: &Matrix<F>) -> Result<Table<F>> {
        if n.rows() != self.dim || n.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: n.rows() });
        }
        let m = n.inverse().ok_or(Error::SingularMatrix)?;
        Ok(self.transport(n, &m))
    }

    fn transport(&self, n: &Matrix<F>, m: &Matrix<F>) -> Table<F> {
        let d = self.dim;
        let rows: Vec<Vec<F>> = (0..d).map(|a| n.row(a).to_vec()).collect();
        let mut out = Table::zero(d, self.mode);
        for a in 0..d {
            for b in 0..d {
                let p = self.mul_vec(&rows[a], &rows[b]);
                out.set_product(a, b, &m.left_apply(&p));
            }
        }
        out
    }
}

impl Table<Scalar> {
    /// Builds a table from nested `c[i][j][s]`.
    pub fn from_nested(mode: FieldMode, c: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = c.len();
        if !(1..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        let mut t = Table::zero(dim, mode);
        for (i, row) in c.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
                }
                t.set_product(i, j, &v);
            }
        }
        t.check_mode()?;
        Ok(t)
    }

    /// Builds a table from the nonzero products `(i, j, coords)`.
    pub fn from_products(dim: usize, mode: FieldMode, products: &[(usize, usize, &[i64])]) -> Self {
        let mut t = Table::zero(dim, mode);
        for &(i, j, v) in products {
            let v: Vec<Scalar> = v.iter().map(|&x| Scalar::int(x)).collect();
            t.set_product(i, j, &v);
        }
        t
    }

    pub fn nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.product(i, j)).collect()).collect()
    }

    pub fn check_mode(&self) -> Result<()> {
        if self.mode == FieldMode::Real && self.c.iter().any(|x| !x.is_real()) {
            return Err(Error::RealModeTableWithComplexEntries);
        }
        Ok(())
    }

    pub fn to_ext(&self) -> ExtTable {
        self.map(|x| ExtScalar::from(x))
    }

    /// Block-diagonal table of `A ⊕ B`.
    pub fn direct_sum(&self, other: &StructureTable) -> Result<StructureTable> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        let (p, q) = (self.dim, other.dim);
        let mut t = Table::zero(p + q, self.mode);
        for i in 0..p {
            for j in 0..p {
                for s in 0..p {
                    t.set(i, j, s, self.get(i, j, s).clone());
                }
            }
        }
        for i in 0..q {
            for j in 0..q {
                for s in 0..q {
                    t.set(p + i, p + j, p + s, other.get(i, j, s).clone());
                }
            }
        }
        Ok(t)
    }

    pub fn is_zero_table(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }
}

impl Table<ExtScalar> {
    /// The Gaussian-rational table, when no constant involves a radical.
    pub fn to_scalar(&self) -> Option<StructureTable> {
        let c: Option<Vec<Scalar>> = self.c.iter().map(ExtScalar::as_scalar).collect();
        Some(Table { dim: self.dim, mode: self.mode, c: c? })
    }
}

pub fn unit<F: Field>(dim: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[i] = F::one();
    v
}

/// Checks the homomorphism equations for `M` from `a` to `b`:
/// `Σₛ αᵢⱼˢ mₛₜ = Σₖₗ βₖₗᵗ mᵢₖ mⱼₗ` for all `t, i, j`.
pub fn satisfies_criterion<F: Field>(a: &Table<F>, b: &Table<F>, m: &Matrix<F>) -> bool {
    let d = a.dim();
    let rows: Vec<Vec<F>> = (0..d).map(|i| m.row(i).to_vec()).collect();
    for i in 0..d {
        for j in 0..d {
            let lhs = m.left_apply(&a.product(i, j));
            let rhs = b.mul_vec(&rows[i], &rows[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
