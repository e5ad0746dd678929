use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Element, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::{span_basis, span_rank, Matrix};
use crate::poly::{poly_det, Poly};
use crate::scalar::{scalar_sqrt, ExtScalar, Field, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Curled,
    Waved,
    Straight,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Curled => "curled",
            Shape::Waved => "waved",
            Shape::Straight => "straight",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub commutative: bool,
    pub unital: bool,
    pub shape: Shape,
    pub zeropotent: bool,
    pub square_of_square_zero: bool,
    pub zeropotent_plane: bool,
}

impl fmt::Display for InvariantProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} beta={} gamma={} commutative={} unital={} shape={} zeropotent={} square_of_square_zero={} zeropotent_plane={}",
            self.alpha,
            self.beta,
            self.gamma,
            self.commutative,
            self.unital,
            self.shape,
            self.zeropotent,
            self.square_of_square_zero,
            self.zeropotent_plane
        )
    }
}

pub fn invariant_profile(a: &StructureTable) -> Result<InvariantProfile> {
    let bad = a.check_associativity();
    if !bad.is_empty() {
        return Err(Error::NonAssociative(bad));
    }
    Ok(InvariantProfile {
        alpha: square_span(a).len(),
        beta: left_annihilator(a).len(),
        gamma: right_annihilator(a).len(),
        commutative: is_commutative(a),
        unital: find_identity(a).is_some(),
        shape: algebra_shape(a),
        zeropotent: is_zeropotent(a),
        square_of_square_zero: square_of_square_zero(a),
        zeropotent_plane: zeropotent_plane(a),
    })
}

/// Basis of `A²`.
pub fn square_span(a: &StructureTable) -> Vec<Element> {
    let d = a.dim();
    let products: Vec<Element> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| a.product(i, j)).collect();
    span_basis(&products)
}

/// Basis of `{x : xA = 0}`.
pub fn left_annihilator(a: &StructureTable) -> Vec<Element> {
    annihilator(a, |i, j, s| a.get(i, j, s).clone())
}

/// Basis of `{x : Ax = 0}`.
pub fn right_annihilator(a: &StructureTable) -> Vec<Element> {
    annihilator(a, |i, j, s| a.get(j, i, s).clone())
}

fn annihilator(a: &StructureTable, coeff: impl Fn(usize, usize, usize) -> Scalar) -> Vec<Element> {
    let d = a.dim();
    let mut m = Matrix::zeros(d * d, d);
    for j in 0..d {
        for s in 0..d {
            for i in 0..d {
                m[(j * d + s, i)] = coeff(i, j, s);
            }
        }
    }
    m.nullspace()
}

pub fn is_commutative(a: &StructureTable) -> bool {
    let d = a.dim();
    (0..d).all(|i| (i + 1..d).all(|j| a.product(i, j) == a.product(j, i)))
}

/// The two-sided identity, if any.
pub fn find_identity(a: &StructureTable) -> Option<Element> {
    let d = a.dim();
    // rows: (side, i, s); unknown e_k
    let mut m = Matrix::zeros(2 * d * d, d);
    let mut rhs = vec![Scalar::zero(); 2 * d * d];
    for i in 0..d {
        for s in 0..d {
            let r = i * d + s;
            for k in 0..d {
                m[(r, k)] = a.get(k, i, s).clone();
                m[(d * d + r, k)] = a.get(i, k, s).clone();
            }
            if i == s {
                rhs[r] = Scalar::one();
                rhs[d * d + r] = Scalar::one();
            }
        }
    }
    // the identity is unique when it exists
    m.solve(&rhs)
}

/// Powers `x, x², …, x^n`.
pub fn powers(a: &StructureTable, x: &[Scalar], n: usize) -> Vec<Element> {
    let mut out = vec![x.to_vec()];
    for _ in 1..n {
        let next = a.mul_vec(out.last().unwrap(), x);
        out.push(next);
    }
    out
}

pub fn element_shape(a: &StructureTable, x: &[Scalar]) -> Result<Shape> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: x.len() });
    }
    if x.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroElement);
    }
    Ok(shape_of(a, x))
}

fn shape_of(a: &StructureTable, x: &[Scalar]) -> Shape {
    let d = a.dim();
    let p = powers(a, x, d.max(2));
    if d < 2 || span_rank(&p[..2]) < 2 {
        Shape::Curled
    } else if span_rank(&p[..d]) == d {
        Shape::Straight
    } else {
        Shape::Waved
    }
}

/// Shape decided by a polynomial identity test in the coordinates of a
/// generic element. In dimension two "not curled" already means straight.
pub fn algebra_shape(a: &StructureTable) -> Shape {
    let d = a.dim();
    if d < 2 {
        return Shape::Curled;
    }
    let x: Vec<Poly> = (0..d).map(Poly::var).collect();
    let x2 = poly_mul(a, &x, &x);
    let minors_vanish = (0..d).all(|i| {
        (i + 1..d).all(|j| (&(&x[i] * &x2[j]) - &(&x[j] * &x2[i])).is_zero())
    });
    if minors_vanish {
        return Shape::Curled;
    }
    if d == 2 {
        return Shape::Straight;
    }
    let x3 = poly_mul(a, &x2, &x);
    if poly_det(&[x, x2, x3]).is_zero() {
        Shape::Waved
    } else {
        Shape::Straight
    }
}

fn poly_mul(a: &StructureTable, x: &[Poly], y: &[Poly]) -> Vec<Poly> {
    let d = a.dim();
    let mut out = vec![Poly::zero(); d];
    for i in 0..d {
        for j in 0..d {
            let xy = &x[i] * &y[j];
            if xy.is_zero() {
                continue;
            }
            for (s, o) in out.iter_mut().enumerate() {
                let c = a.get(i, j, s);
                if !c.is_zero() {
                    *o = &*o + &xy.scale(c);
                }
            }
        }
    }
    out
}

/// Nonzero integer vectors with entries in `0..8`, first coordinate most
/// significant.
pub fn grid(dim: usize) -> impl Iterator<Item = Element> {
    let total = 8usize.pow(dim as u32);
    (1..total).map(move |mut n| {
        let mut v = vec![Scalar::zero(); dim];
        for k in (0..dim).rev() {
            v[k] = Scalar::int((n % 8) as i64);
            n /= 8;
        }
        v
    })
}

/// First grid element whose shape equals the algebra's shape: straight
/// when the algebra is straight, non-curled when it is waved.
pub fn find_straight_element(a: &StructureTable) -> Option<Element> {
    match algebra_shape(a) {
        Shape::Curled => None,
        target => grid(a.dim()).find(|x| shape_of(a, x) == target),
    }
}

/// First grid element that is not curled.
pub fn find_noncurled_element(a: &StructureTable) -> Option<Element> {
    grid(a.dim()).find(|x| shape_of(a, x) != Shape::Curled)
}

/// `x² = 0` for all `x`: diagonal products vanish and the table is
/// alternating.
pub fn is_zeropotent(a: &StructureTable) -> bool {
    let d = a.dim();
    (0..d).all(|i| {
        a.product(i, i).iter().all(Scalar::is_zero)
            && (i + 1..d).all(|j| {
                (0..d).all(|s| (a.get(i, j, s) + a.get(j, i, s)).is_zero())
            })
    })
}

/// `(A²)² = 0`.
pub fn square_of_square_zero(a: &StructureTable) -> bool {
    let sq = square_span(a);
    sq.iter().all(|x| sq.iter().all(|y| a.mul_vec(x, y).iter().all(Scalar::is_zero)))
}

/// Whether some 2-dimensional subspace consists of elements with `x² = 0`.
///
/// Each coordinate of `x²` is a quadratic form `Qₛ`. A plane inside the
/// zero set of a nonzero form lies in one of its (at most two) linear
/// factors, so it suffices to test the planes cut out by one nonzero form.
pub fn zeropotent_plane(a: &StructureTable) -> bool {
    let d = a.dim();
    if d < 3 {
        return false;
    }
    let forms: Vec<Matrix<Scalar>> = (0..d)
        .map(|s| {
            let mut m = Matrix::zeros(d, d);
            let half = Scalar::real(crate::scalar::ratio(1, 2));
            for i in 0..d {
                for j in 0..d {
                    m[(i, j)] = (a.get(i, j, s) + a.get(j, i, s)) * &half;
                }
            }
            m
        })
        .collect();
    let Some(q) = forms.iter().find(|m| !m.is_zero()) else {
        return true;
    };
    let kernel = q.nullspace();
    let ext_forms: Vec<Matrix<ExtScalar>> = forms.iter().map(|m| m.map(|x| ExtScalar::from(x))).collect();
    let vanishes = |u: &[ExtScalar], v: &[ExtScalar]| {
        ext_forms.iter().all(|m| {
            bilinear(m, u, u).is_zero() && bilinear(m, v, v).is_zero() && bilinear(m, u, v).is_zero()
        })
    };
    match kernel.len() {
        0 => false,
        2 => {
            let u: Vec<ExtScalar> = kernel[0].iter().map(|x| ExtScalar::from(x)).collect();
            let v: Vec<ExtScalar> = kernel[1].iter().map(|x| ExtScalar::from(x)).collect();
            vanishes(&u, &v)
        }
        _ => {
            // rank two: each factor plane contains the kernel line w
            let w = &kernel[0];
            let (u1, u2) = complement_pair(w);
            let qv = |x: &[Scalar], y: &[Scalar]| -> Scalar {
                let mut acc = Scalar::zero();
                for i in 0..d {
                    for j in 0..d {
                        acc = acc + &x[i] * &q[(i, j)] * &y[j];
                    }
                }
                acc
            };
            let (qa, qb, qc) = (qv(&u1, &u1), qv(&u1, &u2), qv(&u2, &u2));
            let disc = &qb * &qb - &qa * &qc;
            let ext = |v: &[Scalar]| -> Vec<ExtScalar> { v.iter().map(|x| ExtScalar::from(x)).collect() };
            let lin = |s: &ExtScalar, x: &[Scalar], t: &ExtScalar, y: &[Scalar]| -> Vec<ExtScalar> {
                (0..d).map(|i| s * &ExtScalar::from(&x[i]) + t * &ExtScalar::from(&y[i])).collect()
            };
            let Ok(root) = scalar_sqrt(&disc, a.mode()) else {
                return false;
            };
            let candidates: Vec<Vec<ExtScalar>> = if qa.is_zero() {
                let c = ExtScalar::from(&qc);
                let b2 = ExtScalar::from(&(&qb * &Scalar::int(-2)));
                vec![ext(&u1), lin(&c, &u1, &b2, &u2)]
            } else {
                let nb = ExtScalar::from(&-&qb);
                let ea = ExtScalar::from(&qa);
                vec![lin(&(&nb + &root), &u1, &ea, &u2), lin(&(&nb - &root), &u1, &ea, &u2)]
            };
            let w = ext(w);
            candidates.iter().any(|v| vanishes(&w, v))
        }
    }
}

fn bilinear(m: &Matrix<ExtScalar>, x: &[ExtScalar], y: &[ExtScalar]) -> ExtScalar {
    let mut acc = ExtScalar::zero();
    for i in 0..x.len() {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..y.len() {
            if !m[(i, j)].is_zero() && !y[j].is_zero() {
                acc = acc + &(&x[i] * &m[(i, j)]) * &y[j];
            }
        }
    }
    acc
}

/// Two standard basis vectors completing `w` to a basis.
fn complement_pair(w: &[Scalar]) -> (Element, Element) {
    let d = w.len();
    let mut picked = Vec::new();
    let mut current = vec![w.to_vec()];
    for i in 0..d {
        let e = super::unit(d, i);
        current.push(e.clone());
        if span_rank(&current) == current.len() {
            picked.push(e);
        } else {
            current.pop();
        }
    }
    (picked[0].clone(), picked[1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldMode;

    fn t(products: &[(usize, usize, &[i64])]) -> StructureTable {
        StructureTable::from_products(3, FieldMode::Real, products)
    }

    fn v(x: &[i64]) -> Element {
        x.iter().map(|&c| Scalar::int(c)).collect()
    }

    #[test]
    fn element_shapes() {
        let w1 = t(&[(2, 2, &[1, 0, 0])]);
        assert_eq!(element_shape(&w1, &v(&[0, 0, 1])).unwrap(), Shape::Waved);
        let u2 = t(&[(0, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (2, 2, &[0, 0, 1])]);
        assert_eq!(element_shape(&u2, &v(&[1, 2, 3])).unwrap(), Shape::Straight);
        assert_eq!(element_shape(&u2, &v(&[0, 0, 0])), Err(Error::ZeroElement));
        assert_eq!(find_identity(&u2), Some(v(&[1, 1, 1])));
    }

    #[test]
    fn symbolic_shape_matches_hand_expansion() {
        let u0 = t(&[(0, 0, &[1, 0, 0]), (0, 1, &[0, 1, 0]), (1, 0, &[0, 1, 0]), (0, 2, &[0, 0, 1]), (2, 0, &[0, 0, 1])]);
        assert_eq!(algebra_shape(&u0), Shape::Waved);
        let u4 = t(&[
            (0, 0, &[1, 0, 0]),
            (0, 1, &[0, 1, 0]),
            (1, 0, &[0, 1, 0]),
            (0, 2, &[0, 0, 1]),
            (2, 0, &[0, 0, 1]),
            (1, 1, &[0, 0, 1]),
        ]);
        assert_eq!(find_straight_element(&u4), Some(v(&[1, 1, 0])));
        assert_eq!(algebra_shape(&StructureTable::zero(3, FieldMode::Real)), Shape::Curled);
    }

    #[test]
    fn plane_flag_follows_discriminant() {
        // x² = (y² + k yz + z²) e
        let fam = |k: i64| t(&[(1, 1, &[1, 0, 0]), (2, 1, &[k, 0, 0]), (2, 2, &[1, 0, 0])]);
        assert!(!zeropotent_plane(&fam(1)));
        assert!(zeropotent_plane(&fam(2)));
        assert!(zeropotent_plane(&fam(3)));
        assert!(zeropotent_plane(&fam(1).with_mode(FieldMode::Complex)));
    }
}
