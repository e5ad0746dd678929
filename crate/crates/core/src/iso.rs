//! Isomorphism: exact witness checks, decisions through classification,
//! seeded scrambles and a brute-force search over a prime field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{satisfies_criterion, ExtTable, StructureTable};
use crate::catalog::separator;
use crate::classify::{classify, ClassifyResult};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{ExtScalar, Rational, Scalar};

/// Checks the homomorphism equations exactly; the matrix must also be
/// invertible to count as an isomorphism.
pub fn verify_witness(a: &StructureTable, b: &StructureTable, m: &Matrix<ExtScalar>) -> Result<bool> {
    verify_witness_ext(&a.to_ext(), &b.to_ext(), m)
}

pub fn verify_witness_ext(a: &ExtTable, b: &ExtTable, m: &Matrix<ExtScalar>) -> Result<bool> {
    for d in [b.dim(), m.rows(), m.cols()] {
        if d != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: d });
        }
    }
    Ok(m.inverse().is_some() && satisfies_criterion(a, b, m))
}

#[derive(Clone, Debug)]
pub struct IsoResult {
    pub isomorphic: bool,
    pub witness: Option<Matrix<ExtScalar>>,
    /// Name of the first invariant that tells the two apart.
    pub separator: Option<&'static str>,
    pub left: ClassifyResult,
    pub right: ClassifyResult,
}

pub fn are_isomorphic(a: &StructureTable, b: &StructureTable) -> Result<IsoResult> {
    if a.mode() != b.mode() {
        return Err(Error::ModeMismatch);
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    let left = classify(a)?;
    let right = classify(b)?;
    if left.label != right.label {
        let sep = separator(&left.label, &left.profile, &right.label, &right.profile);
        return Ok(IsoResult { isomorphic: false, witness: None, separator: sep, left, right });
    }
    let witness = match (&left.witness, &right.witness) {
        (Some(wa), Some(wb)) => {
            let w = match sign_witness(a, b) {
                Some(w) => w,
                None => wa * &wb.inverse().ok_or(Error::SingularMatrix)?,
            };
            if !verify_witness(a, b, &w)? {
                return Err(Error::InternalContradiction(format!("composed witness fails for {}", left.label)));
            }
            Some(w)
        }
        _ => None,
    };
    Ok(IsoResult { isomorphic: true, witness, separator: None, left, right })
}

/// Identity or a diagonal matrix of signs, when one of them already works;
/// these read better in reports than a composed witness.
fn sign_witness(a: &StructureTable, b: &StructureTable) -> Option<Matrix<ExtScalar>> {
    let d = a.dim();
    (0..1u32 << d).find_map(|mask| {
        let diag = (0..d).map(|i| ExtScalar::from(if mask >> (d - 1 - i) & 1 == 1 { -1 } else { 1 })).collect();
        let m = Matrix::diag(diag);
        verify_witness(a, b, &m).unwrap_or(false).then_some(m)
    })
}

/// Seeded unimodular basis change: integer entries in `-3..=3`, determinant
/// `±1`. Returns the new table and the matrix, which is a witness from `a`
/// to the new table.
pub fn scramble(a: &StructureTable, seed: u64) -> (StructureTable, Matrix<Scalar>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = a.dim();
    loop {
        let m = Matrix::from_rows(
            (0..d).map(|_| (0..d).map(|_| Scalar::int(rng.gen_range(-3..=3))).collect()).collect(),
        );
        let det = m.det();
        if det == Scalar::int(1) || det == Scalar::int(-1) {
            let t = a.change_basis(&m).expect("unimodular matrix is invertible");
            return (t, m);
        }
    }
}

/// Matrix over GF(p) found by the oracle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FFMatrix {
    pub prime: u64,
    pub entries: Vec<Vec<u64>>,
}

/// Largest search space the oracle accepts.
pub const ORACLE_LIMIT: u64 = 50_000_000;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn reduce(x: &Rational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(Error::BadPrime(p));
    }
    let num = x.numer().mod_floor(&pb).to_u64().expect("residue fits");
    let den = den.to_u64().expect("residue fits");
    Ok(num * pow_mod(den, p - 2, p) % p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn reduce_table(t: &StructureTable, p: u64) -> Result<Vec<u64>> {
    t.constants()
        .iter()
        .map(|c| {
            if !c.is_real() {
                return Err(Error::Oracle("Gaussian structure constants are not supported".into()));
            }
            reduce(&c.re, p)
        })
        .collect()
}

fn det_mod(m: &[u64], d: usize, p: u64) -> u64 {
    match d {
        1 => m[0] % p,
        2 => (m[0] * m[3] + p * p - m[1] * m[2] % p) % p,
        _ => {
            let minor = |a: usize, b: usize, c: usize, e: usize| (m[a] * m[e] + p * p - m[b] * m[c] % p) % p;
            let t0 = m[0] * minor(4, 5, 7, 8) % p;
            let t1 = m[1] * minor(3, 5, 6, 8) % p;
            let t2 = m[2] * minor(3, 4, 6, 7) % p;
            (t0 + p - t1 + t2) % p
        }
    }
}

/// First invertible matrix over GF(p), in lexicographic order of its
/// row-major entries, that satisfies the homomorphism equations from `a`
/// to `b` modulo `p`.
pub fn ff_oracle(a: &StructureTable, b: &StructureTable, p: u64) -> Result<Option<FFMatrix>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    if !is_prime(p) {
        return Err(Error::BadPrime(p));
    }
    let d = a.dim();
    let n = (d * d) as u32;
    let total = p.checked_pow(n).filter(|&t| t <= ORACLE_LIMIT).ok_or_else(|| {
        Error::Oracle(format!("search space {p}^{n} is too large"))
    })?;
    let ca = reduce_table(a, p)?;
    let cb = reduce_table(b, p)?;
    let at = |c: &[u64], i: usize, j: usize, s: usize| c[(i * d + j) * d + s];
    let check = |idx: u64| -> bool {
        let mut m = [0u64; 9];
        let mut x = idx;
        for k in (0..n as usize).rev() {
            m[k] = x % p;
            x /= p;
        }
        for i in 0..d {
            for j in 0..d {
                for t in 0..d {
                    let mut lhs = 0;
                    for s in 0..d {
                        lhs += at(&ca, i, j, s) * m[s * d + t];
                    }
                    let mut rhs = 0;
                    for k in 0..d {
                        let mik = m[i * d + k];
                        if mik == 0 {
                            continue;
                        }
                        for l in 0..d {
                            rhs += mik * m[j * d + l] % p * at(&cb, k, l, t);
                        }
                    }
                    if lhs % p != rhs % p {
                        return false;
                    }
                }
            }
        }
        det_mod(&m, d, p) != 0
    };
    let hit = (0..total).into_par_iter().find_first(|&idx| check(idx));
    Ok(hit.map(|idx| {
        let mut flat = vec![0u64; n as usize];
        let mut x = idx;
        for k in (0..n as usize).rev() {
            flat[k] = x % p;
            x /= p;
        }
        FFMatrix { prime: p, entries: flat.chunks(d).map(|r| r.to_vec()).collect() }
    }))
}
