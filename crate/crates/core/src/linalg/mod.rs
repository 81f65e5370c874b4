//! Exact rational and integer linear algebra.

mod rational;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("the zero vector has no primitive representative")]
    ZeroVector,
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
}

/// A vector of arbitrary-precision integers.
///
/// Weight vectors, ray generators and cone normals all use this type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![BigInt::zero(); n])
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        IntVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = BigInt::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Entries as machine integers, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|x| Rational::from_bigint(x.clone())).collect()
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|x| x * c).collect())
    }

    /// Moves entry `i` to position `images[i]`.
    pub fn permuted(&self, images: &[usize]) -> IntVector {
        let mut out = vec![BigInt::zero(); self.len()];
        for (i, x) in self.0.iter().enumerate() {
            out[images[i]] = x.clone();
        }
        IntVector(out)
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector::from_i64s(&v)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Divides `v` by the gcd of its entries. The direction is kept.
pub fn primitive(v: &IntVector) -> Result<IntVector, LinalgError> {
    let g = v.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(LinalgError::ZeroVector);
    }
    if g.is_one() {
        return Ok(v.clone());
    }
    Ok(IntVector(v.0.iter().map(|x| x / &g).collect()))
}

/// Clears denominators of a rational vector and returns the primitive
/// integer vector pointing in the same direction.
pub fn primitive_from_rationals(v: &[Rational]) -> Result<IntVector, LinalgError> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(&x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive(&IntVector(ints))
}

/// A rectangular matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<Vec<Rational>>,
    ncols: usize,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<Rational>>, ncols: usize) -> Result<Self, LinalgError> {
        for r in &rows {
            if r.len() != ncols {
                return Err(LinalgError::LengthMismatch { expected: ncols, found: r.len() });
            }
        }
        Ok(RatMatrix { rows, ncols })
    }

    pub fn from_int_rows(rows: &[IntVector], ncols: usize) -> Result<Self, LinalgError> {
        Self::new(rows.iter().map(IntVector::to_rationals).collect(), ncols)
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], ncols: usize) -> Result<Self, LinalgError> {
        Self::new(
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect(),
            ncols,
        )
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        RatMatrix { rows: vec![vec![Rational::zero(); ncols]; nrows], ncols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Reduced row echelon form; returns the nonzero rows and pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            if !inv.is_one() {
                for x in m[r].iter_mut() {
                    *x *= &inv;
                }
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.ncols {
                        if !m[r][j].is_zero() {
                            let t = &f * &m[r][j];
                            m[i][j] -= &t;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (m, pivots)
    }
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    m.rref().1.len()
}

/// A basis of the null space `{x : m x = 0}`, each vector primitive with its
/// first nonzero entry positive, ordered by free column.
pub fn kernel_basis(m: &RatMatrix) -> Vec<IntVector> {
    let n = m.ncols();
    let (rows, pivots) = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -&row[f];
        }
        let mut iv = primitive_from_rationals(&v).expect("kernel vector is nonzero");
        if iv.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            iv = iv.neg();
        }
        out.push(iv);
    }
    out
}

/// The canonical integer basis of the row space spanned by `vectors`: rows
/// of the reduced echelon form, each scaled to a primitive integer vector.
pub fn canonical_row_basis(vectors: &[IntVector], n: usize) -> Vec<IntVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_int_rows(vectors, n).expect("rectangular");
    let (rows, _) = m.rref();
    rows.iter()
        .map(|r| primitive_from_rationals(r).expect("rref rows are nonzero"))
        .collect()
}

/// Orthogonal projection onto the complement of a subspace.
#[derive(Clone, Debug)]
pub struct Projector {
    ortho: Vec<(Vec<Rational>, Rational)>,
    n: usize,
}

impl Projector {
    /// Projector killing the span of `basis`.
    pub fn new(basis: &[IntVector], n: usize) -> Self {
        let mut ortho: Vec<(Vec<Rational>, Rational)> = Vec::new();
        for b in basis {
            let mut v = b.to_rationals();
            for (q, qq) in &ortho {
                let c = &dot_rat(&v, q) / qq;
                if !c.is_zero() {
                    for (x, y) in v.iter_mut().zip(q) {
                        *x -= &(&c * y);
                    }
                }
            }
            let vv = dot_rat(&v, &v);
            if !vv.is_zero() {
                ortho.push((v, vv));
            }
        }
        Projector { ortho, n }
    }

    pub fn dim_killed(&self) -> usize {
        self.ortho.len()
    }

    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(v.len(), self.n);
        let mut out = v.to_vec();
        for (q, qq) in &self.ortho {
            let c = &dot_rat(v, q) / qq;
            if !c.is_zero() {
                for (x, y) in out.iter_mut().zip(q) {
                    *x -= &(&c * y);
                }
            }
        }
        out
    }

    /// Projects an integer vector and returns its primitive representative,
    /// or `None` when the projection vanishes.
    pub fn project_primitive(&self, v: &IntVector) -> Option<IntVector> {
        if self.ortho.is_empty() {
            return primitive(v).ok();
        }
        primitive_from_rationals(&self.project(&v.to_rationals())).ok()
    }
}

fn dot_rat(a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += &(x * y);
        }
    }
    s
}
