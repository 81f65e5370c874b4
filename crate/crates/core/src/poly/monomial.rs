use std::fmt;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use crate::{Error, Result};

pub type Exps = SmallVec<[u32; 12]>;

/// An exponent vector `x^u`.
///
/// The total degree and a support bitmask are cached; the mask gives a cheap
/// necessary condition for divisibility.
#[derive(Clone)]
pub struct Monomial {
    exps: Exps,
    deg: u64,
    mask: u64,
}

fn mask_of(exps: &[u32]) -> u64 {
    let mut m = 0u64;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            m |= 1 << (i % 64);
        }
    }
    m
}

impl Monomial {
    pub fn new(exps: impl Into<Exps>) -> Self {
        let exps = exps.into();
        let deg = exps.iter().map(|&e| e as u64).sum();
        let mask = mask_of(&exps);
        Monomial { exps, deg, mask }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; n], deg: 0, mask: 0 }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e: Exps = smallvec::smallvec![0; n];
        e[i] = 1;
        Self::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Exps::with_capacity(self.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            e.push(a.checked_add(*b)?);
        }
        Some(Monomial { exps: e, deg: self.deg + other.deg, mask: self.mask | other.mask })
    }

    /// Product of two monomials.
    ///
    /// # Panics
    /// On exponent overflow; use [`Monomial::checked_mul`] to handle it.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.checked_mul(other).ok_or(Error::ExponentOverflow)
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let mut e = Exps::with_capacity(self.len());
        for &a in &self.exps {
            e.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial::new(e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
            && self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; only meaningful when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let e: Exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Monomial { mask: mask_of(&e), deg: other.deg - self.deg, exps: e }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect::<Exps>(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.len() <= 64 {
            return self.mask & other.mask == 0;
        }
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `⟨w, u⟩` for a machine-integer weight.
    pub fn weight(&self, w: &[i64]) -> i128 {
        let mut s = 0i128;
        for (&e, &x) in self.exps.iter().zip(w) {
            if e != 0 {
                s += e as i128 * x as i128;
            }
        }
        s
    }

    /// Moves variable `i` to position `images[i]`.
    pub fn permuted(&self, images: &[usize]) -> Monomial {
        let mut e: Exps = smallvec::smallvec![0; self.len()];
        for (i, &x) in self.exps.iter().enumerate() {
            e[images[i]] = x;
        }
        Monomial::new(e)
    }

    /// Exponent vector with a new first coordinate.
    pub fn prepend(&self, e0: u32) -> Monomial {
        let mut e = Exps::with_capacity(self.len() + 1);
        e.push(e0);
        e.extend_from_slice(&self.exps);
        Monomial::new(e)
    }

    pub fn drop_first(&self) -> Monomial {
        Monomial::new(Exps::from_slice(&self.exps[1..]))
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.deg == other.deg && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
