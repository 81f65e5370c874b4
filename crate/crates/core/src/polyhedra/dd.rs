//! Double description: generators of `{x : E x = 0, A x ≥ 0}` by inserting
//! one inequality at a time. Adjacency of rays is decided combinatorially
//! from their sets of tight inequalities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linalg::{kernel_basis, IntVector, RatMatrix};

pub(crate) trait Scalar: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn sign(&self) -> i32;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        // keep headroom so that a product of two entries fits
        b.to_i64().filter(|x| x.unsigned_abs() < (1 << 62))
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn sign(&self) -> i32 {
        self.signum() as i32
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn sign(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> Option<S> {
    let mut s = S::zero();
    for (x, y) in a.iter().zip(b) {
        if x.sign() != 0 && y.sign() != 0 {
            s = s.add(&x.mul(y)?)?;
        }
    }
    Some(s)
}

/// `alpha * x + beta * y`, divided by the gcd of its entries.
fn combine<S: Scalar>(alpha: &S, x: &[S], beta: &S, y: &[S]) -> Option<Vec<S>> {
    let mut v = Vec::with_capacity(x.len());
    for (a, b) in x.iter().zip(y) {
        v.push(alpha.mul(a)?.add(&beta.mul(b)?)?);
    }
    make_primitive(&mut v);
    Some(v)
}

fn make_primitive<S: Scalar>(v: &mut [S]) {
    let mut g = S::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.sign() == 0 {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_exact(&g);
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(m: usize) -> Self {
        Bits(vec![0; m.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn contains_all(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| b & !a == 0)
    }
}

struct Ray<S> {
    v: Vec<S>,
    tight: Bits,
}

/// Generators of a cone: lineality basis and extreme rays (modulo the
/// lineality space, not normalised).
pub(crate) struct Generators {
    pub rays: Vec<IntVector>,
    pub lineality: Vec<IntVector>,
}

pub(crate) fn generators(n: usize, eqs: &[IntVector], ineqs: &[IntVector]) -> Generators {
    let lin0 = if eqs.is_empty() {
        (0..n).map(|i| IntVector::unit(n, i)).collect()
    } else {
        kernel_basis(&RatMatrix::from_int_rows(eqs, n).expect("rectangular"))
    };
    run::<i64>(&lin0, ineqs).unwrap_or_else(|| run::<BigInt>(&lin0, ineqs).expect("exact arithmetic"))
}

fn convert<S: Scalar>(v: &IntVector) -> Option<Vec<S>> {
    v.entries().iter().map(S::from_big).collect()
}

fn run<S: Scalar>(lin0: &[IntVector], ineqs: &[IntVector]) -> Option<Generators> {
    let m = ineqs.len();
    let a: Vec<Vec<S>> = ineqs.iter().map(convert).collect::<Option<_>>()?;
    let mut lin: Vec<Vec<S>> = lin0.iter().map(convert).collect::<Option<_>>()?;
    let mut rays: Vec<Ray<S>> = Vec::new();

    for (k, ak) in a.iter().enumerate() {
        let vals: Vec<S> = lin.iter().map(|l| dot(ak, l)).collect::<Option<_>>()?;
        if let Some(idx) = vals.iter().position(|v| v.sign() != 0) {
            let mut ls = lin.remove(idx);
            let mut al = vals[idx].clone();
            if al.sign() < 0 {
                ls = ls.iter().map(|x| x.neg()).collect::<Option<_>>()?;
                al = al.neg()?;
            }
            let mut new_lin = Vec::with_capacity(lin.len());
            for (j, l) in lin.iter().enumerate() {
                let v = &vals[if j < idx { j } else { j + 1 }];
                if v.sign() == 0 {
                    new_lin.push(l.clone());
                } else {
                    new_lin.push(combine(&al, l, &v.neg()?, &ls)?);
                }
            }
            lin = new_lin;
            for r in rays.iter_mut() {
                let v = dot(ak, &r.v)?;
                if v.sign() != 0 {
                    r.v = combine(&al, &r.v, &v.neg()?, &ls)?;
                }
                r.tight.set(k);
            }
            let mut tight = Bits::new(m);
            for j in 0..k {
                tight.set(j);
            }
            rays.push(Ray { v: ls, tight });
            continue;
        }

        let vr: Vec<S> = rays.iter().map(|r| dot(ak, &r.v)).collect::<Option<_>>()?;
        if vr.iter().all(|v| v.sign() >= 0) {
            for (r, v) in rays.iter_mut().zip(&vr) {
                if v.sign() == 0 {
                    r.tight.set(k);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vr[i].sign() > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vr[i].sign() < 0).collect();
        let mut fresh: Vec<Ray<S>> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.and(&rays[q].tight);
                let adjacent = !(0..rays.len()).any(|r| r != p && r != q && rays[r].tight.contains_all(&common));
                if !adjacent {
                    continue;
                }
                let v = combine(&vr[p], &rays[q].v, &vr[q].neg()?, &rays[p].v)?;
                let mut tight = common;
                tight.set(k);
                fresh.push(Ray { v, tight });
            }
        }
        let mut kept: Vec<Ray<S>> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            match vr[i].sign() {
                0 => {
                    r.tight.set(k);
                    kept.push(r);
                }
                1 => kept.push(r),
                _ => {}
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    let to_iv = |v: &Vec<S>| IntVector::new(v.iter().map(S::to_big).collect());
    Some(Generators { rays: rays.iter().map(|r| to_iv(&r.v)).collect(), lineality: lin.iter().map(to_iv).collect() })
}
