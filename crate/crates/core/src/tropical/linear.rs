use std::sync::{Arc, OnceLock};

use crate::linalg::{kernel_basis, primitive_from_rationals, rank, IntVector, RatMatrix, Rational};
use crate::poly::{Monomial, Polynomial, Ring};
use crate::{Error, Result};

/// The ideal generated by the linear forms `Σ_j a_ij x_j`, one per row of a
/// `d × n` matrix of full row rank.
#[derive(Debug)]
pub struct LinearIdealModel {
    ring: Arc<Ring>,
    matrix: RatMatrix,
    circuits: OnceLock<Vec<Polynomial>>,
}

impl LinearIdealModel {
    pub fn new(ring: &Arc<Ring>, matrix: RatMatrix) -> Result<Self> {
        if matrix.ncols() != ring.n() {
            return Err(Error::DimensionMismatch { expected: ring.n(), found: matrix.ncols() });
        }
        let r = rank(&matrix);
        if r != matrix.nrows() {
            return Err(Error::RankDeficient { rank: r, expected: matrix.nrows() });
        }
        Ok(LinearIdealModel { ring: ring.clone(), matrix, circuits: OnceLock::new() })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.matrix.rows().iter().map(|row| linear_form(&self.ring, row)).collect()
    }

    /// The circuits, computed on first use.
    pub fn circuits(&self) -> &[Polynomial] {
        self.circuits.get_or_init(|| compute_circuits(&self.ring, &self.matrix))
    }
}

fn linear_form(ring: &Arc<Ring>, coeffs: &[Rational]) -> Polynomial {
    let n = ring.n();
    Polynomial::from_terms(
        ring,
        coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| {
            let mut e = vec![0u32; n];
            e[j] = 1;
            (Monomial::new(e), c.clone())
        }),
    )
}

/// Combinations of `k` out of `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

// A form in the row space supported on S is yA with yA_j = 0 off S. S is
// a circuit support exactly when these forms make up a line and the
// generator uses all of S.
fn compute_circuits(ring: &Arc<Ring>, a: &RatMatrix) -> Vec<Polynomial> {
    let (d, n) = (a.nrows(), a.ncols());
    let mut out = Vec::new();
    for size in 1..=(n + 1).saturating_sub(d).max(1) {
        for s in subsets(n, size) {
            let off: Vec<usize> = (0..n).filter(|j| !s.contains(j)).collect();
            let rows: Vec<Vec<Rational>> =
                off.iter().map(|&j| (0..d).map(|i| a.rows()[i][j].clone()).collect()).collect();
            let ys = if rows.is_empty() {
                (0..d).map(|i| IntVector::unit(d, i)).collect()
            } else {
                kernel_basis(&RatMatrix::new(rows, d).expect("rectangular"))
            };
            if ys.len() != 1 {
                continue;
            }
            let y = ys[0].to_rationals();
            let c: Vec<Rational> = (0..n)
                .map(|j| (0..d).fold(Rational::zero(), |acc, i| &acc + &(&y[i] * &a.rows()[i][j])))
                .collect();
            if s.iter().any(|&j| c[j].is_zero()) {
                continue;
            }
            let mut v = primitive_from_rationals(&c).expect("nonzero form");
            if v.entries().iter().find(|x| !num_traits::Zero::is_zero(*x)).is_some_and(num_traits::Signed::is_negative) {
                v = v.neg();
            }
            out.push(linear_form(ring, &v.to_rationals()));
        }
    }
    out
}

/// The circuits of a linear ideal: its nonzero linear forms of minimal
/// support, primitive with integer coefficients and a positive first
/// coefficient.
pub fn linear_circuits(m: &LinearIdealModel) -> Vec<Polynomial> {
    m.circuits().to_vec()
}

/// Membership in the Bergman fan of the uniform matroid: true when the
/// `d + 1` smallest entries of `w` are equal.
///
/// Panics unless `d < w.len()`.
pub fn uniform_bergman_member(w: &IntVector, d: usize) -> bool {
    assert!(d < w.len(), "need d < n");
    let mut e = w.entries().to_vec();
    e.sort();
    e[0] == e[d]
}
