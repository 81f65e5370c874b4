use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::linalg::{IntVector, Rational};
use crate::{Error, Result};

use super::Cone;

/// A fan given by a set of cones whose faces make up the fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    n: usize,
    cones: Vec<Cone>,
}

impl Fan {
    /// Sorts and deduplicates the cones.
    pub fn new(n: usize, cones: Vec<Cone>) -> Result<Fan> {
        if let Some(c) = cones.iter().find(|c| c.ambient_dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: c.ambient_dim() });
        }
        let set: BTreeSet<Cone> = cones.into_iter().collect();
        Ok(Fan { n, cones: set.into_iter().collect() })
    }

    pub fn empty(n: usize) -> Fan {
        Fan { n, cones: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.cones.iter().map(Cone::dim).max()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.cones.iter().all(|c| Some(c.dim()) == d)
    }

    /// True when `w` lies in the support.
    pub fn contains(&self, w: &IntVector) -> bool {
        self.cones.iter().any(|c| c.contains(w))
    }

    /// Drops cones contained in another listed cone; the support is kept.
    pub fn maximal(&self) -> Fan {
        let mut order: Vec<&Cone> = self.cones.iter().collect();
        order.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
        let mut kept: Vec<Cone> = Vec::new();
        for c in order {
            if !kept.iter().any(|k| k.dim() >= c.dim() && k.contains_cone(c)) {
                kept.push(c.clone());
            }
        }
        Fan::new(self.n, kept).expect("same ambient space")
    }

    /// Pairwise intersections of the cones of both fans, reduced to the
    /// maximal ones.
    pub fn common_refinement(&self, other: &Fan) -> Result<Fan> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let pairs: Vec<(&Cone, &Cone)> =
            self.cones.iter().flat_map(|a| other.cones.iter().map(move |b| (a, b))).collect();
        let cones = pairs.par_iter().map(|(a, b)| a.intersect(b)).collect::<Result<Vec<_>>>()?;
        Ok(Fan::new(self.n, cones)?.maximal())
    }

    /// Coordinate permutation applied to every cone.
    pub fn permuted(&self, images: &[usize]) -> Fan {
        Fan::new(self.n, self.cones.iter().map(|c| c.permuted(images)).collect()).expect("same ambient space")
    }
}

/// Face counts of a pure fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanStatistics {
    pub ambient: usize,
    pub homog_dim: usize,
    pub dim: usize,
    pub simplicial: bool,
    /// Number of faces of dimension `homog_dim + 1 + k` at index `k`.
    pub f_vector: Vec<usize>,
    /// The faces themselves, grouped like `f_vector`, each group sorted.
    pub faces: Vec<Vec<Cone>>,
}

/// Enumerates all faces of the given maximal cones above the lineality
/// space and counts them by dimension.
pub fn fan_statistics(maximal_cones: &Fan, lineality_dim: usize) -> FanStatistics {
    let n = maximal_cones.ambient_dim();
    let dim = maximal_cones.dim().unwrap_or(lineality_dim);
    let levels = dim.saturating_sub(lineality_dim);
    let mut faces: Vec<BTreeSet<Cone>> = vec![BTreeSet::new(); levels];
    for c in maximal_cones.cones() {
        if c.dim() > lineality_dim {
            faces[c.dim() - lineality_dim - 1].insert(c.clone());
        }
    }
    for k in (1..levels).rev() {
        let upper: Vec<Cone> = faces[k].iter().cloned().collect();
        let lower: Vec<Vec<Cone>> = upper.par_iter().map(Cone::facets).collect();
        for fs in lower {
            faces[k - 1].extend(fs);
        }
    }
    let simplicial = maximal_cones.cones().iter().all(|c| c.rays().len() == c.dim() - lineality_dim);
    FanStatistics {
        ambient: n,
        homog_dim: lineality_dim,
        dim,
        simplicial,
        f_vector: faces.iter().map(BTreeSet::len).collect(),
        faces: faces.into_iter().map(|s| s.into_iter().collect()).collect(),
    }
}

/// The slice `{x : (1, x) ∈ C}` of a cone, in the coordinates after the
/// first: `eq·x + eq_const = 0` and `ineq·x + ineq_const ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    pub n: usize,
    pub equations: Vec<(IntVector, BigInt)>,
    pub inequalities: Vec<(IntVector, BigInt)>,
}

impl Polyhedron {
    fn split(v: &IntVector) -> (IntVector, BigInt) {
        let e = v.entries();
        (IntVector::new(e[1..].to_vec()), e[0].clone())
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        let val = |(a, c): &(IntVector, BigInt)| {
            a.entries()
                .iter()
                .zip(x)
                .fold(Rational::from_bigint(c.clone()), |s, (ai, xi)| &s + &(&Rational::from_bigint(ai.clone()) * xi))
        };
        self.equations.iter().all(|e| val(e).is_zero()) && self.inequalities.iter().all(|i| val(i).signum() >= 0)
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        let n = self.n;
        let rows: Vec<IntVector> = self.equations.iter().map(|(a, _)| a.clone()).collect();
        n - crate::linalg::canonical_row_basis(&rows, n).len()
    }
}

/// Intersects every cone with `{w_0 = 1}` and drops the first coordinate.
/// Cones meeting `{w_0 > 0}` only in the origin are dropped.
pub fn restrict_to_unit_first_coordinate(f: &Fan) -> Result<Vec<Polyhedron>> {
    if f.ambient_dim() == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    let mut out = Vec::new();
    for c in f.cones() {
        let north = c.rays().iter().any(|r| r.entries()[0].is_positive())
            || c.lineality().iter().any(|l| !l.entries()[0].is_zero());
        if !north {
            continue;
        }
        out.push(Polyhedron {
            n: f.ambient_dim() - 1,
            equations: c.equations().iter().map(Polyhedron::split).collect(),
            inequalities: c.inequalities().iter().map(Polyhedron::split).collect(),
        });
    }
    Ok(out)
}
