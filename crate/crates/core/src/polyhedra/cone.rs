use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::linalg::{canonical_row_basis, kernel_basis, IntVector, Projector, RatMatrix};
use crate::{Error, Result};

use super::dd;

/// A polyhedral cone `{w : E w = 0, A w ≥ 0}` in canonical form.
///
/// The equations are the primitive rows of the reduced echelon basis of the
/// orthogonal complement of the cone's span; the inequalities are the facet
/// normals projected onto that span, made primitive and sorted. Two cones
/// are equal exactly when these fields agree. Extreme rays (modulo the
/// lineality space) and a lineality basis are kept alongside.
#[derive(Clone)]
pub struct Cone {
    n: usize,
    equations: Vec<IntVector>,
    inequalities: Vec<IntVector>,
    rays: Vec<IntVector>,
    lineality: Vec<IntVector>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.equations == other.equations && self.inequalities == other.inequalities
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.equations.hash(state);
        self.inequalities.hash(state);
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.equations, &self.inequalities).cmp(&(other.n, &other.equations, &other.inequalities))
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn tight_sets(ineqs: &[IntVector], rays: &[IntVector]) -> Vec<Vec<bool>> {
    ineqs.iter().map(|a| rays.iter().map(|r| a.dot(r).is_zero()).collect()).collect()
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(x, y)| !x || *y)
}

fn check_len(n: usize, vs: &[IntVector]) -> Result<()> {
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::DimensionMismatch { expected: n, found: v.len() }),
        None => Ok(()),
    }
}

impl Cone {
    /// Canonical form of `{w : eqs·w = 0, ineqs·w ≥ 0}`.
    pub fn new(n: usize, equations: &[IntVector], inequalities: &[IntVector]) -> Result<Cone> {
        check_len(n, equations)?;
        check_len(n, inequalities)?;
        let g = dd::generators(n, equations, inequalities);
        Ok(Self::from_parts(n, inequalities, g.rays, g.lineality))
    }

    /// The cone generated by `rays` plus the linear span of `lineality`.
    pub fn from_generators(n: usize, rays: &[IntVector], lineality: &[IntVector]) -> Result<Cone> {
        check_len(n, rays)?;
        check_len(n, lineality)?;
        let dual = dd::generators(n, lineality, rays);
        Cone::new(n, &dual.lineality, &dual.rays)
    }

    pub fn full_space(n: usize) -> Cone {
        Cone::new(n, &[], &[]).expect("valid")
    }

    pub fn origin(n: usize) -> Cone {
        let eqs: Vec<IntVector> = (0..n).map(|i| IntVector::unit(n, i)).collect();
        Cone::new(n, &eqs, &[]).expect("valid")
    }

    /// Assembles the canonical form from a generator description of the cone
    /// and any valid inequality description containing all facets.
    fn from_parts(n: usize, ineqs: &[IntVector], rays: Vec<IntVector>, lineality: Vec<IntVector>) -> Cone {
        let lineality = canonical_row_basis(&lineality, n);
        let mut span: Vec<IntVector> = lineality.clone();
        span.extend(rays.iter().cloned());
        let equations = if span.is_empty() {
            (0..n).map(|i| IntVector::unit(n, i)).collect()
        } else {
            let k = kernel_basis(&RatMatrix::from_int_rows(&span, n).expect("rectangular"));
            canonical_row_basis(&k, n)
        };
        let lin_proj = Projector::new(&lineality, n);
        let mut rays: Vec<IntVector> =
            rays.iter().map(|r| lin_proj.project_primitive(r).expect("ray outside lineality")).collect();
        rays.sort();
        rays.dedup();

        let tight = tight_sets(ineqs, &rays);
        let implicit: Vec<bool> = tight.iter().map(|t| t.iter().all(|&x| x)).collect();
        let span_proj = Projector::new(&equations, n);
        let mut facets = Vec::new();
        for (i, a) in ineqs.iter().enumerate() {
            if implicit[i] {
                continue;
            }
            let dominated = (0..ineqs.len()).any(|j| {
                !implicit[j] && tight[j] != tight[i] && subset(&tight[i], &tight[j])
            });
            if !dominated {
                facets.push(span_proj.project_primitive(a).expect("facet normal vanishes on span"));
            }
        }
        facets.sort();
        facets.dedup();
        Cone { n, equations, inequalities: facets, rays, lineality }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - self.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn equations(&self) -> &[IntVector] {
        &self.equations
    }

    pub fn inequalities(&self) -> &[IntVector] {
        &self.inequalities
    }

    /// Primitive extreme rays modulo the lineality space, each projected
    /// orthogonally to it, sorted.
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    /// Canonical basis of the lineality space.
    pub fn lineality(&self) -> &[IntVector] {
        &self.lineality
    }

    pub fn is_linear_space(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim() - self.lineality_dim()
    }

    /// Sum of the extreme rays (the origin for a linear space).
    pub fn relative_interior_point(&self) -> IntVector {
        self.rays.iter().fold(IntVector::zeros(self.n), |acc, r| acc.add(r))
    }

    /// A relative interior point with pseudo-random positive ray
    /// coefficients in `[1, 2^32)` and random lineality components.
    pub fn generic_relative_interior_point<R: Rng>(&self, rng: &mut R) -> IntVector {
        let mut p = IntVector::zeros(self.n);
        for r in &self.rays {
            p = p.add(&r.scale(&BigInt::from(rng.gen_range(1u64..1 << 32))));
        }
        for l in &self.lineality {
            let c: i64 = rng.gen_range(-(1i64 << 32) + 1..1i64 << 32);
            p = p.add(&l.scale(&BigInt::from(c)));
        }
        p
    }

    pub fn contains(&self, w: &IntVector) -> bool {
        w.len() == self.n
            && self.equations.iter().all(|e| e.dot(w).is_zero())
            && self.inequalities.iter().all(|a| !a.dot(w).is_negative())
    }

    pub fn contains_in_relative_interior(&self, w: &IntVector) -> bool {
        w.len() == self.n
            && self.equations.iter().all(|e| e.dot(w).is_zero())
            && self.inequalities.iter().all(|a| a.dot(w).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(r))
            && other.lineality.iter().all(|l| self.contains(l) && self.contains(&l.neg()))
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.contains_cone(other) {
            return Ok(other.clone());
        }
        if other.contains_cone(self) {
            return Ok(self.clone());
        }
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        let mut ineqs = self.inequalities.clone();
        ineqs.extend(other.inequalities.iter().cloned());
        Cone::new(self.n, &eqs, &ineqs)
    }

    /// The face where inequality `i` holds with equality.
    pub fn face_of_inequality(&self, i: usize) -> Cone {
        let a = &self.inequalities[i];
        let rays: Vec<IntVector> = self.rays.iter().filter(|r| a.dot(r).is_zero()).cloned().collect();
        let mut eqs = self.equations.clone();
        eqs.push(a.clone());
        let ineqs: Vec<IntVector> =
            self.inequalities.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, b)| b.clone()).collect();
        Self::from_parts(self.n, &ineqs, rays, self.lineality.clone())
    }

    /// All facets, each as a canonical cone of dimension `dim − 1`.
    pub fn facets(&self) -> Vec<Cone> {
        (0..self.inequalities.len()).map(|i| self.face_of_inequality(i)).collect()
    }

    /// Applies a coordinate permutation: entry `i` moves to `images[i]`.
    pub fn permuted(&self, images: &[usize]) -> Cone {
        let p = |vs: &[IntVector]| vs.iter().map(|v| v.permuted(images)).collect::<Vec<_>>();
        let mut inequalities = p(&self.inequalities);
        inequalities.sort();
        let mut rays = p(&self.rays);
        rays.sort();
        Cone {
            n: self.n,
            equations: canonical_row_basis(&p(&self.equations), self.n),
            inequalities,
            rays,
            lineality: canonical_row_basis(&p(&self.lineality), self.n),
        }
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cone")
            .field("n", &self.n)
            .field("equations", &self.equations)
            .field("inequalities", &self.inequalities)
            .field("rays", &self.rays)
            .finish()
    }
}
