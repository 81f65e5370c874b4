use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;

use crate::groebner::{buchberger, homogeneity_space_of_gb, initial_gb, initial_monomial, witness_from_gb, Ideal};
use crate::linalg::{rank, IntVector, RatMatrix};
use crate::poly::{Polynomial, Ring, Tiebreak, TermOrder};
use crate::polyhedra::{Cone, Fan};
use crate::{Error, Result};

use super::{tropical_hypersurface, tropical_prevariety};

/// How the curve algorithm restarts after a witness is found.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Restart {
    /// Refine the current prevariety by the new hypersurface and keep the
    /// cones already checked.
    #[default]
    Incremental,
    /// Recompute the prevariety of all generators and check every cone again.
    Full,
}

/// A tropical basis of a curve together with the cones of its tropical
/// variety.
#[derive(Clone, Debug)]
pub struct CurveVariety {
    pub basis: Vec<Polynomial>,
    /// Maximal cones of `T(I)`: one per ray, or just the homogeneity space
    /// when there are no rays. Empty when `I` contains a monomial.
    pub cones: Vec<Cone>,
    pub homogeneity: Vec<IntVector>,
}

impl CurveVariety {
    /// The cones that are rays modulo the homogeneity space.
    pub fn rays(&self) -> impl Iterator<Item = &Cone> {
        let h = self.homogeneity.len();
        self.cones.iter().filter(move |c| c.dim() == h + 1)
    }
}

const GENERIC_ATTEMPTS: usize = 8;

fn weight_order(w: &IntVector) -> Result<TermOrder> {
    let w = w.to_i64s().ok_or(Error::WeightOverflow)?;
    Ok(TermOrder::weighted(vec![w], Tiebreak::Degrevlex))
}

/// `Some(witness)` when `in_w(I)` contains a monomial.
fn monomial_test(ring: &Arc<Ring>, gens: &[Polynomial], w: &IntVector) -> Result<Option<Polynomial>> {
    let g = buchberger(ring, gens, &weight_order(w)?)?;
    let init = initial_gb(&g, w)?;
    match initial_monomial(&init)? {
        Some(m) => Ok(Some(witness_from_gb(&g, &m)?)),
        None => Ok(None),
    }
}

/// Splits a line (modulo `h`) into its two half-lines.
fn halves(c: &Cone, h: &[IntVector]) -> Result<Vec<Cone>> {
    let n = c.ambient_dim();
    let hr = rank(&RatMatrix::from_int_rows(h, n)?);
    for e in c.lineality() {
        let mut rows = h.to_vec();
        rows.push(e.clone());
        if rank(&RatMatrix::from_int_rows(&rows, n)?) > hr {
            return Ok(vec![Cone::from_generators(n, std::slice::from_ref(e), h)?, Cone::from_generators(n, &[e.neg()], h)?]);
        }
    }
    Ok(vec![c.clone()])
}

fn candidates(p: &Fan, h: &[IntVector]) -> Result<Vec<Cone>> {
    let mut out = BTreeSet::new();
    for c in p.cones() {
        if c.dim() == h.len() + 1 && c.lineality_dim() > h.len() {
            out.extend(halves(c, h)?);
        } else {
            out.insert(c.clone());
        }
    }
    Ok(out.into_iter().collect())
}

/// Checks one cone: `Ok(None)` if it lies in `T(I)`, else a witness.
fn check_cone<R: Rng>(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    c: &Cone,
    hdim: usize,
    rng: &mut R,
) -> Result<Option<Polynomial>> {
    let eff = c.dim().saturating_sub(hdim);
    let attempts = if eff >= 2 { GENERIC_ATTEMPTS } else { 1 };
    for _ in 0..attempts {
        let w = c.generic_relative_interior_point(rng);
        if let Some(f) = monomial_test(ring, gens, &w)? {
            return Ok(Some(f));
        }
    }
    if eff >= 2 {
        // a curve cannot contain an open piece of a two-dimensional cone
        return Err(Error::NotACurve { dim: c.dim(), homog: hdim });
    }
    Ok(None)
}

/// The tropical curve of a homogeneous ideal given by `gens`, whose
/// homogeneity space is spanned by `h`. Generators must be homogeneous with
/// respect to `h`. No dimension check is made.
pub(crate) fn curve_variety<R: Rng>(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    h: &[IntVector],
    restart: Restart,
    rng: &mut R,
) -> Result<CurveVariety> {
    let mut basis: Vec<Polynomial> = gens.to_vec();
    let mut prevariety = tropical_prevariety(&basis)?;
    let mut verified: BTreeSet<Cone> = BTreeSet::new();
    'restart: loop {
        let cands = candidates(&prevariety, h)?;
        for c in &cands {
            if verified.contains(c) {
                continue;
            }
            match check_cone(ring, gens, c, h.len(), rng)? {
                None => {
                    verified.insert(c.clone());
                }
                Some(f) => {
                    match restart {
                        Restart::Incremental => {
                            prevariety = prevariety.common_refinement(&tropical_hypersurface(&f)?)?;
                        }
                        Restart::Full => {
                            verified.clear();
                            basis.push(f);
                            prevariety = tropical_prevariety(&basis)?;
                            continue 'restart;
                        }
                    }
                    basis.push(f);
                    continue 'restart;
                }
            }
        }
        return Ok(CurveVariety { basis, cones: cands, homogeneity: h.to_vec() });
    }
}

/// A tropical basis of an ideal defining a tropical curve, i.e. a
/// homogeneous ideal with `dim(I) = homog(I) + 1`.
///
/// The input generators are kept (in order) and witnesses are appended.
pub fn tropical_basis_of_curve(i: &Ideal, seed: u64) -> Result<Vec<Polynomial>> {
    Ok(tropical_curve(i, seed, Restart::Incremental)?.basis)
}

/// As [`tropical_basis_of_curve`], also returning the cones of `T(I)`.
pub fn tropical_curve(i: &Ideal, seed: u64, restart: Restart) -> Result<CurveVariety> {
    use rand::SeedableRng;
    if !i.is_homogeneous() {
        return Err(Error::Precondition("the ideal is not homogeneous".into()));
    }
    let gb = i.groebner_basis();
    let h = homogeneity_space_of_gb(gb);
    let dim = i.krull_dimension().unwrap_or(0);
    if dim != h.len() + 1 {
        return Err(Error::NotACurve { dim, homog: h.len() });
    }
    let h_homogeneous = |f: &Polynomial| h.iter().all(|v| f.is_w_homogeneous(v));
    let gens: Vec<Polynomial> = if !i.generators().is_empty() && i.generators().iter().all(h_homogeneous) {
        i.generators().to_vec()
    } else {
        gb.polynomials()
    };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    curve_variety(i.ring(), &gens, &h, restart, &mut rng)
}
