use rayon::prelude::*;

use crate::linalg::IntVector;
use crate::poly::{Monomial, Polynomial};
use crate::polyhedra::{Cone, Fan};
use crate::{Error, Result};

fn exponent_difference(a: &Monomial, b: &Monomial) -> IntVector {
    IntVector::from_i64s(&a.exps().iter().zip(b.exps()).map(|(&x, &y)| x as i64 - y as i64).collect::<Vec<_>>())
}

/// Cones whose union is `T(f)`: the facets of the normal cones at the
/// vertices of the Newton polytope. A monomial gives the empty fan.
pub fn tropical_hypersurface(f: &Polynomial) -> Result<Fan> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.n();
    let support: Vec<&Monomial> = f.support().collect();
    let normal_cones = support
        .par_iter()
        .map(|v| {
            let ineqs: Vec<IntVector> =
                support.iter().filter(|u| *u != v).map(|u| exponent_difference(u, v)).collect();
            Cone::new(n, &[], &ineqs)
        })
        .collect::<Result<Vec<Cone>>>()?;
    let mut cones = Vec::new();
    for c in normal_cones {
        // only vertices have full-dimensional normal cones
        if c.dim() == n {
            cones.extend(c.facets());
        }
    }
    Fan::new(n, cones)
}

/// `T(f_1) ∩ ⋯ ∩ T(f_r)` as a common refinement. Hypersurfaces with few
/// cones are intersected first. The list must not be empty, since it fixes
/// the ambient space.
pub fn tropical_prevariety(fs: &[Polynomial]) -> Result<Fan> {
    let Some(first) = fs.first() else {
        return Err(Error::Precondition("empty list of polynomials".into()));
    };
    if fs.iter().any(|f| !crate::poly::same_ring(f.ring(), first.ring())) {
        return Err(Error::RingMismatch);
    }
    let mut fans = fs.iter().map(tropical_hypersurface).collect::<Result<Vec<Fan>>>()?;
    fans.sort_by_key(Fan::len);
    let mut acc = Fan::new(first.n(), vec![Cone::full_space(first.n())])?;
    for f in &fans {
        acc = acc.common_refinement(f)?;
        if acc.is_empty() {
            break;
        }
    }
    Ok(acc)
}
