use num_traits::Signed;

use crate::groebner::{GroebnerConePair, MarkedReducedGB};
use crate::linalg::IntVector;
use crate::poly::{Monomial, Tiebreak, TermOrder};
use crate::polyhedra::Cone;
use crate::Result;

fn diff(a: &Monomial, b: &Monomial) -> IntVector {
    IntVector::from_i64s(&a.exps().iter().zip(b.exps()).map(|(&x, &y)| x as i64 - y as i64).collect::<Vec<_>>())
}

/// The closed Gröbner cone `C_w(I)` of a pair, read off the markings: the
/// initial form of each element fixes equations, the remaining terms give
/// inequalities.
pub fn groebner_cone(pair: &GroebnerConePair) -> Result<Cone> {
    let n = pair.ring().n();
    let mut eqs = Vec::new();
    let mut ineqs = Vec::new();
    for (init, full) in pair.initial_gb.elements().iter().zip(pair.full_gb.elements()) {
        let a0 = &init.marked;
        for a in init.poly.support().filter(|a| *a != a0) {
            eqs.push(diff(a, a0));
        }
        for c in full.poly.support() {
            if init.poly.coefficient(c).is_zero() {
                ineqs.push(diff(c, a0));
            }
        }
    }
    Cone::new(n, &eqs, &ineqs)
}

/// The full-dimensional cone of weights under which every marked term of
/// `gb` is weakly the lightest in its element.
pub fn marked_cone(gb: &MarkedReducedGB) -> Result<Cone> {
    let n = gb.ring().n();
    let mut ineqs = Vec::new();
    for g in gb.elements() {
        for c in g.poly.support().filter(|c| **c != g.marked) {
            ineqs.push(diff(c, &g.marked));
        }
    }
    Cone::new(n, &[], &ineqs)
}

/// A weight order `(w, degrevlex)` inducing exactly the markings of `gb`,
/// with `w` interior to [`marked_cone`]. `None` when the markings are not
/// induced by any order or the weight does not fit machine integers.
pub fn order_for_markings(gb: &MarkedReducedGB) -> Result<Option<TermOrder>> {
    let c = marked_cone(gb)?;
    if c.dim() != gb.ring().n() {
        return Ok(None);
    }
    let w = c.relative_interior_point();
    let strict = gb.elements().iter().all(|g| {
        g.poly.support().filter(|m| **m != g.marked).all(|m| diff(m, &g.marked).dot(&w).is_positive())
    });
    Ok(match (strict, w.to_i64s()) {
        (true, Some(w)) => Some(TermOrder::weighted(vec![w], Tiebreak::Degrevlex)),
        _ => None,
    })
}
