//! Gröbner bases: Buchberger's algorithm, marked reduced bases, normal
//! forms, saturation, monomial containment, witnesses and lifting.

mod engine;
mod ideal;

use std::fmt;
use std::sync::Arc;

use crate::linalg::{IntVector, Rational};
use crate::poly::{degrevlex, Monomial, Polynomial, Ring, TermOrder};
use crate::{Error, Result};

pub use ideal::{
    homogeneity_space, homogeneity_space_of_gb, krull_dimension, monomial_in_ideal, saturate_by_variable_product,
    witness, Ideal,
};
pub(crate) use ideal::{initial_monomial, witness_from_gb};

use engine::{sort_desc, Terms};

/// A polynomial with a distinguished (marked) term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MarkedPolynomial {
    pub poly: Polynomial,
    pub marked: Monomial,
}

impl MarkedPolynomial {
    pub fn new(poly: Polynomial, marked: Monomial) -> Result<Self> {
        let c = poly.coefficient(&marked);
        if c.is_zero() {
            return Err(Error::Precondition("marked term not in the support".into()));
        }
        Ok(MarkedPolynomial { poly, marked })
    }

    pub fn marked_coefficient(&self) -> Rational {
        self.poly.coefficient(&self.marked)
    }
}

impl fmt::Display for MarkedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.to_string_marked(&self.marked))
    }
}

impl fmt::Debug for MarkedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A reduced Gröbner basis whose initial terms are marked.
///
/// Elements are monic at their marked terms and sorted by marked term
/// (degrevlex, largest first), so equal bases compare equal. The order the
/// basis was computed for is remembered when known; bases read from text
/// carry only their markings.
#[derive(Clone)]
pub struct MarkedReducedGB {
    ring: Arc<Ring>,
    elements: Vec<MarkedPolynomial>,
    order: Option<TermOrder>,
}

impl PartialEq for MarkedReducedGB {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for MarkedReducedGB {}

impl std::hash::Hash for MarkedReducedGB {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl fmt::Debug for MarkedReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

impl MarkedReducedGB {
    /// Wraps marked polynomials, normalising each to a monic marked term and
    /// sorting. No reducedness check is made.
    pub fn from_marked(ring: &Arc<Ring>, elements: Vec<MarkedPolynomial>, order: Option<TermOrder>) -> Self {
        let mut elements: Vec<MarkedPolynomial> = elements
            .into_iter()
            .map(|mut e| {
                e.poly = e.poly.made_monic_at(&e.marked);
                e
            })
            .collect();
        elements.sort_by(|a, b| degrevlex(&b.marked, &a.marked));
        MarkedReducedGB { ring: ring.clone(), elements, order }
    }

    fn from_terms(ring: &Arc<Ring>, basis: Vec<Terms>, order: Option<TermOrder>) -> Self {
        let elements = basis
            .into_iter()
            .map(|t| {
                let marked = t[0].0.clone();
                MarkedPolynomial { poly: Polynomial::from_distinct_terms(ring, t), marked }
            })
            .collect();
        Self::from_marked(ring, elements, order)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &[MarkedPolynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn order(&self) -> Option<&TermOrder> {
        self.order.as_ref()
    }

    pub fn with_order(mut self, order: Option<TermOrder>) -> Self {
        self.order = order;
        self
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|e| e.marked.is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.elements.iter().all(|e| e.poly.is_homogeneous())
    }

    /// True when no term of any element is divisible by another element's
    /// marked term and all marked coefficients are 1.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.elements.iter().enumerate() {
            if !g.marked_coefficient().is_one() {
                return false;
            }
            for (j, h) in self.elements.iter().enumerate() {
                if i != j && g.poly.support().any(|m| h.marked.divides(m)) {
                    return false;
                }
            }
        }
        true
    }

    /// True when every marked term has minimal `w`-weight in its element,
    /// i.e. `w` lies in the closed Gröbner cone of the marked basis.
    pub fn contains_weight(&self, w: &IntVector) -> bool {
        self.elements.iter().all(|g| {
            let a = crate::poly::big_weight(&g.marked, w);
            g.poly.support().all(|m| crate::poly::big_weight(m, w) >= a)
        })
    }

    fn terms_under(&self, order: &TermOrder) -> Vec<Terms> {
        self.elements
            .iter()
            .map(|e| {
                let mut t: Terms = e.poly.terms().to_vec();
                sort_desc(&mut t, order);
                debug_assert!(t[0].0 == e.marked);
                t
            })
            .collect()
    }
}

/// A Gröbner cone identified by the pair `(G(in_w(I)), G(I))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroebnerConePair {
    pub initial_gb: MarkedReducedGB,
    pub full_gb: MarkedReducedGB,
}

impl GroebnerConePair {
    /// Checks that the bases match element by element: same markings and
    /// every initial element has only terms of its full element.
    pub fn new(initial_gb: MarkedReducedGB, full_gb: MarkedReducedGB) -> Result<Self> {
        if initial_gb.len() != full_gb.len() {
            return Err(Error::Precondition("Groebner bases of the pair differ in size".into()));
        }
        for (a, b) in initial_gb.elements.iter().zip(&full_gb.elements) {
            if a.marked != b.marked || a.poly.terms().iter().any(|(m, c)| b.poly.coefficient(m) != *c) {
                return Err(Error::Precondition(format!("initial form {a} does not match {b}")));
            }
        }
        Ok(GroebnerConePair { initial_gb, full_gb })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.full_gb.ring()
    }
}

fn to_terms(f: &Polynomial, order: &TermOrder) -> Terms {
    let mut t: Terms = f.terms().to_vec();
    sort_desc(&mut t, order);
    t
}

fn check_rings(gens: &[Polynomial]) -> Result<()> {
    if let Some(f) = gens.first() {
        if gens.iter().any(|g| !crate::poly::same_ring(g.ring(), f.ring())) {
            return Err(Error::RingMismatch);
        }
    }
    Ok(())
}

/// Reduced marked Gröbner basis of `⟨gens⟩` under `order`.
///
/// Fails with [`Error::NonGlobalOrder`] when the order is not a well-order
/// and some generator is not homogeneous.
pub fn buchberger(ring: &Arc<Ring>, gens: &[Polynomial], order: &TermOrder) -> Result<MarkedReducedGB> {
    check_rings(gens)?;
    if let Some(f) = gens.first() {
        if !crate::poly::same_ring(f.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    if !order.is_global(ring.n()) && !gens.iter().all(Polynomial::is_homogeneous) {
        return Err(Error::NonGlobalOrder);
    }
    for w in order.weights() {
        if w.len() != ring.n() {
            return Err(Error::DimensionMismatch { expected: ring.n(), found: w.len() });
        }
    }
    let terms: Vec<Terms> = gens.iter().map(|g| to_terms(g, order)).collect();
    let basis = engine::groebner_basis(terms, order);
    Ok(MarkedReducedGB::from_terms(ring, basis, Some(order.clone())))
}

/// Remainder of `f` on division by the marked basis `g`.
pub fn normal_form(f: &Polynomial, g: &MarkedReducedGB) -> Polynomial {
    if let Some(order) = &g.order {
        let basis = g.terms_under(order);
        let refs: Vec<&Terms> = basis.iter().collect();
        let r = engine::reduce(to_terms(f, order), &refs, order, true);
        return Polynomial::from_distinct_terms(f.ring(), r);
    }
    marked_normal_form(f, &g.elements)
}

// Reduction driven only by markings. Coherent markings make every reduction
// sequence terminate; the degrevlex-largest reducible term is chosen.
fn marked_normal_form(f: &Polynomial, basis: &[MarkedPolynomial]) -> Polynomial {
    let mut p = f.clone();
    'outer: loop {
        for (m, c) in p.terms() {
            if let Some(g) = basis.iter().find(|g| g.marked.divides(m)) {
                let q = g.marked.quotient_of(m);
                let scale = c / &g.marked_coefficient();
                let sub = g.poly.mul_term(&q, &scale).expect("exponents stay bounded");
                p = p.try_sub(&sub).expect("same ring");
                continue 'outer;
            }
        }
        return p;
    }
}

/// `{in_w(g)}` for the elements of a marked basis, with the same markings.
///
/// Fails when `w` is outside the closed Gröbner cone of the basis.
pub fn initial_gb(gb: &MarkedReducedGB, w: &IntVector) -> Result<MarkedReducedGB> {
    if w.len() != gb.ring.n() {
        return Err(Error::DimensionMismatch { expected: gb.ring.n(), found: w.len() });
    }
    if !gb.contains_weight(w) {
        return Err(Error::NotInCone);
    }
    let elements = gb
        .elements
        .iter()
        .map(|g| Ok(MarkedPolynomial { poly: g.poly.initial_form(w)?, marked: g.marked.clone() }))
        .collect::<Result<Vec<_>>>()?;
    let order = match (&gb.order, w.to_i64s()) {
        (Some(o), Some(w)) => Some(o.refined_by(w)),
        _ => None,
    };
    Ok(MarkedReducedGB { ring: gb.ring.clone(), elements, order })
}

/// Generators `{in_w(g)}` of `in_w(I)` from a marked basis of `I`.
pub fn initial_ideal_gens(gb: &MarkedReducedGB, w: &IntVector) -> Result<Vec<Polynomial>> {
    Ok(initial_gb(gb, w)?.polynomials())
}

/// One Gröbner walk step: lifts `initial_target`, a marked reduced basis of
/// `in_w(I)` for some `w` in the cone of `full_prev`, to the marked reduced
/// basis of `I` with the same markings.
pub fn lift(full_prev: &MarkedReducedGB, initial_target: &MarkedReducedGB) -> Result<MarkedReducedGB> {
    lift_with_order(full_prev, initial_target, None)
}

/// As [`lift`], recording `order` (which must induce the target markings
/// on `I`) for faster later reductions.
pub fn lift_with_order(
    full_prev: &MarkedReducedGB,
    initial_target: &MarkedReducedGB,
    order: Option<TermOrder>,
) -> Result<MarkedReducedGB> {
    if !crate::poly::same_ring(full_prev.ring(), initial_target.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = full_prev.ring().clone();
    let mut lifted = Vec::with_capacity(initial_target.len());
    for h in &initial_target.elements {
        let r = normal_form(&h.poly, full_prev);
        let f = h.poly.try_sub(&r)?;
        if f.coefficient(&h.marked) != h.marked_coefficient() {
            return Err(Error::InconsistentLift(format!("marked term of {h} cancelled")));
        }
        lifted.push(MarkedPolynomial { poly: f, marked: h.marked.clone() });
    }
    for (i, a) in lifted.iter().enumerate() {
        for (j, b) in lifted.iter().enumerate() {
            if i != j && a.marked.divides(&b.marked) {
                return Err(Error::InconsistentLift("target basis is not minimal".into()));
            }
        }
    }
    let reduced = match &order {
        Some(o) => {
            let mut basis: Vec<Terms> = lifted.iter().map(|g| to_terms(&g.poly, o)).collect();
            if basis.iter().zip(&lifted).any(|(t, g)| t[0].0 != g.marked) {
                return Err(Error::InconsistentLift("order does not induce the markings".into()));
            }
            engine::interreduce(&mut basis, o);
            return Ok(MarkedReducedGB::from_terms(&ring, basis, order));
        }
        None => {
            let mut out = lifted.clone();
            for k in 0..out.len() {
                let g = &out[k];
                let lead = Polynomial::monomial(&ring, g.marked.clone(), g.marked_coefficient());
                let tail = g.poly.try_sub(&lead)?;
                let others: Vec<MarkedPolynomial> =
                    out.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
                let r = marked_normal_form(&tail, &others);
                out[k] = MarkedPolynomial { poly: lead.try_add(&r)?, marked: g.marked.clone() };
            }
            out
        }
    };
    Ok(MarkedReducedGB::from_marked(&ring, reduced, None))
}

/// Structural comparison helper for oracle tests: the degrevlex reduced
/// basis of the ideal generated by `gens`.
pub fn canonical_basis(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<MarkedReducedGB> {
    buchberger(ring, gens, &TermOrder::degrevlex())
}

/// True when every element of `a` reduces to zero modulo `b` and vice versa.
pub fn same_ideal(a: &MarkedReducedGB, b: &MarkedReducedGB) -> bool {
    a.elements.iter().all(|g| normal_form(&g.poly, b).is_zero())
        && b.elements.iter().all(|g| normal_form(&g.poly, a).is_zero())
}
