use std::sync::{Arc, OnceLock};

use crate::linalg::{kernel_basis, IntVector, RatMatrix, Rational};
use crate::poly::{Monomial, Polynomial, Ring, Tiebreak, TermOrder};
use crate::{Error, Result};

use super::{buchberger, initial_gb, normal_form, MarkedReducedGB};

/// An ideal of `ℚ[x]` given by generators, with its degrevlex basis cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    gb: OnceLock<MarkedReducedGB>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| !crate::poly::same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    pub fn from_gb(gb: MarkedReducedGB) -> Ideal {
        let ring = gb.ring().clone();
        let generators = gb.polynomials();
        let cell = OnceLock::new();
        if gb.order() == Some(&TermOrder::degrevlex()) {
            let _ = cell.set(gb);
        }
        Ideal { ring, generators, gb: cell }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// The reduced Gröbner basis under degrevlex.
    pub fn groebner_basis(&self) -> &MarkedReducedGB {
        self.gb.get_or_init(|| {
            buchberger(&self.ring, &self.generators, &TermOrder::degrevlex()).expect("degrevlex is global")
        })
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self.groebner_basis()).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn krull_dimension(&self) -> Option<usize> {
        krull_dimension(self)
    }

    pub fn homogeneity_space(&self) -> Vec<IntVector> {
        homogeneity_space(self)
    }

    /// Applies `x_i ↦ x_{images[i]}` to every generator.
    pub fn permuted(&self, images: &[usize]) -> Ideal {
        let gens = self.generators.iter().map(|g| g.permuted(images)).collect();
        Ideal { ring: self.ring.clone(), generators: gens, gb: OnceLock::new() }
    }

    /// Homogenization `ʰI`, computed from a degrevlex basis so that it is
    /// the full homogenized ideal and not just the span of homogenized
    /// generators.
    pub fn homogenized(&self) -> Result<Ideal> {
        let ring = Arc::new(self.ring.homogenized());
        let gens = self
            .groebner_basis()
            .polynomials()
            .iter()
            .map(|g| g.homogenize_into(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }
}

/// Divides `f` by the largest power of `x_i` dividing every term.
fn strip_variable(f: &Polynomial, i: usize) -> Polynomial {
    let k = f.support().map(|m| m.exps()[i]).min().unwrap_or(0);
    if k == 0 {
        return f.clone();
    }
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = m.exps().to_vec();
            e[i] -= k;
            (Monomial::new(e), c.clone())
        })
        .collect();
    Polynomial::from_distinct_terms(f.ring(), terms)
}

// (I : x_v^∞) for homogeneous I: a degrevlex basis with x_v smallest has
// the saturation generated by its elements with x_v powers removed.
fn saturate_variable(ring: &Arc<Ring>, gens: &[Polynomial], v: usize) -> Vec<Polynomial> {
    let n = ring.n();
    let images: Vec<usize> = (0..n)
        .map(|i| match i.cmp(&v) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => n - 1,
            std::cmp::Ordering::Greater => i - 1,
        })
        .collect();
    let mut inverse = vec![0; n];
    for (i, &j) in images.iter().enumerate() {
        inverse[j] = i;
    }
    let permuted: Vec<Polynomial> = gens.iter().map(|g| g.permuted(&images)).collect();
    let gb = buchberger(ring, &permuted, &TermOrder::degrevlex()).expect("degrevlex is global");
    gb.elements().iter().map(|g| strip_variable(&g.poly, n - 1).permuted(&inverse)).collect()
}

/// `(I : (x_1⋯x_n)^∞)`.
///
/// Homogeneous ideals are saturated one variable at a time; otherwise an
/// extra variable `t` and the relation `t·x_1⋯x_n = 1` are eliminated.
pub fn saturate_by_variable_product(i: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.n();
    if i.is_unit() {
        return Ok(Ideal::from_gb(i.groebner_basis().clone()));
    }
    if i.is_homogeneous() {
        let mut gens = i.groebner_basis().polynomials();
        for v in 0..n {
            if gens.iter().all(|g| g.support().all(|m| m.exps()[v] == 0)) {
                continue;
            }
            gens = saturate_variable(ring, &gens, v);
        }
        let gb = buchberger(ring, &gens, &TermOrder::degrevlex())?;
        return Ok(Ideal::from_gb(gb));
    }
    let mut names = ring.names().to_vec();
    let mut t = "t".to_string();
    while names.contains(&t) {
        t.push('_');
    }
    names.push(t);
    let big = Arc::new(Ring::new(names)?);
    let mut gens: Vec<Polynomial> = i
        .generators()
        .iter()
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exps().to_vec();
                    e.push(0);
                    (Monomial::new(e), c.clone())
                })
                .collect();
            Polynomial::from_distinct_terms(&big, terms)
        })
        .collect();
    let all = Polynomial::monomial(&big, Monomial::new(vec![1u32; n + 1]), Rational::one());
    gens.push(all.try_sub(&Polynomial::one(&big))?);
    let mut w = vec![0i64; n + 1];
    w[n] = -1;
    let order = TermOrder::weighted(vec![w], Tiebreak::Degrevlex);
    let gb = buchberger(&big, &gens, &order)?;
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| g.poly.support().all(|m| m.exps()[n] == 0))
        .map(|g| {
            let terms = g
                .poly
                .terms()
                .iter()
                .map(|(m, c)| (Monomial::new(m.exps()[..n].to_vec()), c.clone()))
                .collect();
            Polynomial::from_distinct_terms(ring, terms)
        })
        .collect();
    let gb = buchberger(ring, &kept, &TermOrder::degrevlex())?;
    Ok(Ideal::from_gb(gb))
}

/// Some monomial of `I`, or `None` when `I` contains no monomial.
///
/// The unit ideal gives the monomial `1`; otherwise the result is the first
/// power `(x_1⋯x_n)^k`, `k ≥ 1`, lying in `I`.
pub fn monomial_in_ideal(i: &Ideal) -> Result<Option<Monomial>> {
    let n = i.n();
    if i.is_unit() {
        return Ok(Some(Monomial::one(n)));
    }
    if i.generators().is_empty() || !saturate_by_variable_product(i)?.is_unit() {
        return Ok(None);
    }
    let gb = i.groebner_basis();
    let base = Monomial::new(vec![1u32; n]);
    let mut m = base.clone();
    loop {
        let p = Polynomial::monomial(i.ring(), m.clone(), Rational::one());
        if normal_form(&p, gb).is_zero() {
            return Ok(Some(m));
        }
        m = m.try_mul(&base)?;
    }
}

/// A polynomial `f ∈ I` whose initial form is the monomial `x^m` throughout
/// the relative interior of the Gröbner cone of `w`, where `x^m ∈ in_w(I)`.
///
/// Non-homogeneous ideals are homogenized and the weight `(0, w)` is used.
pub fn witness(i: &Ideal, w: &IntVector) -> Result<Polynomial> {
    if w.len() != i.n() {
        return Err(Error::DimensionMismatch { expected: i.n(), found: w.len() });
    }
    if !i.is_homogeneous() {
        let h = i.homogenized()?;
        let mut hw = vec![num_bigint::BigInt::from(0)];
        hw.extend(w.entries().iter().cloned());
        let f = witness(&h, &IntVector::new(hw))?;
        return f.dehomogenize_into(i.ring());
    }
    let wi = w.to_i64s().ok_or(Error::WeightOverflow)?;
    let order = TermOrder::weighted(vec![wi], Tiebreak::Degrevlex);
    let g = buchberger(i.ring(), i.generators(), &order)?;
    let init = initial_gb(&g, w)?;
    let m = initial_monomial(&init)?.ok_or(Error::NoMonomial)?;
    witness_from_gb(&g, &m)
}

/// Some monomial of the ideal generated by a marked basis of an initial
/// ideal; a monomial element is used directly when present.
pub(crate) fn initial_monomial(init: &MarkedReducedGB) -> Result<Option<Monomial>> {
    if let Some(e) = init.elements().iter().find(|e| e.poly.is_monomial()) {
        return Ok(Some(e.marked.clone()));
    }
    monomial_in_ideal(&Ideal::new(init.ring(), init.polynomials())?)
}

/// `x^m − NF(x^m)` for a basis `g` computed under an order refining `w`,
/// where `x^m ∈ in_w(I)`.
pub(crate) fn witness_from_gb(g: &MarkedReducedGB, m: &Monomial) -> Result<Polynomial> {
    let xm = Polynomial::monomial(g.ring(), m.clone(), Rational::one());
    let h = normal_form(&xm, g);
    xm.try_sub(&h)
}

/// Krull dimension of `ℚ[x]/I`, or `None` for the unit ideal.
pub fn krull_dimension(i: &Ideal) -> Option<usize> {
    let gb = i.groebner_basis();
    if gb.is_unit() {
        return None;
    }
    let n = i.n();
    let leads: Vec<Vec<usize>> = gb
        .elements()
        .iter()
        .map(|g| (0..n).filter(|&v| g.marked.exps()[v] > 0).collect())
        .collect();
    let mut chosen = vec![false; n];
    let mut best = 0;
    independent_search(0, 0, &mut chosen, &leads, &mut best);
    Some(best)
}

fn independent_search(idx: usize, size: usize, chosen: &mut [bool], leads: &[Vec<usize>], best: &mut usize) {
    let n = chosen.len();
    if size + (n - idx) <= *best {
        return;
    }
    if idx == n {
        *best = size;
        return;
    }
    chosen[idx] = true;
    let ok = leads.iter().all(|l| !l.iter().all(|&v| chosen[v]));
    if ok {
        independent_search(idx + 1, size + 1, chosen, leads, best);
    }
    chosen[idx] = false;
    independent_search(idx + 1, size, chosen, leads, best);
}

/// Basis of `{w : in_w(I) = I}`: weights constant on the support of every
/// element of a reduced Gröbner basis.
pub fn homogeneity_space(i: &Ideal) -> Vec<IntVector> {
    homogeneity_space_of_gb(i.groebner_basis())
}

/// As [`homogeneity_space`], from a reduced basis for any order.
pub fn homogeneity_space_of_gb(gb: &MarkedReducedGB) -> Vec<IntVector> {
    let n = gb.ring().n();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in gb.elements() {
        let mut it = g.poly.support();
        let Some(u0) = it.next() else { continue };
        for u in it {
            rows.push(
                u.exps()
                    .iter()
                    .zip(u0.exps())
                    .map(|(&a, &b)| Rational::from_int(a as i64 - b as i64))
                    .collect(),
            );
        }
    }
    kernel_basis(&RatMatrix::new(rows, n).expect("rectangular"))
}
