#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropvar::groebner::{
    buchberger, canonical_basis, initial_gb, initial_ideal_gens, lift, monomial_in_ideal, same_ideal, witness,
    GroebnerConePair, Ideal,
};
use tropvar::linalg::{IntVector, Rational};
use tropvar::poly::{initial_form, Monomial, Polynomial, Ring, TermOrder, Tiebreak};
use tropvar::polyhedra::Cone;
use tropvar::tropical::{groebner_cone, marked_cone, tropical_hypersurface};

/// A polynomial written as `(coefficient, variable indices)` terms; the
/// index list `[0, 0, 2]` stands for `x0^2*x2`.
pub type Terms = Vec<(i64, Vec<usize>)>;

pub fn ring(n: usize) -> Arc<Ring> {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ring::from_names(&refs).unwrap()
}

pub fn iv(v: &[i64]) -> IntVector {
    IntVector::from_i64s(v)
}

pub fn poly(r: &Arc<Ring>, terms: &Terms) -> Polynomial {
    let ts = terms.iter().map(|(c, word)| {
        let mut e = vec![0u32; r.n()];
        for &i in word {
            e[i % r.n()] += 1;
        }
        (Monomial::new(e), Rational::from_int(*c))
    });
    Polynomial::from_terms(r, ts)
}

/// The non-zero polynomials among `ps`, or `None` when all vanish.
pub fn polys(r: &Arc<Ring>, ps: &[Terms]) -> Option<Vec<Polynomial>> {
    let v: Vec<Polynomial> = ps.iter().map(|t| poly(r, t)).filter(|p| !p.is_zero()).collect();
    (!v.is_empty()).then_some(v)
}

fn random_terms<R: Rng>(rng: &mut R, n: usize, homogeneous: bool) -> Terms {
    let deg = rng.gen_range(1..=3);
    (0..rng.gen_range(1..=4))
        .map(|_| {
            let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            let d = if homogeneous { deg } else { rng.gen_range(0..=3) };
            (c, (0..d).map(|_| rng.gen_range(0..n)).collect())
        })
        .collect()
}

/// A random ideal in at most `max_n` variables with generators of degree
/// at most three.
pub fn random_ideal(seed: u64, max_n: usize, homogeneous: bool) -> (usize, Vec<Terms>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let k = rng.gen_range(1..=3);
    (n, (0..k).map(|_| random_terms(&mut rng, n, homogeneous)).collect())
}

pub fn small_vector<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

fn weighted(ws: &[&[i64]]) -> TermOrder {
    TermOrder::weighted(ws.iter().map(|w| w.to_vec()).collect(), Tiebreak::Degrevlex)
}

fn has_monomial(r: &Arc<Ring>, gens: Vec<Polynomial>) -> bool {
    monomial_in_ideal(&Ideal::new(r, gens).unwrap()).unwrap().is_some()
}

/// Monomial in `in_w(I)` versus monomial in `in_(0,w)(hI)`. `w` must be
/// non-positive so that the weight order is a well-order on `I`.
pub fn lemma_homogenization(n: usize, gens: &[Terms], w: &[i64]) -> Option<bool> {
    assert!(w.iter().all(|&x| x <= 0));
    let r = ring(n);
    let fs = polys(&r, gens)?;
    let g = buchberger(&r, &fs, &weighted(&[w])).unwrap();
    let lhs = has_monomial(&r, initial_ideal_gens(&g, &iv(w)).unwrap());

    let h = Ideal::new(&r, fs).unwrap().homogenized().unwrap();
    let mut hw = vec![0];
    hw.extend_from_slice(w);
    let gh = buchberger(h.ring(), h.generators(), &weighted(&[&hw])).unwrap();
    let rhs = has_monomial(h.ring(), initial_ideal_gens(&gh, &iv(&hw)).unwrap());
    Some(lhs == rhs)
}

/// Lifts a basis of `in_u(I)` for the order `(u, v, degrevlex)` and compares
/// with the basis computed from scratch. `u` is on facet `facet` of the
/// degrevlex cone.
pub fn lift_matches_buchberger(n: usize, gens: &[Terms], facet: usize, v: &[i64]) -> Option<bool> {
    let r = ring(n);
    let fs: Vec<Polynomial> = polys(&r, gens)?.into_iter().filter(|f| f.is_homogeneous()).collect();
    if fs.is_empty() {
        return None;
    }
    let g = buchberger(&r, &fs, &TermOrder::degrevlex()).unwrap();
    let facets = marked_cone(&g).unwrap().facets();
    let u = if facets.is_empty() {
        IntVector::zeros(n)
    } else {
        facets[facet % facets.len()].relative_interior_point()
    };
    let u = u.to_i64s()?;
    let order = weighted(&[&u, v]);
    let j = buchberger(&r, &initial_ideal_gens(&g, &iv(&u)).unwrap(), &order).unwrap();
    let lifted = lift(&g, &j).unwrap();
    let direct = buchberger(&r, &fs, &order).unwrap();
    Some(lifted == direct)
}

fn pair_at(r: &Arc<Ring>, fs: &[Polynomial], w: &[i64]) -> GroebnerConePair {
    let g = buchberger(r, fs, &weighted(&[w])).unwrap();
    let init = initial_gb(&g, &iv(w)).unwrap();
    GroebnerConePair::new(init, g).unwrap()
}

fn homogeneous_polys(n: usize, gens: &[Terms]) -> Option<(Arc<Ring>, Vec<Polynomial>)> {
    let r = ring(n);
    let fs: Vec<Polynomial> = polys(&r, gens)?.into_iter().filter(|f| f.is_homogeneous()).collect();
    (!fs.is_empty()).then_some((r, fs))
}

/// Whether `w'` lies in the Groebner cone of `w`, decided without the cone
/// inequalities: `w'` is in the closed cone iff `in_w(in_w'(I)) = in_w(I)`.
pub fn in_cone_by_recomputation(r: &Arc<Ring>, fs: &[Polynomial], w: &[i64], wp: &[i64]) -> bool {
    let g = buchberger(r, fs, &weighted(&[w])).unwrap();
    let target = canonical_basis(r, &initial_ideal_gens(&g, &iv(w)).unwrap()).unwrap();
    let h = buchberger(r, fs, &weighted(&[wp, w])).unwrap();
    let gens: Vec<Polynomial> = h
        .polynomials()
        .iter()
        .map(|f| initial_form(&initial_form(f, &iv(wp)).unwrap(), &iv(w)).unwrap())
        .collect();
    same_ideal(&canonical_basis(r, &gens).unwrap(), &target)
}

/// Agreement of `groebner_cone` with recomputation at the sample points,
/// the cone's own rays among them.
pub fn cone_membership(n: usize, gens: &[Terms], w: &[i64], samples: &[Vec<i64>]) -> Option<bool> {
    let (r, fs) = homogeneous_polys(n, gens)?;
    let c = groebner_cone(&pair_at(&r, &fs, w)).unwrap();
    let mut pts: Vec<Vec<i64>> = samples.to_vec();
    pts.extend(c.rays().iter().filter_map(IntVector::to_i64s));
    pts.push(w.to_vec());
    Some(pts.iter().all(|wp| c.contains(&iv(wp)) == in_cone_by_recomputation(&r, &fs, w, wp)))
}

/// The witness at `w` has a single-term initial form at ten generic
/// relative interior points of the Groebner cone. `None` when `in_w(I)`
/// has no monomial.
pub fn witness_postcondition(n: usize, gens: &[Terms], w: &[i64], seed: u64) -> Option<bool> {
    let (r, fs) = homogeneous_polys(n, gens)?;
    let pair = pair_at(&r, &fs, w);
    if !has_monomial(&r, pair.initial_gb.polynomials()) {
        return None;
    }
    let f = witness(&Ideal::new(&r, fs).unwrap(), &iv(w)).unwrap();
    let c = groebner_cone(&pair).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Some((0..10).all(|_| {
        let p = c.generic_relative_interior_point(&mut rng);
        initial_form(&f, &p).unwrap().len() == 1
    }))
}

/// Rays and lineality of an H-described cone satisfy its constraints and
/// generate the same cone.
pub fn double_description(n: usize, eqs: &[Vec<i64>], ineqs: &[Vec<i64>]) -> bool {
    let e: Vec<IntVector> = eqs.iter().map(|v| iv(&v[..n])).collect();
    let a: Vec<IntVector> = ineqs.iter().map(|v| iv(&v[..n])).collect();
    let c = Cone::new(n, &e, &a).unwrap();
    let sat = |x: &IntVector, strict_lin: bool| {
        e.iter().all(|q| q.dot(x) == 0.into())
            && a.iter().all(|q| if strict_lin { q.dot(x) == 0.into() } else { q.dot(x) >= 0.into() })
    };
    let rays_ok = c.rays().iter().all(|x| !x.is_zero() && sat(x, false));
    let lin_ok = c.lineality().iter().all(|x| sat(x, true));
    let back = Cone::from_generators(n, c.rays(), c.lineality()).unwrap();
    rays_ok && lin_ok && back == c && c.dim() >= c.lineality_dim()
}

/// The common refinement of two tropical hypersurfaces has the
/// intersection of their supports as support, checked at the samples.
pub fn refinement_support(n: usize, f1: &Terms, f2: &Terms, samples: &[Vec<i64>]) -> Option<bool> {
    let r = ring(n);
    let (p1, p2) = (poly(&r, f1), poly(&r, f2));
    if p1.is_zero() || p2.is_zero() {
        return None;
    }
    let a = tropical_hypersurface(&p1).unwrap();
    let b = tropical_hypersurface(&p2).unwrap();
    let ab = a.common_refinement(&b).unwrap();
    Some(samples.iter().all(|w| {
        let w = iv(&w[..n]);
        ab.contains(&w) == (a.contains(&w) && b.contains(&w))
    }))
}
