use std::collections::BTreeMap;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::groebner::{
    buchberger, homogeneity_space_of_gb, initial_gb, initial_monomial, lift_with_order, monomial_in_ideal,
    GroebnerConePair, Ideal, MarkedReducedGB,
};
use crate::linalg::IntVector;
use crate::poly::{Tiebreak, TermOrder};
use crate::polyhedra::{fan_statistics, Cone, Fan, FanStatistics};
use crate::symmetry::{canonical_orbit_representative, orbit, PermGroup};
use crate::{Error, Result};

use super::curve::{curve_variety, Restart};
use super::groebner_cone::{groebner_cone, marked_cone};

/// Attempts per recursion level of the starting cone search.
pub const STARTING_CONE_ATTEMPTS: usize = 64;
const RANDOM_WEIGHT_BOUND: i64 = 10_000;

fn to_i64(v: &IntVector) -> Result<Vec<i64>> {
    v.to_i64s().ok_or(Error::WeightOverflow)
}

/// A maximal Gröbner cone of `T(I)` for a homogeneous, monomial-free ideal
/// whose tropical variety is pure of dimension `dim(I)`.
pub fn starting_cone(i: &Ideal, seed: u64) -> Result<GroebnerConePair> {
    if !i.is_homogeneous() {
        return Err(Error::Precondition("the ideal is not homogeneous".into()));
    }
    if i.generators().is_empty() {
        return Err(Error::Precondition("the ideal is zero".into()));
    }
    if let Some(m) = monomial_in_ideal(i)? {
        let ring = i.ring();
        return Err(Error::Precondition(format!(
            "the ideal contains the monomial {}",
            crate::poly::fmt_monomial(ring, &m)
        )));
    }
    let d = i.krull_dimension().expect("not the unit ideal");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (init, full) = starting_cone_rec(i.groebner_basis(), d, seed, &mut rng)?;
    GroebnerConePair::new(init, full)
}

fn starting_cone_rec(
    gb: &MarkedReducedGB,
    d: usize,
    seed: u64,
    rng: &mut ChaCha8Rng,
) -> Result<(MarkedReducedGB, MarkedReducedGB)> {
    let ring = gb.ring().clone();
    let n = ring.n();
    if homogeneity_space_of_gb(gb).len() == d {
        return Ok((gb.clone(), gb.clone()));
    }
    let gens = gb.polynomials();
    for _ in 0..STARTING_CONE_ATTEMPTS {
        let r: Vec<i64> = (0..n).map(|_| rng.gen_range(-RANDOM_WEIGHT_BOUND..=RANDOM_WEIGHT_BOUND)).collect();
        let order = TermOrder::weighted(vec![r], Tiebreak::Degrevlex);
        let g = buchberger(&ring, &gens, &order)?;
        let cone = marked_cone(&g)?;
        let Some(w) = cone.rays().choose(rng) else { continue };
        let j = initial_gb(&g, w)?;
        if initial_monomial(&j)?.is_some() {
            continue;
        }
        let (init, full_j) = starting_cone_rec(&j, d, seed, rng)?;
        let mut weights = vec![to_i64(w)?];
        let tiebreak = match full_j.order() {
            Some(o) => {
                weights.extend(o.weights().iter().cloned());
                o.tiebreak()
            }
            None => Tiebreak::Degrevlex,
        };
        let lifted = lift_with_order(&g, &full_j, Some(TermOrder::weighted(weights, tiebreak)))?;
        return Ok((init, lifted));
    }
    Err(Error::RetryExhausted { what: "starting cone".into(), seed })
}

/// Pairs for the maximal cones of `T(I)` reached across each facet of the
/// cone of `pair`, the cone of `pair` itself included.
pub fn neighbors(pair: &GroebnerConePair, seed: u64) -> Result<Vec<GroebnerConePair>> {
    neighbors_with(pair, seed, Restart::Incremental)
}

pub(crate) fn neighbors_with(pair: &GroebnerConePair, seed: u64, restart: Restart) -> Result<Vec<GroebnerConePair>> {
    let ring = pair.ring().clone();
    let cone = groebner_cone(pair)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for facet in cone.facets() {
        let u = facet.relative_interior_point();
        let ui = to_i64(&u)?;
        let j = initial_gb(&pair.full_gb, &u)?;
        let h = homogeneity_space_of_gb(&j);
        let gens = j.polynomials();
        let curve = curve_variety(&ring, &gens, &h, restart, &mut rng)?;
        for ray in curve.rays() {
            let v = ray.relative_interior_point();
            let order = TermOrder::weighted(vec![ui.clone(), to_i64(&v)?], Tiebreak::Degrevlex);
            let gj = buchberger(&ring, &gens, &order)?;
            let full = lift_with_order(&pair.full_gb, &gj, Some(order))?;
            let init = initial_gb(&gj, &v)?;
            out.push(GroebnerConePair::new(init, full)?);
        }
    }
    Ok(out)
}

/// The result of a traversal.
#[derive(Clone, Debug)]
pub struct TropicalVariety {
    /// All maximal cones, orbits expanded.
    pub fan: Fan,
    /// One pair per visited cone (one per orbit under symmetry), sorted by
    /// the orbit representative of its cone.
    pub pairs: Vec<GroebnerConePair>,
    /// Basis of the homogeneity space of `I`.
    pub homogeneity: Vec<IntVector>,
    pub statistics: FanStatistics,
    pub group: PermGroup,
}

/// Options for [`traverse_with`].
#[derive(Clone, Debug)]
pub struct TraverseOptions {
    pub seed: u64,
    /// Worker threads for neighbor computations; results do not depend on it.
    pub jobs: usize,
    pub restart: Restart,
}

impl Default for TraverseOptions {
    fn default() -> Self {
        TraverseOptions { seed: 0, jobs: 1, restart: Restart::Incremental }
    }
}

fn fnv1a(seed: u64, bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn cone_seed(seed: u64, c: &Cone) -> u64 {
    fnv1a(seed, format!("{:?}{:?}", c.equations(), c.inequalities()).as_bytes())
}

/// All maximal cones of `T(I)` connected to the cone of `start` through
/// facets. For a prime ideal this is all of `T(I)`.
pub fn traverse(start: &GroebnerConePair, symmetry: Option<&PermGroup>, seed: u64) -> Result<TropicalVariety> {
    traverse_with(start, symmetry, &TraverseOptions { seed, ..TraverseOptions::default() })
}

pub fn traverse_with(
    start: &GroebnerConePair,
    symmetry: Option<&PermGroup>,
    opts: &TraverseOptions,
) -> Result<TropicalVariety> {
    let ring = start.ring().clone();
    let n = ring.n();
    let group = match symmetry {
        Some(g) if g.degree() != n => return Err(Error::DimensionMismatch { expected: n, found: g.degree() }),
        Some(g) => g.clone(),
        None => PermGroup::trivial(n),
    };
    let homogeneity = homogeneity_space_of_gb(&start.full_gb);
    let start_cone = groebner_cone(start)?;
    let d = start_cone.dim();
    let key = |c: &Cone| canonical_orbit_representative(c, &group);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;

    let mut visited: BTreeMap<Cone, GroebnerConePair> = BTreeMap::new();
    let k0 = key(&start_cone);
    visited.insert(k0.clone(), start.clone());
    let mut frontier: Vec<(Cone, GroebnerConePair)> = vec![(k0, start.clone())];
    while !frontier.is_empty() {
        let results: Vec<Result<Vec<GroebnerConePair>>> = pool.install(|| {
            frontier
                .par_iter()
                .map(|(k, p)| neighbors_with(p, cone_seed(opts.seed, k), opts.restart))
                .collect()
        });
        let mut next = Vec::new();
        for r in results {
            for p in r? {
                let c = groebner_cone(&p)?;
                if c.dim() != d {
                    return Err(Error::Precondition(format!(
                        "found a cone of dimension {} in a tropical variety of dimension {d}; is the ideal prime?",
                        c.dim()
                    )));
                }
                let k = key(&c);
                if !visited.contains_key(&k) {
                    visited.insert(k.clone(), p.clone());
                    next.push((k, p));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        frontier = next;
    }

    let mut cones = Vec::new();
    for k in visited.keys() {
        cones.extend(orbit(k, &group));
    }
    let fan = Fan::new(n, cones)?;
    let statistics = fan_statistics(&fan, homogeneity.len());
    Ok(TropicalVariety { fan, pairs: visited.into_values().collect(), homogeneity, statistics, group })
}
