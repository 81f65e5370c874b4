//! Buchberger's algorithm on term vectors kept sorted by the active order.

use std::cmp::Ordering;

use crate::linalg::Rational;
use crate::poly::{Monomial, TermOrder};

pub(crate) type Terms = Vec<(Monomial, Rational)>;

pub(crate) fn sort_desc(terms: &mut Terms, order: &TermOrder) {
    terms.sort_by(|a, b| order.compare(&b.0, &a.0));
}

/// `a - c * m * b`, both inputs sorted descending under `order`.
fn sub_mul(a: &[(Monomial, Rational)], c: &Rational, m: &Monomial, b: &[(Monomial, Rational)], order: &TermOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b.first().map(|t| t.0.mul(m));
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), &bj) {
            (Some(x), Some(y)) => order.compare(&x.0, y),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let y = bj.take().expect("pending term");
                out.push((y, -&(c * &b[j].1)));
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let y = bj.take().expect("pending term");
                let v = &a[i].1 - &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((y, v));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out
}

fn find_divisor<'a>(m: &Monomial, basis: &[&'a Terms]) -> Option<&'a Terms> {
    basis.iter().copied().find(|g| g[0].0.divides(m))
}

/// Division with remainder by a set of monic polynomials. With `full` set,
/// every term of the result is irreducible; otherwise only the leading one.
pub(crate) fn reduce(f: Terms, basis: &[&Terms], order: &TermOrder, full: bool) -> Terms {
    let mut rem: Terms = Vec::new();
    let mut p = f;
    let mut pos = 0;
    while pos < p.len() {
        let (lm, lc) = &p[pos];
        if let Some(g) = find_divisor(lm, basis) {
            let q = g[0].0.quotient_of(lm);
            let c = if g[0].1.is_one() { lc.clone() } else { lc / &g[0].1 };
            p = sub_mul(&p[pos + 1..], &c, &q, &g[1..], order);
            pos = 0;
        } else {
            if !full {
                rem.extend(p.drain(pos..));
                return rem;
            }
            pos += 1;
            rem.push(p[pos - 1].clone());
        }
    }
    rem
}

pub(crate) fn make_monic(mut f: Terms) -> Terms {
    if let Some((_, c)) = f.first() {
        if !c.is_one() {
            let inv = c.recip();
            for t in f.iter_mut() {
                t.1 *= &inv;
            }
        }
    }
    f
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn spoly(f: &Terms, g: &Terms, lcm: &Monomial, order: &TermOrder) -> Terms {
    let mf = f[0].0.quotient_of(lcm);
    let mg = g[0].0.quotient_of(lcm);
    let a: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_mul(&a, &Rational::one(), &mg, &g[1..], order)
}

struct State<'o> {
    order: &'o TermOrder,
    polys: Vec<Terms>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lead(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    // Gebauer–Möller pair update after adding polys[h].
    fn update(&mut self, h: usize) {
        let lh = self.lead(h).clone();
        let mut c: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair { i: g, j: h, lcm: self.lead(g).lcm(&lh) })
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = self.lead(p.i).is_coprime(&lh);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d.into_iter().filter(|p| !self.lead(p.i).is_coprime(&lh)).collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && polys[p.i][0].0.lcm(&lh) != p.lcm
                && polys[p.j][0].0.lcm(&lh) != p.lcm)
        });
        self.pairs.extend(e);
        self.active.retain(|&g| !lh.divides(&polys[g][0].0));
        self.active.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.lcm
                .degree()
                .cmp(&q.lcm.degree())
                .then_with(|| order.compare(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn active_refs(&self) -> Vec<&Terms> {
        self.active.iter().map(|&i| &self.polys[i]).collect()
    }

    fn add(&mut self, f: Terms) -> bool {
        let basis = self.active_refs();
        let r = reduce(f, &basis, self.order, true);
        if r.is_empty() {
            return false;
        }
        let unit = r[0].0.is_one();
        self.polys.push(make_monic(r));
        let h = self.polys.len() - 1;
        self.update(h);
        unit
    }
}

/// Reduced Gröbner basis as monic term vectors sorted by the order, each
/// led by its initial term. Inputs must already be sorted by `order`.
pub(crate) fn groebner_basis(gens: Vec<Terms>, order: &TermOrder) -> Vec<Terms> {
    let n = gens.iter().find_map(|g| g.first()).map(|t| t.0.len());
    let mut st = State { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut gens: Vec<Terms> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by(|a, b| order.compare(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));
    for g in gens {
        if st.add(g) {
            return vec![vec![(Monomial::one(n.unwrap_or(0)), Rational::one())]];
        }
    }
    while let Some(p) = st.select() {
        let s = spoly(&st.polys[p.i], &st.polys[p.j], &p.lcm, order);
        if st.add(s) {
            return vec![vec![(Monomial::one(n.unwrap_or(0)), Rational::one())]];
        }
    }
    let mut basis: Vec<Terms> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    interreduce(&mut basis, order);
    basis
}

/// Reduces the tails of a minimal basis against the other leading terms.
pub(crate) fn interreduce(basis: &mut [Terms], order: &TermOrder) {
    for k in 0..basis.len() {
        let tail: Terms = basis[k][1..].to_vec();
        let others: Vec<&Terms> = basis.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g).collect();
        let r = reduce(tail, &others, order, true);
        let lead = basis[k][0].clone();
        let mut v = Vec::with_capacity(r.len() + 1);
        v.push(lead);
        v.extend(r);
        basis[k] = v;
    }
}
