use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::linalg::{IntVector, Rational};
use crate::{Error, Result};

use super::order::degrevlex;
use super::{Monomial, TermOrder};

/// Variable names of a polynomial ring over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new(names: Vec<String>) -> Result<Ring> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::Precondition("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::Precondition(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Ring { names })
    }

    pub fn from_names(names: &[&str]) -> Result<Arc<Ring>> {
        Ring::new(names.iter().map(|s| s.to_string()).collect()).map(Arc::new)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ring with a homogenizing variable prepended.
    pub fn homogenized(&self) -> Ring {
        let mut h = "x0".to_string();
        while self.names.contains(&h) {
            h.push('_');
        }
        let mut names = Vec::with_capacity(self.n() + 1);
        names.push(h);
        names.extend(self.names.iter().cloned());
        Ring { names }
    }

    /// The ring with the first variable removed.
    pub fn dehomogenized(&self) -> Ring {
        Ring { names: self.names[1..].to_vec() }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}

pub fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A sparse polynomial with rational coefficients.
///
/// Terms are kept sorted from largest to smallest under degrevlex and no
/// coefficient is zero, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

fn sort_terms(terms: &mut [(Monomial, Rational)]) {
    terms.sort_by(|a, b| degrevlex(&b.0, &a.0));
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.n()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.n(), i), Rational::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), ring.n(), "monomial length");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.n(), "monomial length");
            let e = acc.entry(m).or_insert_with(Rational::zero);
            *e += &c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_terms(&mut terms);
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds from distinct nonzero terms in any order.
    pub(crate) fn from_distinct_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, Rational)>) -> Self {
        sort_terms(&mut terms);
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| degrevlex(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Largest term under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<&(Monomial, Rational)> {
        let mut best: Option<&(Monomial, Rational)> = None;
        for t in &self.terms {
            if best.is_none_or(|b| order.compare(&t.0, &b.0) == Ordering::Greater) {
                best = Some(t);
            }
        }
        best
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, sign: &Rational) -> Polynomial {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => degrevlex(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), c * sign));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &(&other.terms[j].1 * sign);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, &Rational::one()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, &-Rational::one()))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e = acc.entry(a.try_mul(b)?).or_insert_with(Rational::zero);
                *e += &(c * d);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self::from_distinct_terms(&self.ring, terms))
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..k {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    /// Multiplies by the term `c x^m`. Multiplication by a monomial keeps
    /// the degrevlex order of terms, so no re-sorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| Ok((t.try_mul(m)?, d * c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Divides all coefficients by the coefficient of `m`.
    pub fn made_monic_at(&self, m: &Monomial) -> Polynomial {
        let c = self.coefficient(m);
        assert!(!c.is_zero(), "monomial not in support");
        if c.is_one() {
            return self.clone();
        }
        self.scale(&c.recip())
    }

    /// `in_w(f)` for a machine-integer weight.
    pub fn initial_form_i64(&self, w: &[i64]) -> Polynomial {
        let Some(min) = self.terms.iter().map(|(m, _)| m.weight(w)).min() else {
            return self.clone();
        };
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.weight(w) == min).cloned().collect(),
        }
    }

    /// `in_w(f)`: the sum of the terms of lowest `w`-weight.
    pub fn initial_form(&self, w: &IntVector) -> Result<Polynomial> {
        if w.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: w.len() });
        }
        if let Some(w) = w.to_i64s() {
            return Ok(self.initial_form_i64(&w));
        }
        let weights: Vec<_> = self.terms.iter().map(|(m, _)| big_weight(m, w)).collect();
        let Some(min) = weights.iter().min() else {
            return Ok(self.clone());
        };
        let terms = self
            .terms
            .iter()
            .zip(&weights)
            .filter(|(_, x)| *x == min)
            .map(|(t, _)| t.clone())
            .collect();
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn is_w_homogeneous(&self, w: &IntVector) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| big_weight(m, w));
        match it.next() {
            None => true,
            Some(first) => it.all(|x| x == first),
        }
    }

    /// Homogenizes into `target`, whose first variable is the new one.
    pub fn homogenize_into(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.n() != self.n() + 1 {
            return Err(Error::DimensionMismatch { expected: self.n() + 1, found: target.n() });
        }
        let d = self.total_degree().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e0 = u32::try_from(d - m.degree()).map_err(|_| Error::ExponentOverflow)?;
                Ok((m.prepend(e0), c.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_distinct_terms(target, terms))
    }

    /// Homogenizes with a fresh variable `x0` prepended.
    pub fn homogenize(&self) -> Result<Polynomial> {
        self.homogenize_into(&Arc::new(self.ring.homogenized()))
    }

    /// Sets the first variable to 1 and drops it.
    pub fn dehomogenize_into(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.n() + 1 != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n() - 1, found: target.n() });
        }
        Ok(Self::from_terms(target, self.terms.iter().map(|(m, c)| (m.drop_first(), c.clone()))))
    }

    pub fn dehomogenize(&self) -> Result<Polynomial> {
        self.dehomogenize_into(&Arc::new(self.ring.dehomogenized()))
    }

    /// Applies a variable permutation: `x_i ↦ x_{images[i]}`.
    pub fn permuted(&self, images: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.permuted(images), c.clone())).collect();
        Self::from_distinct_terms(&self.ring, terms)
    }

    /// The same polynomial viewed in another ring with the same variables.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Polynomial {
        assert_eq!(ring.n(), self.n());
        Polynomial { ring: ring.clone(), terms: self.terms.clone() }
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        fmt_monomial(&self.ring, m)
    }

    /// Text form with the term `first` printed first.
    pub fn to_string_marked(&self, first: &Monomial) -> String {
        let mut s = String::new();
        let mut lead = true;
        if let Ok(i) = self.terms.binary_search_by(|(t, _)| degrevlex(first, t)) {
            write_term(&mut s, &self.ring, &self.terms[i].0, &self.terms[i].1, lead);
            lead = false;
        }
        for (m, c) in &self.terms {
            if m == first {
                continue;
            }
            write_term(&mut s, &self.ring, m, c, lead);
            lead = false;
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

pub(crate) fn big_weight(m: &Monomial, w: &IntVector) -> num_bigint::BigInt {
    m.exps()
        .iter()
        .zip(w.entries())
        .filter(|(e, _)| **e != 0)
        .map(|(&e, x)| x * e)
        .sum()
}

pub fn fmt_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.names()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.names()[i], e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn write_term(s: &mut String, ring: &Ring, m: &Monomial, c: &Rational, lead: bool) {
    let neg = c.signum() < 0;
    if neg {
        s.push('-');
    } else if !lead {
        s.push('+');
    }
    let a = c.abs();
    if m.is_one() {
        s.push_str(&a.to_string());
        return;
    }
    if !a.is_one() {
        s.push_str(&a.to_string());
        s.push('*');
    }
    s.push_str(&fmt_monomial(ring, m));
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            write_term(&mut s, &self.ring, m, c, i == 0);
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::from_names(names).unwrap()
    }

    #[test]
    fn initial_forms_of_linear_form() {
        let r = ring(&["x1", "x2", "x3"]);
        let l = parse_polynomial("x1+x2+x3+1", &r).unwrap();
        let w = IntVector::from_i64s(&[0, 0, 1]);
        assert_eq!(l.initial_form(&w).unwrap(), parse_polynomial("x1+x2+1", &r).unwrap());
        let w = IntVector::from_i64s(&[0, 0, -1]);
        assert_eq!(l.initial_form(&w).unwrap(), parse_polynomial("x3", &r).unwrap());
        assert_eq!(l.initial_form(&IntVector::zeros(3)).unwrap(), l);
        assert!(l.initial_form(&IntVector::zeros(2)).is_err());
    }

    #[test]
    fn w_homogeneity() {
        let r = ring(&["x", "y", "z"]);
        let f = parse_polynomial("x^2*y-z^3", &r).unwrap();
        assert!(f.is_w_homogeneous(&IntVector::from_i64s(&[1, 1, 1])));
        let r1 = ring(&["x"]);
        let g = parse_polynomial("x+1", &r1).unwrap();
        assert!(!g.is_w_homogeneous(&IntVector::from_i64s(&[1])));
        let rh = ring(&["a", "b", "c", "d", "e", "f", "g"]);
        let h = parse_polynomial("-c^3+2*b*c*d-a*d^2-b^2*e+a*c*e", &rh).unwrap();
        assert!(h.is_w_homogeneous(&IntVector::from_i64s(&[1; 7])));
    }

    #[test]
    fn homogenize_examples() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial("x+y+1", &r).unwrap();
        let h = f.homogenize().unwrap();
        assert_eq!(h.to_string(), "x0+x+y");
        assert_eq!(h.dehomogenize_into(&r).unwrap(), f);

        let g = parse_polynomial("x*y-y^2", &r).unwrap();
        let hg = g.homogenize().unwrap();
        assert!(hg.support().all(|m| m.exps()[0] == 0));

        let r3 = ring(&["x", "y", "z"]);
        let p = parse_polynomial("x-(z+1)^3", &r3).unwrap();
        let hp = p.homogenize().unwrap();
        let hr = hp.ring().clone();
        let expect = parse_polynomial("x*x0^2-(z+x0)^3", &hr).unwrap();
        assert_eq!(hp, expect);
    }

    #[test]
    fn arithmetic() {
        let r = ring(&["x", "y"]);
        let a = parse_polynomial("x+y", &r).unwrap();
        let b = parse_polynomial("x-y", &r).unwrap();
        assert_eq!(a.try_mul(&b).unwrap(), parse_polynomial("x^2-y^2", &r).unwrap());
        assert!(a.try_sub(&a).unwrap().is_zero());
        assert_eq!(a.pow(0).unwrap(), Polynomial::one(&r));
        let other = ring(&["u", "v"]);
        assert!(a.try_add(&Polynomial::var(&other, 0)).is_err());
    }

    #[test]
    fn marked_printing() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial("x^2-2*x*y+1/2*y^2", &r).unwrap();
        assert_eq!(f.to_string(), "x^2-2*x*y+1/2*y^2");
        let y2 = f.terms()[2].0.clone();
        assert_eq!(f.to_string_marked(&y2), "1/2*y^2+x^2-2*x*y");
    }
}
