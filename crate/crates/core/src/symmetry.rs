//! Groups of variable permutations, used to traverse a tropical variety one
//! orbit of cones at a time.

use std::collections::BTreeSet;
use std::fmt;

use crate::groebner::{normal_form, Ideal};
use crate::polyhedra::Cone;
use crate::{Error, Result};

/// A bijection of `{0, …, n−1}`; variable `i` is sent to `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The group generated by some permutations, with all elements listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(n: usize) -> PermGroup {
        PermGroup { n, generators: Vec::new(), elements: vec![Permutation::identity(n)] }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Closes `gens` under composition. Meant for small groups: every element
/// is stored.
pub fn close_group(n: usize, gens: &[Permutation]) -> Result<PermGroup> {
    if let Some(g) = gens.iter().find(|g| g.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: g.len() });
    }
    let mut elements: BTreeSet<Permutation> = BTreeSet::new();
    let id = Permutation::identity(n);
    elements.insert(id.clone());
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = g.compose(&p);
            if elements.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    Ok(PermGroup { n, generators: gens.to_vec(), elements: elements.into_iter().collect() })
}

/// True when every generator of the group maps every generator of `i` into
/// `i`.
pub fn check_ideal_invariance(i: &Ideal, g: &PermGroup) -> bool {
    if g.degree() != i.n() {
        return false;
    }
    let gb = i.groebner_basis();
    g.generators()
        .iter()
        .all(|s| i.generators().iter().all(|f| normal_form(&f.permuted(s.images()), gb).is_zero()))
}

/// The smallest cone in the orbit of `c`.
pub fn canonical_orbit_representative(c: &Cone, g: &PermGroup) -> Cone {
    let mut best = c.clone();
    for s in g.elements().iter().filter(|s| !s.is_identity()) {
        let p = c.permuted(s.images());
        if p < best {
            best = p;
        }
    }
    best
}

/// The distinct images of `c`, sorted.
pub fn orbit(c: &Cone, g: &PermGroup) -> Vec<Cone> {
    let set: BTreeSet<Cone> = g.elements().iter().map(|s| c.permuted(s.images())).collect();
    set.into_iter().collect()
}
