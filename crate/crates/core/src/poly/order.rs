use std::cmp::Ordering;

use crate::linalg::IntVector;
use crate::{Error, Result};

use super::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    Lex,
    Degrevlex,
}

/// A term order refined by a sequence of weight vectors.
///
/// Weights use the min convention: the monomial of *lower* weight is the
/// larger one, so it becomes the initial term. Ties left by every weight are
/// broken by `tiebreak`. With no weights the order is plain lex or degrevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    weights: Vec<Vec<i64>>,
    tiebreak: Tiebreak,
}

impl TermOrder {
    pub fn lex() -> Self {
        TermOrder { weights: Vec::new(), tiebreak: Tiebreak::Lex }
    }

    pub fn degrevlex() -> Self {
        TermOrder { weights: Vec::new(), tiebreak: Tiebreak::Degrevlex }
    }

    pub fn weighted(weights: Vec<Vec<i64>>, tiebreak: Tiebreak) -> Self {
        TermOrder { weights, tiebreak }
    }

    /// Weight-refined order from arbitrary-precision weights.
    pub fn from_int_vectors(weights: &[IntVector], tiebreak: Tiebreak) -> Result<Self> {
        let ws = weights
            .iter()
            .map(|w| w.to_i64s().ok_or(Error::WeightOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::weighted(ws, tiebreak))
    }

    /// The same order with `w` compared before all existing weights.
    pub fn refined_by(&self, w: Vec<i64>) -> Self {
        let mut weights = Vec::with_capacity(self.weights.len() + 1);
        weights.push(w);
        weights.extend(self.weights.iter().cloned());
        TermOrder { weights, tiebreak: self.tiebreak }
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn tiebreak(&self) -> Tiebreak {
        self.tiebreak
    }

    /// `Greater` means `a` is preferred as an initial term over `b`.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for w in &self.weights {
            match b.weight(w).cmp(&a.weight(w)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        match self.tiebreak {
            Tiebreak::Lex => a.exps().cmp(b.exps()),
            Tiebreak::Degrevlex => degrevlex(a, b),
        }
    }

    /// True when every variable is larger than 1, i.e. the order is a
    /// well-order and Buchberger's algorithm terminates on any input.
    pub fn is_global(&self, n: usize) -> bool {
        (0..n).all(|i| {
            for w in &self.weights {
                if w[i] != 0 {
                    return w[i] < 0;
                }
            }
            true
        })
    }
}

pub fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.exps().iter().zip(b.exps()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}
