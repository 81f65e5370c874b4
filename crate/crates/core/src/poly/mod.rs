//! Sparse multivariate polynomials over ℚ, term orders and initial forms.

mod monomial;
mod order;
mod parse;
mod polynomial;

pub use monomial::{Exps, Monomial};
pub use order::{degrevlex, Tiebreak, TermOrder};
pub use parse::{
    parse_document, parse_polynomial, parse_polynomial_list, parse_ring, parse_written_polynomial, Block,
    Document, ParseError, WrittenPolynomial,
};
pub use polynomial::{fmt_monomial, same_ring, Polynomial, Ring};

pub(crate) use polynomial::big_weight;

use std::cmp::Ordering;

use crate::linalg::IntVector;
use crate::Result;

/// Compares two exponent vectors under `order`; `Greater` means `a` is the
/// preferred initial term.
pub fn compare(order: &TermOrder, a: &Monomial, b: &Monomial) -> Ordering {
    order.compare(a, b)
}

pub fn initial_form(f: &Polynomial, w: &IntVector) -> Result<Polynomial> {
    f.initial_form(w)
}

pub fn is_w_homogeneous(f: &Polynomial, w: &IntVector) -> bool {
    f.is_w_homogeneous(w)
}

pub fn homogenize(f: &Polynomial) -> Result<Polynomial> {
    f.homogenize()
}

/// Homogenizes a list of polynomials into one shared ring with `x0` first.
pub fn homogenize_all(fs: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let ring = std::sync::Arc::new(first.ring().homogenized());
    fs.iter().map(|f| f.homogenize_into(&ring)).collect()
}
