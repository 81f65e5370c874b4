//! Text grammar for rings, polynomials and input documents.
//!
//! ```text
//! document := ring block*
//! ring     := "Q[" name ("," name)* "]"
//! block    := "{" [poly ("," poly)*] "}" | "{" perm ("," perm)* "}"
//! perm     := "(" uint ("," uint)* ")"
//! poly     := ["+"|"-"] term (("+"|"-") term)*
//! term     := factor (("*" | "/" | juxtaposition) factor)*
//! factor   := atom ["^" uint]
//! atom     := integer | name | "(" poly ")"
//! ```
//!
//! A number directly followed by a name or a parenthesis multiplies, so
//! `-2d*e*f` reads as `-2*d*e*f`. Division is only allowed by constants.

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::Rational;

use super::{Monomial, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

/// A polynomial together with the monomial of its first written term,
/// which marks it when read back as part of a marked Gröbner basis.
#[derive(Clone, Debug)]
pub struct WrittenPolynomial {
    pub poly: Polynomial,
    pub first: Option<Monomial>,
}

#[derive(Clone, Debug)]
pub enum Block {
    Polynomials(Vec<WrittenPolynomial>),
    Permutations(Vec<Vec<usize>>),
}

#[derive(Clone, Debug)]
pub struct Document {
    pub ring: Arc<Ring>,
    pub blocks: Vec<Block>,
}

impl Document {
    pub fn polynomial_blocks(&self) -> impl Iterator<Item = &Vec<WrittenPolynomial>> {
        self.blocks.iter().filter_map(|b| match b {
            Block::Polynomials(p) => Some(p),
            Block::Permutations(_) => None,
        })
    }

    pub fn permutations(&self) -> Option<&Vec<Vec<usize>>> {
        self.blocks.iter().find_map(|b| match b {
            Block::Permutations(p) => Some(p),
            Block::Polynomials(_) => None,
        })
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: Option<Arc<Ring>>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0, ring: None }
    }

    fn error_at(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.rfind('\n').map_or(before.chars().count(), |i| before[i + 1..].chars().count()) + 1;
        ParseError { line, col, msg: msg.into() }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        self.error_at(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |b| format!("`{}`", b as char));
            Err(self.error(format!("expected `{}`, found {found}", c as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            _ => return None,
        }
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Some(&self.src[start..self.pos])
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let d = self.digits().ok_or_else(|| self.error("expected a non-negative integer"))?;
        d.parse().map_err(|_| self.error_at(start, "integer too large"))
    }

    fn ring_decl(&mut self) -> Result<Arc<Ring>, ParseError> {
        let start = self.pos;
        if self.ident() != Some("Q") {
            return Err(self.error_at(start, "expected ring declaration `Q[...]`"));
        }
        self.expect(b'[')?;
        let mut names = Vec::new();
        if !self.eat(b']') {
            loop {
                let at = self.pos;
                let name = self.ident().ok_or_else(|| self.error("expected a variable name"))?;
                if names.iter().any(|n| n == name) {
                    return Err(self.error_at(at, format!("duplicate variable `{name}`")));
                }
                names.push(name.to_string());
                if self.eat(b']') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        if names.is_empty() {
            return Err(self.error_at(start, "ring has no variables"));
        }
        let ring = Arc::new(Ring::new(names).map_err(|e| self.error_at(start, e.to_string()))?);
        self.ring = Some(ring.clone());
        Ok(ring)
    }

    fn ring(&self) -> &Arc<Ring> {
        self.ring.as_ref().expect("ring declared")
    }

    fn poly(&mut self) -> Result<WrittenPolynomial, ParseError> {
        let mut first = None;
        let mut acc = Polynomial::zero(self.ring());
        let mut count = 0;
        loop {
            let neg = if self.eat(b'-') {
                true
            } else {
                let plus = self.eat(b'+');
                if count > 0 && !plus {
                    break;
                }
                false
            };
            let mut t = self.term()?;
            if neg {
                t = t.neg();
            }
            if count == 0 && t.is_monomial() {
                first = Some(t.terms()[0].0.clone());
            }
            acc = acc.try_add(&t).expect("same ring");
            count += 1;
        }
        Ok(WrittenPolynomial { poly: acc, first })
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.mul(&acc, &f)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    if !f.is_constant() || f.is_zero() {
                        return Err(self.error_at(at, "division is only allowed by nonzero constants"));
                    }
                    acc = acc.scale(&f.terms()[0].1.recip());
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' || c == b'(' => {
                    let f = self.factor()?;
                    acc = self.mul(&acc, &f)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial, ParseError> {
        a.try_mul(b).map_err(|e| self.error(e.to_string()))
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.uint()?;
            return base.pow(k).map_err(|e| self.error(e.to_string()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let ring = self.ring().clone();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?.poly;
                self.expect(b')')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("digit present");
                let v: BigInt = d.parse().expect("decimal digits");
                Ok(Polynomial::constant(&ring, Rational::from_bigint(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let at = self.pos;
                let name = self.ident().expect("identifier present");
                let i = ring
                    .index_of(name)
                    .ok_or_else(|| self.error_at(at, format!("unknown variable `{name}`")))?;
                Ok(Polynomial::var(&ring, i))
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn poly_list(&mut self) -> Result<Vec<WrittenPolynomial>, ParseError> {
        self.expect(b'{')?;
        let mut out = Vec::new();
        if self.eat(b'}') {
            return Ok(out);
        }
        loop {
            out.push(self.poly()?);
            if self.eat(b'}') {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    /// Tries to read `{(..),(..)}`; restores the position on failure.
    fn perm_list(&mut self) -> Option<Vec<Vec<usize>>> {
        let save = self.pos;
        let res = (|| {
            self.expect(b'{').ok()?;
            let mut out = Vec::new();
            loop {
                self.expect(b'(').ok()?;
                let mut p = Vec::new();
                loop {
                    p.push(self.uint().ok()? as usize);
                    if self.eat(b')') {
                        break;
                    }
                    self.expect(b',').ok()?;
                }
                out.push(p);
                if self.eat(b'}') {
                    return Some(out);
                }
                self.expect(b',').ok()?;
            }
        })();
        if res.is_none() {
            self.pos = save;
        }
        res
    }
}

pub fn parse_ring(s: &str) -> Result<Arc<Ring>, ParseError> {
    let mut p = Parser::new(s);
    let r = p.ring_decl()?;
    if !p.at_end() {
        return Err(p.error("trailing input after ring declaration"));
    }
    Ok(r)
}

pub fn parse_polynomial(s: &str, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
    parse_written_polynomial(s, ring).map(|w| w.poly)
}

pub fn parse_written_polynomial(s: &str, ring: &Arc<Ring>) -> Result<WrittenPolynomial, ParseError> {
    let mut p = Parser::new(s);
    p.ring = Some(ring.clone());
    if p.at_end() {
        return Err(p.error("empty polynomial"));
    }
    let w = p.poly()?;
    if !p.at_end() {
        return Err(p.error("trailing input after polynomial"));
    }
    Ok(w)
}

/// Parses `{p1, p2, ...}` over a known ring.
pub fn parse_polynomial_list(s: &str, ring: &Arc<Ring>) -> Result<Vec<Polynomial>, ParseError> {
    let mut p = Parser::new(s);
    p.ring = Some(ring.clone());
    let l = p.poly_list()?;
    if !p.at_end() {
        return Err(p.error("trailing input after list"));
    }
    Ok(l.into_iter().map(|w| w.poly).collect())
}

/// Parses a ring declaration followed by any number of `{...}` blocks.
pub fn parse_document(s: &str) -> Result<Document, ParseError> {
    let mut p = Parser::new(s);
    let ring = p.ring_decl()?;
    let mut blocks = Vec::new();
    while !p.at_end() {
        if p.peek() != Some(b'{') {
            return Err(p.error("expected `{`"));
        }
        if let Some(perms) = p.perm_list() {
            blocks.push(Block::Permutations(perms));
        } else {
            blocks.push(Block::Polynomials(p.poly_list()?));
        }
    }
    Ok(Document { ring, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hankel_ring() -> Arc<Ring> {
        Ring::from_names(&["a", "b", "c", "d", "e", "f", "g"]).unwrap()
    }

    #[test]
    fn parses_and_prints_canonically() {
        let r = hankel_ring();
        let f = parse_polynomial("-c^3+2*b*c*d-a*d^2-b^2*e+a*c*e", &r).unwrap();
        assert_eq!(f.len(), 5);
        let again = parse_polynomial(&f.to_string(), &r).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn implicit_product_after_number() {
        let r = hankel_ring();
        let a = parse_polynomial("c*f^2+e^3-2d*e*f+d^2*g-c*e*g", &r).unwrap();
        let b = parse_polynomial("c*f^2+e^3-2*d*e*f+d^2*g-c*e*g", &r).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rationals_and_parentheses() {
        let r = Ring::from_names(&["x", "y"]).unwrap();
        let f = parse_polynomial("1/2*x - (x+y)^2/4", &r).unwrap();
        assert_eq!(f.to_string(), "-1/4*x^2-1/2*x*y-1/4*y^2+1/2*x");
        assert!(parse_polynomial("x/y", &r).is_err());
        assert!(parse_polynomial("x/0", &r).is_err());
    }

    #[test]
    fn first_written_term_is_recorded() {
        let r = Ring::from_names(&["x", "y"]).unwrap();
        let w = parse_written_polynomial("y^2 - x^2", &r).unwrap();
        assert_eq!(w.first.unwrap().exps(), &[0, 2]);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_document("Q[x,y]\n{x+z}").unwrap_err();
        assert_eq!((err.line, err.col), (2, 4));
        assert!(parse_document("Q[x,x]").is_err());
        assert!(parse_document("{x}").is_err());
        assert!(parse_ring("Q[]").is_err());
    }

    #[test]
    fn document_with_symmetry() {
        let doc = parse_document("Q[a,b]\n{a+b,\na*b}\n{a,b}\n{(1,0)}\n").unwrap();
        assert_eq!(doc.polynomial_blocks().count(), 2);
        assert_eq!(doc.permutations().unwrap(), &vec![vec![1, 0]]);
    }

    #[test]
    fn empty_list_parses() {
        let doc = parse_document("Q[a]\n{}").unwrap();
        assert_eq!(doc.polynomial_blocks().next().unwrap().len(), 0);
    }
}
