//! Text formats and the commands behind the `tropvar` binary.
//!
//! Every input starts with a ring line `Q[a,b,...]`, followed by blocks in
//! braces. Polynomial blocks hold comma separated polynomials; a symmetry
//! block holds 0-indexed permutations such as `{(6,5,4,3,2,1,0)}`. A
//! Gröbner cone is stored as two polynomial blocks, the initial basis
//! first, each polynomial written with its marked term first.
//!
//! The commands take the whole input as a string and return the text for
//! standard output plus warnings for standard error, so they can be used
//! and tested without a process.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::groebner::{monomial_in_ideal, GroebnerConePair, Ideal, MarkedPolynomial, MarkedReducedGB};
use crate::linalg::{canonical_row_basis, IntVector};
use crate::poly::{fmt_monomial, parse_document, Block, Document, ParseError, Polynomial, Ring, WrittenPolynomial};
use crate::polyhedra::{fan_statistics, restrict_to_unit_first_coordinate, Cone, Fan, Polyhedron};
use crate::symmetry::{canonical_orbit_representative, check_ideal_invariance, close_group, Permutation, PermGroup};
use crate::tropical::{
    order_for_markings, starting_cone, tropical_curve, tropical_prevariety, traverse_with, Restart, TraverseOptions,
    TropicalVariety,
};
use crate::Error;

/// Errors of the command layer, each with its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    RetryExhausted(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::RetryExhausted(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => CliError::Parse(p),
            Error::RetryExhausted { .. } => CliError::RetryExhausted(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

/// Text for standard output and warnings for standard error.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
}

/// A ring, one list of polynomials and optionally some permutations.
#[derive(Clone, Debug)]
pub struct InputDocument {
    pub ring: Arc<Ring>,
    pub polynomials: Vec<Polynomial>,
    pub symmetry: Option<Vec<Permutation>>,
}

fn position_of_block(text: &str, k: usize) -> (usize, usize) {
    let mut seen = 0;
    let (mut line, mut col) = (1, 1);
    for ch in text.chars() {
        if ch == '{' {
            if seen == k {
                return (line, col);
            }
            seen += 1;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

fn structure_error(text: &str, block: usize, msg: &str) -> CliError {
    let (line, col) = position_of_block(text, block);
    CliError::Parse(ParseError { line, col, msg: msg.into() })
}

fn permutations(doc: &Document) -> Result<Option<Vec<Permutation>>, CliError> {
    match doc.permutations() {
        None => Ok(None),
        Some(ps) => {
            let n = doc.ring.n();
            let perms = ps
                .iter()
                .map(|p| {
                    if p.len() != n {
                        return Err(CliError::Precondition(format!(
                            "permutation of length {} in a ring with {n} variables",
                            p.len()
                        )));
                    }
                    Permutation::new(p.clone()).map_err(CliError::from)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Some(perms))
        }
    }
}

/// Splits a document into its polynomial blocks (in order) and checks that
/// a symmetry block, if any, comes last.
fn blocks(text: &str, doc: &Document) -> Result<Vec<Vec<WrittenPolynomial>>, CliError> {
    let mut out = Vec::new();
    for (k, b) in doc.blocks.iter().enumerate() {
        match b {
            Block::Polynomials(p) => out.push(p.clone()),
            Block::Permutations(_) if k + 1 != doc.blocks.len() => {
                return Err(structure_error(text, k, "the symmetry block must come last"));
            }
            Block::Permutations(_) => {}
        }
    }
    Ok(out)
}

/// Reads a ring line, one non-empty polynomial block and an optional
/// symmetry block.
pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    let doc = parse_document(text)?;
    let bs = blocks(text, &doc)?;
    if bs.len() != 1 {
        return Err(structure_error(text, bs.len().min(1), "expected exactly one list of polynomials"));
    }
    if bs[0].is_empty() {
        return Err(structure_error(text, 0, "empty list of polynomials"));
    }
    Ok(InputDocument {
        ring: doc.ring.clone(),
        polynomials: bs[0].iter().map(|w| w.poly.clone()).collect(),
        symmetry: permutations(&doc)?,
    })
}

fn write_list<T: std::fmt::Display>(out: &mut String, items: impl IntoIterator<Item = T>) {
    let items: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if items.is_empty() {
        out.push_str("{}\n");
    } else {
        let _ = writeln!(out, "{{\n{}}}", items.join(",\n"));
    }
}

fn write_symmetry(out: &mut String, perms: &[Permutation]) {
    let items: Vec<String> = perms.iter().map(Permutation::to_string).collect();
    let _ = writeln!(out, "{{{}}}", items.join(","));
}

/// Canonical text of an input document; parsing it back gives the same
/// document.
pub fn format_input(doc: &InputDocument) -> String {
    let mut out = format!("{}\n", doc.ring);
    write_list(&mut out, &doc.polynomials);
    if let Some(s) = &doc.symmetry {
        write_symmetry(&mut out, s);
    }
    out
}

/// Text of a Gröbner cone pair, with an optional symmetry block.
pub fn format_pair(pair: &GroebnerConePair, symmetry: Option<&[Permutation]>) -> String {
    let mut out = format!("{}\n", pair.ring());
    write_list(&mut out, pair.initial_gb.elements());
    write_list(&mut out, pair.full_gb.elements());
    if let Some(s) = symmetry {
        write_symmetry(&mut out, s);
    }
    out
}

fn marked_basis(ring: &Arc<Ring>, ws: &[WrittenPolynomial]) -> Result<MarkedReducedGB, CliError> {
    let elems = ws
        .iter()
        .map(|w| {
            let first = w.first.clone().ok_or_else(|| CliError::Precondition("zero polynomial in a basis".into()))?;
            MarkedPolynomial::new(w.poly.clone(), first).map_err(CliError::from)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MarkedReducedGB::from_marked(ring, elems, None))
}

/// Reads a pair written by [`format_pair`]. The markings must come from a
/// term order; one inducing them is attached to both bases.
pub fn parse_pair(text: &str) -> Result<(GroebnerConePair, Option<Vec<Permutation>>), CliError> {
    let doc = parse_document(text)?;
    let bs = blocks(text, &doc)?;
    if bs.len() != 2 {
        return Err(structure_error(text, bs.len().min(2), "expected two lists of polynomials"));
    }
    let init = marked_basis(&doc.ring, &bs[0])?;
    let full = marked_basis(&doc.ring, &bs[1])?;
    if !full.is_reduced() || !init.is_reduced() {
        return Err(CliError::Precondition("the bases are not reduced".into()));
    }
    let order = order_for_markings(&full)?
        .ok_or_else(|| CliError::Precondition("the markings do not come from a term order".into()))?;
    let pair = GroebnerConePair::new(init.with_order(Some(order.clone())), full.with_order(Some(order)))?;
    Ok((pair, permutations(&doc)?))
}

fn homogeneous_ideal(doc: &InputDocument, out: &mut Output) -> Result<Ideal, CliError> {
    let ideal = Ideal::new(&doc.ring, doc.polynomials.clone())?;
    if ideal.is_homogeneous() {
        return Ok(ideal);
    }
    let h = ideal.homogenized()?;
    out.warnings.push(format!("input is not homogeneous; working with its homogenization in {}", h.ring()));
    Ok(h)
}

/// A maximal cone of the tropical variety, written as a pair of marked
/// bases. A symmetry block in the input is copied to the output.
pub fn cmd_startingcone(text: &str, seed: u64) -> Result<Output, CliError> {
    let doc = parse_input(text)?;
    let mut out = Output::default();
    let ideal = homogeneous_ideal(&doc, &mut out)?;
    let pair = starting_cone(&ideal, seed)?;
    let sym = if ideal.n() == doc.ring.n() { doc.symmetry.as_deref() } else { None };
    out.stdout = format_pair(&pair, sym);
    Ok(out)
}

/// Flags of [`cmd_traverse`].
#[derive(Clone, Debug, Default)]
pub struct TraverseFlags {
    pub symmetry: bool,
    pub seed: u64,
    pub jobs: usize,
    pub restrict_northern: bool,
    pub full_restart: bool,
}

/// Traverses the tropical variety from a pair written by
/// [`cmd_startingcone`] and prints the report.
pub fn cmd_traverse(text: &str, flags: &TraverseFlags) -> Result<Output, CliError> {
    let (pair, perms) = parse_pair(text)?;
    let n = pair.ring().n();
    let mut out = Output::default();
    out.warnings.push("assuming the ideal is prime; otherwise only a connected part is computed".into());
    let group = if flags.symmetry {
        let perms = perms.ok_or_else(|| CliError::Precondition("--symmetry given but no symmetry block".into()))?;
        let ideal = Ideal::from_gb(pair.full_gb.clone());
        for p in &perms {
            let g = close_group(n, std::slice::from_ref(p))?;
            if !check_ideal_invariance(&ideal, &g) {
                return Err(Error::NotInvariant(p.to_string()).into());
            }
        }
        close_group(n, &perms)?
    } else {
        PermGroup::trivial(n)
    };
    let opts = TraverseOptions {
        seed: flags.seed,
        jobs: flags.jobs.max(1),
        restart: if flags.full_restart { Restart::Full } else { Restart::Incremental },
    };
    let tv = traverse_with(&pair, Some(&group), &opts)?;
    out.stdout = format_report(&tv);
    if flags.restrict_northern {
        let slices = restrict_to_unit_first_coordinate(&tv.fan)?;
        out.stdout.push_str(&format_slices(&slices));
    }
    Ok(out)
}

fn fmt_vectors<'a>(vs: impl IntoIterator<Item = &'a IntVector>) -> String {
    let items: Vec<String> = vs.into_iter().map(IntVector::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn orbit_summary(cones: &[Cone], group: &PermGroup) -> String {
    let mut orbits: BTreeMap<Cone, usize> = BTreeMap::new();
    for c in cones {
        *orbits.entry(canonical_orbit_representative(c, group)).or_default() += 1;
    }
    let mut by_size: BTreeMap<usize, usize> = BTreeMap::new();
    for size in orbits.values() {
        *by_size.entry(*size).or_default() += 1;
    }
    let parts: Vec<String> = by_size.iter().rev().map(|(size, count)| format!("{count} of size {size}")).collect();
    parts.join(", ")
}

/// The traversal report. Cone dimensions in the incidence and orbit
/// sections are counted modulo the homogeneity space.
pub fn format_report(tv: &TropicalVariety) -> String {
    let s = &tv.statistics;
    let mut out = String::new();
    let _ = writeln!(out, "Ambient dimension: {}", s.ambient);
    let _ = writeln!(out, "Dimension of homogeneity space: {}", s.homog_dim);
    let _ = writeln!(out, "Dimension of tropical variety: {}", s.dim);
    let _ = writeln!(out, "Simplicial: {}", s.simplicial);
    let _ = writeln!(out, "Order of input symmetry group: {}", tv.group.order());
    let fv: Vec<String> = s.f_vector.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "F-vector: ({})", fv.join(","));

    let basis = canonical_row_basis(&tv.homogeneity, s.ambient);
    let _ = writeln!(out, "Modulo the homogeneity space:");
    write_list(&mut out, &basis);

    let ray_cones: &[Cone] = s.faces.first().map(Vec::as_slice).unwrap_or(&[]);
    let _ = writeln!(out, "Rays:");
    write_list(&mut out, ray_cones.iter().enumerate().map(|(i, c)| format!("{i}: {}", c.rays()[0])));

    for k in (2..=s.faces.len()).rev() {
        let mut lists: Vec<Vec<usize>> = s.faces[k - 1]
            .iter()
            .map(|c| (0..ray_cones.len()).filter(|&i| c.contains_cone(&ray_cones[i])).collect())
            .collect();
        lists.sort();
        let _ = writeln!(out, "Rays incident to each dimension {k} cone:");
        write_list(
            &mut out,
            lists.iter().map(|l| {
                let items: Vec<String> = l.iter().map(usize::to_string).collect();
                format!("{{{}}}", items.join(","))
            }),
        );
    }
    for k in 1..=s.faces.len() {
        let _ = writeln!(out, "Orbits of dimension {k} cones: {}", orbit_summary(&s.faces[k - 1], &tv.group));
    }
    out
}

fn fmt_affine(rows: &[(IntVector, num_bigint::BigInt)]) -> String {
    let items: Vec<String> = rows.iter().map(|(a, c)| format!("{a}+{c}").replace("+-", "-")).collect();
    format!("{{{}}}", items.join(","))
}

/// The slices `w_0 = 1` of the maximal cones, each as equations `a·x+c = 0`
/// and inequalities `a·x+c ≥ 0` in the remaining coordinates.
pub fn format_slices(ps: &[Polyhedron]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Restriction to the first coordinate equal to 1:");
    write_list(
        &mut out,
        ps.iter().enumerate().map(|(i, p)| {
            format!(
                "{i}: dimension {}, equations {}, inequalities {}",
                p.dim(),
                fmt_affine(&p.equations),
                fmt_affine(&p.inequalities)
            )
        }),
    );
    out
}

/// The prevariety of the input polynomials: its maximal cones in canonical
/// form and the face counts of this representation.
pub fn cmd_prevariety(text: &str) -> Result<Output, CliError> {
    let doc = parse_input(text)?;
    let fan = tropical_prevariety(&doc.polynomials)?;
    Ok(Output { stdout: format_fan(&fan), warnings: Vec::new() })
}

/// Summary and cone listing of a fan given by its maximal cones. The
/// f-vector counts faces above the smallest lineality space.
pub fn format_fan(fan: &Fan) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Ambient dimension: {}", fan.ambient_dim());
    let _ = writeln!(out, "Number of maximal cones: {}", fan.len());
    let Some(dim) = fan.dim() else {
        return out;
    };
    let lin = fan.cones().iter().map(Cone::lineality_dim).min().unwrap_or(0);
    let s = fan_statistics(fan, lin);
    let fv: Vec<String> = s.f_vector.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "Dimension: {dim}");
    let _ = writeln!(out, "Lineality dimension: {lin}");
    let _ = writeln!(out, "F-vector: ({})", fv.join(","));
    for (i, c) in fan.cones().iter().enumerate() {
        let _ = writeln!(out, "Cone {i}:");
        let _ = writeln!(out, "Dimension: {}", c.dim());
        let _ = writeln!(out, "Equations: {}", fmt_vectors(c.equations()));
        let _ = writeln!(out, "Inequalities: {}", fmt_vectors(c.inequalities()));
        let _ = writeln!(out, "Rays: {}", fmt_vectors(c.rays()));
        let _ = writeln!(out, "Lineality: {}", fmt_vectors(c.lineality()));
    }
    out
}

/// A tropical basis of a curve, written as a ring line and one block.
pub fn cmd_curvebasis(text: &str, seed: u64) -> Result<Output, CliError> {
    let doc = parse_input(text)?;
    let mut out = Output::default();
    let ideal = homogeneous_ideal(&doc, &mut out)?;
    let curve = tropical_curve(&ideal, seed, Restart::Incremental)?;
    out.stdout = format!("{}\n", ideal.ring());
    write_list(&mut out.stdout, &curve.basis);
    Ok(out)
}

/// A monomial in the ideal, or `no`.
pub fn cmd_monomial(text: &str) -> Result<Output, CliError> {
    let doc = parse_input(text)?;
    let ideal = Ideal::new(&doc.ring, doc.polynomials.clone())?;
    let stdout = match monomial_in_ideal(&ideal)? {
        Some(m) => format!("{}\n", fmt_monomial(&doc.ring, &m)),
        None => "no\n".to_string(),
    };
    Ok(Output { stdout, warnings: Vec::new() })
}
