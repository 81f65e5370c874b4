//! Exact tropical geometry for polynomial ideals over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: exact rational numbers and rational/integer linear algebra.
//! * [`poly`]: sparse multivariate polynomials, term orders and initial forms.
//! * [`groebner`]: Buchberger's algorithm, marked reduced Gröbner bases,
//!   saturation, monomial containment, witnesses and the lifting step.
//! * [`polyhedra`]: polyhedral cones in canonical form, fans, f-vectors.
//! * [`tropical`]: tropical hypersurfaces and prevarieties, tropical bases
//!   of curves, starting cones and the traversal of tropical varieties.
//! * [`symmetry`]: variable permutation groups used to reduce traversals.
//! * [`cli`]: the text formats and command implementations behind the
//!   `tropvar` binary.
//!
//! Weight vectors follow the *min* convention: `in_w(f)` collects the terms
//! of lowest `w`-weight.

pub mod cli;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod polyhedra;
pub mod symmetry;
pub mod tropical;

mod error;

pub use error::{Error, Result};
