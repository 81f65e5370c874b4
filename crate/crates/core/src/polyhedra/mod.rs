//! Polyhedral cones in canonical form, fans, face counts and slices.

mod cone;
mod dd;
mod fan;

pub use cone::Cone;
pub use fan::{fan_statistics, restrict_to_unit_first_coordinate, Fan, FanStatistics, Polyhedron};

use crate::linalg::IntVector;
use crate::Result;

/// Canonical form of `{w : equations·w = 0, inequalities·w ≥ 0}`.
pub fn canonicalize(n: usize, equations: &[IntVector], inequalities: &[IntVector]) -> Result<Cone> {
    Cone::new(n, equations, inequalities)
}

pub fn extreme_rays(c: &Cone) -> Vec<IntVector> {
    c.rays().to_vec()
}

pub fn relative_interior_point(c: &Cone) -> IntVector {
    c.relative_interior_point()
}

pub fn intersect(a: &Cone, b: &Cone) -> Result<Cone> {
    a.intersect(b)
}

pub fn common_refinement(f1: &Fan, f2: &Fan) -> Result<Fan> {
    f1.common_refinement(f2)
}

pub fn facets(c: &Cone) -> Vec<Cone> {
    c.facets()
}

#[cfg(test)]
mod tests;
