//! Tropical hypersurfaces and prevarieties, Gröbner cones of pairs,
//! tropical bases of curves, starting cones, the traversal of a tropical
//! variety through its maximal cones, and circuits of linear ideals.

mod curve;
mod groebner_cone;
mod hypersurface;
mod linear;
mod traverse;

pub use curve::{tropical_basis_of_curve, tropical_curve, CurveVariety, Restart};
pub use groebner_cone::{groebner_cone, marked_cone, order_for_markings};
pub use hypersurface::{tropical_hypersurface, tropical_prevariety};
pub use linear::{linear_circuits, uniform_bergman_member, LinearIdealModel};
pub use traverse::{
    neighbors, starting_cone, traverse, traverse_with, TraverseOptions, TropicalVariety, STARTING_CONE_ATTEMPTS,
};
