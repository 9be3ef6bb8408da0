//! Polynomial Poisson brackets on the coordinate ring of `G*`.

mod action;
mod bracket;
mod poly;

pub use action::{
    action_criterion, coadjoint_fields, gradient_transport_defect, infinitesimal_action_defect, ActionMode, VectorFields,
};
pub use bracket::{
    affine_poisson, casimir_defect, compatibility_defect, constant_cocycle, constant_poisson, jacobi_defect,
    linear_poisson, quadratic_invariants, quadratic_poisson, PoissonStructure,
};
pub use poly::{Monomial, Poly, PolyTensor};
