//! Lie algebras, representations, O-operators and the classical
//! Yang-Baxter equation.

mod algebra;
mod naturality;
mod ooperator;
mod rep;

pub use algebra::{basis, cocycle_defect, LieAlgebra};
pub use naturality::{exp_nilpotent, is_homomorphism, push_forward, random_automorphism, PushForwardReport};
pub use ooperator::{
    cybe_defect, drinfeld_equivalence, induced_bracket, induced_cocycle_check, o_equation_defect, operator_to_r,
    pairing_identity, r_to_operator, DrinfeldReport,
};
pub use rep::Representation;
