//! Differential algebra in one derivation: jet polynomials, differential
//! operators, and Lie algebras whose brackets are differential expressions.

mod hamiltonian;
mod lie;
mod op;
mod poly;

pub use hamiltonian::*;
pub use lie::*;
pub use op::{DiffOp, Op};
pub use poly::{im_partial_test, DiffPoly, Jet, Jets, Monomial, Var, DEFAULT_MAX_JET_ORDER};
