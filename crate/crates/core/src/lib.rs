//! Exact verification of classical and quantum r-matrix identities: braid
//! and Yang-Baxter relations, O-operators, Poisson brackets on polynomial
//! rings, Clebsch maps, Lie algebra doubles and Hamiltonian operators of a
//! differential algebra.
//!
//! All arithmetic is over exact rationals; every check returns the full
//! defect rather than a yes/no answer.

pub mod clebsch;
pub mod diff;
pub mod doubles;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod lie;
pub mod par;
pub mod poisson;
pub mod random;
pub mod report;
pub mod yang_baxter;

pub use error::{Error, Result};
