//! Exact scalars, sparse tensors, matrices and truncated `h`-series.

pub mod embed;
pub mod matrix;
pub mod scalar;
pub mod series;
pub mod tensor;

pub use embed::{embed_pair, mirror, pair_dim, permutation, Slot};
pub use matrix::Matrix;
pub use scalar::{frac, int, one, parse_scalar, render, zero, Scalar};
pub use series::HSeries;
pub use tensor::Tensor;
