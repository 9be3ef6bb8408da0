//! Operators on `V ⊗ V` and their placements inside `V ⊗ V ⊗ V`.
//! Basis vector `e_i ⊗ e_j` has index `i * n + j`.

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Which pair of tensor factors an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    S12,
    S13,
    S23,
}

/// Recovers `n` from an `n² × n²` operator.
pub fn pair_dim(a: &Matrix) -> Result<usize> {
    let d = a.rows();
    if !a.is_square() {
        return Err(Error::Dimension(format!("{}x{} operator is not square", a.rows(), a.cols())));
    }
    let n = (d as f64).sqrt().round() as usize;
    if n * n != d || n == 0 {
        return Err(Error::NotPerfectSquare(d));
    }
    Ok(n)
}

/// The flip `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
pub fn permutation(n: usize) -> Matrix {
    let mut p = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            p[(j * n + i, i * n + j)] = num_traits::One::one();
        }
    }
    p
}

/// Places `A` on the given slot pair by the coordinate rule, without
/// cross-validation.
fn embed_raw(a: &Matrix, slot: Slot, n: usize) -> Matrix {
    match slot {
        Slot::S12 => a.kron(&Matrix::identity(n)),
        Slot::S23 => Matrix::identity(n).kron(a),
        Slot::S13 => {
            let mut out = Matrix::zeros(n * n * n, n * n * n);
            let id3 = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
            for i in 0..n {
                for k in 0..n {
                    for x in 0..n {
                        for y in 0..n {
                            let v = &a[(x * n + y, i * n + k)];
                            if num_traits::Zero::is_zero(v) {
                                continue;
                            }
                            for j in 0..n {
                                out[(id3(x, j, y), id3(i, j, k))] = v.clone();
                            }
                        }
                    }
                }
            }
            out
        }
    }
}

/// Places an operator on `V ⊗ V` into a slot of `V ⊗ V ⊗ V`.
///
/// The `13` placement is built coordinate-wise and checked against
/// `P23 A12 P23`; a mismatch is an internal error.
pub fn embed_pair(a: &Matrix, slot: Slot) -> Result<Matrix> {
    let n = pair_dim(a)?;
    let out = embed_raw(a, slot, n);
    if slot == Slot::S13 {
        let p23 = embed_raw(&permutation(n), Slot::S23, n);
        let a12 = embed_raw(a, Slot::S12, n);
        if Matrix::chain(&[&p23, &a12, &p23])? != out {
            return Err(Error::Internal("13-embedding disagrees with conjugation by P23".into()));
        }
    }
    Ok(out)
}

/// The mirror operator `e_i ⊗ e_j ⊗ e_k ↦ e_k ⊗ e_j ⊗ e_i`.
pub fn mirror(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n * n * n, n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                m[((k * n + j) * n + i, (i * n + j) * n + k)] = num_traits::One::one();
            }
        }
    }
    m
}
