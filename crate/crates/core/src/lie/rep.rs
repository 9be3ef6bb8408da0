use num_traits::Zero;

use super::algebra::{basis, LieAlgebra};
use crate::error::{dim_err, Error, Result};
use crate::exact::{Matrix, Scalar, Tensor};

/// Linear action of a Lie algebra on a module, stored as
/// `e_i · v_α = Σ_γ chi[i, α, γ] v_γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra_dim: usize,
    dim: usize,
    chi: Tensor,
}

impl Representation {
    /// Validates `χ([e_i, e_j]) = [χ(e_i), χ(e_j)]`.
    pub fn new(alg: &LieAlgebra, dim: usize, chi: Tensor) -> Result<Self> {
        let rep = Self::unchecked(alg.dim(), dim, chi)?;
        if !rep.defect(alg)?.is_zero() {
            return Err(Error::NotRepresentation);
        }
        Ok(rep)
    }

    /// Shape check only.
    pub fn unchecked(algebra_dim: usize, dim: usize, chi: Tensor) -> Result<Self> {
        if chi.shape() != [algebra_dim, dim, dim] {
            return Err(dim_err(format!("action tensor of shape {:?}", chi.shape())));
        }
        Ok(Self { algebra_dim, dim, chi })
    }

    /// From one matrix per basis element; column `α` of matrix `i` is `e_i · v_α`.
    pub fn from_matrices(alg: &LieAlgebra, mats: &[Matrix]) -> Result<Self> {
        let dim = mats.first().map_or(0, Matrix::rows);
        if mats.len() != alg.dim() || mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(dim_err("one square matrix per basis element expected"));
        }
        let mut chi = Tensor::zeros(&[alg.dim(), dim, dim]);
        for (i, m) in mats.iter().enumerate() {
            for a in 0..dim {
                for g in 0..dim {
                    chi.set(&[i, a, g], m[(g, a)].clone());
                }
            }
        }
        Self::new(alg, dim, chi)
    }

    /// `e_i · e^j = -Σ_s c[i,s,j] e^s` on the dual space.
    pub fn coadjoint(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        let mut chi = Tensor::zeros(&[n, n, n]);
        for (k, v) in alg.structure().iter() {
            chi.set(&[k[0], k[2], k[1]], -v);
        }
        Self { algebra_dim: n, dim: n, chi }
    }

    pub fn adjoint(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        Self { algebra_dim: n, dim: n, chi: alg.structure().clone() }
    }

    /// Contragredient action `χ^d(X) = -χ(X)ᵀ`.
    pub fn dual(&self) -> Self {
        let mut chi = Tensor::zeros(&[self.algebra_dim, self.dim, self.dim]);
        for (k, v) in self.chi.iter() {
            chi.set(&[k[0], k[2], k[1]], -v);
        }
        Self { algebra_dim: self.algebra_dim, dim: self.dim, chi }
    }

    /// Direct sum with another module of the same algebra.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra_dim != other.algebra_dim {
            return Err(dim_err("modules over different algebras"));
        }
        let d = self.dim + other.dim;
        let mut chi = Tensor::zeros(&[self.algebra_dim, d, d]);
        for (k, v) in self.chi.iter() {
            chi.set(k, v.clone());
        }
        for (k, v) in other.chi.iter() {
            chi.set(&[k[0], k[1] + self.dim, k[2] + self.dim], v.clone());
        }
        Ok(Self { algebra_dim: self.algebra_dim, dim: d, chi })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn tensor(&self) -> &Tensor {
        &self.chi
    }

    /// Matrix of `χ(e_i)`.
    pub fn matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (k, v) in self.chi.iter() {
            if k[0] == i {
                m[(k[2], k[1])] = v.clone();
            }
        }
        m
    }

    /// `x · v` for coordinate vectors `x` in the algebra and `v` in the module.
    pub fn act(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (k, c) in self.chi.iter() {
            let (a, b) = (&x[k[0]], &v[k[1]]);
            if !a.is_zero() && !b.is_zero() {
                out[k[2]] += a * b * c;
            }
        }
        out
    }

    /// `χ([e_i,e_j]) - [χ(e_i), χ(e_j)]` stacked as a rank-4 tensor
    /// `(i, j, row, col)`.
    pub fn defect(&self, alg: &LieAlgebra) -> Result<Tensor> {
        if alg.dim() != self.algebra_dim {
            return Err(dim_err("representation of a different algebra"));
        }
        let n = self.algebra_dim;
        let mats: Vec<Matrix> = (0..n).map(|i| self.matrix(i)).collect();
        let mut t = Tensor::zeros(&[n, n, self.dim, self.dim]);
        for i in 0..n {
            for j in 0..n {
                let br = alg.bracket(&basis(n, i), &basis(n, j));
                let mut lhs = Matrix::zeros(self.dim, self.dim);
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        lhs = lhs.add(&mats[k].scale(c))?;
                    }
                }
                let d = lhs.sub(&mats[i].commutator(&mats[j])?)?;
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        t.set(&[i, j, a, b], d[(a, b)].clone());
                    }
                }
            }
        }
        Ok(t)
    }
}
