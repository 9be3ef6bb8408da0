use num_traits::Zero;

use crate::error::{dim_err, Error, Result};
use crate::exact::{Matrix, Scalar, Tensor};
use crate::par;
use crate::report::RelationReport;

/// Finite-dimensional algebra with an antisymmetric bracket
/// `[e_i, e_j] = Σ_k c[i,j,k] e_k`. Built through [`LieAlgebra::new`] the
/// Jacobi identity is guaranteed; [`LieAlgebra::antisymmetric`] skips it so
/// that candidate brackets can be examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    c: Tensor,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(names: Vec<String>, c: Tensor) -> Result<Self> {
        let alg = Self::antisymmetric(names, c)?;
        if !alg.jacobi_check().holds {
            return Err(Error::Jacobi);
        }
        Ok(alg)
    }

    /// Validates shape and antisymmetry only.
    pub fn antisymmetric(names: Vec<String>, c: Tensor) -> Result<Self> {
        let n = names.len();
        if c.shape() != [n, n, n] {
            return Err(dim_err(format!("structure tensor of shape {:?} for {n} basis elements", c.shape())));
        }
        for (k, v) in c.iter() {
            if c.get(&[k[1], k[0], k[2]]) != -v {
                return Err(Error::NotAntisymmetric);
            }
        }
        Ok(Self { names, c })
    }

    /// Builds from the brackets `[e_i, e_j] = Σ v e_k` listed once per
    /// unordered pair as `(i, j, k, v)`; the opposite order is filled in.
    pub fn from_brackets(names: &[&str], table: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let n = names.len();
        let mut c = Tensor::zeros(&[n, n, n]);
        for (i, j, k, v) in table {
            if *i.max(j).max(k) >= n {
                return Err(dim_err("bracket index out of range"));
            }
            c.add_at(&[*i, *j, *k], v);
            c.add_at(&[*j, *i, *k], &-v);
        }
        Self::new(names.iter().map(|s| s.to_string()).collect(), c)
    }

    pub fn abelian(n: usize) -> Self {
        Self { names: (0..n).map(|i| format!("e{i}")).collect(), c: Tensor::zeros(&[n, n, n]) }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &Tensor {
        &self.c
    }

    pub fn is_abelian(&self) -> bool {
        self.c.is_zero()
    }

    /// Bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (k, v) in self.c.iter() {
            let (a, b) = (&x[k[0]], &y[k[1]]);
            if !a.is_zero() && !b.is_zero() {
                out[k[2]] += a * b * v;
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (k, v) in self.c.iter() {
            if k[0] == i {
                m[(k[2], k[1])] = v.clone();
            }
        }
        m
    }

    pub fn ad_vec(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (k, v) in self.c.iter() {
            if !x[k[0]].is_zero() {
                m[(k[2], k[1])] += &x[k[0]] * v;
            }
        }
        m
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` for every triple,
    /// as a rank-4 tensor indexed `(i, j, k, t)`.
    pub fn jacobi_check(&self) -> RelationReport {
        let n = self.dim();
        let rows = par::map_range(n, |i| {
            let mut part = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    let [a, b, c] = [i, j, k].map(|x| basis(n, x));
                    let t1 = self.bracket(&self.bracket(&a, &b), &c);
                    let t2 = self.bracket(&self.bracket(&b, &c), &a);
                    let t3 = self.bracket(&self.bracket(&c, &a), &b);
                    for t in 0..n {
                        let s = &t1[t] + &t2[t] + &t3[t];
                        if !s.is_zero() {
                            part.push((vec![i, j, k, t], s));
                        }
                    }
                }
            }
            part
        });
        let defect = Tensor::from_entries(&[n, n, n, n], rows.into_iter().flatten()).expect("in range");
        RelationReport::from_tensor("jacobi", defect)
    }

    /// Direct sum with another algebra; basis of `self` first.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let mut c = Tensor::zeros(&[n + m, n + m, n + m]);
        for (k, v) in self.c.iter() {
            c.set(k, v.clone());
        }
        for (k, v) in other.c.iter() {
            c.set(&[k[0] + n, k[1] + n, k[2] + n], v.clone());
        }
        let names = self.names.iter().cloned().chain(other.names.iter().map(|s| format!("{s}'"))).collect();
        Self { names, c }
    }
}

/// Coordinate vector of basis element `i` in dimension `n`.
pub fn basis(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = num_traits::One::one();
    v
}

/// Cocycle defect of the bilinear form `ω(e_a, e_b) = form[(a, b)]`:
/// `ω([x,y],z) + ω([y,z],x) + ω([z,x],y)` on basis triples.
pub fn cocycle_defect(alg: &LieAlgebra, form: &Matrix) -> Result<Tensor> {
    let n = alg.dim();
    if form.rows() != n || form.cols() != n {
        return Err(dim_err("bilinear form size differs from algebra dimension"));
    }
    let pair = |x: &[Scalar], y: &[Scalar]| -> Scalar {
        let mut s = Scalar::zero();
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if !y[b].is_zero() {
                    s += &x[a] * &form[(a, b)] * &y[b];
                }
            }
        }
        s
    };
    let mut t = Tensor::zeros(&[n, n, n]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let [x, y, z] = [i, j, k].map(|q| basis(n, q));
                let s = pair(&alg.bracket(&x, &y), &z) + pair(&alg.bracket(&y, &z), &x) + pair(&alg.bracket(&z, &x), &y);
                t.set(&[i, j, k], s);
            }
        }
    }
    Ok(t)
}
