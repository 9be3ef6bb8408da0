use num_traits::Zero;

use super::poly::{Poly, PolyTensor};
use crate::error::{dim_err, Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::lie::{self, basis, cocycle_defect, LieAlgebra, Representation};
use crate::par;

/// Bivector on a polynomial ring: `{x_i, x_j} = pi[i][j]`, extended by
/// `{f, g} = Σ pi[a][b] ∂_a f ∂_b g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    names: Vec<String>,
    pi: Vec<Vec<Poly>>,
}

impl PoissonStructure {
    /// Requires `pi` to be square and skew.
    pub fn new(names: Vec<String>, pi: Vec<Vec<Poly>>) -> Result<Self> {
        let n = names.len();
        if pi.len() != n || pi.iter().any(|row| row.len() != n || row.iter().any(|p| p.nvars() != n)) {
            return Err(dim_err("bivector must be n x n over n variables"));
        }
        for i in 0..n {
            for j in i..n {
                if pi[i][j] != -&pi[j][i] {
                    return Err(Error::NotSkew);
                }
            }
        }
        Ok(Self { names, pi })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.pi[i][j]
    }

    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        let n = self.nvars();
        let (df, dg) = (f.gradient(), g.gradient());
        let mut out = Poly::zero(n);
        for a in 0..n {
            if df[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if dg[b].is_zero() || self.pi[a][b].is_zero() {
                    continue;
                }
                out = &out + &(&(&df[a] * &dg[b]) * &self.pi[a][b]);
            }
        }
        out
    }

    /// `{x_i, x_k}` for a variable `x_k`, cheaper than the general bracket.
    fn bracket_with_var(&self, f: &Poly, k: usize) -> Poly {
        let mut out = Poly::zero(self.nvars());
        for a in 0..self.nvars() {
            let d = f.derivative(a);
            if !d.is_zero() && !self.pi[a][k].is_zero() {
                out = &out + &(&d * &self.pi[a][k]);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.nvars() != other.nvars() {
            return Err(dim_err("brackets on different rings"));
        }
        let pi = self.pi.iter().zip(&other.pi).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
        Ok(Self { names: self.names.clone(), pi })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { names: self.names.clone(), pi: self.pi.iter().map(|r| r.iter().map(|p| p.scale(c)).collect()).collect() }
    }

    /// Variable `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.nvars();
        let mut pi = vec![vec![Poly::zero(n); n]; n];
        let mut names = vec![String::new(); n];
        for i in 0..n {
            names[perm[i]] = self.names[i].clone();
            for j in 0..n {
                pi[perm[i]][perm[j]] = self.pi[i][j].relabel(perm);
            }
        }
        Self { names, pi }
    }
}

fn coordinate_names(alg: &LieAlgebra) -> Vec<String> {
    alg.names().iter().map(|s| format!("u_{s}")).collect()
}

/// `{u_i, u_j} = Σ_k c[i,j,k] u_k`.
pub fn linear_poisson(alg: &LieAlgebra) -> PoissonStructure {
    let n = alg.dim();
    let pi = (0..n).map(|i| (0..n).map(|j| Poly::linear(&alg.bracket(&basis(n, i), &basis(n, j)))).collect()).collect();
    PoissonStructure { names: coordinate_names(alg), pi }
}

/// `{u_i, u_j} = Σ r^{st} c[i,s,κ] c[j,t,ℓ] u_κ u_ℓ` for a skew `r` whose
/// operator satisfies the operator equation.
pub fn quadratic_poisson(alg: &LieAlgebra, r: &Matrix) -> Result<PoissonStructure> {
    let n = alg.dim();
    if r.rows() != n || !r.is_skew() {
        return Err(Error::NotSkew);
    }
    if !lie::o_equation_defect(alg, &Representation::coadjoint(alg), r)?.holds {
        return Err(Error::NotOOperator);
    }
    // ad(e_i) columns give c[i,s,·]
    let lin: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|s| Poly::linear(&alg.bracket(&basis(n, i), &basis(n, s)))).collect()).collect();
    let mut pi = vec![vec![Poly::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Poly::zero(n);
            for s in 0..n {
                for t in 0..n {
                    let w = &r[(s, t)];
                    if w.is_zero() || lin[i][s].is_zero() || lin[j][t].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&lin[i][s] * &lin[j][t]).scale(w);
                }
            }
            pi[i][j] = acc;
        }
    }
    PoissonStructure::new(coordinate_names(alg), pi)
}

/// `{u_i, u_j} = Σ_k c[i,j,k] u_k + b[i][j]` for a 2-cocycle `b`.
pub fn affine_poisson(alg: &LieAlgebra, b: &Matrix) -> Result<PoissonStructure> {
    let n = alg.dim();
    if b.rows() != n || !b.is_skew() {
        return Err(Error::NotSkew);
    }
    if !cocycle_defect(alg, b)?.is_zero() {
        return Err(Error::Precondition("constant part is not a 2-cocycle".into()));
    }
    let lin = linear_poisson(alg);
    let pi = (0..n).map(|i| (0..n).map(|j| lin.entry(i, j) + &Poly::constant(n, b[(i, j)].clone())).collect()).collect();
    PoissonStructure::new(coordinate_names(alg), pi)
}

/// The constant bracket `{u_i, u_j} = ε ⟨O⁻¹ e_i, e_j⟩` of an invertible
/// skew `r`.
pub fn constant_poisson(alg: &LieAlgebra, r: &Matrix, eps: &Scalar) -> Result<PoissonStructure> {
    let n = alg.dim();
    if r.rows() != n || !r.is_skew() {
        return Err(Error::NotSkew);
    }
    let omega = r.inverse()?.transpose();
    let pi = (0..n).map(|i| (0..n).map(|j| Poly::constant(n, eps * &omega[(i, j)])).collect()).collect();
    PoissonStructure::new(coordinate_names(alg), pi)
}

/// Matrix `b[i][j] = ε ⟨O⁻¹ e_i, e_j⟩`, the constant part used by
/// [`constant_poisson`].
pub fn constant_cocycle(r: &Matrix, eps: &Scalar) -> Result<Matrix> {
    Ok(r.inverse()?.transpose().scale(eps))
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                v.push((i, j, k));
            }
        }
    }
    v
}

/// `{{x_i,x_j},x_k} + c.p.` over `i < j < k`.
pub fn jacobi_defect(p: &PoissonStructure) -> PolyTensor {
    let ts = triples(p.nvars());
    par::map_slice(&ts, |&(i, j, k)| {
        let s = &(&p.bracket_with_var(p.entry(i, j), k) + &p.bracket_with_var(p.entry(j, k), i))
            + &p.bracket_with_var(p.entry(k, i), j);
        (vec![i, j, k], s)
    })
    .into_iter()
    .collect()
}

/// Mixed Jacobi sum `{{x_i,x_j}_1,x_k}_2 + {{x_i,x_j}_2,x_k}_1 + c.p.`.
pub fn compatibility_defect(p1: &PoissonStructure, p2: &PoissonStructure) -> Result<PolyTensor> {
    if p1.nvars() != p2.nvars() {
        return Err(dim_err("brackets on different rings"));
    }
    let ts = triples(p1.nvars());
    Ok(par::map_slice(&ts, |&(i, j, k)| {
        let mixed = |a: usize, b: usize, c: usize| {
            &p2.bracket_with_var(p1.entry(a, b), c) + &p1.bracket_with_var(p2.entry(a, b), c)
        };
        (vec![i, j, k], &(&mixed(i, j, k) + &mixed(j, k, i)) + &mixed(k, i, j))
    })
    .into_iter()
    .collect())
}

/// `{H, x_i}` for every coordinate.
pub fn casimir_defect(p: &PoissonStructure, h: &Poly) -> Result<PolyTensor> {
    if h.nvars() != p.nvars() {
        return Err(dim_err("Hamiltonian on a different ring"));
    }
    Ok((0..p.nvars()).map(|i| (vec![i], p.bracket_with_var(h, i))).collect())
}

/// Basis of the homogeneous quadratic polynomials annihilated by the
/// coadjoint action, found by exact linear algebra.
pub fn quadratic_invariants(alg: &LieAlgebra) -> Vec<Poly> {
    let n = alg.dim();
    let monos: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let polys: Vec<Poly> = monos.iter().map(|&(a, b)| &Poly::var(n, a) * &Poly::var(n, b)).collect();
    let lin = linear_poisson(alg);
    let images: Vec<Vec<Poly>> = polys.iter().map(|q| (0..n).map(|i| lin.bracket_with_var(q, i)).collect()).collect();
    // one linear equation per (coordinate, monomial) appearing in some image
    let rows: Vec<(usize, Vec<u32>)> = images
        .iter()
        .flat_map(|im| im.iter().enumerate().flat_map(|(i, p)| p.terms().map(move |(m, _)| (i, m.clone()))))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut sys = Matrix::zeros(rows.len(), polys.len());
    for (col, im) in images.iter().enumerate() {
        for (r, (i, m)) in rows.iter().enumerate() {
            if let Some((_, c)) = im[*i].terms().find(|(k, _)| *k == m) {
                sys[(r, col)] = c.clone();
            }
        }
    }
    sys.nullspace()
        .into_iter()
        .map(|v| {
            let mut p = Poly::zero(n);
            for (c, q) in v.iter().zip(&polys) {
                p = &p + &q.scale(c);
            }
            p
        })
        .collect()
}
