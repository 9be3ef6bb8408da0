use num_traits::Zero;

use super::bracket::PoissonStructure;
use super::poly::{Poly, PolyTensor};
use crate::error::{dim_err, Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::lie::{self, basis, LieAlgebra, Representation};

/// Vector fields `X^∧` on a polynomial ring, one per basis element of a Lie
/// algebra: `fields[x][m] = e_x^∧(x_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFields {
    pub fields: Vec<Vec<Poly>>,
}

impl VectorFields {
    /// `e_x^∧(f) = Σ_m ∂_m f · e_x^∧(x_m)`.
    pub fn apply(&self, x: usize, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.nvars());
        for (m, img) in self.fields[x].iter().enumerate() {
            let d = f.derivative(m);
            if !d.is_zero() && !img.is_zero() {
                out = &out + &(&d * img);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }
}

/// Coadjoint vector fields on coordinates `u` of `G*`, shifted by a
/// cocycle: `X^∧(u) = X·u - b(X)` with `⟨b(e_x), e_s⟩ = b[x][s]`.
pub fn coadjoint_fields(alg: &LieAlgebra, b: Option<&Matrix>) -> VectorFields {
    let n = alg.dim();
    let co = Representation::coadjoint(alg);
    let fields = (0..n)
        .map(|x| {
            (0..n)
                .map(|s| {
                    // (e_x · u)_s is the s-th entry of χ(e_x) applied to u
                    let row: Vec<Scalar> = (0..n).map(|j| co.matrix(x)[(s, j)].clone()).collect();
                    let mut p = Poly::linear(&row);
                    if let Some(b) = b {
                        p = &p - &Poly::constant(n, b[(x, s)].clone());
                    }
                    p
                })
                .collect()
        })
        .collect();
    VectorFields { fields }
}

/// For Hamiltonians `H_i` with `G*`-valued companions `H̃_i`, the defect
/// `X^∧{H_i,H_j} - {X^∧H_i,H_j} - {H_i,X^∧H_j} - ⟨[H̃_i,H̃_j], X⟩`
/// indexed `(x, i, j)` with `i < j`. `dual = None` means an abelian dual.
pub fn action_criterion(
    p: &PoissonStructure,
    fields: &VectorFields,
    dual: Option<&LieAlgebra>,
    hams: &[Poly],
    tildes: &[Vec<Poly>],
) -> Result<PolyTensor> {
    if hams.len() != tildes.len() {
        return Err(dim_err("one companion per Hamiltonian"));
    }
    let nv = p.nvars();
    let mut out = PolyTensor::new();
    for x in 0..fields.len() {
        for i in 0..hams.len() {
            for j in i + 1..hams.len() {
                let (h, f) = (&hams[i], &hams[j]);
                let lhs = &(&fields.apply(x, &p.bracket(h, f)) - &p.bracket(&fields.apply(x, h), f))
                    - &p.bracket(h, &fields.apply(x, f));
                let mut rhs = Poly::zero(nv);
                if let Some(d) = dual {
                    let m = d.dim();
                    for a in 0..m {
                        for b in 0..m {
                            let c = d.bracket(&basis(m, a), &basis(m, b));
                            if c[x].is_zero() || tildes[i][a].is_zero() || tildes[j][b].is_zero() {
                                continue;
                            }
                            rhs = &rhs + &(&tildes[i][a] * &tildes[j][b]).scale(&c[x]);
                        }
                    }
                }
                out.insert(vec![x, i, j], &lhs - &rhs);
            }
        }
    }
    Ok(out)
}

/// Which bracket on `G*` and which action accompany the criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionMode {
    /// Linear bracket, coadjoint action, abelian dual.
    Linear,
    /// Affine bracket with cocycle `b`, shifted action, abelian dual.
    Affine(Matrix),
    /// Quadratic bracket of `r`, coadjoint action, dual bracket induced by `r`.
    Quadratic(Matrix),
}

/// Runs [`action_criterion`] on the coordinate Hamiltonians `u_i` with
/// `ũ_i = -e_i · u`. The bracket must be the one matching `mode`.
pub fn infinitesimal_action_defect(alg: &LieAlgebra, p: &PoissonStructure, mode: &ActionMode) -> Result<PolyTensor> {
    let n = alg.dim();
    if p.nvars() != n {
        return Err(dim_err("bracket ring differs from the coordinates of G*"));
    }
    let co = Representation::coadjoint(alg);
    let (fields, dual) = match mode {
        ActionMode::Linear => (coadjoint_fields(alg, None), None),
        ActionMode::Affine(b) => (coadjoint_fields(alg, Some(b)), None),
        ActionMode::Quadratic(r) => {
            let d = lie::induced_bracket(alg, &co, r).map_err(|e| match e {
                Error::NotOOperator => Error::Precondition("r does not induce a dual bracket".into()),
                e => e,
            })?;
            (coadjoint_fields(alg, None), Some(d))
        }
    };
    let hams: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
    let tildes: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            let m = co.matrix(i);
            (0..n).map(|s| Poly::linear(&(0..n).map(|j| -&m[(s, j)]).collect::<Vec<_>>())).collect()
        })
        .collect();
    action_criterion(p, &fields, dual.as_ref(), &hams, &tildes)
}

/// `∂/∂u (X^∧H) - [∇H, X] - X^∧(∇H)` for each basis `X`, indexed `(x, k)`.
pub fn gradient_transport_defect(alg: &LieAlgebra, h: &Poly, b: Option<&Matrix>) -> Result<PolyTensor> {
    let n = alg.dim();
    if h.nvars() != n {
        return Err(dim_err("Hamiltonian ring differs from the coordinates of G*"));
    }
    let fields = coadjoint_fields(alg, b);
    let grad = h.gradient();
    let mut out = PolyTensor::new();
    for x in 0..n {
        let moved = fields.apply(x, h);
        for k in 0..n {
            let mut br = Poly::zero(n);
            for (a, g) in grad.iter().enumerate() {
                let c = &alg.bracket(&basis(n, a), &basis(n, x))[k];
                if !c.is_zero() {
                    br = &br + &g.scale(c);
                }
            }
            let d = &(&moved.derivative(k) - &br) - &fields.apply(x, &grad[k]);
            out.insert(vec![x, k], d);
        }
    }
    Ok(out)
}
