//! Clebsch maps into the phase space `V ⊕ V*` of a module and the quadratic
//! Poisson bracket they induce there. Phase coordinates are
//! `x^0 … x^{n-1}, p_0 … p_{n-1}` in that order.

use num_traits::Zero;

use crate::error::{dim_err, Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::lie::{self, LieAlgebra, Representation};
use crate::poisson::{action_criterion, Poly, PoissonStructure, PolyTensor, VectorFields};

/// Names `x0 … p0 …` for `n` positions.
pub fn phase_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).chain((0..n).map(|i| format!("p{i}"))).collect()
}

fn xv(n: usize, a: usize) -> Poly {
    Poly::var(2 * n, a)
}

fn pv(n: usize, b: usize) -> Poly {
    Poly::var(2 * n, n + b)
}

/// `⟨v ∇ v*, e_s⟩ = ⟨v*, e_s · v⟩`, the moment map of the module.
pub fn nabla(rep: &Representation, v: &[Scalar], vstar: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); rep.algebra_dim()];
    for (k, c) in rep.tensor().iter() {
        let (a, b) = (&v[k[1]], &vstar[k[2]]);
        if !a.is_zero() && !b.is_zero() {
            out[k[0]] += a * b * c;
        }
    }
    out
}

/// The Clebsch map `Φ(u_s) = Σ χ[s,α,β] x^α p_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClebschMap {
    pub images: Vec<Poly>,
}

impl ClebschMap {
    /// `Φ(f)` for a polynomial on `G*`.
    pub fn apply(&self, f: &Poly) -> Poly {
        f.substitute(&self.images)
    }
}

pub fn clebsch_map(alg: &LieAlgebra, rep: &Representation) -> Result<ClebschMap> {
    if rep.algebra_dim() != alg.dim() {
        return Err(dim_err("module of a different algebra"));
    }
    let n = rep.dim();
    let mut images = vec![Poly::zero(2 * n); alg.dim()];
    for (k, c) in rep.tensor().iter() {
        images[k[0]] = &images[k[0]] + &(&xv(n, k[1]) * &pv(n, k[2])).scale(c);
    }
    Ok(ClebschMap { images })
}

/// Canonical bracket `{x^α, p_β} = δ^α_β`.
pub fn symplectic_bracket(n: usize) -> PoissonStructure {
    let mut pi = vec![vec![Poly::zero(2 * n); 2 * n]; 2 * n];
    for a in 0..n {
        pi[a][n + a] = Poly::constant(2 * n, Scalar::from_integer(1.into()));
        pi[n + a][a] = Poly::constant(2 * n, Scalar::from_integer((-1).into()));
    }
    PoissonStructure::new(phase_names(n), pi).expect("skew by construction")
}

/// Quadratic bracket on `V ⊕ V*` of a skew `r` solving the operator
/// equation:
///
/// `{x^α, x^β} = Σ r^{st} χ[s,μ,α] χ[t,ν,β] x^μ x^ν`,
/// `{p_α, x^β} = -Σ r^{st} χ[s,α,μ] χ[t,ν,β] p_μ x^ν`,
/// `{p_α, p_β} = Σ r^{st} χ[s,α,μ] χ[t,β,ν] p_μ p_ν`.
pub fn quadratic_phase_bracket(alg: &LieAlgebra, rep: &Representation, r: &Matrix) -> Result<PoissonStructure> {
    let g = alg.dim();
    if rep.algebra_dim() != g || r.rows() != g || r.cols() != g {
        return Err(dim_err("r, module and algebra sizes disagree"));
    }
    if !r.is_skew() {
        return Err(Error::NotSkew);
    }
    if !lie::o_equation_defect(alg, &Representation::coadjoint(alg), r)?.holds {
        return Err(Error::NotOOperator);
    }
    let n = rep.dim();
    // tx[s][α] = Σ_μ χ[s,μ,α] x^μ   (the s-component of x ∇ ℓ^α)
    // tp[s][α] = Σ_μ χ[s,α,μ] p_μ   (the s-component of ℓ_α ∇ p)
    let mut tx = vec![vec![Poly::zero(2 * n); n]; g];
    let mut tp = vec![vec![Poly::zero(2 * n); n]; g];
    for (k, c) in rep.tensor().iter() {
        let (s, a, b) = (k[0], k[1], k[2]);
        tx[s][b] = &tx[s][b] + &xv(n, a).scale(c);
        tp[s][a] = &tp[s][a] + &pv(n, b).scale(c);
    }
    let pair = |left: &[Vec<Poly>], i: usize, right: &[Vec<Poly>], j: usize| {
        let mut acc = Poly::zero(2 * n);
        for s in 0..g {
            for t in 0..g {
                let w = &r[(s, t)];
                if !w.is_zero() && !left[s][i].is_zero() && !right[t][j].is_zero() {
                    acc = &acc + &(&left[s][i] * &right[t][j]).scale(w);
                }
            }
        }
        acc
    };
    let mut pi = vec![vec![Poly::zero(2 * n); 2 * n]; 2 * n];
    for a in 0..n {
        for b in 0..n {
            pi[a][b] = pair(&tx, a, &tx, b);
            pi[n + a][n + b] = pair(&tp, a, &tp, b);
            let px = -&pair(&tp, a, &tx, b);
            pi[b][n + a] = -&px;
            pi[n + a][b] = px;
        }
    }
    PoissonStructure::new(phase_names(n), pi)
}

/// `Φ({u_i, u_j}_src) - {Φ u_i, Φ u_j}_tgt` for `i < j`.
pub fn hamiltonian_map_defect(phi: &[Poly], source: &PoissonStructure, target: &PoissonStructure) -> Result<PolyTensor> {
    if phi.len() != source.nvars() || phi.iter().any(|p| p.nvars() != target.nvars()) {
        return Err(dim_err("map images do not match the two rings"));
    }
    let mut out = PolyTensor::new();
    for i in 0..phi.len() {
        for j in i + 1..phi.len() {
            let lhs = source.entry(i, j).substitute(phi);
            out.insert(vec![i, j], &lhs - &target.bracket(&phi[i], &phi[j]));
        }
    }
    Ok(out)
}

/// The contragredient module `χ^d = -χᵀ`.
pub fn dual_representation(rep: &Representation) -> Representation {
    rep.dual()
}

/// The permutation of phase coordinates exchanging `x^α` and `p_α`.
pub fn swap_positions_momenta(n: usize) -> Vec<usize> {
    (0..2 * n).map(|i| (i + n) % (2 * n)).collect()
}

/// Difference between the bracket of `χ` and the bracket of `χ^d` with
/// positions and momenta exchanged; zero when the symmetry holds.
pub fn swap_symmetry_defect(alg: &LieAlgebra, rep: &Representation, r: &Matrix) -> Result<PolyTensor> {
    let n = rep.dim();
    let direct = quadratic_phase_bracket(alg, rep, r)?;
    let swapped = quadratic_phase_bracket(alg, &rep.dual(), r)?.relabel(&swap_positions_momenta(n));
    let mut out = PolyTensor::new();
    for i in 0..2 * n {
        for j in i + 1..2 * n {
            out.insert(vec![i, j], direct.entry(i, j) - swapped.entry(i, j));
        }
    }
    Ok(out)
}

/// Vector fields `X^∧x = X.x`, `X^∧p = X·p` on phase space.
pub fn phase_fields(rep: &Representation) -> VectorFields {
    let n = rep.dim();
    let mut fields = vec![vec![Poly::zero(2 * n); 2 * n]; rep.algebra_dim()];
    for (k, c) in rep.tensor().iter() {
        let (x, a, g) = (k[0], k[1], k[2]);
        fields[x][g] = &fields[x][g] + &xv(n, a).scale(c);
        fields[x][n + a] = &fields[x][n + a] - &pv(n, g).scale(c);
    }
    VectorFields { fields }
}

/// Infinitesimal-action criterion for the natural action on phase space
/// with respect to the quadratic phase bracket, on all coordinate
/// Hamiltonians, with `(Y x)~ = x ∇ Y` and `(Y p)~ = -Y ∇ p`.
pub fn phase_action_defect(alg: &LieAlgebra, rep: &Representation, r: &Matrix) -> Result<PolyTensor> {
    let bracket = quadratic_phase_bracket(alg, rep, r)?;
    let dual = lie::induced_bracket(alg, &Representation::coadjoint(alg), r)?;
    let n = rep.dim();
    let g = alg.dim();
    let hams: Vec<Poly> = (0..2 * n).map(|i| Poly::var(2 * n, i)).collect();
    let mut tildes = vec![vec![Poly::zero(2 * n); g]; 2 * n];
    for (k, c) in rep.tensor().iter() {
        let (s, a, b) = (k[0], k[1], k[2]);
        tildes[b][s] = &tildes[b][s] + &xv(n, a).scale(c);
        tildes[n + a][s] = &tildes[n + a][s] - &pv(n, b).scale(c);
    }
    action_criterion(&bracket, &phase_fields(rep), Some(&dual), &hams, &tildes)
}
