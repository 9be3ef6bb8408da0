use num_traits::One;

use super::algebra::{basis, LieAlgebra};
use super::ooperator::{induced_bracket, o_equation_defect};
use super::rep::Representation;
use crate::error::{dim_err, Error, Result};
use crate::exact::{int, Matrix, Scalar};
use crate::random::Sampler;
use crate::report::RelationReport;

/// `φ([e_i, e_j]) - [φ e_i, φ e_j]` vanishes for all basis pairs.
pub fn is_homomorphism(phi: &Matrix, g: &LieAlgebra, h: &LieAlgebra) -> Result<bool> {
    if phi.rows() != h.dim() || phi.cols() != g.dim() {
        return Err(dim_err("homomorphism matrix must be dim H x dim G"));
    }
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi.apply(&g.bracket(&basis(n, i), &basis(n, j)))?;
            let rhs = h.bracket(&phi.column(i), &phi.column(j));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of transporting an O-operator along a homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushForwardReport {
    /// `O_H = φ O_G φᵀ`.
    pub o_h: Matrix,
    pub o_equation: RelationReport,
    /// `φᵀ(φ(X)·v̄) = X·φᵀ(v̄)` for basis `X`, `v̄`.
    pub intertwining: bool,
    /// `φᵀ` maps the induced bracket on `H*` to the one on `G*`.
    pub dual_homomorphism: bool,
}

impl PushForwardReport {
    pub fn holds(&self) -> bool {
        self.o_equation.holds && self.intertwining && self.dual_homomorphism
    }
}

/// Pushes an O-operator `O_G: G* → G` forward along `φ: G → H`.
pub fn push_forward(phi: &Matrix, g: &LieAlgebra, h: &LieAlgebra, o_g: &Matrix) -> Result<PushForwardReport> {
    if !is_homomorphism(phi, g, h)? {
        return Err(Error::NotHomomorphism);
    }
    let cg = Representation::coadjoint(g);
    let ch = Representation::coadjoint(h);
    if !o_equation_defect(g, &cg, o_g)?.holds {
        return Err(Error::NotOOperator);
    }
    let phit = phi.transpose();
    let o_h = Matrix::chain(&[phi, o_g, &phit])?;
    let o_equation = o_equation_defect(h, &ch, &o_h)?;

    let (n, m) = (g.dim(), h.dim());
    let mut intertwining = true;
    for x in 0..n {
        for v in 0..m {
            let vb = basis(m, v);
            let lhs = phit.apply(&ch.act(&phi.column(x), &vb))?;
            let rhs = cg.act(&basis(n, x), &phit.apply(&vb)?);
            intertwining &= lhs == rhs;
        }
    }

    let dual_homomorphism = if o_equation.holds {
        let bh = induced_bracket(h, &ch, &o_h)?;
        let bg = induced_bracket(g, &cg, o_g)?;
        let mut ok = true;
        for a in 0..m {
            for b in a + 1..m {
                let lhs = phit.apply(&bh.bracket(&basis(m, a), &basis(m, b)))?;
                let rhs = bg.bracket(&phit.column(a), &phit.column(b));
                ok &= lhs == rhs;
            }
        }
        ok
    } else {
        false
    };
    Ok(PushForwardReport { o_h, o_equation, intertwining, dual_homomorphism })
}

/// `exp(N)` for a nilpotent matrix; `None` if `N` is not nilpotent.
pub fn exp_nilpotent(nm: &Matrix) -> Result<Option<Matrix>> {
    let n = nm.rows();
    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for k in 1..=n {
        term = term.mul(nm)?.scale(&Scalar::new(One::one(), (k as i64).into()));
        if term.is_zero() {
            return Ok(Some(sum));
        }
        sum = sum.add(&term)?;
    }
    Ok(if term.is_zero() { Some(sum) } else { None })
}

/// A random automorphism: a product of `exp(t ad x)` over basis elements
/// with nilpotent `ad`, for small integer `t`. Abelian algebras get a random
/// invertible matrix instead.
pub fn random_automorphism(alg: &LieAlgebra, rng: &mut Sampler, factors: usize) -> Result<Matrix> {
    let n = alg.dim();
    if alg.is_abelian() {
        return Ok(rng.invertible(n));
    }
    let mut gens = Vec::new();
    for i in 0..n {
        if let Some(e) = exp_nilpotent(&alg.ad(i))? {
            if e != Matrix::identity(n) {
                gens.push(i);
            }
        }
    }
    let mut phi = Matrix::identity(n);
    if gens.is_empty() {
        return Ok(phi);
    }
    for _ in 0..factors {
        let i = gens[rng.index(gens.len())];
        let t = int(rng.small_nonzero());
        let e = exp_nilpotent(&alg.ad(i).scale(&t))?.expect("scaled nilpotent stays nilpotent");
        phi = e.mul(&phi)?;
    }
    Ok(phi)
}
