//! Lie algebra structures on `G ⊕ G*`: crossed brackets of a pair of
//! brackets, semidirect sums, and the symplectic double of a
//! quasiassociative product. Coordinates put `G` first.

use num_traits::{One, Zero};

use crate::error::{dim_err, Error, Result};
use crate::exact::{Matrix, Scalar, Tensor};
use crate::lie::{self, basis, cocycle_defect, LieAlgebra, Representation};
use crate::par;
use crate::report::RelationReport;

/// How a [`DoubleAlgebra`] was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Crossed,
    Semidirect,
    SymplecticDouble,
}

/// Bracket on `G ⊕ G*` with `dim G = half_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleAlgebra {
    pub half_dim: usize,
    pub algebra: LieAlgebra,
    pub provenance: Provenance,
}

impl DoubleAlgebra {
    fn block(&self, first: usize, second: usize) -> LieAlgebra {
        let n = self.half_dim;
        let mut c = Tensor::zeros(&[n, n, n]);
        for (k, v) in self.algebra.structure().iter() {
            if k[0] >= first && k[0] < first + n && k[1] >= first && k[1] < first + n && k[2] >= second && k[2] < second + n {
                c.set(&[k[0] - first, k[1] - first, k[2] - second], v.clone());
            }
        }
        LieAlgebra::antisymmetric((0..n).map(|i| format!("e{i}")).collect(), c).expect("block of an antisymmetric bracket")
    }

    /// The bracket restricted to `G`, projected to `G`.
    pub fn g_bracket(&self) -> LieAlgebra {
        self.block(0, 0)
    }

    /// The bracket restricted to `G*`, projected to `G*`.
    pub fn dual_bracket(&self) -> LieAlgebra {
        self.block(self.half_dim, self.half_dim)
    }
}

fn pair(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The form `⟨u, Y⟩ - ⟨v, X⟩` on `G ⊕ G*` as a matrix.
pub fn standard_symplectic_form(n: usize) -> Matrix {
    let mut w = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        w[(n + i, i)] = Scalar::one();
        w[(i, n + i)] = -Scalar::one();
    }
    w
}

/// The pairing `((X,u),(Y,v)) = ⟨u,Y⟩ + ⟨v,X⟩` as a matrix.
pub fn standard_pairing(n: usize) -> Matrix {
    let mut w = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        w[(n + i, i)] = Scalar::one();
        w[(i, n + i)] = Scalar::one();
    }
    w
}

/// Verdicts on the crossed bracket of `G` and a candidate bracket on `G*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedReport {
    pub double: DoubleAlgebra,
    /// Jacobi identity of the bracket on `G ⊕ G*`, evaluated directly.
    pub jacobi: RelationReport,
    /// Jacobi identity of the bracket on `G*` alone.
    pub dual_jacobi: bool,
    /// `⟨[u,v],[Y,Z]⟩ + ⟨Z·v,u·Y⟩ - ⟨Y·v,u·Z⟩ - ⟨Z·u,v·Y⟩ + ⟨Y·u,v·Z⟩`
    /// indexed `(u, v, Y, Z)`.
    pub quadrilinear: RelationReport,
    /// `dual_jacobi` together with a vanishing quadrilinear defect.
    pub quadrilinear_verdict: bool,
    /// `([a,b],c) - (a,[b,c])` for the standard pairing, indexed `(a, b, c)`.
    pub invariance: RelationReport,
}

/// `[(X,u),(Y,v)] = ([X,Y] + u·Y - v·X, [u,v] + X·v - Y·u)` where `X·v` is
/// the coadjoint action of `G` and `u·Y` the coadjoint action of `G*` on
/// `G = G**`. Both the direct and the quadrilinear verdicts are computed;
/// disagreement is an internal error.
pub fn crossed_bracket(g: &LieAlgebra, dual: &LieAlgebra) -> Result<CrossedReport> {
    let n = g.dim();
    if dual.dim() != n {
        return Err(dim_err("G and G* of different dimensions"));
    }
    if !g.jacobi_check().holds {
        return Err(Error::Jacobi);
    }
    let cg = Representation::coadjoint(g);
    let cd = Representation::coadjoint(dual);
    let mut c = Tensor::zeros(&[2 * n, 2 * n, 2 * n]);
    for a in 0..2 * n {
        for b in 0..2 * n {
            let split = |k: usize| {
                let mut x = vec![Scalar::zero(); n];
                let mut u = vec![Scalar::zero(); n];
                if k < n {
                    x[k] = Scalar::one();
                } else {
                    u[k - n] = Scalar::one();
                }
                (x, u)
            };
            let ((x, u), (y, v)) = (split(a), split(b));
            let gx = g.bracket(&x, &y);
            let (uy, vx) = (cd.act(&u, &y), cd.act(&v, &x));
            let du = dual.bracket(&u, &v);
            let (xv, yu) = (cg.act(&x, &v), cg.act(&y, &u));
            for k in 0..n {
                c.set(&[a, b, k], &gx[k] + &uy[k] - &vx[k]);
                c.set(&[a, b, n + k], &du[k] + &xv[k] - &yu[k]);
            }
        }
    }
    let names = g.names().iter().cloned().chain((0..n).map(|i| format!("e^{i}"))).collect();
    let algebra = LieAlgebra::antisymmetric(names, c)?;
    let jacobi = algebra.jacobi_check();
    let dual_jacobi = dual.jacobi_check().holds;

    let rows = par::map_range(n, |ui| {
        let mut part = Vec::new();
        let u = basis(n, ui);
        for vi in 0..n {
            let v = basis(n, vi);
            for yi in 0..n {
                let y = basis(n, yi);
                for zi in 0..n {
                    let z = basis(n, zi);
                    let lhs = pair(&dual.bracket(&u, &v), &g.bracket(&y, &z));
                    let rest = pair(&cg.act(&z, &v), &cd.act(&u, &y)) - pair(&cg.act(&y, &v), &cd.act(&u, &z))
                        - pair(&cg.act(&z, &u), &cd.act(&v, &y))
                        + pair(&cg.act(&y, &u), &cd.act(&v, &z));
                    part.push((vec![ui, vi, yi, zi], lhs + rest));
                }
            }
        }
        part
    });
    let quadrilinear =
        RelationReport::from_tensor("quadrilinear", Tensor::from_entries(&[n, n, n, n], rows.into_iter().flatten())?);
    let quadrilinear_verdict = dual_jacobi && quadrilinear.holds;
    if quadrilinear_verdict != jacobi.holds {
        return Err(Error::Internal("direct and quadrilinear Jacobi verdicts differ".into()));
    }
    let invariance = invariance_defect(&algebra, &standard_pairing(n));
    let double = DoubleAlgebra { half_dim: n, algebra, provenance: Provenance::Crossed };
    Ok(CrossedReport { double, jacobi, dual_jacobi, quadrilinear, quadrilinear_verdict, invariance })
}

/// `([a,b],c) - (a,[b,c])` on basis triples for a bilinear form.
pub fn invariance_defect(alg: &LieAlgebra, form: &Matrix) -> RelationReport {
    let m = alg.dim();
    let mut t = Tensor::zeros(&[m, m, m]);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let (x, y, z) = (basis(m, a), basis(m, b), basis(m, c));
                let l = pair(&alg.bracket(&x, &y), &form.apply(&z).expect("sized"));
                let r = pair(&x, &form.apply(&alg.bracket(&y, &z)).expect("sized"));
                t.set(&[a, b, c], l - r);
            }
        }
    }
    RelationReport::from_tensor("pairing-invariance", t)
}

/// Cocycle test for `ω((X,u),(Y,v)) = ⟨u,Y⟩ - ⟨v,X⟩` on a crossed double.
/// It is a cocycle exactly when both constituent brackets vanish; a
/// different outcome is an internal error.
pub fn crossed_symplectic_cocycle(d: &DoubleAlgebra) -> Result<RelationReport> {
    let rep = RelationReport::from_tensor(
        "crossed-symplectic-cocycle",
        cocycle_defect(&d.algebra, &standard_symplectic_form(d.half_dim))?,
    );
    let both_abelian = d.g_bracket().is_abelian() && d.dual_bracket().is_abelian();
    if d.provenance == Provenance::Crossed && rep.holds != both_abelian {
        return Err(Error::Internal("symplectic cocycle verdict contradicts abelianness".into()));
    }
    Ok(rep)
}

/// `[(X,u),(Y,v)] = ([X,Y], ρ(X)v - ρ(Y)u)` for a module `ρ` on `G*`.
pub fn semidirect_sum(g: &LieAlgebra, rho: &Representation) -> Result<DoubleAlgebra> {
    let n = g.dim();
    if rho.algebra_dim() != n || rho.dim() != n {
        return Err(dim_err("module must have the dimension of the algebra"));
    }
    if !rho.defect(g)?.is_zero() {
        return Err(Error::NotRepresentation);
    }
    let mut c = Tensor::zeros(&[2 * n, 2 * n, 2 * n]);
    for (k, v) in g.structure().iter() {
        c.set(k, v.clone());
    }
    for (k, v) in rho.tensor().iter() {
        // ρ(e_i) e^α = Σ v e^γ
        c.set(&[k[0], n + k[1], n + k[2]], v.clone());
        c.set(&[n + k[1], k[0], n + k[2]], -v);
    }
    let names = g.names().iter().cloned().chain((0..n).map(|i| format!("e^{i}"))).collect();
    let algebra = LieAlgebra::antisymmetric(names, c)?;
    if !algebra.jacobi_check().holds {
        return Err(Error::Internal("semidirect sum fails Jacobi".into()));
    }
    Ok(DoubleAlgebra { half_dim: n, algebra, provenance: Provenance::Semidirect })
}

/// Both sides of the semidirect symplectic criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectCriterionReport {
    /// `ρ^d(X)Y - ρ^d(Y)X - [X,Y]` with `ρ^d = -ρᵀ`, indexed `(X, Y, k)`.
    pub criterion: RelationReport,
    /// Cocycle defect of `⟨u,Y⟩ - ⟨v,X⟩` on the semidirect sum.
    pub cocycle: RelationReport,
}

/// Compares the algebraic criterion with a direct cocycle check; they must
/// agree.
pub fn symplectic_cocycle_criterion(g: &LieAlgebra, rho: &Representation) -> Result<SemidirectCriterionReport> {
    let d = semidirect_sum(g, rho)?;
    let n = g.dim();
    let rd = rho.dual();
    let mut t = Tensor::zeros(&[n, n, n]);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            let a = rd.act(&x, &y);
            let b = rd.act(&y, &x);
            let br = g.bracket(&x, &y);
            for k in 0..n {
                t.set(&[i, j, k], &a[k] - &b[k] - &br[k]);
            }
        }
    }
    let criterion = RelationReport::from_tensor("semidirect-criterion", t);
    let cocycle = RelationReport::from_tensor("semidirect-cocycle", cocycle_defect(&d.algebra, &standard_symplectic_form(n))?);
    if criterion.holds != cocycle.holds {
        return Err(Error::Internal("criterion and direct cocycle check disagree".into()));
    }
    Ok(SemidirectCriterionReport { criterion, cocycle })
}

/// Bilinear product `e_i e_j = Σ_k m[i,j,k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearProduct {
    dim: usize,
    m: Tensor,
}

impl BilinearProduct {
    pub fn new(dim: usize, m: Tensor) -> Result<Self> {
        if m.shape() != [dim, dim, dim] {
            return Err(dim_err(format!("product tensor of shape {:?}", m.shape())));
        }
        Ok(Self { dim, m })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &Tensor {
        &self.m
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (k, v) in self.m.iter() {
            let (x, y) = (&a[k[0]], &b[k[1]]);
            if !x.is_zero() && !y.is_zero() {
                out[k[2]] += x * y * v;
            }
        }
        out
    }

    /// Matrix of `y ↦ e_i y`.
    pub fn left(&self, i: usize) -> Matrix {
        let mut l = Matrix::zeros(self.dim, self.dim);
        for (k, v) in self.m.iter() {
            if k[0] == i {
                l[(k[2], k[1])] = v.clone();
            }
        }
        l
    }

    /// `[x, y] = xy - yx`, antisymmetric but not yet checked for Jacobi.
    pub fn commutator_algebra(&self) -> LieAlgebra {
        let n = self.dim;
        let mut c = Tensor::zeros(&[n, n, n]);
        for (k, v) in self.m.iter() {
            c.add_at(k, v);
            c.add_at(&[k[1], k[0], k[2]], &-v);
        }
        LieAlgebra::antisymmetric((0..n).map(|i| format!("e{i}")).collect(), c).expect("commutator is antisymmetric")
    }

    /// The module `ρ(X) = -L_Xᵀ` of the commutator algebra on `A*`,
    /// unchecked.
    pub fn dual_left_module(&self) -> Representation {
        let n = self.dim;
        let mut chi = Tensor::zeros(&[n, n, n]);
        // (e_j · e^i)_k = -m[j,k,i]
        for (k, v) in self.m.iter() {
            chi.set(&[k[0], k[2], k[1]], -v);
        }
        Representation::unchecked(n, n, chi).expect("sized")
    }
}

/// Product of `n × n` matrices in the basis of matrix units `E_{ab}`,
/// index `a * n + b`.
pub fn matrix_algebra(n: usize) -> BilinearProduct {
    let d = n * n;
    let mut m = Tensor::zeros(&[d, d, d]);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                m.set(&[a * n + b, b * n + c, a * n + c], Scalar::one());
            }
        }
    }
    BilinearProduct::new(d, m).expect("sized")
}

/// Result of the quasiassociativity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiassociativeReport {
    /// `(xy)z - x(yz) - (yx)z + y(xz)` indexed `(x, y, z, k)`.
    pub defect: RelationReport,
    pub commutator: LieAlgebra,
    pub commutator_jacobi: bool,
}

/// Quasiassociative products have Lie commutators; a counterexample is an
/// internal error.
pub fn quasiassociative_check(p: &BilinearProduct) -> Result<QuasiassociativeReport> {
    let n = p.dim;
    let rows = par::map_range(n, |i| {
        let mut part = Vec::new();
        let x = basis(n, i);
        for j in 0..n {
            let y = basis(n, j);
            let (xy, yx) = (p.mul(&x, &y), p.mul(&y, &x));
            for k in 0..n {
                let z = basis(n, k);
                let t1 = p.mul(&xy, &z);
                let t2 = p.mul(&x, &p.mul(&y, &z));
                let t3 = p.mul(&yx, &z);
                let t4 = p.mul(&y, &p.mul(&x, &z));
                for l in 0..n {
                    let s = &t1[l] - &t2[l] - &t3[l] + &t4[l];
                    if !s.is_zero() {
                        part.push((vec![i, j, k, l], s));
                    }
                }
            }
        }
        part
    });
    let defect = RelationReport::from_tensor("quasiassociative", Tensor::from_entries(&[n, n, n, n], rows.into_iter().flatten())?);
    let commutator = p.commutator_algebra();
    let commutator_jacobi = commutator.jacobi_check().holds;
    if defect.holds && !commutator_jacobi {
        return Err(Error::Internal("quasiassociative product with non-Lie commutator".into()));
    }
    Ok(QuasiassociativeReport { defect, commutator, commutator_jacobi })
}

/// The product `(a,a*)(b,b*) = (ab, a b*)` on `A ⊕ A*` with
/// `⟨X u, Y⟩ = -⟨u, XY⟩` and `a* b = 0`, and its commutator algebra, which
/// is the semidirect sum of the commutator algebra of `A` with `A*`.
pub fn symplectic_double(p: &BilinearProduct) -> Result<(BilinearProduct, DoubleAlgebra)> {
    let n = p.dim;
    let mut m = Tensor::zeros(&[2 * n, 2 * n, 2 * n]);
    for (k, v) in p.m.iter() {
        let (j, kk, i) = (k[0], k[1], k[2]);
        m.set(&[j, kk, i], v.clone());
        // e_j e^i has k-th component -m[j,k,i]
        m.set(&[j, n + i, n + kk], -v);
    }
    let doubled = BilinearProduct::new(2 * n, m)?;
    let algebra = doubled.commutator_algebra();
    if !algebra.jacobi_check().holds {
        return Err(Error::Precondition("commutator of the doubled product is not Lie".into()));
    }
    let d = DoubleAlgebra { half_dim: n, algebra, provenance: Provenance::SymplecticDouble };
    Ok((doubled, d))
}

/// The O-operator of a semidirect double whose form `⟨u,Y⟩ - ⟨v,X⟩` is a
/// cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticOReport {
    /// `O(α, a) = (a, -α)`.
    pub o: Matrix,
    pub o_inverse: Matrix,
    pub o_equation: RelationReport,
    /// Bracket induced on the dual of the double.
    pub induced: LieAlgebra,
    /// The induced bracket equals `[(α,a),(β,b)] = (ρ(a)β - ρ(b)α, [a,b])`.
    pub matches_closed_form: bool,
    /// `O` maps the induced bracket onto the double's bracket.
    pub isomorphism: bool,
}

pub fn o_from_symplectic(d: &DoubleAlgebra) -> Result<SymplecticOReport> {
    let n = d.half_dim;
    let alg = &d.algebra;
    if !cocycle_defect(alg, &standard_symplectic_form(n))?.is_zero() {
        return Err(Error::Precondition("the standard form is not a cocycle of this double".into()));
    }
    let mut o = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        o[(i, n + i)] = Scalar::one();
        o[(n + i, i)] = -Scalar::one();
    }
    let o_inverse = o.inverse()?;
    let co = Representation::coadjoint(alg);
    let o_equation = lie::o_equation_defect(alg, &co, &o)?;
    if !o_equation.holds {
        return Err(Error::Internal("operator of a symplectic cocycle fails the operator equation".into()));
    }
    let induced = lie::induced_bracket(alg, &co, &o)?;

    // closed form: ρ(a)β is the G*-part of [(a,0),(0,β)]
    let mut closed = Tensor::zeros(&[2 * n, 2 * n, 2 * n]);
    // coordinate p < n is α_p, coordinate n + p is a_p
    let split = |k: usize| if k < n { (Some(k), None) } else { (None, Some(k - n)) };
    for p in 0..2 * n {
        for q in 0..2 * n {
            let (alpha_p, a_p) = split(p);
            let (alpha_q, a_q) = split(q);
            let mut out = vec![Scalar::zero(); 2 * n];
            // ρ(a)β - ρ(b)α lands in the α-slot (first half)
            if let (Some(a), Some(beta)) = (a_p, alpha_q) {
                let br = alg.bracket(&basis(2 * n, a), &basis(2 * n, n + beta));
                for k in 0..n {
                    out[k] += &br[n + k];
                }
            }
            if let (Some(b), Some(alpha)) = (a_q, alpha_p) {
                let br = alg.bracket(&basis(2 * n, b), &basis(2 * n, n + alpha));
                for k in 0..n {
                    out[k] -= &br[n + k];
                }
            }
            // [a, b] lands in the a-slot (second half)
            if let (Some(a), Some(b)) = (a_p, a_q) {
                let br = alg.bracket(&basis(2 * n, a), &basis(2 * n, b));
                for k in 0..n {
                    out[n + k] += &br[k];
                }
            }
            for (k, v) in out.into_iter().enumerate() {
                closed.set(&[p, q, k], v);
            }
        }
    }
    let matches_closed_form = *induced.structure() == closed;

    let mut isomorphism = o.rank() == 2 * n;
    for p in 0..2 * n {
        for q in 0..2 * n {
            let lhs = o.apply(&induced.bracket(&basis(2 * n, p), &basis(2 * n, q)))?;
            let rhs = alg.bracket(&o.column(p), &o.column(q));
            isomorphism &= lhs == rhs;
        }
    }
    Ok(SymplecticOReport { o, o_inverse, o_equation, induced, matches_closed_form, isomorphism })
}
