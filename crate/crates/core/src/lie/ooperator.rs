use num_traits::Zero;

use super::algebra::{basis, cocycle_defect, LieAlgebra};
use super::rep::Representation;
use crate::error::{dim_err, Error, Result};
use crate::exact::{Matrix, Scalar, Tensor};
use crate::report::RelationReport;

/// The operator `O: G* → G` of a two-tensor `r = Σ r^{ij} e_i ⊗ e_j`,
/// `O(e^i) = Σ_s r^{si} e_s`. In coordinates both are the same matrix.
pub fn r_to_operator(alg: &LieAlgebra, r: &Matrix) -> Result<Matrix> {
    check_square(alg, r)?;
    Ok(r.clone())
}

/// Inverse of [`r_to_operator`].
pub fn operator_to_r(alg: &LieAlgebra, o: &Matrix) -> Result<Matrix> {
    check_square(alg, o)?;
    Ok(o.clone())
}

fn check_square(alg: &LieAlgebra, m: &Matrix) -> Result<()> {
    if m.rows() != alg.dim() || m.cols() != alg.dim() {
        return Err(dim_err(format!("{}x{} two-tensor over a {}-dimensional algebra", m.rows(), m.cols(), alg.dim())));
    }
    Ok(())
}

/// Classical Yang-Baxter defect `[r12,r13] + [r12,r23] + [r13,r23]` as a
/// rank-3 tensor. Refuses non-skew `r`.
pub fn cybe_defect(alg: &LieAlgebra, r: &Matrix) -> Result<Tensor> {
    check_square(alg, r)?;
    if !r.is_skew() {
        return Err(Error::NotSkew);
    }
    Ok(cybe_unchecked(alg, r))
}

pub(crate) fn cybe_unchecked(alg: &LieAlgebra, r: &Matrix) -> Tensor {
    let n = alg.dim();
    let c = alg.structure();
    let nz: Vec<(usize, usize, &Scalar)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter_map(|(i, j)| Some((i, j, &r[(i, j)])).filter(|t| !t.2.is_zero())).collect();
    let mut table: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); n * n];
    for (key, v) in c.iter() {
        table[key[0] * n + key[1]].push((key[2], v));
    }
    let mut out = Tensor::zeros(&[n, n, n]);
    for &(i, j, a) in &nz {
        for &(k, l, b) in &nz {
            let ab = a * b;
            // [e_i,e_k] ⊗ e_j ⊗ e_l
            for &(s, v) in &table[i * n + k] {
                out.add_at(&[s, j, l], &(&ab * v));
            }
            // e_i ⊗ [e_j,e_k] ⊗ e_l
            for &(s, v) in &table[j * n + k] {
                out.add_at(&[i, s, l], &(&ab * v));
            }
            // e_i ⊗ e_k ⊗ [e_j,e_l]
            for &(s, v) in &table[j * n + l] {
                out.add_at(&[i, k, s], &(&ab * v));
            }
        }
    }
    out
}

fn check_operator(alg: &LieAlgebra, module: &Representation, o: &Matrix) -> Result<()> {
    if module.algebra_dim() != alg.dim() || o.rows() != alg.dim() || o.cols() != module.dim() {
        return Err(dim_err("operator shape does not match algebra and module"));
    }
    if !module.defect(alg)?.is_zero() {
        return Err(Error::NotRepresentation);
    }
    Ok(())
}

/// `O(O(u)·v - O(v)·u) - [O(u), O(v)]` on basis pairs of the module,
/// indexed `(a, b, k)`.
pub fn o_equation_defect(alg: &LieAlgebra, module: &Representation, o: &Matrix) -> Result<RelationReport> {
    check_operator(alg, module, o)?;
    let (n, m) = (alg.dim(), module.dim());
    let images: Vec<Vec<Scalar>> = (0..m).map(|a| o.column(a)).collect();
    let mut t = Tensor::zeros(&[m, m, n]);
    for a in 0..m {
        for b in 0..m {
            let (ua, ub) = (basis(m, a), basis(m, b));
            let inner: Vec<Scalar> =
                module.act(&images[a], &ub).iter().zip(module.act(&images[b], &ua)).map(|(x, y)| x - y).collect();
            let lhs = o.apply(&inner)?;
            let rhs = alg.bracket(&images[a], &images[b]);
            for k in 0..n {
                t.set(&[a, b, k], &lhs[k] - &rhs[k]);
            }
        }
    }
    Ok(RelationReport::from_tensor("o-operator", t))
}

/// The bracket `[u, v] = O(u)·v - O(v)·u` on the module of an O-operator.
/// The result is checked to be a Lie algebra.
pub fn induced_bracket(alg: &LieAlgebra, module: &Representation, o: &Matrix) -> Result<LieAlgebra> {
    if !o_equation_defect(alg, module, o)?.holds {
        return Err(Error::NotOOperator);
    }
    let m = module.dim();
    let mut c = Tensor::zeros(&[m, m, m]);
    for a in 0..m {
        for b in 0..m {
            let (ua, ub) = (basis(m, a), basis(m, b));
            let x = module.act(&o.column(a), &ub);
            let y = module.act(&o.column(b), &ua);
            for k in 0..m {
                c.set(&[a, b, k], &x[k] - &y[k]);
            }
        }
    }
    let names = (0..m).map(|i| format!("u{i}")).collect();
    let induced = LieAlgebra::antisymmetric(names, c)?;
    if !induced.jacobi_check().holds {
        return Err(Error::Internal("bracket induced by an O-operator fails Jacobi".into()));
    }
    Ok(induced)
}

/// Cocycle test for `Ω(u, v) = ⟨u, O(v)⟩` on `G*` with the bracket induced
/// by a skew O-operator `O: G* → G`.
pub fn induced_cocycle_check(alg: &LieAlgebra, o: &Matrix) -> Result<RelationReport> {
    check_square(alg, o)?;
    if !o.is_skew() {
        return Err(Error::NotSkew);
    }
    let dual = induced_bracket(alg, &Representation::coadjoint(alg), o)?;
    Ok(RelationReport::from_tensor("induced-cocycle", cocycle_defect(&dual, o)?))
}

/// `⟨w, [O(u),O(v)] - O(O(u)·v - O(v)·u)⟩ - ⟨u⊗v⊗w, c(r)⟩` for basis
/// covectors, indexed `(u, v, w)`. Valid for any skew `r`.
pub fn pairing_identity(alg: &LieAlgebra, r: &Matrix) -> Result<RelationReport> {
    let c = cybe_defect(alg, r)?;
    let oeq = o_equation_defect(alg, &Representation::coadjoint(alg), r)?;
    let lhs = oeq.defect.scale(&-Scalar::from_integer(1.into()));
    Ok(RelationReport::from_tensor("pairing-identity", lhs.sub(&c)?))
}

/// Verdicts relating the symplectic form of an invertible `r` to its
/// classical Yang-Baxter defect and operator equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldReport {
    /// `ω(x, [y, z]) + c.p.` with `ω(x, y) = ⟨O⁻¹x, y⟩`.
    pub cocycle: RelationReport,
    pub cybe: RelationReport,
    pub o_equation: RelationReport,
    pub pairing_identity: RelationReport,
    /// All three verdicts agree.
    pub equivalent: bool,
}

/// Compares the three formulations for a skew nondegenerate `r`.
pub fn drinfeld_equivalence(alg: &LieAlgebra, r: &Matrix) -> Result<DrinfeldReport> {
    let cybe = RelationReport::from_tensor("cybe", cybe_defect(alg, r)?);
    let inv = r.inverse()?;
    // ω(e_a, e_b) = (O⁻¹ e_a)_b
    let omega = inv.transpose();
    let cocycle = RelationReport::from_tensor("symplectic-cocycle", cocycle_defect(alg, &omega)?.scale(&-Scalar::from_integer(1.into())));
    let o_equation = o_equation_defect(alg, &Representation::coadjoint(alg), r)?;
    let pairing_identity = pairing_identity(alg, r)?;
    if !pairing_identity.holds {
        return Err(Error::Internal("operator equation disagrees with the Yang-Baxter defect".into()));
    }
    let equivalent = cybe.holds == cocycle.holds && cybe.holds == o_equation.holds;
    Ok(DrinfeldReport { cocycle, cybe, o_equation, pairing_identity, equivalent })
}
