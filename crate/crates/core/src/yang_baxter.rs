//! Braid, quantum and classical Yang-Baxter relations on `V ⊗ V`.

use crate::error::{Error, Result};
use crate::exact::{embed_pair, mirror, pair_dim, permutation, HSeries, Matrix, Slot};
use crate::report::RelationReport;

fn slots(a: &Matrix) -> Result<(Matrix, Matrix, Matrix)> {
    Ok((embed_pair(a, Slot::S12)?, embed_pair(a, Slot::S13)?, embed_pair(a, Slot::S23)?))
}

/// `S23 S12 S23 - S12 S23 S12`.
pub fn check_artin(s: &Matrix) -> Result<RelationReport> {
    let (s12, _, s23) = slots(s)?;
    let lhs = Matrix::chain(&[&s23, &s12, &s23])?;
    let rhs = Matrix::chain(&[&s12, &s23, &s12])?;
    Ok(RelationReport::from_matrix("artin", &lhs.sub(&rhs)?))
}

/// `R12 R13 R23 - R23 R13 R12`.
pub fn check_qybe(r: &Matrix) -> Result<RelationReport> {
    let (r12, r13, r23) = slots(r)?;
    let lhs = Matrix::chain(&[&r12, &r13, &r23])?;
    let rhs = Matrix::chain(&[&r23, &r13, &r12])?;
    Ok(RelationReport::from_matrix("qybe", &lhs.sub(&rhs)?))
}

/// `[r12, r13] + [r12, r23] + [r13, r23]` for an operator on `V ⊗ V`.
pub fn end_cybe(r: &Matrix) -> Result<Matrix> {
    let (r12, r13, r23) = slots(r)?;
    r12.commutator(&r13)?.add(&r12.commutator(&r23)?)?.add(&r13.commutator(&r23)?)
}

/// The four transport identities relating the `12`, `13`, `23` placements
/// through the flips `P12`, `P23`, with the four differences stacked.
pub fn check_transport(a: &Matrix) -> Result<RelationReport> {
    let n = pair_dim(a)?;
    let p = permutation(n);
    let (a12, a13, a23) = slots(a)?;
    let p12 = embed_pair(&p, Slot::S12)?;
    let p23 = embed_pair(&p, Slot::S23)?;
    let pairs = [
        (a12.mul(&p23)?, p23.mul(&a13)?),
        (a13.mul(&p23)?, p23.mul(&a12)?),
        (a23.mul(&p12)?, p12.mul(&a13)?),
        (a13.mul(&p12)?, p12.mul(&a23)?),
    ];
    let d = n * n * n;
    let mut stacked = Matrix::zeros(4 * d, d);
    for (k, (l, r)) in pairs.iter().enumerate() {
        let diff = l.sub(r)?;
        for i in 0..d {
            for j in 0..d {
                stacked[(k * d + i, j)] = diff[(i, j)].clone();
            }
        }
    }
    Ok(RelationReport::from_matrix("transport", &stacked))
}

/// Both flip factorizations of the mirror operator, stacked.
pub fn check_mirror(n: usize) -> Result<RelationReport> {
    let p = permutation(n);
    let p12 = embed_pair(&p, Slot::S12)?;
    let p23 = embed_pair(&p, Slot::S23)?;
    let m = mirror(n);
    let a = Matrix::chain(&[&p23, &p12, &p23])?.sub(&m)?;
    let b = Matrix::chain(&[&p12, &p23, &p12])?.sub(&m)?;
    let d = n * n * n;
    let mut stacked = Matrix::zeros(2 * d, d);
    for i in 0..d {
        for j in 0..d {
            stacked[(i, j)] = a[(i, j)].clone();
            stacked[(d + i, j)] = b[(i, j)].clone();
        }
    }
    Ok(RelationReport::from_matrix("mirror", &stacked))
}

/// The `h²` coefficient of the quantum Yang-Baxter defect of
/// `R = 1 + h r + h² ρ`. It is checked internally to equal the classical
/// defect of `r`, whatever `ρ` is.
pub fn quasiclassical_defect(r: &HSeries) -> Result<Matrix> {
    let n = pair_dim(r.coeff(0))?;
    if *r.coeff(0) != Matrix::identity(n * n) {
        return Err(Error::NotUnipotent);
    }
    let e12 = r.map(|m| embed_pair(m, Slot::S12))?;
    let e13 = r.map(|m| embed_pair(m, Slot::S13))?;
    let e23 = r.map(|m| embed_pair(m, Slot::S23))?;
    let lhs = e12.mul(&e13)?.mul(&e23)?;
    let rhs = e23.mul(&e13)?.mul(&e12)?;
    let diff = lhs.sub(&rhs)?;
    if !diff.coeff(0).is_zero() || !diff.coeff(1).is_zero() {
        return Err(Error::Internal("quantum defect has low-order terms".into()));
    }
    let defect = diff.coeff(2).clone();
    if defect != end_cybe(r.coeff(1))? {
        return Err(Error::Internal("h² defect differs from the classical defect".into()));
    }
    Ok(defect)
}

/// The quasiclassical braid relation for `r̄`:
/// `r̄23 r̄12 P23 + r̄23 P12 r̄23 + P23 r̄12 r̄23 - (r̄12 r̄23 P12 + r̄12 P23 r̄12 + P12 r̄23 r̄12)`.
///
/// With `r = P r̄` the defect equals `M c(r)` for the mirror `M`; this is
/// checked internally, so the relation holds exactly when `c(r) = 0`.
pub fn check_artin_quasiclassical(rbar: &Matrix) -> Result<RelationReport> {
    let n = pair_dim(rbar)?;
    let p = permutation(n);
    let (b12, _, b23) = slots(rbar)?;
    let p12 = embed_pair(&p, Slot::S12)?;
    let p23 = embed_pair(&p, Slot::S23)?;
    let lhs = Matrix::chain(&[&b23, &b12, &p23])?
        .add(&Matrix::chain(&[&b23, &p12, &b23])?)?
        .add(&Matrix::chain(&[&p23, &b12, &b23])?)?;
    let rhs = Matrix::chain(&[&b12, &b23, &p12])?
        .add(&Matrix::chain(&[&b12, &p23, &b12])?)?
        .add(&Matrix::chain(&[&p12, &b23, &b12])?)?;
    let defect = lhs.sub(&rhs)?;
    let r = p.mul(rbar)?;
    if defect != mirror(n).mul(&end_cybe(&r)?)? {
        return Err(Error::Internal("braid defect is not the mirrored classical defect".into()));
    }
    Ok(RelationReport::from_matrix("artin-quasiclassical", &defect))
}

/// Verdicts for the unitarity-to-skewness implication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitarityReport {
    /// `S² = 1` through order `h`.
    pub hypothesis: bool,
    /// `P r = -r P` for `r = P S1`.
    pub conclusion: bool,
}

/// For `S = P + h S1 + …`, tests `S² ≡ 1 (mod h²)` and the skewness of
/// `r = P S1`. A true hypothesis with a false conclusion is an internal
/// error.
pub fn unitarity_implies_skewness(s: &HSeries) -> Result<UnitarityReport> {
    let n = pair_dim(s.coeff(0))?;
    let p = permutation(n);
    if *s.coeff(0) != p {
        return Err(Error::Precondition("leading coefficient must be the flip".into()));
    }
    let sq = s.mul(s)?;
    let hypothesis = *sq.coeff(0) == Matrix::identity(n * n) && sq.coeff(1).is_zero();
    let r = p.mul(s.coeff(1))?;
    let conclusion = p.mul(&r)? == r.mul(&p)?.neg();
    if hypothesis && !conclusion {
        return Err(Error::Internal("unitarity without skewness".into()));
    }
    Ok(UnitarityReport { hypothesis, conclusion })
}
