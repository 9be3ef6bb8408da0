use num_rational::Rational64;

use super::lie::{dual_vars, element, gmu, gmu_o_inverse, gmu_o_operator, test_vars, DiffLieAlgebra, P, U};
use super::op::{DiffOp, Op};
use super::poly::{im_partial_test, DiffPoly, Jets, Var};
use crate::error::{dim_err, Error, Result};
use crate::exact::{int, Scalar};

fn check_square(b: &DiffOp, duals: &[Var]) -> Result<()> {
    if b.rows() != duals.len() || b.cols() != duals.len() {
        return Err(dim_err(format!("{}x{} matrix over {} variables", b.rows(), b.cols(), duals.len())));
    }
    Ok(())
}

/// `{H, F} = (δF/δu)ᵗ B (δH/δu)`, up to `Im ∂`.
pub fn poisson_bracket(b: &DiffOp, duals: &[Var], h: &DiffPoly, f: &DiffPoly, jets: &Jets) -> Result<DiffPoly> {
    check_square(b, duals)?;
    let dh = duals.iter().map(|v| h.euler(*v, jets)).collect::<Result<Vec<_>>>()?;
    let df = duals.iter().map(|v| f.euler(*v, jets)).collect::<Result<Vec<_>>>()?;
    let bh = b.apply(&dh, jets)?;
    Ok(df.iter().zip(&bh).fold(DiffPoly::zero(), |acc, (x, y)| &acc + &(x * y)))
}

fn linear_hamiltonians(duals: &[Var]) -> Vec<DiffPoly> {
    let n = duals.len();
    let u = element(duals);
    (0..3)
        .map(|k| u.iter().zip(element(test_vars(n, k))).fold(DiffPoly::zero(), |acc, (a, x)| &acc + &(a * &x)))
        .collect()
}

/// `{{H_a, H_b}_1, H_c}_2 + {{H_a, H_b}_2, H_c}_1 + c.p.` over linear
/// Hamiltonians with formal coefficients. With `b1 = b2` this is twice the
/// Jacobi expression.
fn mixed_jacobi(b1: &DiffOp, b2: &DiffOp, duals: &[Var], jets: &Jets) -> Result<DiffPoly> {
    let hs = linear_hamiltonians(duals);
    let mut acc = DiffPoly::zero();
    for k in 0..3 {
        let (a, b, c) = (&hs[k], &hs[(k + 1) % 3], &hs[(k + 2) % 3]);
        let inner1 = poisson_bracket(b1, duals, a, b, jets)?;
        let inner2 = poisson_bracket(b2, duals, a, b, jets)?;
        acc = &acc + &poisson_bracket(b2, duals, &inner1, c, jets)?;
        acc = &acc + &poisson_bracket(b1, duals, &inner2, c, jets)?;
    }
    Ok(acc)
}

/// Jacobi expression for the bracket of `b`; Hamiltonian iff in `Im ∂`.
pub fn jacobi_defect(b: &DiffOp, duals: &[Var], jets: &Jets) -> Result<DiffPoly> {
    check_square(b, duals)?;
    let hs = linear_hamiltonians(duals);
    let mut acc = DiffPoly::zero();
    for k in 0..3 {
        let inner = poisson_bracket(b, duals, &hs[k], &hs[(k + 1) % 3], jets)?;
        acc = &acc + &poisson_bracket(b, duals, &inner, &hs[(k + 2) % 3], jets)?;
    }
    Ok(acc)
}

/// Cross terms of the Jacobi expression for `b1 + b2`.
pub fn compatibility_defect(b1: &DiffOp, b2: &DiffOp, duals: &[Var], jets: &Jets) -> Result<DiffPoly> {
    check_square(b1, duals)?;
    check_square(b2, duals)?;
    mixed_jacobi(b1, b2, duals, jets)
}

/// Skew-adjointness, Jacobi and the verdicts combined.
pub fn is_hamiltonian(b: &DiffOp, duals: &[Var], jets: &Jets) -> Result<bool> {
    Ok(b.skew_defect(jets)?.is_zero() && im_partial_test(&jacobi_defect(b, duals, jets)?, jets)?)
}

/// `B(X) = -X·u`, the linear Hamiltonian matrix on the dual.
pub fn linear_matrix(alg: &DiffLieAlgebra, jets: &Jets) -> Result<DiffOp> {
    let (x, u) = (alg.test_element(0), alg.dual_element(0));
    let xu: Vec<DiffPoly> = alg.coadjoint(&x, &u, jets)?.iter().map(|p| -p).collect();
    DiffOp::from_linear(&xu, test_vars(alg.dim(), 0))
}

/// `B(X) = O(X·u)·u`, the quadratic Hamiltonian matrix on the dual.
pub fn quadratic_matrix(alg: &DiffLieAlgebra, o: &DiffOp, jets: &Jets) -> Result<DiffOp> {
    let (x, u) = (alg.test_element(0), alg.dual_element(0));
    let xu = alg.coadjoint(&x, &u, jets)?;
    let oxu = o.apply(&xu, jets)?;
    DiffOp::from_linear(&alg.coadjoint(&oxu, &u, jets)?, test_vars(alg.dim(), 0))
}

fn jet(v: Var, n: u32) -> DiffPoly {
    DiffPoly::jet(v, n)
}

/// Quadratic matrix on `G(μ)*` written out by hand:
/// `[[*, -p'²], [p'², 0]]` with
/// `* = 2(p'u∂ + ∂p'u) + (4μ-ε)p'∂³p' + μ(3p''² - 2p'p''')∂ + μ∂(3p''² - 2p'p''')`.
pub fn gmu_b2_closed_form(mu: &Scalar, eps: &Scalar, jets: &Jets) -> Result<DiffOp> {
    let p1 = jet(P, 1);
    let p1u = &p1 * &jet(U, 0);
    let w = &jet(P, 2).pow(2).scale(&int(3)) - &(&p1 * &jet(P, 3)).scale(&int(2));
    let d = Op::dn(1);
    let star = Op::term(p1u.clone(), 1)
        .add(&d.compose(&Op::mult(p1u), jets)?)
        .left_mul(&DiffPoly::int(2))
        .add(&Op::dn(3).compose(&Op::mult(p1.clone()), jets)?.left_mul(&p1).left_mul(&DiffPoly::constant(int(4) * mu - eps)))
        .add(&Op::term(w.scale(mu), 1))
        .add(&d.compose(&Op::mult(w.scale(mu)), jets)?);
    let sq = p1.pow(2);
    DiffOp::from_rows(vec![vec![star, Op::mult(-&sq)], vec![Op::mult(sq), Op::zero()]])
}

/// Linear matrix on `G(μ)*` written out by hand: `-[[**, -p'], [p', 0]]` with
/// `** = u∂ + ∂u + μ(∂²p'∂ + ∂p'∂²)`.
pub fn gmu_b1_closed_form(mu: &Scalar, jets: &Jets) -> Result<DiffOp> {
    let u = Op::mult(jet(U, 0));
    let p1 = Op::mult(jet(P, 1));
    let d = Op::dn(1);
    let d2 = Op::dn(2);
    let mu_part = d2.compose(&p1, jets)?.compose(&d, jets)?.add(&d.compose(&p1, jets)?.compose(&d2, jets)?);
    let star = u.compose(&d, jets)?.add(&d.compose(&u, jets)?).add(&mu_part.left_mul(&DiffPoly::constant(mu.clone())));
    Ok(DiffOp::from_rows(vec![vec![star, p1.neg()], vec![p1, Op::zero()]])?.neg())
}

/// The three Hamiltonian matrices on `G(μ)*` and their mutual checks.
#[derive(Clone, Debug)]
pub struct TripleReport {
    pub b0: DiffOp,
    pub b1: DiffOp,
    pub b2: DiffOp,
    pub b1_matches_closed_form: bool,
    pub skew: [bool; 3],
    pub jacobi: [bool; 3],
    /// Pairs `(0,1)`, `(0,2)`, `(1,2)`.
    pub compatible: [bool; 3],
}

impl TripleReport {
    pub fn holds(&self) -> bool {
        self.b1_matches_closed_form
            && self.skew.iter().all(|b| *b)
            && self.jacobi.iter().all(|b| *b)
            && self.compatible.iter().all(|b| *b)
    }
}

/// Fails with [`Error::Internal`] if the derived quadratic matrix disagrees
/// with the closed form.
pub fn gmu_hamiltonian_triple(mu: &Scalar, eps: &Scalar, jets: &Jets) -> Result<TripleReport> {
    let alg = gmu(mu);
    let duals = dual_vars(2, 0);
    let b2 = quadratic_matrix(&alg, &gmu_o_operator(eps), jets)?;
    if b2 != gmu_b2_closed_form(mu, eps, jets)? {
        return Err(Error::Internal("derived quadratic matrix differs from the closed form".into()));
    }
    let b1 = linear_matrix(&alg, jets)?;
    let b1_matches_closed_form = b1 == gmu_b1_closed_form(mu, jets)?;
    let b0 = gmu_o_inverse(eps);
    let ms = [&b0, &b1, &b2];
    let mut skew = [false; 3];
    let mut jacobi = [false; 3];
    for (k, m) in ms.iter().enumerate() {
        skew[k] = m.skew_defect(jets)?.is_zero();
        jacobi[k] = im_partial_test(&jacobi_defect(m, duals, jets)?, jets)?;
    }
    let mut compatible = [false; 3];
    for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        compatible[k] = im_partial_test(&compatibility_defect(ms[i], ms[j], duals, jets)?, jets)?;
    }
    Ok(TripleReport { b0, b1, b2, b1_matches_closed_form, skew, jacobi, compatible })
}

/// `Φ(B₁) - D(Φ) B₂ D(Φ)†`, where `phi[i]` is the image of `source[i]` as
/// an expression in `target`. Zero iff `Φ` is a Hamiltonian map.
pub fn hamiltonian_map_defect(
    phi: &[DiffPoly],
    source: &[Var],
    target: &[Var],
    b1: &DiffOp,
    b2: &DiffOp,
    jets: &Jets,
) -> Result<DiffOp> {
    if phi.len() != source.len() {
        return Err(dim_err("one image per source variable"));
    }
    check_square(b1, source)?;
    check_square(b2, target)?;
    let map: Vec<(Var, DiffPoly)> = source.iter().copied().zip(phi.iter().cloned()).collect();
    let pulled = b1.substitute(&map, jets)?;
    let dphi = DiffOp::frechet(phi, target);
    let pushed = dphi.compose(b2, jets)?.compose(&dphi.adjoint(jets)?, jets)?;
    pulled.sub(&pushed)
}

/// `-(u∂ + ∂u)`, the linear matrix of vector fields on the line.
pub fn d1_linear_matrix(jets: &Jets) -> Result<DiffOp> {
    linear_matrix(&super::lie::d1(), jets)
}

/// `-2 √u ∂ √u`.
pub fn d1_sqrt_factorization(jets: &Jets) -> Result<DiffOp> {
    let half = Rational64::new(1, 2);
    let s = Op::mult(DiffPoly::jet_pow(U, 0, half));
    Ok(DiffOp::scalar(s.compose(&Op::dn(1), jets)?.compose(&s, jets)?.left_mul(&DiffPoly::int(-2))))
}

/// `B(δH/δu) = 0` for the D₁ linear matrix.
pub fn d1_casimir_check(h: &DiffPoly, jets: &Jets) -> Result<bool> {
    let b = d1_linear_matrix(jets)?;
    let grad = h.euler(U, jets)?;
    Ok(b.apply(&[grad], jets)?.iter().all(DiffPoly::is_zero))
}

/// `(δH/δu)² u` is constant.
pub fn d1_casimir_square_check(h: &DiffPoly, jets: &Jets) -> Result<bool> {
    let grad = h.euler(U, jets)?;
    Ok((&grad.pow(2) * &DiffPoly::var(U)).d(jets)?.is_zero())
}

/// Symplectic matrix `[[0, -1], [1, 0]]` on `(x, p)`.
pub fn symplectic_matrix() -> DiffOp {
    DiffOp::from_rows(vec![
        vec![Op::zero(), Op::mult(DiffPoly::int(-1))],
        vec![Op::mult(DiffPoly::one()), Op::zero()],
    ])
    .expect("square")
}

pub const PHASE_X: Var = Var("x");

/// Clebsch map for vector fields acting on scalars: `u ↦ p x'`.
pub fn d1_clebsch_image() -> DiffPoly {
    &DiffPoly::var(P) * &DiffPoly::jet(PHASE_X, 1)
}
