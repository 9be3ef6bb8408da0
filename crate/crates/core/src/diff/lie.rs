use super::op::{DiffOp, Op};
use super::poly::{im_partial_test, DiffPoly, Jets, Var};
use crate::error::{dim_err, Error, Result};
use crate::exact::{int, Scalar};

pub const X: Var = Var("X");
pub const F: Var = Var("f");
pub const Y: Var = Var("Y");
pub const G: Var = Var("g");
pub const Z: Var = Var("Z");
pub const H: Var = Var("h");
pub const U: Var = Var("u");
pub const P: Var = Var("p");
pub const V: Var = Var("v");
pub const Q: Var = Var("q");
pub const W: Var = Var("w");
pub const S: Var = Var("s");

const TESTS: [[Var; 2]; 3] = [[X, F], [Y, G], [Z, H]];
const DUALS: [[Var; 2]; 3] = [[U, P], [V, Q], [W, S]];

/// Formal test variables for the `k`-th algebra element (k < 3).
pub fn test_vars(dim: usize, k: usize) -> &'static [Var] {
    &TESTS[k][..dim]
}

/// Formal variables for the `k`-th dual element (k < 3).
pub fn dual_vars(dim: usize, k: usize) -> &'static [Var] {
    &DUALS[k][..dim]
}

pub fn element(vars: &[Var]) -> Vec<DiffPoly> {
    vars.iter().map(|v| DiffPoly::var(*v)).collect()
}

/// `⟨u, x⟩ = Σ u_i x_i`.
pub fn pairing(u: &[DiffPoly], x: &[DiffPoly]) -> DiffPoly {
    u.iter().zip(x).fold(DiffPoly::zero(), |acc, (a, b)| &acc + &(a * b))
}

fn d(p: &DiffPoly, n: u32, jets: &Jets) -> Result<DiffPoly> {
    p.dn(n, jets)
}

/// Lie algebra on `R^N` (N = 1 or 2) whose bracket is a bilinear
/// differential expression in the test elements `(X, f)` and `(Y, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffLieAlgebra {
    bracket: Vec<DiffPoly>,
}

impl DiffLieAlgebra {
    pub fn new(bracket: Vec<DiffPoly>) -> Result<Self> {
        let n = bracket.len();
        if !(1..=2).contains(&n) {
            return Err(dim_err(format!("differential algebras have 1 or 2 components, got {n}")));
        }
        let allowed: Vec<Var> = test_vars(n, 0).iter().chain(test_vars(n, 1)).copied().collect();
        for c in &bracket {
            if let Some(v) = c.vars().into_iter().find(|v| !allowed.contains(v)) {
                return Err(Error::Precondition(format!("bracket template uses foreign variable {}", v.0)));
            }
        }
        Ok(Self { bracket })
    }

    pub fn dim(&self) -> usize {
        self.bracket.len()
    }

    /// The template `[(X, f), (Y, g)]`.
    pub fn template(&self) -> &[DiffPoly] {
        &self.bracket
    }

    pub fn test_element(&self, k: usize) -> Vec<DiffPoly> {
        element(test_vars(self.dim(), k))
    }

    pub fn dual_element(&self, k: usize) -> Vec<DiffPoly> {
        element(dual_vars(self.dim(), k))
    }

    pub fn bracket(&self, a: &[DiffPoly], b: &[DiffPoly], jets: &Jets) -> Result<Vec<DiffPoly>> {
        let n = self.dim();
        if a.len() != n || b.len() != n {
            return Err(dim_err("bracket arguments have the wrong length"));
        }
        let map: Vec<(Var, DiffPoly)> = test_vars(n, 0)
            .iter()
            .copied()
            .zip(a.iter().cloned())
            .chain(test_vars(n, 1).iter().copied().zip(b.iter().cloned()))
            .collect();
        self.bracket.iter().map(|c| c.substitute(&map, jets)).collect()
    }

    /// `[x, y] + [y, x]` on test elements.
    pub fn skew_defect(&self, jets: &Jets) -> Result<Vec<DiffPoly>> {
        let (x, y) = (self.test_element(0), self.test_element(1));
        let a = self.bracket(&x, &y, jets)?;
        let b = self.bracket(&y, &x, jets)?;
        Ok(a.iter().zip(&b).map(|(p, q)| p + q).collect())
    }

    /// `[[x, y], z] + c.p.` on test elements.
    pub fn jacobi_defect(&self, jets: &Jets) -> Result<Vec<DiffPoly>> {
        let e = [self.test_element(0), self.test_element(1), self.test_element(2)];
        let mut acc = vec![DiffPoly::zero(); self.dim()];
        for k in 0..3 {
            let inner = self.bracket(&e[k], &e[(k + 1) % 3], jets)?;
            let outer = self.bracket(&inner, &e[(k + 2) % 3], jets)?;
            acc = acc.iter().zip(&outer).map(|(a, b)| a + b).collect();
        }
        Ok(acc)
    }

    /// `ad_x` with `x = (X, f)`, as an operator acting on `(Y, g)`.
    pub fn ad(&self, jets: &Jets) -> Result<DiffOp> {
        let (x, y) = (self.test_element(0), self.test_element(1));
        DiffOp::from_linear(&self.bracket(&x, &y, jets)?, test_vars(self.dim(), 1))
    }

    /// Coadjoint action of `x = (X, f)` as an operator on `G*`: `-(ad_x)†`.
    pub fn coadjoint_op(&self, jets: &Jets) -> Result<DiffOp> {
        Ok(self.ad(jets)?.adjoint(jets)?.neg())
    }

    /// `x·u` for arbitrary `x` and `u`.
    pub fn coadjoint(&self, x: &[DiffPoly], u: &[DiffPoly], jets: &Jets) -> Result<Vec<DiffPoly>> {
        let map: Vec<(Var, DiffPoly)> = test_vars(self.dim(), 0).iter().copied().zip(x.iter().cloned()).collect();
        self.coadjoint_op(jets)?.substitute(&map, jets)?.apply(u, jets)
    }

    /// `form(x, [y, z]) + c.p.` for a bilinear form given as a template in
    /// `(X, f)` and `(Y, g)`; a cocycle iff the result is in `Im ∂`.
    pub fn cocycle_defect(&self, form: &DiffPoly, jets: &Jets) -> Result<DiffPoly> {
        let e = [self.test_element(0), self.test_element(1), self.test_element(2)];
        let mut acc = DiffPoly::zero();
        for k in 0..3 {
            let inner = self.bracket(&e[(k + 1) % 3], &e[(k + 2) % 3], jets)?;
            acc = &acc + &self.eval_form(form, &e[k], &inner, jets)?;
        }
        Ok(acc)
    }

    /// `form(x, y) + form(y, x)`.
    pub fn form_skew_defect(&self, form: &DiffPoly, jets: &Jets) -> Result<DiffPoly> {
        let (x, y) = (self.test_element(0), self.test_element(1));
        Ok(&self.eval_form(form, &x, &y, jets)? + &self.eval_form(form, &y, &x, jets)?)
    }

    fn eval_form(&self, form: &DiffPoly, a: &[DiffPoly], b: &[DiffPoly], jets: &Jets) -> Result<DiffPoly> {
        let n = self.dim();
        let map: Vec<(Var, DiffPoly)> = test_vars(n, 0)
            .iter()
            .copied()
            .zip(a.iter().cloned())
            .chain(test_vars(n, 1).iter().copied().zip(b.iter().cloned()))
            .collect();
        form.substitute(&map, jets)
    }

    /// Induced bracket `O(u)·v - O(v)·u` on the dual, in `(u, p)`, `(v, q)`.
    pub fn induced_bracket(&self, o: &DiffOp, jets: &Jets) -> Result<Vec<DiffPoly>> {
        let (u, v) = (self.dual_element(0), self.dual_element(1));
        let ou = o.apply(&u, jets)?;
        let ov = o.apply(&v, jets)?;
        let a = self.coadjoint(&ou, &v, jets)?;
        let b = self.coadjoint(&ov, &u, jets)?;
        Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
    }

    /// `O([u, v]) - [O(u), O(v)]`; zero iff `O` is an O-operator.
    pub fn o_equation_defect(&self, o: &DiffOp, jets: &Jets) -> Result<Vec<DiffPoly>> {
        let (u, v) = (self.dual_element(0), self.dual_element(1));
        let lhs = o.apply(&self.induced_bracket(o, jets)?, jets)?;
        let rhs = self.bracket(&o.apply(&u, jets)?, &o.apply(&v, jets)?, jets)?;
        Ok(lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect())
    }

    /// `δ/δu(X^(H)) - [δH/δu, X] - X^(δH/δu)` where `X^` is the evolution
    /// derivation `u ↦ X·u` for the formal element `X = (X, f)`.
    pub fn evolution_defect(&self, h: &DiffPoly, jets: &Jets) -> Result<Vec<DiffPoly>> {
        let duals = dual_vars(self.dim(), 0);
        let (x, u) = (self.test_element(0), self.dual_element(0));
        let flow = self.coadjoint(&x, &u, jets)?;
        let evolve = |k: &DiffPoly| -> Result<DiffPoly> {
            let dk = DiffOp::frechet(std::slice::from_ref(k), duals);
            Ok(dk.apply(&flow, jets)?.pop().unwrap_or_default())
        };
        let grad = duals.iter().map(|v| h.euler(*v, jets)).collect::<Result<Vec<_>>>()?;
        let xh = evolve(h)?;
        let lhs = duals.iter().map(|v| xh.euler(*v, jets)).collect::<Result<Vec<_>>>()?;
        let br = self.bracket(&grad, &x, jets)?;
        (0..self.dim()).map(|i| Ok(&(&lhs[i] - &br[i]) - &evolve(&grad[i])?)).collect()
    }
}

/// Vector fields on the line, `[X, Y] = XY' - X'Y`.
pub fn d1() -> DiffLieAlgebra {
    let j = |v, n| DiffPoly::jet(v, n);
    DiffLieAlgebra::new(vec![&(&j(X, 0) * &j(Y, 1)) - &(&j(X, 1) * &j(Y, 0))]).expect("valid template")
}

/// The algebra `G(μ)` on pairs `(X, f)`.
pub fn gmu(mu: &Scalar) -> DiffLieAlgebra {
    let j = |v, n| DiffPoly::jet(v, n);
    let first = &(&j(X, 0) * &j(Y, 1)) - &(&j(X, 1) * &j(Y, 0));
    let inner = &(&(&j(X, 0) * &j(G, 0)) - &(&j(Y, 0) * &j(F, 0)))
        + &(&(&j(X, 1) * &j(Y, 2)) - &(&j(X, 2) * &j(Y, 1))).scale(mu);
    let second = inner.d(&Jets::default()).expect("low order");
    DiffLieAlgebra::new(vec![first, second]).expect("valid template")
}

/// `ω(x, y) = X''' Y`.
pub fn omega_form() -> DiffPoly {
    &DiffPoly::jet(X, 3) * &DiffPoly::var(Y)
}

/// `Ω(x, y) = Xg - Yf`.
pub fn symplectic_form() -> DiffPoly {
    &(&DiffPoly::var(X) * &DiffPoly::var(G)) - &(&DiffPoly::var(Y) * &DiffPoly::var(F))
}

/// `O = [[0, 1], [-1, ε∂³]]`.
pub fn gmu_o_operator(eps: &Scalar) -> DiffOp {
    DiffOp::from_rows(vec![
        vec![Op::zero(), Op::mult(DiffPoly::one())],
        vec![Op::mult(DiffPoly::int(-1)), Op::term(DiffPoly::constant(eps.clone()), 3)],
    ])
    .expect("square")
}

/// `O⁻¹ = [[ε∂³, -1], [1, 0]]`.
pub fn gmu_o_inverse(eps: &Scalar) -> DiffOp {
    DiffOp::from_rows(vec![
        vec![Op::term(DiffPoly::constant(eps.clone()), 3), Op::mult(DiffPoly::int(-1))],
        vec![Op::mult(DiffPoly::one()), Op::zero()],
    ])
    .expect("square")
}

/// Checks on `O` alone.
#[derive(Clone, Debug)]
pub struct OOperatorReport {
    pub skew_defect: DiffOp,
    pub right_inverse_defect: DiffOp,
    pub left_inverse_defect: DiffOp,
    pub o_equation_defect: Vec<DiffPoly>,
}

impl OOperatorReport {
    pub fn holds(&self) -> bool {
        self.skew_defect.is_zero()
            && self.right_inverse_defect.is_zero()
            && self.left_inverse_defect.is_zero()
            && self.o_equation_defect.iter().all(DiffPoly::is_zero)
    }
}

pub fn gmu_o_checks(mu: &Scalar, eps: &Scalar, jets: &Jets) -> Result<OOperatorReport> {
    let o = gmu_o_operator(eps);
    let inv = gmu_o_inverse(eps);
    let id = DiffOp::identity(2);
    Ok(OOperatorReport {
        skew_defect: o.skew_defect(jets)?,
        right_inverse_defect: o.compose(&inv, jets)?.sub(&id)?,
        left_inverse_defect: inv.compose(&o, jets)?.sub(&id)?,
        o_equation_defect: gmu(mu).o_equation_defect(&o, jets)?,
    })
}

/// The bracket induced on `G(μ)*` and its comparison with `G(ε - μ)`.
#[derive(Clone, Debug)]
pub struct DualBracketReport {
    /// `[(u, p), (v, q)]`.
    pub bracket: Vec<DiffPoly>,
    /// Same bracket after `p→X, u→f, q→Y, v→g` and swapping components.
    pub relabeled: Vec<DiffPoly>,
    pub target: DiffLieAlgebra,
    /// Coefficient of `p' q'''` in the first component.
    pub coefficient: Scalar,
    pub matches: bool,
}

pub fn gmu_dual_bracket(mu: &Scalar, eps: &Scalar, jets: &Jets) -> Result<DualBracketReport> {
    let alg = gmu(mu);
    let bracket = alg.induced_bracket(&gmu_o_operator(eps), jets)?;
    let names = [(P, X), (U, F), (Q, Y), (V, G)];
    let relabeled = vec![bracket[1].rename(&names), bracket[0].rename(&names)];
    let target = gmu(&(eps - mu));
    let coefficient = bracket[0].coefficient(&[(P, 1, 1), (Q, 3, 1)]);
    let matches = relabeled == target.template();
    Ok(DualBracketReport { bracket, relabeled, target, coefficient, matches })
}

/// The coadjoint action written out by hand:
/// `(X u' + 2X' u - f p' + μ(X'p')'' + μ(X''p')', X p')`.
pub fn gmu_coadjoint_closed_form(mu: &Scalar, jets: &Jets) -> Result<Vec<DiffPoly>> {
    let j = |v, n| DiffPoly::jet(v, n);
    let first = &(&(&j(X, 0) * &j(U, 1)) + &(&j(X, 1) * &j(U, 0)).scale(&int(2))) - &(&j(F, 0) * &j(P, 1));
    let tail = &d(&(&j(X, 1) * &j(P, 1)), 2, jets)? + &d(&(&j(X, 2) * &j(P, 1)), 1, jets)?;
    Ok(vec![&first + &tail.scale(mu), &j(X, 0) * &j(P, 1)])
}

/// Cocycle verdicts for `ω` and `Ω` on `G(μ)`.
#[derive(Clone, Debug)]
pub struct CocycleReport {
    pub jacobi: Vec<DiffPoly>,
    pub omega_skew: DiffPoly,
    pub omega_cocycle: DiffPoly,
    pub symplectic_skew: DiffPoly,
    pub symplectic_cocycle: DiffPoly,
    pub holds: bool,
}

pub fn gmu_cocycle_checks(mu: &Scalar, jets: &Jets) -> Result<CocycleReport> {
    let alg = gmu(mu);
    let jacobi = alg.jacobi_defect(jets)?;
    let omega_skew = alg.form_skew_defect(&omega_form(), jets)?;
    let omega_cocycle = alg.cocycle_defect(&omega_form(), jets)?;
    let symplectic_skew = alg.form_skew_defect(&symplectic_form(), jets)?;
    let symplectic_cocycle = alg.cocycle_defect(&symplectic_form(), jets)?;
    let holds = jacobi.iter().all(DiffPoly::is_zero)
        && [&omega_skew, &omega_cocycle, &symplectic_skew, &symplectic_cocycle]
            .into_iter()
            .map(|p| im_partial_test(p, jets))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b);
    Ok(CocycleReport { jacobi, omega_skew, omega_cocycle, symplectic_skew, symplectic_cocycle, holds })
}
