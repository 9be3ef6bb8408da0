use num_rational::Rational64;
use omatrix_core::diff::*;
use omatrix_core::exact::{frac, int, Scalar};
use omatrix_core::Error;
use proptest::prelude::*;

fn j(v: Var, n: u32) -> DiffPoly {
    DiffPoly::jet(v, n)
}

fn jets() -> Jets {
    Jets::default()
}

fn c(x: i64) -> DiffPoly {
    DiffPoly::int(x)
}

#[test]
fn im_partial_examples() {
    let jt = jets();
    let u = j(U, 0);
    assert!(im_partial_test(&(&u * &u).d(&jt).unwrap(), &jt).unwrap());
    assert!(!im_partial_test(&u, &jt).unwrap());
    assert!(!im_partial_test(&c(1), &jt).unwrap());
    // X'Y''' + X'''Y' = ∂(X'Y'' + X''Y') - 2X''Y'', and X''Y'' has δ/δX = Y''''.
    let f = &(&j(X, 1) * &j(Y, 3)) + &(&j(X, 3) * &j(Y, 1));
    assert!(!im_partial_test(&f, &jt).unwrap());
    let rest = &f - &(&(&j(X, 1) * &j(Y, 2)) + &(&j(X, 2) * &j(Y, 1))).d(&jt).unwrap();
    assert_eq!(rest, (&j(X, 2) * &j(Y, 2)).scale(&int(-2)));
    // X'Y'' + X''Y' = ∂(X'Y')
    assert!(im_partial_test(&(&(&j(X, 1) * &j(Y, 2)) + &(&j(X, 2) * &j(Y, 1))), &jt).unwrap());
}

#[test]
fn euler_examples() {
    let jt = jets();
    let u = j(U, 0);
    assert_eq!((&u * &u).euler(U, &jt).unwrap(), u.scale(&int(2)));
    // δ(u u'')/δu = u'' + ∂²u
    assert_eq!((&u * &j(U, 2)).euler(U, &jt).unwrap(), j(U, 2).scale(&int(2)));
    // δ(u'²)/δu = -2u''
    assert_eq!(j(U, 1).pow(2).euler(U, &jt).unwrap(), j(U, 2).scale(&int(-2)));
}

#[test]
fn rational_exponents_differentiate() {
    let jt = jets();
    let s = DiffPoly::jet_pow(U, 0, Rational64::new(1, 2));
    let expected = &DiffPoly::jet_pow(U, 0, Rational64::new(-1, 2)) * &j(U, 1);
    assert_eq!(s.d(&jt).unwrap(), expected.scale(&frac(1, 2)));
    assert_eq!(&s * &s, j(U, 0));
}

#[test]
fn adjoint_of_symmetrized_multiplication() {
    let jt = jets();
    let u = Op::mult(j(U, 0));
    let d = Op::dn(1);
    let op = u.compose(&d, &jt).unwrap().add(&d.compose(&u, &jt).unwrap());
    assert_eq!(op.adjoint(&jt).unwrap(), op.neg());
    assert_eq!(op.coeff(1), j(U, 0).scale(&int(2)));
    assert_eq!(op.coeff(0), j(U, 1));
}

#[test]
fn jet_ceiling_is_enforced() {
    let small = Jets::new(3);
    assert!(j(U, 2).d(&small).is_ok());
    assert!(matches!(j(U, 3).d(&small), Err(Error::JetOrder { order: 4, ceiling: 3 })));
    assert!(matches!(gmu_o_checks(&int(1), &int(1), &Jets::new(2)), Err(Error::JetOrder { .. })));
}

#[test]
fn from_linear_rejects_nonlinear() {
    let e = &j(X, 0) * &j(X, 1);
    assert!(matches!(DiffOp::from_linear(&[e], &[X]), Err(Error::NotLinear(_))));
}

#[test]
fn gmu_jacobi_and_cocycles() {
    let jt = jets();
    for mu in [int(0), int(1), frac(1, 2), frac(-3, 7)] {
        let alg = gmu(&mu);
        assert!(alg.skew_defect(&jt).unwrap().iter().all(DiffPoly::is_zero));
        let rep = gmu_cocycle_checks(&mu, &jt).unwrap();
        assert!(rep.jacobi.iter().all(DiffPoly::is_zero), "mu = {mu}");
        assert!(rep.holds, "mu = {mu}");
        // the printed reduction: Ω cocycle = μ X(Y'Z''' - Y'''Z') + c.p.
        let cyc = |a: Var, b: Var, cc: Var| &j(a, 0) * &(&(&j(b, 1) * &j(cc, 3)) - &(&j(b, 3) * &j(cc, 1)));
        let printed = &(&cyc(X, Y, Z) + &cyc(Y, Z, X)) + &cyc(Z, X, Y);
        assert_eq!(rep.symplectic_cocycle, printed.scale(&mu));
    }
    // ω(X,Y) + ω(Y,X) = X'''Y + Y'''X
    let rep = gmu_cocycle_checks(&int(1), &jt).unwrap();
    assert_eq!(rep.omega_skew, &(&j(X, 3) * &j(Y, 0)) + &(&j(Y, 3) * &j(X, 0)));
}

#[test]
fn deformed_bracket_fails_jacobi() {
    // second component without the outer derivative is not a Lie bracket for μ ≠ 0
    let jt = jets();
    let first = &(&j(X, 0) * &j(Y, 1)) - &(&j(X, 1) * &j(Y, 0));
    let second = &(&(&j(X, 0) * &j(G, 0)) - &(&j(Y, 0) * &j(F, 0))) + &(&(&j(X, 1) * &j(Y, 2)) - &(&j(X, 2) * &j(Y, 1)));
    let alg = DiffLieAlgebra::new(vec![first, second]).unwrap();
    assert!(!alg.jacobi_defect(&jt).unwrap().iter().all(DiffPoly::is_zero));
}

#[test]
fn coadjoint_matches_closed_form() {
    let jt = jets();
    for mu in [int(0), int(1), frac(2, 3)] {
        let alg = gmu(&mu);
        let got = alg.coadjoint(&alg.test_element(0), &alg.dual_element(0), &jt).unwrap();
        assert_eq!(got, gmu_coadjoint_closed_form(&mu, &jt).unwrap());
    }
}

#[test]
fn o_operator_is_skew_invertible_and_solves_the_o_equation() {
    let jt = jets();
    for (mu, eps) in [(int(0), int(0)), (int(1), int(2)), (frac(1, 2), int(-1)), (int(3), frac(1, 3))] {
        let rep = gmu_o_checks(&mu, &eps, &jt).unwrap();
        assert!(rep.holds(), "mu = {mu}, eps = {eps}: {rep:?}");
    }
}

#[test]
fn dual_bracket_is_gmu_of_eps_minus_mu() {
    let jt = jets();
    for (mu, eps) in [(int(0), int(0)), (int(1), int(2)), (int(2), int(2)), (frac(1, 2), frac(-5, 3))] {
        let rep = gmu_dual_bracket(&mu, &eps, &jt).unwrap();
        assert!(rep.matches, "mu = {mu}, eps = {eps}");
        assert_eq!(rep.coefficient, &eps - &mu);
        // transcription of the displayed result
        let k = &eps - &mu;
        let inner = &(&(&j(P, 0) * &j(V, 0)) - &(&j(Q, 0) * &j(U, 0)))
            + &(&(&j(P, 1) * &j(Q, 2)) - &(&j(P, 2) * &j(Q, 1))).scale(&k);
        let expected = vec![inner.d(&jt).unwrap(), &(&j(P, 0) * &j(Q, 1)) - &(&j(P, 1) * &j(Q, 0))];
        assert_eq!(rep.bracket, expected);
    }
    // ε = μ: no third-order term survives
    let rep = gmu_dual_bracket(&int(1), &int(1), &jt).unwrap();
    let pvqu = &(&j(P, 0) * &j(V, 0)) - &(&j(Q, 0) * &j(U, 0));
    assert_eq!(rep.bracket[0], pvqu.d(&jt).unwrap());
}

#[test]
fn d1_linear_matrix_and_sqrt_form() {
    let jt = jets();
    let b = d1_linear_matrix(&jt).unwrap();
    let u = Op::mult(j(U, 0));
    let d = Op::dn(1);
    let expected = u.compose(&d, &jt).unwrap().add(&d.compose(&u, &jt).unwrap()).neg();
    assert_eq!(b, DiffOp::scalar(expected));
    assert_eq!(b, d1_sqrt_factorization(&jt).unwrap());
    assert!(is_hamiltonian(&b, &[U], &jt).unwrap());
}

#[test]
fn d1_casimirs() {
    let jt = jets();
    let sqrt = DiffPoly::jet_pow(U, 0, Rational64::new(1, 2));
    assert!(d1_casimir_check(&sqrt, &jt).unwrap());
    assert!(d1_casimir_check(&sqrt.scale(&int(5)), &jt).unwrap());
    assert!(d1_casimir_square_check(&sqrt.scale(&frac(-2, 3)), &jt).unwrap());
    // H = u: B(1) = -u'
    let u = j(U, 0);
    assert!(!d1_casimir_check(&u, &jt).unwrap());
    let b = d1_linear_matrix(&jt).unwrap();
    assert_eq!(b.apply(&[c(1)], &jt).unwrap(), vec![-&j(U, 1)]);
    assert!(!d1_casimir_square_check(&u, &jt).unwrap());
    assert!(!d1_casimir_check(&DiffPoly::jet_pow(U, 0, Rational64::new(1, 3)), &jt).unwrap());
}

#[test]
fn hamiltonian_triple() {
    let jt = jets();
    for (mu, eps) in [(int(0), int(0)), (int(1), int(2)), (frac(1, 2), int(1))] {
        let rep = gmu_hamiltonian_triple(&mu, &eps, &jt).unwrap();
        assert!(rep.holds(), "mu = {mu}, eps = {eps}: {rep:?}");
    }
}

#[test]
fn triple_star_entry_at_zero_parameters() {
    let jt = jets();
    let b2 = gmu_b2_closed_form(&int(0), &int(0), &jt).unwrap();
    let pu = Op::mult(&j(P, 1) * &j(U, 0));
    let d = Op::dn(1);
    let expected = pu.compose(&d, &jt).unwrap().add(&d.compose(&pu, &jt).unwrap()).left_mul(&c(2));
    assert_eq!(*b2.get(0, 0), expected);
    let b1 = gmu_b1_closed_form(&int(1), &jt).unwrap();
    assert!(b1.skew_defect(&jt).unwrap().is_zero());
    let b0 = gmu_o_inverse(&int(3));
    assert!(b0.skew_defect(&jt).unwrap().is_zero());
}

#[test]
fn non_hamiltonian_operator_is_detected() {
    let jt = jets();
    // u∂ + ∂u + u'∂³ + ∂³u' is skew but violates Jacobi
    let u = Op::mult(j(U, 0));
    let u1 = Op::mult(j(U, 1));
    let d = Op::dn(1);
    let d3 = Op::dn(3);
    let op = u
        .compose(&d, &jt)
        .unwrap()
        .add(&d.compose(&u, &jt).unwrap())
        .add(&u1.compose(&d3, &jt).unwrap())
        .add(&d3.compose(&u1, &jt).unwrap());
    let b = DiffOp::scalar(op);
    assert!(b.skew_defect(&jt).unwrap().is_zero());
    assert!(!im_partial_test(&jacobi_defect(&b, &[U], &jt).unwrap(), &jt).unwrap());
}

#[test]
fn hamiltonian_map_examples() {
    let jt = jets();
    let b = d1_linear_matrix(&jt).unwrap();
    let id = hamiltonian_map_defect(&[j(U, 0)], &[U], &[U], &b, &b, &jt).unwrap();
    assert!(id.is_zero());

    let clebsch = hamiltonian_map_defect(&[d1_clebsch_image()], &[U], &[PHASE_X, P], &b, &symplectic_matrix(), &jt).unwrap();
    assert!(clebsch.is_zero(), "{clebsch:?}");
    // the opposite sign is not Hamiltonian
    let wrong = hamiltonian_map_defect(&[-&d1_clebsch_image()], &[U], &[PHASE_X, P], &b, &symplectic_matrix(), &jt).unwrap();
    assert!(!wrong.is_zero());

    for lam in [int(0), int(1), int(2), int(-1), frac(1, 2)] {
        let defect = hamiltonian_map_defect(&[j(U, 0).scale(&lam)], &[U], &[U], &b, &b, &jt).unwrap();
        let factor: Scalar = &lam - &(&lam * &lam);
        let pulled = b.substitute(&[(U, j(U, 0).scale(&lam))], &jt).unwrap();
        assert_eq!(pulled, b.scale(&lam));
        assert_eq!(defect, b.scale(&factor));
        assert_eq!(defect.is_zero(), lam == int(0) || lam == int(1));
    }
}

// Random jet polynomials in u, p with orders ≤ 2 and integer exponents ≤ 2.
fn arb_poly(vars: &'static [Var]) -> impl Strategy<Value = DiffPoly> {
    let term = (-3i64..=3, prop::collection::vec((0..vars.len(), 0u32..=2, 1i64..=2), 0..=3));
    prop::collection::vec(term, 1..=4).prop_map(move |terms| {
        let mut out = DiffPoly::zero();
        for (k, factors) in terms {
            let mut t = DiffPoly::int(k);
            for (v, o, e) in factors {
                t = &t * &DiffPoly::jet(vars[v], o).pow(e as u32);
            }
            out = &out + &t;
        }
        out
    })
}

fn arb_op(vars: &'static [Var]) -> impl Strategy<Value = Op> {
    prop::collection::vec((0u32..=3, arb_poly(vars)), 0..=2).prop_map(|cs| {
        cs.into_iter().fold(Op::zero(), |acc, (n, a)| acc.add(&Op::term(a, n)))
    })
}

fn arb_diffop() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(arb_op(&[U, P]), 4).prop_map(|e| {
        DiffOp::from_rows(vec![e[0..2].to_vec(), e[2..4].to_vec()]).unwrap()
    })
}

const UP: &[Var] = &[U, P];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn derivatives_are_exact(f in arb_poly(UP), g in arb_poly(UP)) {
        let jt = jets();
        let df = f.d(&jt).unwrap();
        prop_assert!(im_partial_test(&df, &jt).unwrap());
        prop_assert!(im_partial_test(&(&df + &g.d(&jt).unwrap()), &jt).unwrap());
        // verdict is stable under adding exact terms
        let v = im_partial_test(&f, &jt).unwrap();
        prop_assert_eq!(im_partial_test(&(&f + &g.d(&jt).unwrap()), &jt).unwrap(), v);
    }

    #[test]
    fn leibniz(f in arb_poly(UP), g in arb_poly(UP)) {
        let jt = jets();
        let lhs = (&f * &g).d(&jt).unwrap();
        let rhs = &(&f.d(&jt).unwrap() * &g) + &(&f * &g.d(&jt).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_kills_derivatives(f in arb_poly(UP)) {
        let jt = jets();
        let df = f.d(&jt).unwrap();
        prop_assert!(df.euler(U, &jt).unwrap().is_zero());
        prop_assert!(df.euler(P, &jt).unwrap().is_zero());
    }

    #[test]
    fn adjoint_is_an_antiinvolution(a in arb_op(UP), b in arb_op(UP)) {
        let jt = jets();
        prop_assert_eq!(a.adjoint(&jt).unwrap().adjoint(&jt).unwrap(), a.clone());
        let ab = a.compose(&b, &jt).unwrap().adjoint(&jt).unwrap();
        let ba = b.adjoint(&jt).unwrap().compose(&a.adjoint(&jt).unwrap(), &jt).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn adjoint_moves_across_the_pairing(a in arb_op(UP)) {
        let jt = jets();
        let (phi, psi) = (j(X, 0), j(Y, 0));
        let lhs = &psi * &a.apply(&phi, &jt).unwrap();
        let rhs = &phi * &a.adjoint(&jt).unwrap().apply(&psi, &jt).unwrap();
        prop_assert!(im_partial_test(&(&lhs - &rhs), &jt).unwrap());
    }

    #[test]
    fn frechet_of_variational_derivative_is_self_adjoint(h in arb_poly(UP)) {
        let jt = jets();
        let grad: Vec<DiffPoly> = UP.iter().map(|v| h.euler(*v, &jt).unwrap()).collect();
        let d = DiffOp::frechet(&grad, UP);
        prop_assert_eq!(d.adjoint(&jt).unwrap(), d);
    }

    #[test]
    fn skew_pairing_iff_skew_adjoint(o in arb_diffop()) {
        let jt = jets();
        let a = vec![j(X, 0), j(F, 0)];
        let b = vec![j(Y, 0), j(G, 0)];
        let oa = o.apply(&a, &jt).unwrap();
        let ob = o.apply(&b, &jt).unwrap();
        let form = &pairing(&a, &ob) + &pairing(&b, &oa);
        let skew = o.skew_defect(&jt).unwrap().is_zero();
        prop_assert_eq!(im_partial_test(&form, &jt).unwrap(), skew);
        // the symmetrized part is always skew
        let sym = o.sub(&o.adjoint(&jt).unwrap()).unwrap();
        prop_assert!(sym.skew_defect(&jt).unwrap().is_zero());
    }

    #[test]
    fn evolution_lemma(h in arb_poly(UP), mu in -2i64..=2) {
        let jt = jets();
        let alg = gmu(&int(mu));
        prop_assert!(alg.evolution_defect(&h, &jt).unwrap().iter().all(DiffPoly::is_zero));
    }

    #[test]
    fn evolution_lemma_d1(h in arb_poly(&[U])) {
        let jt = jets();
        prop_assert!(d1().evolution_defect(&h, &jt).unwrap().iter().all(DiffPoly::is_zero));
    }

    #[test]
    fn gmu_jacobi_random_mu(n in -5i64..=5, m in 1i64..=4) {
        let jt = jets();
        prop_assert!(gmu(&frac(n, m)).jacobi_defect(&jt).unwrap().iter().all(DiffPoly::is_zero));
    }
}
