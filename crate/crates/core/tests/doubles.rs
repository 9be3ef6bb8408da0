use num_traits::Zero;
use omatrix_core::doubles::*;
use omatrix_core::exact::{int, Scalar, Tensor};
use omatrix_core::fixtures::{self, sl2};
use omatrix_core::lie::{self, LieAlgebra, Representation};
use omatrix_core::random::Sampler;
use omatrix_core::Error;

/// Crossed bracket written out from its defining formula with the actions
/// expanded into structure constants.
fn oracle_crossed(g: &LieAlgebra, d: &LieAlgebra) -> Tensor {
    let n = g.dim();
    let c = |i: usize, j: usize, k: usize| g.structure().get(&[i, j, k]);
    let e = |i: usize, j: usize, k: usize| d.structure().get(&[i, j, k]);
    let mut t = Tensor::zeros(&[2 * n, 2 * n, 2 * n]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // [e_i, e_j] = c_ij^k e_k ; [e^i, e^j] = d_ij^k e^k
                t.add_at(&[i, j, k], &c(i, j, k));
                t.add_at(&[n + i, n + j, n + k], &e(i, j, k));
                // [e_i, e^j] = -e^j·e_i + e_i·e^j
                // e^j·e_i = -Σ_k d[j,k,i] e_k ;  e_i·e^j = -Σ_k c[i,k,j] e^k
                t.add_at(&[i, n + j, k], &e(j, k, i));
                t.add_at(&[i, n + j, n + k], &-c(i, k, j));
                t.add_at(&[n + j, i, k], &-e(j, k, i));
                t.add_at(&[n + j, i, n + k], &c(i, k, j));
            }
        }
    }
    t
}

fn random_bracket(s: &mut Sampler, n: usize) -> LieAlgebra {
    LieAlgebra::antisymmetric((0..n).map(|i| format!("d{i}")).collect(), s.antisymmetric_bracket(n)).unwrap()
}

#[test]
fn crossed_bracket_matches_oracle() {
    let mut s = Sampler::new(40);
    for g in [sl2(), fixtures::aff1()] {
        for _ in 0..5 {
            let d = random_bracket(&mut s, g.dim());
            let rep = crossed_bracket(&g, &d).unwrap();
            assert_eq!(*rep.double.algebra.structure(), oracle_crossed(&g, &d));
        }
    }
}

#[test]
fn direct_and_quadrilinear_verdicts_agree() {
    let mut s = Sampler::new(41);
    let (mut pass, mut fail) = (0, 0);
    let mut run = |g: &LieAlgebra, d: &LieAlgebra| {
        let rep = crossed_bracket(g, d).unwrap();
        assert_eq!(rep.jacobi.holds, rep.quadrilinear_verdict);
        if rep.jacobi.holds {
            pass += 1;
        } else {
            fail += 1;
        }
    };
    for _ in 0..30 {
        let d = random_bracket(&mut s, 2);
        run(&fixtures::aff1(), &d);
        run(&LieAlgebra::abelian(2), &d);
    }
    for _ in 0..20 {
        let d = random_bracket(&mut s, 3);
        run(&sl2(), &d);
    }
    // brackets induced by Yang-Baxter solutions always give a double
    for k in [1, -1, 2] {
        let r = fixtures::sl2_r_he().scale(&int(k));
        let d = lie::induced_bracket(&sl2(), &Representation::coadjoint(&sl2()), &r).unwrap();
        run(&sl2(), &d);
    }
    assert!(pass > 0 && fail > 0, "pass {pass} fail {fail}");
}

#[test]
fn yang_baxter_doubles_have_invariant_pairing() {
    let g = sl2();
    let d = lie::induced_bracket(&g, &Representation::coadjoint(&g), &fixtures::sl2_r_he()).unwrap();
    let rep = crossed_bracket(&g, &d).unwrap();
    assert!(rep.jacobi.holds);
    assert!(rep.invariance.holds);
}

#[test]
fn crossed_form_is_cocycle_only_for_abelian_pairs() {
    let mut s = Sampler::new(42);
    let ab = LieAlgebra::abelian(2);
    let rep = crossed_bracket(&ab, &ab).unwrap();
    assert!(crossed_symplectic_cocycle(&rep.double).unwrap().holds);
    for _ in 0..10 {
        let d = random_bracket(&mut s, 2);
        for g in [fixtures::aff1(), ab.clone()] {
            let rep = crossed_bracket(&g, &d).unwrap();
            let cocycle = crossed_symplectic_cocycle(&rep.double).unwrap().holds;
            assert_eq!(cocycle, g.is_abelian() && d.is_abelian());
        }
    }
}

#[test]
fn semidirect_criterion_against_direct_cocycle() {
    // coadjoint module of sl2: ρ^d = ad, criterion fails
    let rep = symplectic_cocycle_criterion(&sl2(), &Representation::coadjoint(&sl2())).unwrap();
    assert!(!rep.criterion.holds && !rep.cocycle.holds);
    // commutator algebra of 2x2 matrices with ρ = -L^T: criterion holds
    let a = matrix_algebra(2);
    let lie_a = LieAlgebra::new(a.commutator_algebra().names().to_vec(), a.commutator_algebra().structure().clone()).unwrap();
    let rep = symplectic_cocycle_criterion(&lie_a, &a.dual_left_module()).unwrap();
    assert!(rep.criterion.holds && rep.cocycle.holds);
    // gl2 coadjoint module fails
    let rep = symplectic_cocycle_criterion(&fixtures::gl2(), &Representation::coadjoint(&fixtures::gl2())).unwrap();
    assert!(!rep.criterion.holds && !rep.cocycle.holds);
}

#[test]
fn semidirect_sum_rejects_non_module() {
    let g = sl2();
    let mut chi = Tensor::zeros(&[3, 3, 3]);
    chi.set(&[0, 0, 0], int(1));
    let bad = Representation::unchecked(3, 3, chi).unwrap();
    assert_eq!(semidirect_sum(&g, &bad), Err(Error::NotRepresentation));
}

#[test]
fn matrix_algebra_and_its_doubles_are_quasiassociative() {
    let a = matrix_algebra(2);
    let q = quasiassociative_check(&a).unwrap();
    assert!(q.defect.holds && q.commutator_jacobi);
    let (a1, d1) = symplectic_double(&a).unwrap();
    assert!(quasiassociative_check(&a1).unwrap().defect.holds);
    // the double's Lie algebra is the semidirect sum with -L^T
    let lie_a = LieAlgebra::new(a.commutator_algebra().names().to_vec(), a.commutator_algebra().structure().clone()).unwrap();
    let semi = semidirect_sum(&lie_a, &a.dual_left_module()).unwrap();
    assert_eq!(d1.algebra.structure(), semi.algebra.structure());
    let (a2, _) = symplectic_double(&a1).unwrap();
    assert_eq!(a2.dim(), 16);
    assert!(quasiassociative_check(&a2).unwrap().defect.holds);
}

#[test]
fn non_quasiassociative_product() {
    // e0 e0 = e1, e1 e0 = e0 and nothing else
    let mut m = Tensor::zeros(&[2, 2, 2]);
    m.set(&[0, 0, 1], int(1));
    m.set(&[1, 0, 0], int(1));
    let p = BilinearProduct::new(2, m).unwrap();
    assert!(!quasiassociative_check(&p).unwrap().defect.holds);
}

#[test]
fn o_from_symplectic_doubles() {
    let mut one = Tensor::zeros(&[1, 1, 1]);
    one.set(&[0, 0, 0], int(1));
    for p in [BilinearProduct::new(1, one).unwrap(), matrix_algebra(2)] {
        let (_, d) = symplectic_double(&p).unwrap();
        let rep = o_from_symplectic(&d).unwrap();
        assert!(rep.o.is_skew());
        assert_eq!(rep.o.mul(&rep.o_inverse).unwrap(), omatrix_core::exact::Matrix::identity(2 * p.dim()));
        assert!(rep.o_equation.holds);
        assert!(rep.matches_closed_form);
        assert!(rep.isomorphism);
    }
}

#[test]
fn one_dimensional_double_by_hand() {
    // A = span(x), x x = x. Double basis (x, x*): [x, x*] = x x* = -x*.
    let mut one = Tensor::zeros(&[1, 1, 1]);
    one.set(&[0, 0, 0], int(1));
    let (prod, d) = symplectic_double(&BilinearProduct::new(1, one).unwrap()).unwrap();
    assert_eq!(prod.mul(&[int(1), int(0)], &[int(0), int(1)]), vec![int(0), int(-1)]);
    assert_eq!(prod.mul(&[int(0), int(1)], &[int(1), int(0)]), vec![Scalar::zero(), Scalar::zero()]);
    assert_eq!(d.algebra.bracket(&[int(1), int(0)], &[int(0), int(1)]), vec![int(0), int(-1)]);
}

#[test]
fn o_from_symplectic_refuses_non_cocycle() {
    let d = semidirect_sum(&sl2(), &Representation::coadjoint(&sl2())).unwrap();
    assert!(matches!(o_from_symplectic(&d), Err(Error::Precondition(_))));
}
