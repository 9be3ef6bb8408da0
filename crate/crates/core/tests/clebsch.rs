use omatrix_core::clebsch::*;
use omatrix_core::exact::{int, Matrix, Scalar};
use omatrix_core::fixtures::{self, sl2};
use omatrix_core::lie::{self, LieAlgebra, Representation};
use omatrix_core::poisson::{compatibility_defect, jacobi_defect, linear_poisson, quadratic_poisson, Poly};
use omatrix_core::random::Sampler;
use proptest::prelude::*;

fn cases() -> Vec<(LieAlgebra, Representation, Matrix)> {
    let gl_r = Matrix::chain(&[&fixtures::sl2_into_gl2(), &fixtures::sl2_r_he(), &fixtures::sl2_into_gl2().transpose()]).unwrap();
    vec![
        (sl2(), fixtures::sl2_fundamental(), fixtures::sl2_r_he()),
        (sl2(), Representation::adjoint(&sl2()), fixtures::sl2_r_he().scale(&int(-2))),
        (fixtures::gl2(), fixtures::gl2_fundamental(), gl_r),
    ]
}

fn pairing(a: &[Scalar], r: &Matrix, b: &[Scalar]) -> Scalar {
    let rb = r.apply(b).unwrap();
    a.iter().zip(rb).map(|(x, y)| x * y).sum()
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    lie::basis(n, i)
}

#[test]
fn phase_bracket_agrees_with_moment_map_pairings_pointwise() {
    let mut s = Sampler::new(31);
    for (alg, rep, r) in cases() {
        let n = rep.dim();
        let b = quadratic_phase_bracket(&alg, &rep, &r).unwrap();
        for _ in 0..5 {
            let x = s.vector(n);
            let p = s.vector(n);
            let pt: Vec<Scalar> = x.iter().chain(&p).cloned().collect();
            for a in 0..n {
                for c in 0..n {
                    let xa = nabla(&rep, &x, &unit(n, a));
                    let xc = nabla(&rep, &x, &unit(n, c));
                    let pa = nabla(&rep, &unit(n, a), &p);
                    let pc = nabla(&rep, &unit(n, c), &p);
                    assert_eq!(b.entry(a, c).eval(&pt), pairing(&xa, &r, &xc));
                    assert_eq!(b.entry(n + a, n + c).eval(&pt), pairing(&pa, &r, &pc));
                    assert_eq!(b.entry(n + a, c).eval(&pt), -pairing(&pa, &r, &xc));
                }
            }
        }
    }
}

#[test]
fn clebsch_maps_are_hamiltonian() {
    for (alg, rep, r) in cases() {
        let phi = clebsch_map(&alg, &rep).unwrap();
        let sym = symplectic_bracket(rep.dim());
        assert!(hamiltonian_map_defect(&phi.images, &linear_poisson(&alg), &sym).unwrap().is_zero());
        let quad = quadratic_poisson(&alg, &r).unwrap();
        let phase = quadratic_phase_bracket(&alg, &rep, &r).unwrap();
        assert!(hamiltonian_map_defect(&phi.images, &quad, &phase).unwrap().is_zero());
        // the linear bracket does not map to the quadratic one
        assert!(!hamiltonian_map_defect(&phi.images, &linear_poisson(&alg), &phase).unwrap().is_zero());
    }
}

#[test]
fn phase_bracket_jacobi_and_compatibility() {
    for (alg, rep, r) in cases() {
        let phase = quadratic_phase_bracket(&alg, &rep, &r).unwrap();
        assert!(jacobi_defect(&phase).is_zero());
        assert!(compatibility_defect(&phase, &symplectic_bracket(rep.dim())).unwrap().is_zero());
    }
}

#[test]
fn natural_action_satisfies_criterion() {
    for (alg, rep, r) in cases() {
        assert!(phase_action_defect(&alg, &rep, &r).unwrap().is_zero());
    }
}

#[test]
fn position_momentum_symmetry() {
    for (alg, rep, r) in cases() {
        assert!(swap_symmetry_defect(&alg, &rep, &r).unwrap().is_zero());
        assert_eq!(dual_representation(&rep).dual(), rep);
    }
}

#[test]
fn doubled_module_reproduces_all_blocks() {
    for (alg, rep, r) in cases() {
        let n = rep.dim();
        let doubled = rep.direct_sum(&rep.dual()).unwrap();
        let big = quadratic_phase_bracket(&alg, &doubled, &r).unwrap();
        let small = quadratic_phase_bracket(&alg, &rep, &r).unwrap();
        // positions of the doubled module are (x, p); drop its momenta
        let restrict: Vec<Poly> =
            (0..4 * n).map(|i| if i < 2 * n { Poly::var(2 * n, i) } else { Poly::zero(2 * n) }).collect();
        for i in 0..2 * n {
            for j in 0..2 * n {
                assert_eq!(big.entry(i, j).substitute(&restrict), *small.entry(i, j));
            }
        }
    }
}

#[test]
fn moment_map_leibniz_rule() {
    let mut s = Sampler::new(32);
    for (alg, rep, _) in cases() {
        let co = Representation::coadjoint(&alg);
        let dual = rep.dual();
        for _ in 0..10 {
            let (x, v, w) = (s.vector(alg.dim()), s.vector(rep.dim()), s.vector(rep.dim()));
            let lhs = co.act(&x, &nabla(&rep, &v, &w));
            let r1 = nabla(&rep, &rep.act(&x, &v), &w);
            let r2 = nabla(&rep, &v, &dual.act(&x, &w));
            let rhs: Vec<Scalar> = r1.iter().zip(&r2).map(|(a, b)| a + b).collect();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn phase_bracket_needs_operator_equation() {
    let bad = Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]]);
    assert!(quadratic_phase_bracket(&sl2(), &fixtures::sl2_fundamental(), &bad).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn clebsch_map_respects_products(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed);
        let alg = sl2();
        let phi = clebsch_map(&alg, &fixtures::sl2_fundamental()).unwrap();
        let lin = linear_poisson(&alg);
        let f = Poly::linear(&s.vector(3));
        let g = &Poly::linear(&s.vector(3)) * &Poly::linear(&s.vector(3));
        let lhs = phi.apply(&lin.bracket(&f, &g));
        let rhs = symplectic_bracket(2).bracket(&phi.apply(&f), &phi.apply(&g));
        prop_assert!((&lhs - &rhs).is_zero());
    }
}
