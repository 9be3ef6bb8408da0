//! The ten acceptance criteria, one line of output each. Every comparison
//! is exact and each criterion must finish within ten seconds.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_rational::Rational64;
use num_traits::Zero;
use omatrix_core::clebsch::*;
use omatrix_core::diff::{self, DiffPoly, Jets, P, Q, U, V};
use omatrix_core::doubles::*;
use omatrix_core::exact::{embed_pair, frac, int, mirror, permutation, HSeries, Matrix, Scalar, Slot};
use omatrix_core::fixtures::{self, sl2};
use omatrix_core::lie::{self, LieAlgebra, Representation};
use omatrix_core::poisson::{self, ActionMode, Poly};
use omatrix_core::random::Sampler;
use omatrix_core::yang_baxter::*;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `[r12,r13] + [r12,r23] + [r13,r23]` assembled from placements.
fn classical_oracle(r: &Matrix) -> Matrix {
    let e = |s| embed_pair(r, s).unwrap();
    let (a, b, c) = (e(Slot::S12), e(Slot::S13), e(Slot::S23));
    a.commutator(&b).unwrap().add(&a.commutator(&c).unwrap()).unwrap().add(&b.commutator(&c).unwrap()).unwrap()
}

fn criterion_1() -> Outcome {
    for n in 2..=4 {
        ensure!(check_artin(&permutation(n)).map_err(err)?.holds, "Artin fails for P, n = {n}");
        ensure!(check_qybe(&Matrix::identity(n * n)).map_err(err)?.holds, "QYBE fails for 1, n = {n}");
        ensure!(check_mirror(n).map_err(err)?.holds, "mirror factorizations differ, n = {n}");
        // the mirror reverses the three factors
        let m = mirror(n);
        for (i, j, k) in [(0, 1, 1), (1, 0, n - 1)] {
            let from = (i * n + j) * n + k;
            let to = (k * n + j) * n + i;
            ensure!(m[(to, from)] == int(1), "mirror does not reverse factors, n = {n}");
        }
    }
    let mut s = Sampler::new(101);
    for n in [2, 3] {
        let r = s.matrix(n * n, n * n);
        let expected = classical_oracle(&r);
        for _ in 0..10 {
            let rho = s.matrix(n * n, n * n);
            let series = HSeries::new(Matrix::identity(n * n), r.clone(), rho).map_err(err)?;
            let got = quasiclassical_defect(&series).map_err(err)?;
            ensure!(got == expected, "h² defect differs from c(r), n = {n}");
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let g = sl2();
    let v = fixtures::sl2_fundamental();
    ensure!(g.jacobi_check().holds, "sl2 fails Jacobi");
    let grid = [-1, 0, 1, 2];
    for a in grid {
        for b in grid {
            for o in [fixtures::sl2_o_family_a(&int(a), &int(b)), fixtures::sl2_o_family_b(&int(a), &int(b))] {
                ensure!(lie::o_equation_defect(&g, &v, &o).map_err(err)?.holds, "operator equation fails at ({a},{b})");
                let induced = lie::induced_bracket(&g, &v, &o).map_err(err)?;
                ensure!(induced.jacobi_check().holds, "induced bracket fails Jacobi at ({a},{b})");
            }
        }
    }
    // the two families at unit parameters give [v0,v1] = -2 v1 and 2 v0
    let ia = lie::induced_bracket(&g, &v, &fixtures::sl2_o_family_a(&int(1), &int(0))).map_err(err)?;
    ensure!(ia.bracket(&lie::basis(2, 0), &lie::basis(2, 1)) == vec![int(0), int(-2)], "family a bracket");
    let ib = lie::induced_bracket(&g, &v, &fixtures::sl2_o_family_b(&int(1), &int(0))).map_err(err)?;
    ensure!(ib.bracket(&lie::basis(2, 0), &lie::basis(2, 1)) == vec![int(2), int(0)], "family b bracket");
    for k in grid {
        let r = fixtures::sl2_r_he().scale(&int(k));
        ensure!(lie::induced_cocycle_check(&g, &r).map_err(err)?.holds, "induced cocycle fails for {k} h∧e");
    }
    Ok(())
}

/// `ω([x,y],z) + ω([y,z],x) + ω([z,x],y)` with `ω(a,b) = ⟨O⁻¹ e_a, e_b⟩`,
/// evaluated entry by entry.
fn omega_cocycle_oracle(g: &LieAlgebra, r: &Matrix) -> bool {
    let n = g.dim();
    let w = r.inverse().unwrap();
    let omega = |x: &[Scalar], y: &[Scalar]| -> Scalar {
        let wx = w.apply(x).unwrap();
        wx.iter().zip(y).map(|(a, b)| a * b).sum()
    };
    let e = |i| lie::basis(n, i);
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let t = omega(&g.bracket(&e(a), &e(b)), &e(c))
                    + omega(&g.bracket(&e(b), &e(c)), &e(a))
                    + omega(&g.bracket(&e(c), &e(a)), &e(b));
                t.is_zero()
            })
        })
    })
}

fn criterion_3() -> Outcome {
    let aff2 = fixtures::aff1().direct_sum(&fixtures::aff1());
    let block = Matrix::from_ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let cases: Vec<(LieAlgebra, Vec<Matrix>)> = vec![
        (fixtures::aff1(), vec![Matrix::from_ints(&[&[0, 1], &[-1, 0]])]),
        (fixtures::borel(), vec![]),
        (LieAlgebra::abelian(2), vec![]),
        (fixtures::gl2(), vec![]),
        (aff2, vec![block]),
    ];
    let mut s = Sampler::new(103);
    let (mut solutions, mut non_solutions) = (0, 0);
    for (g, fixed) in &cases {
        let mut rs = fixed.clone();
        rs.extend((0..50).map(|_| s.nondegenerate_skew(g.dim())));
        for r in &rs {
            let rep = lie::drinfeld_equivalence(g, r).map_err(err)?;
            let cybe = lie::cybe_defect(g, r).map_err(err)?.is_zero();
            ensure!(omega_cocycle_oracle(g, r) == cybe, "cocycle ⇔ CYBE fails on {:?}", g.names());
            ensure!(rep.equivalent && rep.cybe.holds == cybe, "engine verdicts disagree on {:?}", g.names());
            if cybe {
                solutions += 1;
            } else {
                non_solutions += 1;
            }
        }
    }
    ensure!(solutions > 0 && non_solutions > 0, "only one outcome seen ({solutions}/{non_solutions})");
    // three-dimensional fixtures: the pairing identity for random skew r
    for g in [sl2(), fixtures::aff1(), fixtures::gl2()] {
        for _ in 0..50 {
            let r = s.skew(g.dim());
            ensure!(lie::pairing_identity(&g, &r).map_err(err)?.holds, "pairing identity fails on {:?}", g.names());
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut s = Sampler::new(104);
    let sl = sl2();
    let gl = fixtures::gl2();
    let aff = fixtures::aff1();
    let r_aff = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
    for _ in 0..20 {
        let phi = lie::random_automorphism(&sl, &mut s, 3).map_err(err)?;
        let rep = lie::push_forward(&phi, &sl, &sl, &fixtures::sl2_r_he()).map_err(err)?;
        ensure!(rep.holds(), "sl2 automorphism push-forward fails");
        // sl2 into gl2 followed by a random conjugation
        let conj = fixtures::gl2_conjugation(&s.invertible(2)).map_err(err)?;
        let into = conj.mul(&fixtures::sl2_into_gl2()).map_err(err)?;
        let rep = lie::push_forward(&into, &sl, &gl, &fixtures::sl2_r_he()).map_err(err)?;
        ensure!(rep.holds(), "sl2 → gl2 push-forward fails");
        let phi = lie::random_automorphism(&aff, &mut s, 3).map_err(err)?;
        let rep = lie::push_forward(&phi, &aff, &aff, &r_aff).map_err(err)?;
        ensure!(rep.holds(), "aff1 push-forward fails");
    }
    Ok(())
}

fn poisson_fixtures() -> Vec<(LieAlgebra, Matrix)> {
    let gl_r =
        Matrix::chain(&[&fixtures::sl2_into_gl2(), &fixtures::sl2_r_he(), &fixtures::sl2_into_gl2().transpose()]).unwrap();
    vec![
        (sl2(), fixtures::sl2_r_he()),
        (fixtures::aff1(), Matrix::from_ints(&[&[0, 1], &[-1, 0]])),
        (fixtures::gl2(), gl_r),
        (fixtures::borel(), Matrix::from_ints(&[&[0, 1], &[-1, 0]])),
    ]
}

fn coboundary(g: &LieAlgebra) -> Matrix {
    let mut b = Matrix::zeros(g.dim(), g.dim());
    for (k, v) in g.structure().iter() {
        if k[2] == 0 {
            b[(k[0], k[1])] = v.clone();
        }
    }
    b
}

fn criterion_5() -> Outcome {
    for (g, r) in poisson_fixtures() {
        let mut brackets = vec![poisson::linear_poisson(&g), poisson::quadratic_poisson(&g, &r).map_err(err)?];
        if r.rank() == g.dim() {
            brackets.push(poisson::constant_poisson(&g, &r, &int(1)).map_err(err)?);
        }
        for p in &brackets {
            ensure!(poisson::jacobi_defect(p).is_zero(), "Jacobi fails on {:?}", g.names());
        }
        for i in 0..brackets.len() {
            for j in i + 1..brackets.len() {
                let d = poisson::compatibility_defect(&brackets[i], &brackets[j]).map_err(err)?;
                ensure!(d.is_zero(), "brackets {i} and {j} incompatible on {:?}", g.names());
            }
        }
        for h in poisson::quadratic_invariants(&g) {
            ensure!(poisson::casimir_defect(&brackets[0], &h).map_err(err)?.is_zero(), "invariant not linear Casimir");
            ensure!(poisson::casimir_defect(&brackets[1], &h).map_err(err)?.is_zero(), "invariant not quadratic Casimir");
        }
    }
    // u_h² + 4 u_e u_f
    let u = |i| Poly::var(3, i);
    let c = &(&u(0) * &u(0)) + &(&u(1) * &u(2)).scale(&int(4));
    let lin = poisson::linear_poisson(&sl2());
    ensure!(poisson::casimir_defect(&lin, &c).map_err(err)?.is_zero(), "sl2 Casimir fails");
    ensure!(!poisson::casimir_defect(&lin, &(&u(0) * &u(0))).map_err(err)?.is_zero(), "u_h² taken for a Casimir");
    Ok(())
}

fn criterion_6() -> Outcome {
    for (g, r) in poisson_fixtures() {
        let lin = poisson::linear_poisson(&g);
        let d = poisson::infinitesimal_action_defect(&g, &lin, &ActionMode::Linear).map_err(err)?;
        ensure!(d.is_zero(), "linear mode fails on {:?}", g.names());
        let b = coboundary(&g);
        let aff = poisson::affine_poisson(&g, &b).map_err(err)?;
        let d = poisson::infinitesimal_action_defect(&g, &aff, &ActionMode::Affine(b)).map_err(err)?;
        ensure!(d.is_zero(), "affine mode fails on {:?}", g.names());
        let quad = poisson::quadratic_poisson(&g, &r).map_err(err)?;
        let d = poisson::infinitesimal_action_defect(&g, &quad, &ActionMode::Quadratic(r.clone())).map_err(err)?;
        ensure!(d.is_zero(), "quadratic mode fails on {:?}", g.names());
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let (g, v, r) = (sl2(), fixtures::sl2_fundamental(), fixtures::sl2_r_he());
    let phi = clebsch_map(&g, &v).map_err(err)?;
    let sym = symplectic_bracket(v.dim());
    let lin = poisson::linear_poisson(&g);
    ensure!(hamiltonian_map_defect(&phi.images, &lin, &sym).map_err(err)?.is_zero(), "linear → symplectic fails");
    let quad = poisson::quadratic_poisson(&g, &r).map_err(err)?;
    let phase = quadratic_phase_bracket(&g, &v, &r).map_err(err)?;
    ensure!(hamiltonian_map_defect(&phi.images, &quad, &phase).map_err(err)?.is_zero(), "quadratic → phase fails");
    ensure!(poisson::jacobi_defect(&phase).is_zero(), "phase bracket fails Jacobi");
    ensure!(poisson::compatibility_defect(&phase, &sym).map_err(err)?.is_zero(), "phase bracket incompatible");
    ensure!(phase_action_defect(&g, &v, &r).map_err(err)?.is_zero(), "phase action criterion fails");
    ensure!(swap_symmetry_defect(&g, &v, &r).map_err(err)?.is_zero(), "x ↔ p symmetry fails");
    // the swap really changes the module: χ^d differs from χ but the family is closed
    let dual = dual_representation(&v);
    ensure!(quadratic_phase_bracket(&g, &dual, &r).is_ok(), "phase bracket of the dual module");
    Ok(())
}

fn criterion_8() -> Outcome {
    let jets = Jets::default();
    let j = DiffPoly::jet;
    for mu in [int(0), int(1), frac(1, 2)] {
        ensure!(diff::gmu(&mu).jacobi_defect(&jets).map_err(err)?.iter().all(DiffPoly::is_zero), "G({mu}) Jacobi");
        ensure!(diff::gmu_cocycle_checks(&mu, &jets).map_err(err)?.holds, "cocycles on G({mu})");
        for eps in [int(0), int(2), frac(-1, 3)] {
            ensure!(diff::gmu_o_checks(&mu, &eps, &jets).map_err(err)?.holds(), "O checks at ({mu},{eps})");
            let rep = diff::gmu_dual_bracket(&mu, &eps, &jets).map_err(err)?;
            ensure!(rep.matches, "dual bracket is not G(ε-μ) at ({mu},{eps})");
            ensure!(rep.coefficient == &eps - &mu, "coefficient at ({mu},{eps})");
            let k = &eps - &mu;
            let inner = &(&(&j(P, 0) * &j(V, 0)) - &(&j(Q, 0) * &j(U, 0)))
                + &(&(&j(P, 1) * &j(Q, 2)) - &(&j(P, 2) * &j(Q, 1))).scale(&k);
            let expected = vec![inner.d(&jets).map_err(err)?, &(&j(P, 0) * &j(Q, 1)) - &(&j(P, 1) * &j(Q, 0))];
            ensure!(rep.bracket == expected, "dual bracket transcription at ({mu},{eps})");
        }
    }
    let sqrt = DiffPoly::jet_pow(U, 0, Rational64::new(1, 2));
    ensure!(diff::d1_casimir_check(&sqrt, &jets).map_err(err)?, "√u is not a Casimir");
    ensure!(!diff::d1_casimir_check(&j(U, 0), &jets).map_err(err)?, "u taken for a Casimir");
    for (mu, eps) in [(int(0), int(0)), (int(1), int(2)), (frac(1, 2), int(1))] {
        let rep = diff::gmu_hamiltonian_triple(&mu, &eps, &jets).map_err(err)?;
        ensure!(rep.holds(), "triple at ({mu},{eps})");
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut s = Sampler::new(109);
    let (mut doubles, mut non_doubles) = (0, 0);
    let random_dual = |s: &mut Sampler, n: usize| {
        LieAlgebra::antisymmetric((0..n).map(|i| format!("d{i}")).collect(), s.antisymmetric_bracket(n)).unwrap()
    };
    for k in 0..60 {
        let (g, d) = match k % 3 {
            0 => (sl2(), random_dual(&mut s, 3)),
            1 => (fixtures::aff1(), random_dual(&mut s, 2)),
            _ => (LieAlgebra::abelian(2), random_dual(&mut s, 2)),
        };
        let rep = crossed_bracket(&g, &d).map_err(err)?;
        ensure!(rep.jacobi.holds == rep.quadrilinear_verdict, "direct and quadrilinear verdicts differ");
        if rep.jacobi.holds {
            doubles += 1;
        } else {
            non_doubles += 1;
        }
        let cocycle = crossed_symplectic_cocycle(&rep.double).map_err(err)?.holds;
        ensure!(cocycle == (g.is_abelian() && d.is_abelian()), "crossed cocycle ⇔ abelian fails");
    }
    ensure!(doubles > 0 && non_doubles > 0, "only one verdict seen ({doubles}/{non_doubles})");
    let ab = LieAlgebra::abelian(2);
    let rep = crossed_bracket(&ab, &ab).map_err(err)?;
    ensure!(crossed_symplectic_cocycle(&rep.double).map_err(err)?.holds, "abelian pair is not symplectic");

    let a = matrix_algebra(2);
    let comm = a.commutator_algebra();
    let lie_a = LieAlgebra::new(comm.names().to_vec(), comm.structure().clone()).map_err(err)?;
    let modules: Vec<(LieAlgebra, Representation)> = vec![
        (sl2(), Representation::coadjoint(&sl2())),
        (sl2(), Representation::adjoint(&sl2())),
        (fixtures::gl2(), Representation::coadjoint(&fixtures::gl2())),
        (lie_a, a.dual_left_module()),
    ];
    let mut criterion_true = 0;
    for (g, rho) in &modules {
        let rep = symplectic_cocycle_criterion(g, rho).map_err(err)?;
        ensure!(rep.criterion.holds == rep.cocycle.holds, "criterion disagrees with the direct cocycle");
        criterion_true += usize::from(rep.criterion.holds);
    }
    ensure!(criterion_true > 0, "criterion never holds");

    let q = quasiassociative_check(&a).map_err(err)?;
    ensure!(q.defect.holds && q.commutator_jacobi, "2x2 matrices are not quasiassociative");
    let (prod, double) = symplectic_double(&a).map_err(err)?;
    ensure!(quasiassociative_check(&prod).map_err(err)?.defect.holds, "double is not quasiassociative");
    let o = o_from_symplectic(&double).map_err(err)?;
    ensure!(o.o.is_skew() && o.o_equation.holds, "operator of the double");
    ensure!(o.matches_closed_form && o.isomorphism, "self-duality isomorphism fails");
    Ok(())
}

fn run_fixture(name: &str, json: &std::path::Path) -> Result<i32, String> {
    let status = Command::new(env!("CARGO_BIN_EXE_omatrix"))
        .args(["run", "--fixture", name, "--json"])
        .arg(json)
        .stdout(std::process::Stdio::null())
        .status()
        .map_err(err)?;
    status.code().ok_or_else(|| "killed by a signal".to_string())
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(err)?;
    for name in ["sl2", "gmu", "gl2-double", "clebsch-sl2"] {
        let (a, b) = (dir.path().join(format!("{name}-a.json")), dir.path().join(format!("{name}-b.json")));
        ensure!(run_fixture(name, &a)? == 0, "{name} does not exit 0");
        ensure!(run_fixture(name, &b)? == 0, "{name} does not exit 0 on the second run");
        let (x, y) = (std::fs::read(&a).map_err(err)?, std::fs::read(&b).map_err(err)?);
        ensure!(x == y, "{name} reports differ between runs");
    }
    let bad = dir.path().join("bad.json");
    let text = omatrix_cli::fixture("sl2").map_err(err)?.replacen("\"value\": \"2\"", "\"value\": \"2/0\"", 1);
    std::fs::write(&bad, text).map_err(err)?;
    let code = Command::new(env!("CARGO_BIN_EXE_omatrix"))
        .arg("run")
        .arg(&bad)
        .output()
        .map_err(err)?
        .status
        .code();
    ensure!(code == Some(2), "corrupted manifest exits {code:?}");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Yang-Baxter suite", criterion_1),
        ("sl2 fixture", criterion_2),
        ("Drinfeld equivalence", criterion_3),
        ("naturality", criterion_4),
        ("Poisson suite", criterion_5),
        ("infinitesimal action", criterion_6),
        ("Clebsch suite", criterion_7),
        ("differential suite", criterion_8),
        ("doubles suite", criterion_9),
        ("command line", criterion_10),
    ];
    let budget = Duration::from_secs(10);
    let mut failed = 0;
    for (k, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if took <= budget {
                Ok(())
            } else {
                Err(format!("took {took:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {label} ({} ms)", k + 1, took.as_millis()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {label} ({} ms): {why}", k + 1, took.as_millis());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
