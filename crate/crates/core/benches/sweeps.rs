//! Randomized sweeps on one thread versus the default pool. Build with
//! `--no-default-features` to time the plain sequential fallback instead.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use omatrix_core::doubles::crossed_bracket;
use omatrix_core::fixtures;
use omatrix_core::lie::{drinfeld_equivalence, LieAlgebra};
use omatrix_core::par;
use omatrix_core::poisson::{jacobi_defect, quadratic_poisson};
use omatrix_core::random::Sampler;

fn drinfeld_sweep(g: &LieAlgebra) -> usize {
    par::map_range(24, |k| {
        let r = Sampler::new(k as u64).nondegenerate_skew(g.dim());
        drinfeld_equivalence(g, &r).map(|d| d.equivalent).unwrap_or(false)
    })
    .into_iter()
    .filter(|b| *b)
    .count()
}

fn crossed_sweep(g: &LieAlgebra) -> usize {
    par::map_range(24, |k| {
        let mut s = Sampler::new(1000 + k as u64);
        let names = (0..g.dim()).map(|i| format!("d{i}")).collect();
        let d = LieAlgebra::antisymmetric(names, s.antisymmetric_bracket(g.dim())).expect("antisymmetric");
        crossed_bracket(g, &d).map(|r| r.jacobi.holds).unwrap_or(false)
    })
    .into_iter()
    .filter(|b| *b)
    .count()
}

fn quadratic_jacobi(g: &LieAlgebra) -> bool {
    let r = omatrix_core::exact::Matrix::chain(&[
        &fixtures::sl2_into_gl2(),
        &fixtures::sl2_r_he(),
        &fixtures::sl2_into_gl2().transpose(),
    ])
    .expect("shapes");
    jacobi_defect(&quadratic_poisson(g, &r).expect("solution")).is_zero()
}

#[cfg(feature = "parallel")]
fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let default = rayon::ThreadPoolBuilder::new().build().expect("pool");
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("pool");
    vec![("1-thread".to_string(), one), (format!("default-{}", default.current_num_threads()), default)]
}

fn sweeps(c: &mut Criterion) {
    let gl2 = fixtures::gl2();
    let sl2 = fixtures::sl2();
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    #[cfg(feature = "parallel")]
    for (label, pool) in pools() {
        group.bench_function(BenchmarkId::new("drinfeld-gl2", &label), |b| b.iter(|| pool.install(|| drinfeld_sweep(&gl2))));
        group.bench_function(BenchmarkId::new("crossed-sl2", &label), |b| b.iter(|| pool.install(|| crossed_sweep(&sl2))));
        group.bench_function(BenchmarkId::new("quadratic-jacobi-gl2", &label), |b| {
            b.iter(|| pool.install(|| quadratic_jacobi(&gl2)))
        });
    }
    #[cfg(not(feature = "parallel"))]
    {
        group.bench_function(BenchmarkId::new("drinfeld-gl2", "sequential"), |b| b.iter(|| drinfeld_sweep(&gl2)));
        group.bench_function(BenchmarkId::new("crossed-sl2", "sequential"), |b| b.iter(|| crossed_sweep(&sl2)));
        group.bench_function(BenchmarkId::new("quadratic-jacobi-gl2", "sequential"), |b| b.iter(|| quadratic_jacobi(&gl2)));
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
