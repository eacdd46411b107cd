use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubicsolve::batch::{solve_batch_sequential, solve_batch_parallel};
use cubicsolve::{GeneralCubic, Method, SolveOptions};

fn random_cubics(n: usize) -> Vec<GeneralCubic> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..n)
        .map(|_| {
            GeneralCubic::monic(
                rng.random_range(-10.0..10.0),
                rng.random_range(-100.0..100.0),
                rng.random_range(-100.0..100.0),
            )
            .unwrap()
        })
        .collect()
}

fn batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_batch");
    for n in [1_000usize, 100_000] {
        let cubics = random_cubics(n);
        for method in [Method::Chen, Method::Cardano, Method::Moebius] {
            let opts = SolveOptions { method, ..Default::default() };
            group.bench_with_input(BenchmarkId::new(format!("sequential/{}", method.as_str()), n), &cubics, |b, cs| {
                b.iter(|| solve_batch_sequential(cs, &opts))
            });
            group.bench_with_input(BenchmarkId::new(format!("parallel/{}", method.as_str()), n), &cubics, |b, cs| {
                b.iter(|| solve_batch_parallel(cs, &opts))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, batch);
criterion_main!(benches);
