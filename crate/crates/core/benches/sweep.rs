use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superjt::sweep::{verify_sweep, verify_sweep_sequential};

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_sweep");
    group.sample_size(10);
    for (m, bound) in [(2usize, 3i64), (3, 2)] {
        let id = format!("m{m}_b{bound}");
        group.bench_with_input(BenchmarkId::new("sequential", &id), &(m, bound), |b, &(m, bound)| {
            b.iter(|| verify_sweep_sequential(m, bound))
        });
        group.bench_with_input(BenchmarkId::new("parallel", &id), &(m, bound), |b, &(m, bound)| {
            b.iter(|| verify_sweep(m, bound))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
