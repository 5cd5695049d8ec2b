use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use toric_core::graver::graver_basis_with;
use toric_core::lawrence::lift;
use toric_core::markov::{minimal_markov_basis_with, DegreeSource};
use toric_core::{Budget, Configuration};

fn strategies() -> [(&'static str, Budget); 2] {
    [("sequential", Budget::sequential()), ("parallel", Budget::default())]
}

fn graver(c: &mut Criterion) {
    let mut group = c.benchmark_group("graver");
    for entries in [[1, 5, 20, 24], [3, 7, 11, 12]] {
        let curve = Configuration::curve(&entries).unwrap();
        for (name, budget) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, format!("{entries:?}")), &curve, |b, curve| {
                b.iter(|| graver_basis_with(curve, &budget).unwrap())
            });
        }
    }
    group.finish();
}

fn lifted_markov(c: &mut Criterion) {
    let mut group = c.benchmark_group("lifted_markov");
    group.sample_size(10);
    let a5 = Configuration::curve(&[1, 5, 20, 24]).unwrap();
    for r in [2, 3] {
        let lifted = lift(&a5, r).unwrap();
        for (name, budget) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, r), &lifted, |b, lifted| {
                b.iter(|| minimal_markov_basis_with(lifted, DegreeSource::Auto, &budget).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, graver, lifted_markov);
criterion_main!(benches);
