use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::rngs::StdRng;
use rand::SeedableRng;

use semitop::random::random_space;
use semitop::{fixtures, fr, PointSet, Semitopology, DEFAULT_OPENS_CAP};

fn spaces(n: usize, count: usize) -> Vec<Semitopology> {
    let mut rng = StdRng::seed_from_u64(n as u64);
    (0..count).map(|_| random_space(&mut rng, n, 8)).collect()
}

fn union_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("union_closure");
    for n in [8, 16, 32] {
        let mut rng = StdRng::seed_from_u64(1);
        let gens: Vec<PointSet> = (0..10).map(|_| semitop::random::random_subset(&mut rng, n, 0.3)).collect();
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &gens, |b, gens| {
            b.iter(|| Semitopology::from_generator_sets(names.clone(), gens.clone(), DEFAULT_OPENS_CAP).unwrap())
        });
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_all");
    for n in [4, 6, 8] {
        let batch = spaces(n, 16);
        group.bench_with_input(BenchmarkId::from_parameter(n), &batch, |b, batch| {
            b.iter(|| batch.iter().map(|s| black_box(s.classify_all()).len()).sum::<usize>())
        });
    }
    group.bench_function("MAJ6", |b| {
        let s = fixtures::maj6();
        b.iter(|| black_box(s.classify_all()))
    });
    group.finish();
}

fn abstract_points(c: &mut Criterion) {
    let mut group = c.benchmark_group("abstract_points");
    for n in [4, 6, 8] {
        let frames: Vec<_> = spaces(n, 16).iter().map(fr).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &frames, |b, frames| {
            b.iter(|| frames.iter().map(|x| black_box(x.abstract_points()).len()).sum::<usize>())
        });
    }
    group.finish();
}

criterion_group!(benches, union_closure, classification, abstract_points);
criterion_main!(benches);
