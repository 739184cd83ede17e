use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use permcut::graph::named::{complete, petersen};
use permcut::solvers::{max_cut_exact, max_cut_local, max_cut_local_sequential};
use permcut_bench::scaled;

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.bench_function("petersen", |b| b.iter(|| max_cut_exact(black_box(&petersen()), 30)));
    group.sample_size(10);
    let gadget = permcut::GadgetSpec::new(permcut::GadgetOwner::Vertex(1), 8, 3).expect("gadget").direct_graph();
    group.bench_function("gadget_8_3", |b| b.iter(|| max_cut_exact(&gadget.graph, 30)));
    group.finish();
}

fn local(c: &mut Criterion) {
    let mut group = c.benchmark_group("local");
    group.sample_size(10);
    for scale in [1u64, 3] {
        let g = scaled(&complete(4), scale).realize().graph;
        group.bench_with_input(BenchmarkId::new("parallel", scale), &g, |b, g| b.iter(|| max_cut_local(g, 0, 8)));
        group.bench_with_input(BenchmarkId::new("sequential", scale), &g, |b, g| {
            b.iter(|| max_cut_local_sequential(g, 0, 8))
        });
    }
    group.finish();
}

criterion_group!(benches, exact, local);
criterion_main!(benches);
