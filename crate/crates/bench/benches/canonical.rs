use std::hint::black_box;

use agx_bench::{circulant, extremal_family};
use agx_core::canonical_key;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_key");
    for n in [10, 20, 40] {
        let g = circulant(n);
        group.bench_with_input(BenchmarkId::new("circulant", n), &g, |b, g| {
            b.iter(|| canonical_key(black_box(g)))
        });
    }
    let family = extremal_family(30);
    group.bench_function("extremal_n30", |b| {
        b.iter(|| {
            family
                .iter()
                .map(|g| canonical_key(black_box(g)))
                .collect::<Vec<_>>()
        })
    });
    group.finish();
}

criterion_group!(benches, canonical);
criterion_main!(benches);
