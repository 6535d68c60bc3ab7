use agx_core::{enumerate, EnumOptions, EnumSpec};
use criterion::{criterion_group, criterion_main, Criterion};

fn enumeration(c: &mut Criterion) {
    let opts = EnumOptions::default();
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("chemical_8_8", |b| {
        b.iter(|| enumerate(&EnumSpec::chemical(8, 8), &opts).unwrap().len())
    });
    group.bench_function("chemical_10_9", |b| {
        b.iter(|| enumerate(&EnumSpec::chemical(10, 9), &opts).unwrap().len())
    });
    group.bench_function("gnm_12_20", |b| {
        b.iter(|| enumerate(&EnumSpec::gnm(12, 20), &opts).unwrap().len())
    });
    group.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
