use criterion::{criterion_group, criterion_main, Criterion};
use mosaic_core::constructions::build;

fn bench(c: &mut Criterion) {
    for name in ["cubic", "bitruncated_cubic", "prism:snub_square"] {
        c.bench_function(&format!("build + stats, {name}"), |b| b.iter(|| build(name).unwrap().stats()));
    }
    let m = build("bitruncated_cubic").unwrap();
    c.bench_function("measure nij, bitruncated_cubic", |b| b.iter(|| m.measure_nij().unwrap()));
    let mut g = c.benchmark_group("iterates");
    g.sample_size(10);
    g.bench_function("foam:1:bitruncated_cubic", |b| b.iter(|| build("foam:1:bitruncated_cubic").unwrap().stats()));
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
