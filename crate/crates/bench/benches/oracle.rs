use criterion::{criterion_group, criterion_main, Criterion};

use antimagic_bench::oracle_cases;
use antimagic_core::oracle::exact_chi_la;

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact chi_la");
    group.sample_size(10);
    for (name, g) in oracle_cases() {
        group.bench_function(name, |b| b.iter(|| exact_chi_la(&g, 9)));
    }
    group.finish();
}

criterion_group!(benches, oracle);
criterion_main!(benches);
