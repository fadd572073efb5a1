use criterion::{criterion_group, criterion_main, Criterion};
use mpl_relations::{all_families, build_matrix, quotient_dim, Mode, Query};

fn query() -> Query {
    Query { level: 7, weight: 3, depth: Some(3), mode: Mode::DepthGraded, families: all_families() }
}

fn bench_rank(c: &mut Criterion) {
    let q = query();
    let m = build_matrix(&q, &mut vec![]).unwrap();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let mut g = c.benchmark_group("rank_n7_w3_m3");
    g.sample_size(10);
    g.bench_function("one_thread", |b| b.iter(|| single.install(|| m.rank())));
    g.bench_function("default_pool", |b| b.iter(|| m.rank()));
    g.finish();

    let mut g = c.benchmark_group("dims_n7_w3_m3");
    g.sample_size(10);
    g.bench_function("one_thread", |b| b.iter(|| single.install(|| quotient_dim(&q).unwrap())));
    g.bench_function("default_pool", |b| b.iter(|| quotient_dim(&q).unwrap()));
    g.finish();
}

criterion_group!(benches, bench_rank);
criterion_main!(benches);
