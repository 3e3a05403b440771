use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mengerian::graph::make_family;
use mengerian::ideal::is_normally_torsion_free;
use mengerian::linalg::{covering_polyhedron_vertices, is_totally_unimodular};
use mengerian::{
    build_path_hypergraph, cross_check, enumerate_connected, Clutter, PathHypergraphSpec,
    SurveyOptions,
};
use rayon::{ThreadPool, ThreadPoolBuilder};

fn h3(name: &str, p: &[usize]) -> Clutter {
    build_path_hypergraph(
        &make_family(name, p).unwrap(),
        PathHypergraphSpec::new(3).unwrap(),
    )
}

fn pools() -> Vec<(String, ThreadPool)> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut out = vec![(
        "1-thread".to_string(),
        ThreadPoolBuilder::new().num_threads(1).build().unwrap(),
    )];
    if threads > 1 {
        out.push((
            format!("{threads}-threads"),
            ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap(),
        ));
    }
    out
}

fn bench_survey(c: &mut Criterion) {
    let mut group = c.benchmark_group("survey_n4_6");
    group.sample_size(10);
    let opts = SurveyOptions {
        n_min: 4,
        n_max: 6,
        ..Default::default()
    };
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(&name), |b| {
            b.iter(|| pool.install(|| black_box(cross_check(&opts).unwrap())))
        });
    }
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_n6");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(&name), |b| {
            b.iter(|| pool.install(|| black_box(enumerate_connected(6).unwrap())))
        });
    }
    group.finish();
}

fn bench_tu(c: &mut Criterion) {
    let mut group = c.benchmark_group("tu_scan");
    let inputs = [
        ("path9", h3("path", &[9])),
        ("double_star_3_3", h3("double_star", &[3, 3])),
    ];
    for (label, clutter) in &inputs {
        let a = clutter.incidence_matrix();
        for (name, pool) in pools() {
            group.bench_function(BenchmarkId::new(*label, &name), |b| {
                b.iter(|| pool.install(|| black_box(is_totally_unimodular(&a).unwrap())))
            });
        }
    }
    group.finish();
}

fn bench_vertices(c: &mut Criterion) {
    let mut group = c.benchmark_group("polyhedron_vertices");
    group.sample_size(10);
    for k in [8, 10] {
        let a = h3("cycle", &[k]).incidence_matrix();
        for (name, pool) in pools() {
            group.bench_function(BenchmarkId::new(format!("cycle{k}"), &name), |b| {
                b.iter(|| pool.install(|| black_box(covering_polyhedron_vertices(&a).unwrap())))
            });
        }
    }
    group.finish();
}

fn bench_ntf(c: &mut Criterion) {
    let mut group = c.benchmark_group("ntf_cycle8");
    group.sample_size(10);
    let clutter = h3("cycle", &[8]);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(&name), |b| {
            b.iter(|| pool.install(|| black_box(is_normally_torsion_free(&clutter).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_survey,
    bench_enumerate,
    bench_tu,
    bench_vertices,
    bench_ntf
);
criterion_main!(benches);
