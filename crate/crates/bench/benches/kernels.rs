//! Hot-path benchmarks: the counting recursion on dense and structured
//! graphs, the exhaustive labeled-graph scan, and the minor search.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use clique_extremal::analysis::{hadwiger_number, has_minor, MinorSearchBudget};
use clique_extremal::census::{clique_census, count_cliques};
use clique_extremal::construct::{
    construct_extremal_nm, construct_multipartite, construct_stacked_planar, construct_v8,
};
use clique_extremal::graph::Graph;
use clique_extremal::graph6::{decode_graph6, encode_graph6};
use clique_extremal::verify::verify_nm_tightness;

fn bench_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_cliques");
    let cases = [
        ("k16", Graph::complete(16)),
        ("extremal_14_31", construct_extremal_nm(14, 31).unwrap()),
        ("stacked_60", construct_stacked_planar(60).unwrap()),
        ("octahedron_stack", construct_multipartite(&[2; 8]).unwrap()),
    ];
    for (name, graph) in &cases {
        group.bench_function(*name, |b| b.iter(|| count_cliques(black_box(graph))));
    }
    group.bench_function("census_stacked_124", |b| {
        let g = construct_stacked_planar(124).unwrap();
        b.iter(|| clique_census(black_box(&g)))
    });
    group.finish();
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_scan");
    group.sample_size(10);
    group.bench_function("nm_tightness_n6", |b| {
        b.iter(|| verify_nm_tightness(black_box(6)).unwrap())
    });
    group.finish();
}

fn bench_minors(c: &mut Criterion) {
    let budget = MinorSearchBudget::default();
    let mut group = c.benchmark_group("minor_search");
    group.bench_function("v8_no_k5", |b| {
        let v8 = construct_v8();
        let k5 = Graph::complete(5);
        b.iter(|| has_minor(black_box(&v8), black_box(&k5), &budget).unwrap())
    });
    group.bench_function("hadwiger_k2222", |b| {
        let g = construct_multipartite(&[2, 2, 2, 2]).unwrap();
        b.iter(|| hadwiger_number(black_box(&g), &budget).unwrap())
    });
    group.finish();
}

fn bench_graph6(c: &mut Criterion) {
    let g = construct_stacked_planar(124).unwrap();
    let encoded = encode_graph6(&g).unwrap();
    c.bench_function("graph6_round_trip_124", |b| {
        b.iter_batched(
            || encoded.clone(),
            |bytes| decode_graph6(black_box(&bytes)).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_counting,
    bench_scan,
    bench_minors,
    bench_graph6
);
criterion_main!(benches);
