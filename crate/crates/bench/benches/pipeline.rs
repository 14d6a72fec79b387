use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pdet_bench::seeded_matrix;
use pdet_core::{
    char_poly, classical_det, clique_complex, dirac_operator, minor_pair_sum, pseudo_det,
    pseudo_inverse, rooted_forest_count, spanning_tree_count, Graph, DEFAULT_SIMPLEX_BUDGET,
};

fn bench_char_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly");
    for n in [6usize, 12, 18] {
        let a = seeded_matrix(1, n, n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| char_poly(a).unwrap())
        });
    }
    group.finish();
}

fn bench_classical_det(c: &mut Criterion) {
    let a = seeded_matrix(2, 12, 12, 4);
    c.bench_function("classical_det 12x12", |b| {
        b.iter(|| classical_det(&a).unwrap())
    });
}

fn bench_minor_pair_sum(c: &mut Criterion) {
    let f = seeded_matrix(3, 8, 8, 4);
    let g = seeded_matrix(4, 8, 8, 4);
    c.bench_function("minor_pair_sum 8x8 k=4", |b| {
        b.iter(|| minor_pair_sum(&f, &g, 4).unwrap())
    });
}

fn bench_pseudo_inverse(c: &mut Criterion) {
    let a = seeded_matrix(5, 8, 8, 4);
    c.bench_function("pseudo_inverse 8x8", |b| b.iter(|| pseudo_inverse(&a)));
}

fn bench_graph_counts(c: &mut Criterion) {
    let k6 = Graph::complete(6);
    c.bench_function("spanning_tree_count K6", |b| {
        b.iter(|| spanning_tree_count(&k6).unwrap())
    });
    let c8 = Graph::cycle(8);
    c.bench_function("rooted_forest_count C8", |b| {
        b.iter(|| rooted_forest_count(&c8))
    });
}

fn bench_dirac(c: &mut Criterion) {
    let g = Graph::cycle(6);
    c.bench_function("dirac pseudo_det C6", |b| {
        b.iter(|| {
            let complex = clique_complex(&g, DEFAULT_SIMPLEX_BUDGET).unwrap();
            pseudo_det(&dirac_operator(&complex)).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_char_poly,
    bench_classical_det,
    bench_minor_pair_sum,
    bench_pseudo_inverse,
    bench_graph_counts,
    bench_dirac
);
criterion_main!(benches);
