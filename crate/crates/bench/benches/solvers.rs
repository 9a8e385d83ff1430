use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use facet_core::discharging::audit;
use facet_core::embedding::generate::{cycle, prism, random_plane, subdivided_k4};
use facet_core::facial_coloring::{chromatic_index, conflict_graph, SolverOptions};
use facet_core::nullstellensatz::{coefficient, cn_witness, lemma_polynomial, LemmaId};

fn nullstellensatz(c: &mut Criterion) {
    let mut group = c.benchmark_group("coefficient");
    group.sample_size(10);
    for id in LemmaId::ALL {
        let poly = lemma_polynomial(id);
        group.bench_with_input(BenchmarkId::from_parameter(id), &poly, |b, poly| {
            b.iter(|| coefficient(black_box(&poly.pairs), black_box(&poly.target)).unwrap())
        });
    }
    group.finish();

    let poly = lemma_polynomial(LemmaId::NineFace);
    c.bench_function("witness/nine-face", |b| b.iter(|| cn_witness(black_box(&poly.pairs), &poly.caps).unwrap()));
}

fn chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic_index");
    let options = SolverOptions::default();
    let graphs = [
        ("cycle-8", cycle(8).unwrap()),
        ("cycle-14", cycle(14).unwrap()),
        ("prism-5", prism(5).unwrap()),
        ("subdivided-k4-3", subdivided_k4(3).unwrap()),
    ];
    for (name, g) in &graphs {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| {
            b.iter(|| chromatic_index(black_box(g), 3, &options).unwrap())
        });
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let g = random_plane(7, 30);
    c.bench_function("conflict_graph/random-30", |b| b.iter(|| conflict_graph(black_box(&g), 3).unwrap()));
    c.bench_function("audit/random-30", |b| b.iter(|| audit(black_box(&g)).unwrap()));
}

criterion_group!(benches, nullstellensatz, chromatic, construction);
criterion_main!(benches);
