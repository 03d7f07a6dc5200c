use criterion::{criterion_group, criterion_main, Criterion};

use qcocycle::chain::{quandle_homology, HomologyCoefficients};
use qcocycle::cocycle::{theta, ThetaVariant};
use qcocycle::knot::{builtin, enumerate_arc_colorings, shadow_cocycle_invariant, torus_2p};
use qcocycle::par;
use qcocycle::quandle::FiniteQuandle;

fn invariant(c: &mut Criterion) {
    let d = torus_2p(9).unwrap();
    let q = FiniteQuandle::dihedral(9).unwrap();
    let th = theta(9, ThetaVariant::Double).unwrap();
    let mut g = c.benchmark_group("torus9_shadow_invariant");
    g.bench_function("parallel", |b| b.iter(|| shadow_cocycle_invariant(&d, &q, &th).unwrap()));
    g.bench_function("sequential", |b| b.iter(|| par::sequential(|| shadow_cocycle_invariant(&d, &q, &th).unwrap())));
    g.finish();
}

fn colorings(c: &mut Criterion) {
    let d = builtin("fig8_r2").unwrap();
    let q = FiniteQuandle::dihedral(5).unwrap();
    let mut g = c.benchmark_group("fig8_r2_colorings");
    g.bench_function("parallel", |b| b.iter(|| enumerate_arc_colorings(&d, &q)));
    g.bench_function("sequential", |b| b.iter(|| par::sequential(|| enumerate_arc_colorings(&d, &q))));
    g.finish();
}

fn homology(c: &mut Criterion) {
    let q = FiniteQuandle::dihedral(5).unwrap();
    let mut g = c.benchmark_group("r5_homology_f5");
    g.sample_size(10);
    g.bench_function("parallel", |b| b.iter(|| quandle_homology(&q, 3, HomologyCoefficients::Field(5)).unwrap()));
    g.bench_function("sequential", |b| {
        b.iter(|| par::sequential(|| quandle_homology(&q, 3, HomologyCoefficients::Field(5)).unwrap()))
    });
    g.finish();
}

criterion_group!(benches, invariant, colorings, homology);
criterion_main!(benches);
