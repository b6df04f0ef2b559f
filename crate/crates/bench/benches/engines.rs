use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ghilb::constellation::distinguished_constellation;
use ghilb::groebner::{buchberger, enumerate_fan, lattice_ideal, TermOrder};
use ghilb::hilbert_scheme::{chart_semigroup, initial_cluster};
use ghilb::polyhedral::hilbert_basis;
use ghilb::reproduce::data;
use ghilb::{RatVec, ThetaParam};
use ghilb_bench::{g55556, z11, z14};

fn lattice_ideals(c: &mut Criterion) {
    let z14 = z14();
    let g = g55556();
    c.bench_function("lattice_ideal z14", |b| b.iter(|| lattice_ideal(black_box(z14.lattice())).unwrap()));
    c.bench_function("lattice_ideal (Z/5)^4", |b| b.iter(|| lattice_ideal(black_box(g.lattice())).unwrap()));
}

fn weighted_buchberger(c: &mut Criterion) {
    let g = g55556();
    let im = lattice_ideal(g.lattice()).unwrap();
    let order = TermOrder::from_ints(&data::G55556_WEIGHT).unwrap();
    c.bench_function("buchberger (Z/5)^4 at w", |b| b.iter(|| buchberger(black_box(&im), &order).unwrap()));
}

fn fan(c: &mut Criterion) {
    let z14 = z14();
    let im = lattice_ideal(z14.lattice()).unwrap();
    let mut group = c.benchmark_group("fan");
    group.sample_size(10);
    group.bench_function("z14", |b| b.iter(|| enumerate_fan(black_box(&im), None).unwrap()));
    group.finish();
}

fn constellation(c: &mut Criterion) {
    let z11 = z11();
    let theta = ThetaParam::from_ints(&data::Z11_THETA).unwrap();
    let w = RatVec::from_ints(&data::Z11_WEIGHT);
    c.bench_function("distinguished constellation z11", |b| {
        b.iter(|| distinguished_constellation(&z11, black_box(&theta), black_box(&w)).unwrap())
    });
}

fn hilbert(c: &mut Criterion) {
    let g = g55556();
    let im = lattice_ideal(g.lattice()).unwrap();
    let w = RatVec::from_ints(&data::G55556_WEIGHT);
    let (cluster, _) = initial_cluster(&im, &g, &w).unwrap();
    let gens = chart_semigroup(&cluster, &g, &w).unwrap().gens();
    let mut group = c.benchmark_group("hilbert_basis");
    group.sample_size(10);
    group.bench_function("(Z/5)^4 chart", |b| b.iter(|| hilbert_basis(black_box(&gens), g.lattice()).unwrap()));
    group.finish();
}

criterion_group!(benches, lattice_ideals, weighted_buchberger, fan, constellation, hilbert);
criterion_main!(benches);
