//! Benchmarks for the exact-arithmetic hot paths: compound matrices,
//! enveloping-algebra closure, intertwiner solving and the full lifting
//! pipeline.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use reflex_core::exterior::{compound_matrix, exterior_power};
use reflex_core::families::{
    affine_an_vx, random_conjugated_copy, random_invertible_matrix, symmetric_group_standard,
};
use reflex_core::lifting::lift_isomorphism;
use reflex_core::modtheory::{enveloping_algebra, hom_space, is_simple, MatrixRep};
use reflex_core::Scalar;

fn bench_compound(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let m = random_invertible_matrix(6, &mut rng);
    c.bench_function("compound_matrix 6x6 d=3", |b| {
        b.iter(|| compound_matrix(black_box(&m), 3).unwrap())
    });
}

fn bench_enveloping(c: &mut Criterion) {
    let rep = affine_an_vx(3, &Scalar::from_int(2)).unwrap();
    let ext = MatrixRep::from_exterior(&exterior_power(&rep, 2).unwrap());
    c.bench_function("enveloping_algebra of a 6-dim exterior power", |b| {
        b.iter(|| enveloping_algebra(black_box(&ext)))
    });
}

fn bench_is_simple(c: &mut Criterion) {
    let rep = affine_an_vx(3, &Scalar::from_int(2)).unwrap();
    let ext = MatrixRep::from_exterior(&exterior_power(&rep, 2).unwrap());
    c.bench_function("is_simple on a 6-dim exterior power", |b| {
        b.iter(|| is_simple(black_box(&ext)).unwrap())
    });
}

fn bench_hom_space(c: &mut Criterion) {
    let rep1 = affine_an_vx(3, &Scalar::from_int(2)).unwrap();
    let rep2 = affine_an_vx(3, &Scalar::from_int(3)).unwrap();
    let e1 = MatrixRep::from_exterior(&exterior_power(&rep1, 2).unwrap());
    let e2 = MatrixRep::from_exterior(&exterior_power(&rep2, 2).unwrap());
    c.bench_function("hom_space between 6-dim exterior powers", |b| {
        b.iter(|| hom_space(black_box(&e1), black_box(&e2)).unwrap())
    });
}

fn bench_lift(c: &mut Criterion) {
    let rep = symmetric_group_standard(4).unwrap();
    let (copy, _, _) = random_conjugated_copy(&rep, 3).unwrap();
    let e1 = MatrixRep::from_exterior(&exterior_power(&rep, 2).unwrap());
    let e2 = MatrixRep::from_exterior(&exterior_power(&copy, 2).unwrap());
    let psi = hom_space(&e1, &e2).unwrap().basis[0].clone();
    c.bench_function("lift_isomorphism at d=2", |b| {
        b.iter(|| lift_isomorphism(black_box(&rep), black_box(&copy), 2, 2, &psi).unwrap())
    });
}

criterion_group!(
    benches,
    bench_compound,
    bench_enveloping,
    bench_is_simple,
    bench_hom_space,
    bench_lift
);
criterion_main!(benches);
