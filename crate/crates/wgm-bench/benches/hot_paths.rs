//! Benchmarks for the paths that dominate sweep time: the resonance
//! solve, the volume integral, the closed-form Q, and a short sweep
//! that exercises all of them together.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use wgm_core::material::{AtomSpec, MaterialModel};
use wgm_core::modes::{complex_pole, solve_resonance};
use wgm_core::quality::q_rad;
use wgm_core::sweep::run_sweep;
use wgm_core::volume::mode_volume;
use wgm_core::Polarization;

const LAMBDA: f64 = 852.359e-9;

fn bench_solve(c: &mut Criterion) {
    let material = MaterialModel::default();
    c.bench_function("solve_resonance l=79", |b| {
        b.iter(|| solve_resonance(black_box(79), LAMBDA, &material).unwrap())
    });
}

fn bench_volume(c: &mut Criterion) {
    let material = MaterialModel::default();
    let res = solve_resonance(76, LAMBDA, &material).unwrap();
    c.bench_function("mode_volume l=76", |b| b.iter(|| mode_volume(black_box(&res))));
}

fn bench_q_rad(c: &mut Criterion) {
    let material = MaterialModel::default();
    let n = material.index(LAMBDA).unwrap();
    c.bench_function("q_rad l=76", |b| {
        b.iter(|| q_rad(black_box(76), 1, n, Polarization::Tm).unwrap())
    });
}

fn bench_pole(c: &mut Criterion) {
    let material = MaterialModel::default();
    let res = solve_resonance(50, LAMBDA, &material).unwrap();
    c.bench_function("complex_pole l=50", |b| b.iter(|| complex_pole(black_box(&res)).unwrap()));
}

fn bench_sweep(c: &mut Criterion) {
    let material = MaterialModel::default();
    let atom = AtomSpec::cesium_d2();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("l = 30..=40", |b| {
        b.iter(|| run_sweep(&atom, &material, black_box(30), 40, None).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_solve, bench_volume, bench_q_rad, bench_pole, bench_sweep);
criterion_main!(benches);
