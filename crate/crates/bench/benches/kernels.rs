use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tourneylab_bench::{halved, main_construction, random};
use tourneylab_core::hamilton::{brute_force_hamiltonian, hamilton_cycle, scc};
use tourneylab_core::sampling::{
    estimate_hamiltonian_probability, exact_hamiltonian_probability, SamplePlan,
};
use tourneylab_core::structure::{balanced_cut_heuristic, max_ba_matching};

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("scc");
    for n in [64, 512, 4096] {
        let t = random(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| b.iter(|| scc(black_box(t))));
    }
    group.finish();
}

fn cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("hamilton_cycle");
    for n in [64, 512, 2048] {
        let t = random(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| {
            b.iter(|| hamilton_cycle(black_box(t)))
        });
    }
    group.finish();
    let t = random(16);
    c.bench_function("held_karp/16", |b| b.iter(|| brute_force_hamiltonian(black_box(&t))));
}

fn probability(c: &mut Criterion) {
    let (t, _) = main_construction(203, 2);
    let plan = SamplePlan::new(0.5, 2_000, 1).unwrap();
    c.bench_function("estimate/n203_2000_trials", |b| {
        b.iter(|| estimate_hamiltonian_probability(black_box(&t), &plan))
    });
    let small = random(16);
    c.bench_function("exact/n16", |b| {
        b.iter(|| exact_hamiltonian_probability(black_box(&small), 0.5))
    });
}

fn structure(c: &mut Criterion) {
    let (t, p) = halved(400);
    c.bench_function("matching/n400", |b| b.iter(|| max_ba_matching(black_box(&t), &p)));
    let (t, _) = main_construction(203, 2);
    c.bench_function("cut_heuristic/n203_effort4", |b| {
        b.iter(|| balanced_cut_heuristic(black_box(&t), 4))
    });
}

criterion_group!(benches, decomposition, cycles, probability, structure);
criterion_main!(benches);
