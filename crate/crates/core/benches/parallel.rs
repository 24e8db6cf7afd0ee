use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use coxauto::automata::{build_canonical_automaton, minimize};
use coxauto::garside::{low_elements, verify_shadow};
use coxauto::par::Exec;
use coxauto::parse_coxeter_system;
use coxauto::smallroots::build_small_roots;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn minimize_a0(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimize");
    group.sample_size(10);
    for name in ["~C3", "~D5"] {
        let sys = parse_coxeter_system(name).unwrap();
        let a0 = build_canonical_automaton(&sys, &build_small_roots(&sys, 0).unwrap());
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &a0, |b, a| b.iter(|| minimize(black_box(a), exec)));
        }
    }
    group.finish();
}

fn shadows(c: &mut Criterion) {
    let mut group = c.benchmark_group("shadows");
    group.sample_size(10);
    for name in ["~G2", "~C3"] {
        let sys = parse_coxeter_system(name).unwrap();
        let table = build_small_roots(&sys, 0).unwrap();
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(format!("low_elements/{mode}"), name), &table, |b, t| {
                b.iter(|| low_elements(&sys, black_box(t), exec))
            });
        }
    }
    // Verification is quadratic in the shadow and far slower on ~C3.
    for name in ["~C2", "~G2"] {
        let sys = parse_coxeter_system(name).unwrap();
        let l0 = low_elements(&sys, &build_small_roots(&sys, 0).unwrap(), Exec::Parallel);
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(format!("verify/{mode}"), name), &l0, |b, s| {
                b.iter(|| verify_shadow(&sys, black_box(s), None, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, minimize_a0, shadows);
criterion_main!(benches);
