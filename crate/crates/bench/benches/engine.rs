use std::hint::black_box;

use ambient_dirac::clifford::{basic_null_vector, null_kernel_analysis, AmbientOps, Op, Signature};
use ambient_dirac::solvers::{even_extend, odd_extend};
use ambient_dirac::SymScalar;
use ambient_dirac_bench::{power_pair, sample_spinor};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn normal_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for k in [3u32, 6, 9] {
        let (y, x) = power_pair(k);
        group.bench_with_input(BenchmarkId::new("y^k x^k", k), &k, |b, _| {
            b.iter(|| black_box(&y).multiply(black_box(&x)))
        });
    }
    group.finish();
}

fn solvers(c: &mut Criterion) {
    let w = SymScalar::w();
    c.bench_function("even_extend generic order 8", |b| {
        b.iter(|| even_extend(black_box(&w), 8))
    });
    c.bench_function("odd_extend generic order 7", |b| {
        b.iter(|| odd_extend(black_box(&w), 7))
    });
}

fn flat_model(c: &mut Criterion) {
    let sig = Signature { r: 2, s: 2 };
    let ops = AmbientOps::new(sig).unwrap();
    let psi = sample_spinor(sig, 3, 1);
    c.bench_function("flat y*x on (2,2) deg 3", |b| {
        b.iter(|| ops.apply_seq(&[Op::Y, Op::X], black_box(&psi)).unwrap())
    });
    let sig = Signature { r: 3, s: 3 };
    let v = basic_null_vector(sig);
    c.bench_function("kernel lemma (3,3)", |b| {
        b.iter(|| null_kernel_analysis(sig, black_box(&v)).unwrap())
    });
}

criterion_group!(benches, normal_form, solvers, flat_model);
criterion_main!(benches);
