// SPDX-License-Identifier: Apache-2.0

//! Sequential versus data-parallel evaluation of the heavier checks.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wbrst::brst::Complex;
use wbrst::calculus::ExecMode;
use wbrst::catalog::builtin_datum;

fn complex(name: &str, mode: ExecMode) -> Complex {
    let mut cx = Complex::with_default_mode(builtin_datum(name).unwrap()).unwrap();
    cx.ca.set_mode(mode);
    cx
}

fn modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("thm3.1+thm3.2");
    group.sample_size(10);
    for name in ["sl3-minimal", "sl4-minimal", "gl22-principal"] {
        for (label, mode) in [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)] {
            let cx = complex(name, mode);
            group.bench_with_input(BenchmarkId::new(label, name), &cx, |b, cx| {
                b.iter(|| {
                    // Cold caches, so both modes redo the full computation.
                    cx.ca.clear_caches();
                    black_box((cx.verify_thm31().ok(), cx.verify_thm32().ok()))
                })
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("d2");
    group.sample_size(10);
    for (label, mode) in [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)] {
        let cx = complex("sl4-minimal", mode);
        group.bench_function(label, |b| {
            b.iter(|| {
                cx.ca.clear_caches();
                black_box(cx.check_d_squared().ok())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, modes);
criterion_main!(benches);
