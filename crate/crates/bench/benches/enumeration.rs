use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use frustra_core::spectrum::THM2_DEFAULT_V1_STEPS;
use frustra_core::{enumerate_full, restricted_spectrum, verify_thm2_family, EnumerationOptions};

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_enumerate, bench_restricted, bench_family
}
criterion_main!(benches);

fn bench_enumerate(c: &mut Criterion) {
    let opts = EnumerationOptions::default();
    for n in [6, 7] {
        c.bench_function(&format!("enumerate_full/{n}"), |b| {
            b.iter(|| enumerate_full(black_box(n), &opts).unwrap())
        });
    }
}

fn bench_restricted(c: &mut Criterion) {
    c.bench_function("restricted_spectrum/t4_n30", |b| {
        b.iter(|| restricted_spectrum(black_box(30), 4).unwrap())
    });
}

fn bench_family(c: &mut Criterion) {
    c.bench_function("four_part_family/36", |b| {
        b.iter(|| verify_thm2_family(black_box(36), THM2_DEFAULT_V1_STEPS))
    });
}
