use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use quivermod_core::field::{PrimeField, Rationals};
use quivermod_core::quadrics::{build_clifford, is_azumaya_over_field, standard_form};

fn clifford(c: &mut Criterion) {
    for n in [3, 5] {
        let q = standard_form(Rationals, n);
        c.bench_function(&format!("build clifford n={n} over Q"), |b| {
            b.iter(|| build_clifford(black_box(&q)).unwrap())
        });
        let cl = build_clifford(&q).unwrap();
        c.bench_function(&format!("azumaya even part n={n} over Q"), |b| {
            b.iter(|| is_azumaya_over_field(black_box(&cl.even_part)).unwrap())
        });
    }
    let q = standard_form(PrimeField::new(2).unwrap(), 5);
    let cl = build_clifford(&q).unwrap();
    c.bench_function("azumaya even part n=5 over F2", |b| {
        b.iter(|| is_azumaya_over_field(black_box(&cl.even_part)).unwrap())
    });
}

criterion_group!(benches, clifford);
criterion_main!(benches);
