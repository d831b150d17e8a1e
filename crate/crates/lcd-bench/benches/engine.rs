//! Benchmarks for the three hot paths: canonical labeling, a complete small
//! classification, and mass-formula evaluation.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use lcd_core::{key_and_aut, mass, Classifier, Field, FqMatrix, FqVector, LinearCode};

fn parse_code(field: Field, rows: &[&str]) -> LinearCode {
    let rows: Vec<FqVector> = rows.iter().map(|r| FqVector::parse(field, r).unwrap()).collect();
    LinearCode::from_generator(&FqMatrix::from_rows(rows).unwrap()).unwrap()
}

fn bench_canonize(c: &mut Criterion) {
    // The trivial-automorphism [12,6,3] code: no symmetry to prune on, so the
    // search tree is as wide as it gets at this size.
    let binary = parse_code(
        Field::Gf2,
        &[
            "100000101011",
            "010000010110",
            "001000110100",
            "000100110001",
            "000010001101",
            "000001000011",
        ],
    );
    c.bench_function("canonize binary [12,6]", |b| {
        b.iter(|| key_and_aut(black_box(&binary)).unwrap())
    });

    let ternary =
        parse_code(Field::Gf3, &["10002001", "01002212", "00101100", "00011012"]);
    c.bench_function("canonize ternary [8,4]", |b| {
        b.iter(|| key_and_aut(black_box(&ternary)).unwrap())
    });
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    group.bench_function("binary [7,3] from scratch", |b| {
        b.iter(|| {
            let classifier = Classifier::new();
            black_box(classifier.classify(Field::Gf2, 7, 3).unwrap().class_count())
        })
    });
    group.bench_function("ternary [6,3] from scratch", |b| {
        b.iter(|| {
            let classifier = Classifier::new();
            black_box(classifier.classify(Field::Gf3, 6, 3).unwrap().class_count())
        })
    });
    group.finish();
}

fn bench_mass(c: &mut Criterion) {
    c.bench_function("mass binary (14,7)", |b| {
        b.iter(|| mass::mass(Field::Gf2, black_box(14), black_box(7)).unwrap())
    });
    c.bench_function("lower bound ternary (11,5)", |b| {
        b.iter(|| mass::lower_bound(Field::Gf3, black_box(11), black_box(5)).unwrap())
    });
}

criterion_group!(benches, bench_canonize, bench_classify, bench_mass);
criterion_main!(benches);
