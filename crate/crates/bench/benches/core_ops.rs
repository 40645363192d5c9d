use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use valdef::catalog;
use valdef::deformation::{transport, Gauge};
use valdef::io::{parse_deformation, parse_vector};
use valdef::nonassoc::{g_associative_check, SubgroupTag};
use valdef::poisson::poisson_tensor;
use valdef::rational::int;
use valdef::{cohomology_dim, decompose, CochainTarget, TruncSeries};

const VECTOR: &str = r#"{"cap": 10, "components": [
    ["0", "1", "2", "3"], ["0", "2", "1/2", "0", "5"], ["0", "3", "5/2", "3"],
    ["0", "0", "1", "-1", "1"], ["0", "0", "0", "7", "0", "1/3"], ["0", "1", "0", "0", "0", "0", "1"]]}"#;

const DEFORMATION: &str = r#"{"base": {"dim": 3, "kind": "lie",
    "table": [{"i": 0, "j": 1, "out": [{"k": 1, "c": "1"}]}, {"i": 0, "j": 2, "out": [{"k": 2, "c": "2"}]}]},
  "cap": 6,
  "terms": [{"coeff": ["0", "1"], "cochain": [{"args": [0, 2], "out": [{"k": 1, "c": "1"}]}]},
            {"coeff": ["0", "0", "1"], "cochain": [{"args": [0, 1], "out": [{"k": 2, "c": "1"}]}]}]}"#;

fn decompose_bench(c: &mut Criterion) {
    let w = parse_vector(VECTOR, None).unwrap();
    c.bench_function("decompose_6x10", |b| {
        b.iter(|| decompose(black_box(&w)).unwrap())
    });
}

fn cohomology_bench(c: &mut Criterion) {
    let (g, _) = catalog::algebra("roots123");
    c.bench_function("cohomology_dim_h2_dim4", |b| {
        b.iter(|| cohomology_dim(black_box(&g), 2, CochainTarget::Adjoint).unwrap())
    });
}

fn transport_bench(c: &mut Criterion) {
    let d = parse_deformation(DEFORMATION, None, None).unwrap();
    let n = d.base().dim();
    let h = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut coeffs = vec![int(0); 3];
                    coeffs[1 + (i + j) % 2] = int(1 + i as i64 - j as i64);
                    TruncSeries::from_poly(&coeffs, d.cap())
                })
                .collect()
        })
        .collect();
    let f = Gauge::new(h).unwrap();
    c.bench_function("transport_dim3_cap6", |b| {
        b.iter(|| transport(black_box(&d), &f).unwrap())
    });
}

fn g_associative_bench(c: &mut Criterion) {
    let (a, _) = catalog::algebra("upper_triangular");
    c.bench_function("g_associative_check_s3", |b| {
        b.iter(|| g_associative_check(black_box(&a), SubgroupTag::S3, true).unwrap())
    });
}

fn poisson_tensor_bench(c: &mut Criterion) {
    let p = catalog::poisson("poisson3");
    c.bench_function("poisson_tensor_3x3", |b| {
        b.iter(|| poisson_tensor(black_box(&p), &p).unwrap())
    });
}

criterion_group!(
    benches,
    decompose_bench,
    cohomology_bench,
    transport_bench,
    g_associative_bench,
    poisson_tensor_bench
);
criterion_main!(benches);
