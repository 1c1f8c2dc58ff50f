use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use delzant_bench::fixtures;
use delzant_core::delzant::{make_cube, validate_delzant};
use delzant_core::exact::rat;
use delzant_core::packing::{build_packing_polytope, maximize};
use delzant_core::perturb::scan_segment;
use delzant_core::polytope::active_set_vertices;
use delzant_core::RatVector;

fn vertex_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("vertices");
    for (name, d) in fixtures() {
        g.bench_with_input(BenchmarkId::new("polytope", name), &d, |b, d| {
            b.iter(|| d.hrep().vertices().unwrap())
        });
    }
    let sq = build_packing_polytope(&make_cube(2, &rat(1)).unwrap());
    g.bench_function("packing_square_dd", |b| b.iter(|| sq.vertices().unwrap()));
    g.bench_function("packing_square_active_set", |b| {
        b.iter(|| active_set_vertices(sq.hrep()))
    });
    g.finish();
}

fn validation(c: &mut Criterion) {
    let mut g = c.benchmark_group("validate");
    for (name, d) in fixtures() {
        g.bench_with_input(BenchmarkId::from_parameter(name), d.hrep(), |b, h| {
            b.iter(|| validate_delzant(h).unwrap())
        });
    }
    g.finish();
}

fn maximal_density(c: &mut Criterion) {
    let mut g = c.benchmark_group("maximize");
    g.sample_size(10);
    for (name, d) in fixtures() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &d, |b, d| {
            b.iter(|| maximize(d).unwrap())
        });
    }
    g.finish();
}

fn scan(c: &mut Criterion) {
    let sq = make_cube(2, &rat(1)).unwrap();
    let s2 = RatVector::from_i64(&[0, -1, 0, 0]);
    c.bench_function("scan_square_rectangle_16", |b| {
        b.iter(|| scan_segment(&sq, &RatVector::zeros(4), &s2, 16).unwrap())
    });
}

criterion_group!(
    benches,
    vertex_enumeration,
    validation,
    maximal_density,
    scan
);
criterion_main!(benches);
