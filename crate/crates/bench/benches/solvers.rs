use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use swapdist_bench::{caterpillar, coding, distribution, swap_instance};
use swapdist_core::optimality::{
    average_swap_distance, min_bruteforce, min_by_sorted_assignment, min_closed_form_n3,
    DEFAULT_ENUM_CAP,
};
use swapdist_core::qap::{compression_min, mla_min, qap_min, QapInstance, DEFAULT_QAP_CAP};
use swapdist_core::{analyze, AnalyzeOptions, Permutohedron};

fn permutohedron(c: &mut Criterion) {
    let mut g = c.benchmark_group("permutohedron_build");
    for n in 2..=5 {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| Permutohedron::build(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn minimum_n3(c: &mut Criterion) {
    let p = Permutohedron::build(3).unwrap();
    let mut g = c.benchmark_group("minimum_n3");
    for m in [2, 4, 6] {
        let d = distribution(3, m).unwrap();
        g.bench_with_input(BenchmarkId::new("closed_form", m), &d, |b, d| {
            b.iter(|| min_closed_form_n3(black_box(d)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("sorted_assignment", m), &d, |b, d| {
            b.iter(|| min_by_sorted_assignment(&p, black_box(d)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("brute_force", m), &d, |b, d| {
            b.iter(|| min_bruteforce(&p, black_box(d), DEFAULT_ENUM_CAP).unwrap())
        });
    }
    g.finish();
}

fn brute_force_n4(c: &mut Criterion) {
    let p = Permutohedron::build(4).unwrap();
    let mut g = c.benchmark_group("brute_force_n4");
    g.sample_size(10);
    for m in [2, 3, 4] {
        let d = distribution(4, m).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(m), &d, |b, d| {
            b.iter(|| min_bruteforce(&p, black_box(d), u64::MAX).unwrap())
        });
    }
    g.finish();
}

fn report(c: &mut Criterion) {
    let p = Permutohedron::build(3).unwrap();
    let d = distribution(3, 5).unwrap();
    c.bench_function("average_swap_distance_n3", |b| {
        b.iter(|| average_swap_distance(&p, black_box(&d)).unwrap())
    });
    c.bench_function("analyze_n3", |b| {
        b.iter(|| analyze(&p, black_box(&d), &AnalyzeOptions::default()).unwrap())
    });
}

fn assignment(c: &mut Criterion) {
    let mut g = c.benchmark_group("qap");
    g.sample_size(10);
    let swap = swap_instance(6).unwrap();
    g.bench_function("swap_distance_n3", |b| {
        b.iter(|| qap_min(black_box(&swap), DEFAULT_QAP_CAP).unwrap())
    });
    let graph = caterpillar(4).unwrap();
    g.bench_function("mla_caterpillar_8", |b| {
        b.iter(|| mla_min(black_box(&graph), DEFAULT_QAP_CAP).unwrap())
    });
    let code = coding(7).unwrap();
    g.bench_function("compression_sorted_7", |b| {
        b.iter(|| compression_min(black_box(&code)))
    });
    let code_qap = QapInstance::compression(&code).unwrap();
    g.bench_function("compression_qap_7", |b| {
        b.iter(|| qap_min(black_box(&code_qap), DEFAULT_QAP_CAP).unwrap())
    });
    g.finish();
}

criterion_group!(
    benches,
    permutohedron,
    minimum_n3,
    brute_force_n4,
    report,
    assignment
);
criterion_main!(benches);
