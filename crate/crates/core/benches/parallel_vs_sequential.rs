use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use borelq::algebra::BorelAlgebra;
use borelq::hopf::Hopf;
use borelq::par;
use borelq::yd::{self, FiniteHopf};

const MODES: [(&str, bool); 2] = [("parallel", false), ("sequential", true)];

fn smash(c: &mut Criterion) {
    let alg = BorelAlgebra::of_type("A2").unwrap();
    alg.smash_check(3).unwrap();
    let mut group = c.benchmark_group("smash_check_A2_h3");
    group.sample_size(10);
    for (label, seq) in MODES {
        group.bench_function(BenchmarkId::from_parameter(label), |b| {
            par::set_sequential(seq);
            b.iter(|| alg.smash_check(3).unwrap());
        });
    }
    group.finish();
    par::set_sequential(false);
}

fn hopf_axioms(c: &mut Criterion) {
    let h = Hopf::new(BorelAlgebra::of_type("A2").unwrap()).unwrap();
    h.axiom_check(3, 1).unwrap();
    let mut group = c.benchmark_group("hopf_axioms_A2_h3");
    group.sample_size(10);
    for (label, seq) in MODES {
        group.bench_function(BenchmarkId::from_parameter(label), |b| {
            par::set_sequential(seq);
            b.iter(|| h.axiom_check(3, 1).unwrap());
        });
    }
    group.finish();
    par::set_sequential(false);
}

fn yd_scan(c: &mut Criterion) {
    let h = FiniteHopf::of_type("A1", 5).unwrap();
    let mut group = c.benchmark_group("yd_scan_A1_r5");
    group.sample_size(10);
    for (label, seq) in MODES {
        group.bench_function(BenchmarkId::from_parameter(label), |b| {
            par::set_sequential(seq);
            b.iter(|| yd::scan(&h, 3).unwrap());
        });
    }
    group.finish();
    par::set_sequential(false);
}

criterion_group!(benches, smash, hopf_axioms, yd_scan);
criterion_main!(benches);
