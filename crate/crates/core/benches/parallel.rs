//! Sequential against parallel execution of the heavy loops.
//!
//! Without the `parallel` feature both arms run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mforge::analysis::weight_poset_with;
use mforge::catalog::CatalogEntry;
use mforge::ops::{build_operators, check_lemma_3_1_with, check_presentation_with};
use mforge::system::validate_system_with;
use mforge::weyl::orbits_on_pairs_with;
use mforge::{cartan_matrix, Execution};

const MODES: [(&str, Execution); 2] =
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn validate(c: &mut Criterion) {
    let mut g = c.benchmark_group("validate");
    for n in [8, 12] {
        let sys = CatalogEntry::Hypercube { n }.build().unwrap();
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(name, format!("hypercube{n}")), &sys, |b, sys| {
                b.iter(|| validate_system_with(sys.psi().to_vec(), sys.delta().clone(), mode).unwrap())
            });
        }
    }
    g.finish();
}

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relations");
    g.sample_size(10);
    for entry in [CatalogEntry::Hesse, CatalogEntry::Hypercube { n: 8 }] {
        let sys = entry.build().unwrap();
        let fam = build_operators(&sys);
        let cartan = cartan_matrix(sys.delta()).unwrap();
        for (name, mode) in MODES {
            g.bench_function(BenchmarkId::new(name, entry.to_string()), |b| {
                b.iter(|| {
                    let r = check_lemma_3_1_with(&fam, mode);
                    r.merge(check_presentation_with(&fam, &cartan, mode).unwrap())
                })
            });
        }
    }
    g.finish();
}

fn pair_orbits(c: &mut Criterion) {
    let mut g = c.benchmark_group("pair_orbits");
    let sys = CatalogEntry::Hesse.build().unwrap();
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::new(name, "hesse"), |b| b.iter(|| orbits_on_pairs_with(&sys, mode)));
    }
    g.finish();
}

fn poset(c: &mut Criterion) {
    let mut g = c.benchmark_group("weight_poset");
    g.sample_size(10);
    for entry in [CatalogEntry::Hesse, CatalogEntry::Hypercube { n: 7 }] {
        let sys = entry.build_finite().unwrap();
        for (name, mode) in MODES {
            g.bench_function(BenchmarkId::new(name, entry.to_string()), |b| {
                b.iter(|| weight_poset_with(&sys, mode).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, validate, relations, pair_orbits, poset);
criterion_main!(benches);
