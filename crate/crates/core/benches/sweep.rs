use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use supervogan::classify::{enumerate_real_forms_with, sweep};
use supervogan::families::desk_families;
use supervogan::par::Strategy;
use supervogan::spec_parse::parse_family;

const STRATEGIES: [(&str, Strategy); 2] = [("parallel", Strategy::Parallel), ("sequential", Strategy::Sequential)];

/// One task per family: classify every Vogan diagram of the desk families.
fn family_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for max in [2u32, 3] {
        let families = desk_families(max);
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, max), &families, |b, fams| {
                b.iter(|| sweep(black_box(fams), strategy));
            });
        }
    }
    group.finish();
}

/// One task per diagram inside a single large family.
fn single_family(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_real_forms");
    group.sample_size(10);
    for spec in ["A(4,4)", "D(4,3)"] {
        let family = parse_family(spec).expect("valid spec");
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, spec), &family, |b, f| {
                b.iter(|| enumerate_real_forms_with(black_box(f), strategy).expect("classifies"));
            });
        }
    }
    group.finish();
}

criterion_group!(benches, family_sweep, single_family);
criterion_main!(benches);
