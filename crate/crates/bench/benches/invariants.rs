//! Per-semigroup costs: the shortest-path construction against the scan
//! oracle, plus the derived invariants on top of it.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use wilf_core::{oracle, random_semigroups, MembershipTable, NumericalSemigroup, SampleSpec};

fn label(gens: &[u64]) -> String {
    format!("m{}e{}", gens[0], gens.len())
}

fn bench_apery(c: &mut Criterion) {
    let cases: &[&[u64]] = &[
        &[101, 103, 107, 109],
        &[1009, 1013, 1019],
        &[5003, 5009, 5011, 5021, 5023],
    ];
    let mut group = c.benchmark_group("apery");
    for &gens in cases {
        let sg = NumericalSemigroup::new(gens).unwrap();
        group.bench_function(format!("dijkstra/{}", label(gens)), |b| {
            b.iter(|| black_box(&sg).apery_set())
        });
    }
    // The scan oracle walks every value up to the two-generator bound, so
    // only the small case is worth timing.
    group.bench_function("scan/m101e4", |b| {
        b.iter(|| oracle::naive_apery(black_box(&[101, 103, 107, 109])))
    });
    group.finish();
}

fn bench_invariants(c: &mut Criterion) {
    let sg = NumericalSemigroup::new(&[1009, 1013, 1019, 1021]).unwrap();
    let mut group = c.benchmark_group("invariants");
    group.bench_function("membership_table", |b| {
        b.iter(|| MembershipTable::covering(black_box(&sg)).unwrap())
    });
    group.bench_function("delta", |b| b.iter(|| black_box(&sg).delta().unwrap()));
    group.bench_function("type_data", |b| {
        b.iter(|| black_box(&sg).type_data().unwrap())
    });
    group.finish();
}

fn bench_sampling(c: &mut Criterion) {
    let spec = SampleSpec { multiplicity: 301, edim: 12, seed: 7, count: 10, beta: 4 };
    c.bench_function("sample/m301e12x10", |b| {
        b.iter(|| random_semigroups(black_box(&spec)).unwrap())
    });
}

criterion_group!(benches, bench_apery, bench_invariants, bench_sampling);
criterion_main!(benches);
