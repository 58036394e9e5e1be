//! Whole-census costs: the genus-tree walk, the independent gap-set oracle,
//! and the checkpoint codec.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use wilf_core::{
    decode_checkpoint, encode_checkpoint, enumerate_tree, enumerate_tree_with, gapset_oracle,
    EnumerateOptions, ScanKind, TreeNode, TreeVisitor,
};

fn bench_walk(c: &mut Criterion) {
    let mut group = c.benchmark_group("walk");
    group.sample_size(20);
    for g in [14u32, 18] {
        group.bench_function(format!("census/g{g}"), |b| {
            b.iter(|| enumerate_tree(black_box(g), &EnumerateOptions::default()).unwrap())
        });
    }
    group.bench_function("question/g18", |b| {
        let opts = EnumerateOptions { scan: Some(ScanKind::Question), ..Default::default() };
        b.iter(|| enumerate_tree(black_box(18), &opts).unwrap())
    });
    group.bench_function("oracle/g8", |b| {
        b.iter(|| gapset_oracle(black_box(8)).unwrap())
    });
    group.finish();
}

struct CaptureAt(u32);

impl TreeVisitor for CaptureAt {
    type Acc = Vec<TreeNode>;

    fn empty(&self) -> Self::Acc {
        Vec::new()
    }

    fn visit(&self, node: &TreeNode, acc: &mut Self::Acc) {
        if node.genus() == self.0 || (node.genus() < self.0 && node.is_leaf()) {
            acc.push(node.clone());
        }
    }

    fn merge(&self, mut a: Self::Acc, b: Self::Acc) -> Self::Acc {
        a.extend(b);
        a
    }
}

fn bench_checkpoint(c: &mut Criterion) {
    let g = 12u32;
    let depth = 6u32;
    let (_, nodes) =
        enumerate_tree_with(g, &EnumerateOptions::default(), &CaptureAt(depth)).unwrap();
    let bytes = encode_checkpoint(depth, &nodes);
    let span = (2 * g + 2) as usize;

    let mut group = c.benchmark_group("checkpoint");
    group.bench_function("encode/g12d6", |b| {
        b.iter(|| encode_checkpoint(black_box(depth), black_box(&nodes)))
    });
    group.bench_function("decode/g12d6", |b| {
        b.iter(|| decode_checkpoint(black_box(&bytes), black_box(span)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_walk, bench_checkpoint);
criterion_main!(benches);
