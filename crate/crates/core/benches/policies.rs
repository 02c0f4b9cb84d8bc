use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use heunblock::algebra::ExecPolicy;
use heunblock::correspondence::{classical_block, conjecture_b_first_kind};
use heunblock::virasoro::{regular_block, BlockKind, FirstKind};
use heunblock::wkb::{bs_period, HeunEquation};

const POLICIES: [(&str, ExecPolicy); 2] = [("parallel", ExecPolicy::Parallel), ("sequential", ExecPolicy::Sequential)];

fn policies(c: &mut Criterion) {
    let mut g = c.benchmark_group("policy");
    g.sample_size(10).measurement_time(Duration::from_secs(10));
    for (name, p) in POLICIES {
        g.bench_with_input(BenchmarkId::new("regular_block_3", name), &p, |b, &p| {
            b.iter(|| regular_block(3, p).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("classical_nf3_3", name), &p, |b, &p| {
            b.iter(|| classical_block(BlockKind::Nf3, 3, p).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("conjecture_b_nf2_3", name), &p, |b, &p| {
            b.iter(|| conjecture_b_first_kind(FirstKind::Nf2, 3, p).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("bs_period_hv_7", name), &p, |b, &p| {
            b.iter(|| bs_period(HeunEquation::HV, 7, p).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, policies);
criterion_main!(benches);
