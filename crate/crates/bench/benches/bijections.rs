use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use cycdesc::counting::{cyclic_permutations, permutations};
use cycdesc::necklace::{count_necklace_multisets, transfer_with_plan, TransferPlan};
use cycdesc::{phi, psi, DescentSet, Partition, Permutation};

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for n in [6, 7] {
        let cycles: Vec<Permutation> = cyclic_permutations(n + 1).collect();
        group.bench_with_input(BenchmarkId::new("phi", n), &cycles, |b, cycles| {
            b.iter(|| cycles.iter().map(|p| phi(p).unwrap().at(1)).sum::<usize>())
        });
        let perms: Vec<Permutation> = permutations(n).collect();
        group.bench_with_input(BenchmarkId::new("psi", n), &perms, |b, perms| {
            b.iter(|| perms.iter().map(|p| psi(p).unwrap().at(1)).sum::<usize>())
        });
    }
    group.finish();
}

fn single(c: &mut Criterion) {
    let pi: Permutation = "(11,4,10,1,7,16,9,3,5,12,20,2,6,14,18,8,13,19,15,17,21)".parse().unwrap();
    c.bench_function("phi/n=20", |b| b.iter(|| phi(black_box(&pi)).unwrap()));
    let big: Permutation = (1..200).chain([0]).map(|v| v + 1).collect::<Vec<_>>().try_into().unwrap();
    c.bench_function("phi/long_cycle_200", |b| b.iter(|| phi(black_box(&big)).unwrap()));
}

fn necklaces(c: &mut Criterion) {
    let lambda = Partition::from_parts(vec![3, 2, 2, 1]);
    c.bench_function("count_necklace_multisets/(2,3,3)", |b| {
        b.iter(|| count_necklace_multisets(black_box(&[2, 3, 3]), &lambda).unwrap())
    });
    let pi: Permutation = "3 4 1 2 5 9 11 12 6 7 8 10".parse().unwrap();
    let plan = TransferPlan::new(
        DescentSet::new(12, vec![2, 8]).unwrap(),
        DescentSet::new(12, vec![4, 6]).unwrap(),
    )
    .unwrap();
    c.bench_function("transfer/n=12", |b| {
        b.iter(|| transfer_with_plan(black_box(&pi), &plan).unwrap())
    });
}

criterion_group!(benches, sweep, single, necklaces);
criterion_main!(benches);
