use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use delpezzo::linsys::ne1e_search_with;
use delpezzo::plane::fuzz_normal_crossing;
use delpezzo::weyl::{group_closure, orbit_with, root_reflections, ORBIT_CAP};
use delpezzo::{Execution, DEL_PEZZO_4};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn fuzz(c: &mut Criterion) {
    let mut g = c.benchmark_group("normal_crossing_fuzz");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 500), &exec, |b, &exec| {
            b.iter(|| fuzz_normal_crossing(1, 500, 50, exec))
        });
    }
    g.finish();
}

fn ne1e(c: &mut Criterion) {
    let mut g = c.benchmark_group("ne1e_search");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| ne1e_search_with(exec).unwrap()));
    }
    g.finish();
}

fn weyl(c: &mut Criterion) {
    let gens = root_reflections(DEL_PEZZO_4).unwrap();
    let start = DEL_PEZZO_4.class(&[7, -3, -2, -2, -1, 0]).unwrap();
    let mut g = c.benchmark_group("weyl");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("orbit", name), |b| {
            b.iter(|| orbit_with(&start, &gens, ORBIT_CAP, exec).unwrap())
        });
        g.bench_function(BenchmarkId::new("group_closure", name), |b| {
            b.iter(|| group_closure(&gens, ORBIT_CAP, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, fuzz, ne1e, weyl);
criterion_main!(benches);
