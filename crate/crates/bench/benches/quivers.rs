use artransfer::artheory::{ar_quiver, Budget};
use artransfer::functorq::gprj_functor_quiver;
use artransfer::morphcat::{assemble_sx_fast, assemble_sx_oracle};
use artransfer::stabfun::{gprj_context, module_category_context};
use artransfer::{t2, FMatrix};
use artransfer_bench::fixture;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn rref(c: &mut Criterion) {
    let m = FMatrix::from_fn(32003, 40, 40, |i, j| ((i * 7919 + j * 104729) % 32003) as u32);
    c.bench_function("rref 40x40", |b| b.iter(|| black_box(&m).rref()));
}

fn module_quivers(c: &mut Criterion) {
    let a3 = fixture("a3.json");
    let ex = fixture("t2dualnumbers.json");
    c.bench_function("ar quiver a3", |b| b.iter(|| ar_quiver(black_box(&a3), Budget::default()).unwrap()));
    c.bench_function("ar quiver t2 dual numbers", |b| b.iter(|| ar_quiver(black_box(&ex), Budget::default()).unwrap()));
}

fn submodule_quivers(c: &mut Criterion) {
    let budget = Budget::default();
    let a3 = fixture("a3.json");
    let ctx = module_category_context(&a3, budget).unwrap();
    let t = t2(&a3).unwrap();
    let mut g = c.benchmark_group("submodule category a3");
    g.sample_size(20);
    g.bench_function("fast", |b| b.iter(|| assemble_sx_fast(&ctx, &t, budget).unwrap()));
    g.bench_function("oracle", |b| b.iter(|| assemble_sx_oracle(&ctx, &t, budget).unwrap()));
    g.finish();

    let ex = fixture("t2dualnumbers.json");
    let x = module_category_context(&ex, budget).unwrap();
    let y = gprj_context(&ex, budget).unwrap();
    let t = t2(&ex).unwrap();
    let mut g = c.benchmark_group("t2 dual numbers");
    g.sample_size(10);
    g.bench_function("gprj submodule fast", |b| b.iter(|| assemble_sx_fast(&y, &t, budget).unwrap()));
    g.bench_function("gprj submodule oracle", |b| b.iter(|| assemble_sx_oracle(&y, &t, budget).unwrap()));
    g.bench_function("gprj functors", |b| b.iter(|| gprj_functor_quiver(&x, &y, budget).unwrap()));
    g.finish();
}

criterion_group!(benches, rref, module_quivers, submodule_quivers);
criterion_main!(benches);
