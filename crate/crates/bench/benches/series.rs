use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qcong_bench::{b_series, dense, ORDERS};
use qcong_core::theorems::b_table_mod;
use qcong_core::CoefficientRing;

const MOD63: CoefficientRing = CoefficientRing::IntegersMod(63);

fn b_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("b_table_mod_63");
    g.sample_size(10);
    for order in ORDERS {
        g.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, &t| {
            b.iter(|| b_table_mod(t as usize, 63).unwrap())
        });
    }
    g.finish();
}

fn fquotient(c: &mut Criterion) {
    let mut g = c.benchmark_group("b_generating_function_exact");
    g.sample_size(10);
    for order in [1000i64, 5000] {
        g.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, &t| {
            b.iter(|| b_series(t, CoefficientRing::Integers))
        });
    }
    g.finish();
}

fn multiply(c: &mut Criterion) {
    let mut g = c.benchmark_group("dense_product_mod_63");
    g.sample_size(10);
    for order in [1000i64, 5000] {
        let (x, y) = (dense(order, MOD63), b_series(order, MOD63));
        g.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, _| {
            b.iter(|| x.mul(&y).unwrap())
        });
    }
    g.finish();
}

fn invert(c: &mut Criterion) {
    let mut g = c.benchmark_group("inverse_exact");
    g.sample_size(10);
    for order in [500i64, 2000] {
        let x = b_series(order, CoefficientRing::Integers);
        g.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, _| {
            b.iter(|| x.invert().unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, b_table, fquotient, multiply, invert);
criterion_main!(benches);
