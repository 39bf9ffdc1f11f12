use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lidef::engine::{delta, l_k, qme_residual};
use lidef::linear::{Color, MultiMap, Rational};
use lidef::prop::Model;
use lidef_bench::fixture;

fn brackets(c: &mut Criterion) {
    let mut group = c.benchmark_group("l_k");
    for model in Model::ALL {
        for k in 1..=3 {
            let fx = fixture(model, 11, 1, k);
            let refs: Vec<_> = fx.cochains.iter().collect();
            group.bench_with_input(BenchmarkId::new(model.name(), k), &refs, |b, refs| {
                b.iter(|| l_k(black_box(refs), &fx.algebra, None).unwrap())
            });
        }
    }
    group.finish();
}

fn differential(c: &mut Criterion) {
    let mut group = c.benchmark_group("delta");
    for model in Model::ALL {
        for degree in 1..=3 {
            let fx = fixture(model, 12, degree, 1);
            group.bench_with_input(BenchmarkId::new(model.name(), degree), &fx.cochains[0], |b, x| {
                b.iter(|| delta(black_box(x), &fx.algebra).unwrap())
            });
        }
    }
    group.finish();
}

fn qme(c: &mut Criterion) {
    let mut group = c.benchmark_group("qme");
    for model in Model::ALL {
        let fx = fixture(model, 13, 1, 1);
        group.bench_function(model.name(), |b| {
            b.iter(|| qme_residual(black_box(&fx.cochains[0]), &fx.algebra, model.qme_bound()).unwrap())
        });
    }
    group.finish();
}

fn compose(c: &mut Criterion) {
    let mut group = c.benchmark_group("compose_at");
    for dim in [2, 3, 4] {
        let coeff = |o: usize, ins: &[usize]| Rational::from_integer((o + 2 * ins.iter().sum::<usize>()) as i64 % 5 - 2);
        let f = MultiMap::from_fn(Color::B, dim, vec![Color::B; 2], vec![dim; 2], coeff);
        let g = MultiMap::from_fn(Color::B, dim, vec![Color::B; 2], vec![dim; 2], coeff);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &(f, g), |b, (f, g)| {
            b.iter(|| f.compose_at(1, black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, brackets, differential, qme, compose);
criterion_main!(benches);
