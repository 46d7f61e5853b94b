use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use jue_bench::part;
use jue_core::exact::laurent_expand;
use jue_core::hurwitz::{hurwitz_table, Guards};
use jue_core::jacobi::{a_hypergeometric, b_hypergeometric, connected_correlator, lax_residue, r_series, Point};
use jue_core::schur::correlator_via_schur;
use jue_core::topo::verify_theorem;
use jue_core::Sign;

fn coefficients(c: &mut Criterion) {
    let mut g = c.benchmark_group("coefficients");
    for l in [2usize, 4, 6] {
        g.bench_with_input(BenchmarkId::new("a_4f3", l), &l, |b, &l| b.iter(|| a_hypergeometric(l).unwrap()));
        g.bench_with_input(BenchmarkId::new("b_4f3", l), &l, |b, &l| b.iter(|| b_hypergeometric(l).unwrap()));
    }
    g.finish();
}

fn correlators(c: &mut Criterion) {
    let mut g = c.benchmark_group("correlators");
    g.sample_size(10);
    for s in ["1,1", "2,1", "1,1,1", "2,1,1"] {
        let lambda = part(s);
        g.bench_with_input(BenchmarkId::new("connected", s), &lambda, |b, l| {
            b.iter(|| connected_correlator(l, Sign::Positive).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("schur", s), &lambda, |b, l| {
            b.iter(|| correlator_via_schur(l, Sign::Positive).unwrap())
        });
    }
    let f = connected_correlator(&part("1,1,1"), Sign::Negative).unwrap();
    g.bench_function("laurent_expand 1,1,1 neg", |b| b.iter(|| laurent_expand(black_box(&f), 6).unwrap()));
    g.finish();
}

fn hurwitz(c: &mut Criterion) {
    let mut g = c.benchmark_group("hurwitz");
    let guards = Guards::default();
    for (s, genus) in [("1,1,1", 0), ("2,1,1", 0), ("1,1,1,1", 1)] {
        let lambda = part(s);
        g.bench_with_input(BenchmarkId::new("table", format!("{s} g={genus}")), &lambda, |b, l| {
            b.iter(|| hurwitz_table(l, genus, true, &guards).unwrap())
        });
    }
    g.finish();
}

fn theorem(c: &mut Criterion) {
    let mut g = c.benchmark_group("theorem");
    g.sample_size(10);
    let guards = Guards::default();
    for s in ["2,1", "1,1,1"] {
        let lambda = part(s);
        g.bench_with_input(BenchmarkId::new("verify gmax=1", s), &lambda, |b, l| {
            b.iter(|| verify_theorem(l, Sign::Negative, 1, true, &guards).unwrap())
        });
    }
    let series = r_series(Point::Zero, 6).unwrap();
    g.bench_function("lax residue order 6", |b| b.iter(|| lax_residue(black_box(&series))));
    g.finish();
}

criterion_group!(benches, coefficients, correlators, hurwitz, theorem);
criterion_main!(benches);
