use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use springer_bench::{balanced_cells, params};
use springer_cells::closure::{closure_decomposition, synthesize_limit_curve, verify_limit_curve};
use springer_cells::matchcore::enumerate_matchings;
use springer_cells::oracle::{cross_check_cells, FqConfig};
use springer_cells::{build_template, instantiate, JordanType, Q};

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for big_n in [8, 10, 12] {
        let jt = JordanType::new(big_n / 2, big_n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(big_n), &jt, |b, jt| b.iter(|| enumerate_matchings(black_box(jt))));
    }
    g.finish();
}

fn instantiate_cells(c: &mut Criterion) {
    let mut g = c.benchmark_group("instantiate");
    for big_n in [6, 8] {
        let (jt, ms) = balanced_cells(big_n);
        g.bench_with_input(BenchmarkId::from_parameter(big_n), &ms, |b, ms| {
            b.iter(|| {
                for m in ms {
                    let ct = build_template(m, &jt).unwrap();
                    black_box(instantiate::<Q>(&ct, &params(m.len())).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn certify(c: &mut Criterion) {
    let mut g = c.benchmark_group("certify_closure");
    g.sample_size(10);
    for big_n in [4, 6] {
        let (jt, ms) = balanced_cells(big_n);
        g.bench_with_input(BenchmarkId::from_parameter(big_n), &ms, |b, ms| {
            b.iter(|| {
                for m in ms {
                    for p in closure_decomposition(m, &jt).unwrap().pieces {
                        let target = params(p.remaining().len());
                        let curve = synthesize_limit_curve(m, &jt, &p.cut, &target).unwrap();
                        assert!(verify_limit_curve(m, &jt, &curve, &p, &target).unwrap());
                    }
                }
            })
        });
    }
    g.finish();
}

fn fq_oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("fq_oracle");
    g.sample_size(10);
    for (q, n, big_n) in [(2, 2, 4), (3, 2, 4), (2, 3, 6), (3, 3, 6)] {
        let cfg = FqConfig::new(q, JordanType::new(n, big_n).unwrap()).unwrap();
        g.bench_function(format!("q{q}_N{big_n}"), |b| b.iter(|| cross_check_cells(black_box(&cfg)).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, enumerate, instantiate_cells, certify, fq_oracle);
criterion_main!(benches);
