use criterion::{black_box, criterion_group, criterion_main, Criterion};
use favkit_core::curves::two_division_match;
use favkit_core::exact_core::{F2Matrix, IntPoly};
use favkit_core::f2_groups::groups_certificate;
use favkit_core::field_lab::relations::SearchConfig;
use favkit_core::field_lab::{amiable, maximal_order};
use favkit_core::fixtures::{table1, table2};
use favkit_core::honda_ext::honda_certificate;
use favkit_core::resolvent::{favorability_report, pair_resolvent, pair_resolvent_poly};
use num_bigint::BigInt;

fn exact(c: &mut Criterion) {
    let f = IntPoly::from_i64(&[-1, -1, -2, 0, 1, 1]);
    let g = f.shift(&BigInt::from(7));
    c.bench_function("resultant deg 5", |b| b.iter(|| black_box(&f).resultant(black_box(&g))));
    let x = F2Matrix::from_bits(8, 8, 0x0123_4567_89ab_cdef);
    let y = F2Matrix::from_bits(8, 8, 0xfedc_ba98_7654_3210);
    c.bench_function("f2 mul 8x8", |b| b.iter(|| black_box(&x).mul(black_box(&y))));
}

fn fields(c: &mut Criterion) {
    let rows = table1();
    c.bench_function("favorability table1", |b| {
        b.iter(|| rows.iter().filter(|r| favorability_report(&r.f).favorable).count())
    });
    let f = rows[0].f.clone();
    c.bench_function("pair resolvent row 1", |b| b.iter(|| pair_resolvent_poly(black_box(&f)).unwrap()));
    let g = pair_resolvent_poly(&f).unwrap();
    c.bench_function("maximal order deg 10", |b| b.iter(|| maximal_order(black_box(&g)).unwrap()));
    let k = pair_resolvent(&f).unwrap().field;
    let mut slow = c.benchmark_group("slow");
    slow.sample_size(10);
    slow.bench_function("amiable N=277", |b| b.iter(|| amiable(&k, &SearchConfig::default()).unwrap().0));
    slow.bench_function("groups certificate", |b| b.iter(|| groups_certificate().unwrap().passed));
    slow.bench_function("honda certificate", |b| b.iter(|| honda_certificate().unwrap().passed));
    let t1 = table1();
    let row = &table2()[0];
    let field = t1[row.field - 1].f.clone();
    slow.bench_function("two-division match", |b| b.iter(|| two_division_match(&row.g, &field).unwrap()));
    slow.finish();
}

criterion_group!(benches, exact, fields);
criterion_main!(benches);
