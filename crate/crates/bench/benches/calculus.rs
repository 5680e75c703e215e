use criterion::{black_box, criterion_group, criterion_main, Criterion};

use wormcalc::{
    compare_worms, consistency_sequence, hyperexp, hyperlog, order_type, parse_ordinal, parse_worm,
    print_ordinal, Ordinal, Worm,
};

fn w() -> Ordinal {
    Ordinal::omega()
}

/// The worked five-entry worm with transfinite entries; the heaviest single
/// input exercised by the test suite.
fn spiky_worm() -> Worm {
    let spike = (&w() + &w()).succ();
    Worm::new(vec![
        spike.clone(),
        w(),
        spike,
        Ordinal::zero(),
        &w() * &w(),
    ])
}

fn bench_order_type(c: &mut Criterion) {
    let a = spiky_worm();
    c.bench_function("order_type/transfinite worm", |b| {
        b.iter(|| order_type(black_box(&a)))
    });
}

fn bench_compare(c: &mut Criterion) {
    let a = parse_worm("[2, 1, 1, 0, 2, 1, 0, 1, 1, 2, 0, 1]", false).unwrap();
    let b = parse_worm("[2, 1, 1, 0, 2, 1, 0, 2, 0, 1, 1, 1]", false).unwrap();
    c.bench_function("compare_worms/length 12", |bench| {
        bench.iter(|| compare_worms(black_box(&a), black_box(&b)))
    });
}

fn bench_hyper(c: &mut Criterion) {
    let level = &(&w() * &w()) + &w().succ();
    let x = &Ordinal::veblen(&Ordinal::one(), &Ordinal::one()) + &Ordinal::nat(3);
    c.bench_function("hyperexp/w^2 + w + 1", |b| {
        b.iter(|| hyperexp(black_box(&level), black_box(&x)))
    });
    let lifted = hyperexp(&level, &x);
    c.bench_function("hyperlog/w^2 + w + 1", |b| {
        b.iter(|| hyperlog(black_box(&level), black_box(&lifted)))
    });
}

fn bench_sequence(c: &mut Criterion) {
    let a = spiky_worm();
    c.bench_function("consistency_sequence/transfinite worm", |b| {
        b.iter(|| consistency_sequence(black_box(&a)).unwrap())
    });
}

fn bench_textio(c: &mut Criterion) {
    let text = "phi(2,0) + phi(1,phi(1,w)*2) + w^(w^w + w*2 + 3) + w + 5";
    c.bench_function("parse+print/long expression", |b| {
        b.iter(|| print_ordinal(&parse_ordinal(black_box(text)).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_order_type,
    bench_compare,
    bench_hyper,
    bench_sequence,
    bench_textio
);
criterion_main!(benches);
