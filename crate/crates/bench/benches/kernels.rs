use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symrank::construct::ward_space;
use symrank::search::{max_constant_rank_dim, SearchMode, SearchSpec};
use symrank::verify::random_form_space;
use symrank::{make_field, Limits};

fn rank(c: &mut Criterion) {
    let k = make_field(7, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let forms: Vec<_> = (0..64).map(|_| random_form_space(&k, 8, 1, &mut rng).unwrap().basis()[0].clone()).collect();
    c.bench_function("rank 8x8 over F_7", |b| b.iter(|| forms.iter().map(|g| black_box(g).rank()).sum::<usize>()));
}

fn ward_census(c: &mut Criterion) {
    let w = ward_space().unwrap();
    let lim = Limits::default();
    c.bench_function("ward type census", |b| b.iter(|| w.space.type_census(&lim).unwrap()));
}

fn search(c: &mut Criterion) {
    let k = make_field(5, 1).unwrap();
    let spec = SearchSpec::new(&k, 3, 2, SearchMode::Plain);
    let mut group = c.benchmark_group("search");
    group.sample_size(20);
    group.bench_function("exhaustive rank 2 over F_5^3", |b| b.iter(|| max_constant_rank_dim(&spec).unwrap()));
    group.finish();
}

criterion_group!(benches, rank, ward_census, search);
criterion_main!(benches);
