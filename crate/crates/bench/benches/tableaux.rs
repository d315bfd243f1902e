use criterion::{criterion_group, criterion_main, Criterion};
use splitloci::{enumerate_k_uniform, saturate, splitting_locus, ChainOfLoops};
use splitloci_bench::{catalan, trigonal};

fn enumeration(c: &mut Criterion) {
    let mu = trigonal();
    let shape = mu.lambda();
    c.bench_function("enumerate_k_uniform/trigonal_g7", |b| {
        b.iter(|| enumerate_k_uniform(&shape, mu.k(), 7).unwrap().count())
    });
    let all: Vec<_> = enumerate_k_uniform(&shape, mu.k(), 7).unwrap().collect();
    c.bench_function("saturate/trigonal_g7", |b| {
        b.iter(|| {
            all.iter()
                .map(|t| saturate(t, mu.k()).unwrap())
                .collect::<Vec<_>>()
        })
    });
}

fn loci(c: &mut Criterion) {
    let mu = catalan(5);
    let graph = ChainOfLoops::new(9, mu.k());
    c.bench_function("splitting_locus/catalan5_g9", |b| {
        b.iter(|| splitting_locus(&mu, &graph).unwrap().tori.len())
    });
    let locus = splitting_locus(&mu, &graph).unwrap();
    c.bench_function("connectivity/catalan5_g9", |b| {
        b.iter(|| locus.is_connected_in_codimension_one().unwrap())
    });
}

criterion_group!(benches, enumeration, loci);
criterion_main!(benches);
