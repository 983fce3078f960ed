use criterion::{criterion_group, criterion_main, Criterion};
use fibergerm_core::resolution::residue_field_betti;
use fibergerm_core::{corpus, verify_gluing, GluingAnalysis, Ideal};
use std::hint::black_box;

fn standard_basis(c: &mut Criterion) {
    let v = corpus::two_cusps().unwrap();
    let p = v.presentation();
    c.bench_function("standard basis, two cusps", |b| {
        b.iter(|| Ideal::local(p.nvars(), p.relations().generators().to_vec()).standard_basis().unwrap())
    });
}

fn residue_field(c: &mut Criterion) {
    let mut group = c.benchmark_group("residue field Betti numbers");
    group.sample_size(10);
    for (name, v) in [
        ("plane along origin, t^6", corpus::plane_along_origin().unwrap()),
        ("two cusps, t^5", corpus::two_cusps().unwrap()),
    ] {
        let bound = if name.ends_with('6') { 6 } else { 5 };
        let p = v.presentation().clone();
        group.bench_function(name, |b| b.iter(|| residue_field_betti(black_box(&p), bound).unwrap()));
    }
    group.finish();
}

fn gluing(c: &mut Criterion) {
    let mut group = c.benchmark_group("gluing");
    group.sample_size(10);
    group.bench_function("self-glue plane along line", |b| b.iter(|| corpus::plane_along_line().unwrap()));
    group.bench_function("verify cusp and line, t^4", |b| {
        b.iter(|| verify_gluing(&GluingAnalysis::new(corpus::cusp_and_line().unwrap(), 4), 4).unwrap())
    });
    group.finish();
}

criterion_group!(benches, standard_basis, residue_field, gluing);
criterion_main!(benches);
