use criterion::{black_box, criterion_group, criterion_main, Criterion};
use horrocks_core::shapes::{enumerate_all_candidates, ClassFilter, Mode};
use horrocks_core::spectrum::enumerate_spectra;
use horrocks_core::verify::{check_surjective, cohomology_table, certify, fixture, phi_matrix, DEFAULT_DMAX};

fn enumeration(c: &mut Criterion) {
    c.bench_function("spectra c2=16", |b| b.iter(|| enumerate_spectra(black_box(16)).unwrap()));
    for class in [ClassFilter::Positive, ClassFilter::NonNegative, ClassFilter::Negative] {
        c.bench_function(&format!("candidates c2=8 {class:?}"), |b| {
            b.iter(|| enumerate_all_candidates(8, black_box(class), Mode::Permissive).unwrap())
        });
    }
}

fn verification(c: &mut Criterion) {
    let p17 = fixture("p17").unwrap();
    c.bench_function("surjective p17", |b| {
        b.iter(|| check_surjective(black_box(&p17), DEFAULT_DMAX).unwrap())
    });
    let phi = phi_matrix(&p17, -3).unwrap().matrix;
    c.bench_function("exact rank phi(-3) p17", |b| b.iter(|| black_box(&phi).rank()));
    c.bench_function("mod-p rank phi(-3) p17", |b| {
        b.iter(|| black_box(&phi).rank_mod(2_147_483_647))
    });
    let certified = certify(&p17, DEFAULT_DMAX).unwrap();
    c.bench_function("cohomology table p17", |b| {
        b.iter(|| cohomology_table(black_box(&certified), -5, 2).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = enumeration, verification
}
criterion_main!(benches);
