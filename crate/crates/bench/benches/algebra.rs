use criterion::{black_box, criterion_group, criterion_main, Criterion};

use twverma::exact::{ParamPoly, Rational};
use twverma::liealg::{LieBasis, Weight, WeylGroupElem};
use twverma::realize::{derived_table, verify_homomorphism};
use twverma::verma::{self, span, ModuleSpec};
use twverma::weyl::WeylElement;

fn weyl_products(c: &mut Criterion) {
    let a: WeylElement<Rational> = twverma::weyl::parse_element("(x*dz - 2*dy)^3 + x^2*dx").unwrap();
    let b: WeylElement<Rational> = twverma::weyl::parse_element("(dx + y*dz)^3 - z").unwrap();
    c.bench_function("weyl product, degree 9", |bch| bch.iter(|| black_box(&a).mul(black_box(&b))));
}

fn tables(c: &mut Criterion) {
    let lam = Weight::<ParamPoly>::symbolic().unwrap();
    c.bench_function("derived symbolic table s1s2s1", |b| {
        b.iter(|| derived_table(WeylGroupElem::S1S2S1, black_box(&lam)))
    });
    let t = derived_table(WeylGroupElem::S1, &lam);
    c.bench_function("bracket check s1, degree 4", |b| b.iter(|| verify_homomorphism(black_box(&t), 4)));
}

fn solvers(c: &mut Criterion) {
    let spec = ModuleSpec::new(WeylGroupElem::E, Weight::<Rational>::from_ints(3, 3)).unwrap();
    let mu = Weight::from_ints(-5, -5);
    c.bench_function("singular solver e, l=(3,3), mu=(-5,-5)", |b| {
        b.iter(|| verma::singular_vectors(&spec, black_box(&mu), &LieBasis::RAISING, 16))
    });
    let lam = Weight::<Rational>::from_ints(1, 1);
    c.bench_function("branching kernel s1, degree 8", |b| {
        b.iter(|| span::branching_kernel(black_box(&lam), 8).unwrap())
    });
    let s1 = ModuleSpec::new(WeylGroupElem::S1, Weight::<Rational>::from_ints(-2, 1)).unwrap();
    c.bench_function("submodule span closure, degree 8", |b| {
        b.iter(|| span::submodule_span(&s1, &[s1.one()], 8))
    });
}

criterion_group!(benches, weyl_products, tables, solvers);
criterion_main!(benches);
