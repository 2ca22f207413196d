#![allow(dead_code)]

use coalgebra_deform::coalgebra::fixtures::{small_coalgebras, small_morphisms};
use coalgebra_deform::coalgebra::{Bicomodule, Coalgebra, CoalgebraMorphism};
use coalgebra_deform::cohomology::{Cochain, Complex, DeformationComplex, MorphismCochain};
use coalgebra_deform::deformation::{extend, obstruction, Extension, TruncatedDeformation};
use coalgebra_deform::linalg::{inverse, kernel_basis, Field, Matrix, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const Q: Field = Field::Rational;
pub const MAX_DIM: usize = 3;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a/b` with `|a| ≤ 9`, `1 ≤ b ≤ 9`, mapped into the field.
pub fn scalar(field: Field, rng: &mut impl Rng) -> Scalar {
    let q = BigRational::new(
        BigInt::from(rng.gen_range(-9i64..=9)),
        BigInt::from(rng.gen_range(1i64..=9)),
    );
    field.embed(&q).unwrap_or_else(|| field.one())
}

/// Half the entries zero, the rest small fractions.
pub fn sparse_scalar(field: Field, rng: &mut impl Rng) -> Scalar {
    if rng.gen_bool(0.5) {
        field.zero()
    } else {
        scalar(field, rng)
    }
}

pub fn vector(field: Field, len: usize, rng: &mut impl Rng) -> Vec<Scalar> {
    (0..len).map(|_| sparse_scalar(field, rng)).collect()
}

pub fn matrix(field: Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| sparse_scalar(field, rng))
}

pub fn invertible(field: Field, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = Matrix::from_fn(field, n, n, |_, _| sparse_scalar(field, rng));
        if inverse(&m).is_some() {
            return m;
        }
    }
}

fn small<T: Clone>(items: Vec<T>, dim: impl Fn(&T) -> usize) -> Vec<T> {
    items.into_iter().filter(|x| dim(x) <= MAX_DIM).collect()
}

/// A built-in coalgebra of dimension ≤ 3 in a random basis.
pub fn coalgebra(field: Field, rng: &mut impl Rng) -> Coalgebra {
    let pool = small(small_coalgebras(field), Coalgebra::dim);
    let a = pool.choose(rng).expect("nonempty pool");
    a.transport(&invertible(field, a.dim(), rng)).expect("invertible")
}

/// A built-in morphism between coalgebras of dimension ≤ 3 in random bases.
pub fn morphism(field: Field, rng: &mut impl Rng) -> CoalgebraMorphism {
    let pool = small(small_morphisms(field), |f: &CoalgebraMorphism| {
        f.source().dim().max(f.target().dim())
    });
    let f = pool.choose(rng).expect("nonempty pool");
    let t_a = invertible(field, f.source().dim(), rng);
    let t_b = invertible(field, f.target().dim(), rng);
    f.transport(&t_a, &t_b).expect("invertible")
}

/// The regular bicomodule of a random coalgebra or the target of a random
/// morphism viewed over its source.
pub fn bicomodule(field: Field, rng: &mut impl Rng) -> Bicomodule {
    if rng.gen_bool(0.5) {
        Bicomodule::regular(&coalgebra(field, rng))
    } else {
        Bicomodule::via(&morphism(field, rng)).expect("valid morphism")
    }
}

pub fn cochain(m: &Bicomodule, degree: usize, rng: &mut impl Rng) -> Cochain {
    let len = coalgebra_deform::cohomology::cochain_dim(m, degree);
    Cochain::from_flat(m, degree, vector(m.field(), len, rng)).expect("length matches")
}

pub fn morphism_cochain(complex: &DeformationComplex, degree: usize, rng: &mut impl Rng) -> MorphismCochain {
    let flat = vector(complex.field(), complex.dim(degree), rng);
    MorphismCochain::from_flat(complex, degree, &flat).expect("length matches")
}

/// A random element of `ker D_2`, as a combination of its basis.
pub fn random_cocycle(f: &CoalgebraMorphism, rng: &mut impl Rng) -> MorphismCochain {
    let field = f.field();
    let complex = Complex::morphism(f).expect("valid morphism");
    let dc = DeformationComplex::new(f).expect("valid morphism");
    let d2 = complex.differential_matrix(2).expect("degree 2");
    let mut flat = vec![field.zero(); dc.dim(2)];
    for v in kernel_basis(&d2).basis() {
        let c = sparse_scalar(field, rng);
        for (x, y) in flat.iter_mut().zip(v) {
            *x = field.add(x, &field.mul(&c, y));
        }
    }
    MorphismCochain::from_flat(&dc, 2, &flat).expect("length matches")
}

/// Grows a deformation by repeated `extend`, adding a random 2-cocycle to the
/// canonical solution at every order. Stops early when obstructed.
pub fn random_deformation(f: &CoalgebraMorphism, order: usize, rng: &mut impl Rng) -> TruncatedDeformation {
    let mut d = TruncatedDeformation::trivial(f, 0).expect("valid morphism");
    while d.order() < order {
        let ob = obstruction(&d).expect("valid deformation");
        let Some(base) = ob.cobounding else { break };
        let w = base.add(&random_cocycle(f, rng));
        d = match extend(&d, Some(&w)).expect("solutions are accepted") {
            Extension::Extended(e) => e,
            Extension::Obstructed(_) => unreachable!("a solution was supplied"),
        };
    }
    d
}
