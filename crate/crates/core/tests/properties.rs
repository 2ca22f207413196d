mod common;

use coalgebra_deform::cohomology::{Complex, DeformationComplex, Element};
use coalgebra_deform::deformation::{
    apply_equivalence, integrate, invert_formal, FormalIsomorphism, Integration,
};
use coalgebra_deform::linalg::{image_basis, inverse, kernel_basis, rank, solve, Field, Matrix};
use proptest::prelude::*;

use common::*;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(5)),
        Just(Field::Prime(7))
    ]
}

fn random_isomorphism(
    complex: &DeformationComplex,
    order: usize,
    rng: &mut impl rand::Rng,
) -> FormalIsomorphism {
    let higher = (0..order).map(|_| morphism_cochain(complex, 1, rng)).collect();
    FormalIsomorphism::new(complex.morphism(), higher).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_nullity(seed: u64, field in fields(), rows in 0usize..6, cols in 0usize..6) {
        let mut r = rng(seed);
        let m = matrix(field, rows, cols, &mut r);
        let ker = kernel_basis(&m);
        prop_assert_eq!(ker.dim() + rank(&m), cols);
        prop_assert_eq!(image_basis(&m).dim(), rank(&m));
        for v in ker.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == field.zero()));
        }
    }

    #[test]
    fn solve_finds_preimages(seed: u64, field in fields(), rows in 1usize..6, cols in 1usize..6) {
        let mut r = rng(seed);
        let m = matrix(field, rows, cols, &mut r);
        let x = vector(field, cols, &mut r);
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_is_two_sided(seed: u64, field in fields(), n in 0usize..5) {
        let mut r = rng(seed);
        let m = invertible(field, n, &mut r);
        let inv = inverse(&m).unwrap();
        prop_assert!((&m * &inv).is_identity());
        prop_assert!((&inv * &m).is_identity());
    }

    #[test]
    fn random_fixtures_are_valid(seed: u64, field in fields()) {
        let mut r = rng(seed);
        let f = morphism(field, &mut r);
        prop_assert!(f.source().check_coassociative().is_ok());
        prop_assert!(f.target().check_coassociative().is_ok());
        prop_assert!(f.check_morphism().is_ok());
        prop_assert!(bicomodule(field, &mut r).check().is_ok());
    }

    #[test]
    fn hochschild_square_zero(seed: u64, field in fields(), n in 1usize..=3) {
        let mut r = rng(seed);
        let m = bicomodule(field, &mut r);
        let complex = Complex::hochschild(m.clone());
        let s = Element::from(cochain(&m, n, &mut r));
        let ds = complex.differential(&s).unwrap();
        prop_assert!(complex.differential(&ds).unwrap().is_zero());
    }

    #[test]
    fn differential_matrix_matches_operation(seed: u64, n in 1usize..=2) {
        let mut r = rng(seed);
        let f = morphism(Q, &mut r);
        let complex = Complex::morphism(&f).unwrap();
        let dc = DeformationComplex::new(&f).unwrap();
        let w = morphism_cochain(&dc, n, &mut r);
        let by_matrix = complex.differential_matrix(n).unwrap().mul_vec(&w.flatten());
        prop_assert_eq!(dc.d_c(&w).unwrap().flatten(), by_matrix);
    }

    #[test]
    fn cohomology_is_basis_independent(seed: u64) {
        let mut r = rng(seed);
        let f = morphism(Q, &mut r);
        let t_a = invertible(Q, f.source().dim(), &mut r);
        let t_b = invertible(Q, f.target().dim(), &mut r);
        let g = f.transport(&t_a, &t_b).unwrap();
        let (cf, cg) = (Complex::morphism(&f).unwrap(), Complex::morphism(&g).unwrap());
        for n in 1..=2 {
            prop_assert_eq!(cf.cohomology(n).unwrap().h_dim, cg.cohomology(n).unwrap().h_dim);
        }
    }

    #[test]
    fn integrated_deformations_verify(seed: u64, order in 1usize..=3) {
        let mut r = rng(seed);
        let f = morphism(Q, &mut r);
        let w = random_cocycle(&f, &mut r);
        let d = match integrate(&f, &w, order).unwrap() {
            Integration::Complete(d) => d,
            Integration::Obstructed { partial, .. } => partial,
        };
        prop_assert!(d.verify().is_ok());
        prop_assert_eq!(d.coefficient(1), w);
    }

    #[test]
    fn random_deformations_verify(seed: u64, field in fields(), order in 1usize..=3) {
        let mut r = rng(seed);
        let f = morphism(field, &mut r);
        prop_assert!(random_deformation(&f, order, &mut r).verify().is_ok());
    }

    #[test]
    fn transport_preserves_validity_and_inverts(seed: u64, order in 1usize..=3) {
        let mut r = rng(seed);
        let f = morphism(Q, &mut r);
        let dc = DeformationComplex::new(&f).unwrap();
        let d = random_deformation(&f, order, &mut r);
        let p = random_isomorphism(&dc, d.order(), &mut r);
        let moved = apply_equivalence(&p, &d).unwrap();
        prop_assert!(moved.verify().is_ok());
        prop_assert_eq!(apply_equivalence(&invert_formal(&p), &moved).unwrap(), d);
    }

    #[test]
    fn formal_inverse_composes_to_identity(seed: u64, order in 0usize..=4) {
        let mut r = rng(seed);
        let f = morphism(Q, &mut r);
        let dc = DeformationComplex::new(&f).unwrap();
        let p = random_isomorphism(&dc, order, &mut r);
        let q = invert_formal(&p);
        prop_assert!(p.compose(&q).unwrap().is_identity());
        prop_assert!(q.compose(&p).unwrap().is_identity());
        prop_assert_eq!(invert_formal(&q), p);
    }

    #[test]
    fn kron_is_multiplicative(seed: u64, field in fields()) {
        let mut r = rng(seed);
        let (a, b) = (matrix(field, 2, 3, &mut r), matrix(field, 3, 2, &mut r));
        let (c, d) = (matrix(field, 2, 2, &mut r), matrix(field, 2, 1, &mut r));
        let lhs = &a.kron(&c) * &b.kron(&d);
        let rhs: Matrix = (&a * &b).kron(&(&c * &d));
        prop_assert_eq!(lhs, rhs);
    }
}
