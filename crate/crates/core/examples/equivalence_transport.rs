//! Transport a deformation along a formal isomorphism and back.

use coalgebra_deform::cohomology::{DeformationComplex, MorphismCochain};
use coalgebra_deform::deformation::{
    apply_equivalence, divided_power_deformation, invert_formal, FormalIsomorphism,
};
use coalgebra_deform::linalg::{Field, Matrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;
    let d = divided_power_deformation(q, 3);
    let f = d.morphism().clone();
    let complex = DeformationComplex::new(&f)?;

    let a = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
    let b = Matrix::from_i64(q, &[&[1, 0], &[0, -1]]);
    let p = FormalIsomorphism::new(
        &f,
        vec![
            MorphismCochain::first_degree(&complex, a.clone(), b.clone())?,
            MorphismCochain::first_degree(&complex, b, a)?,
            MorphismCochain::zero(&complex, 1),
        ],
    )?;
    let moved = apply_equivalence(&p, &d)?;
    println!("transported deformation valid = {}", moved.verify().is_ok());
    for n in 1..=3 {
        println!("  Δ_A,{n} nonzeros: {}", moved.delta_a(n).nonzeros().count());
    }

    let back = apply_equivalence(&invert_formal(&p), &moved)?;
    println!("inverse brings it back = {}", back == d);
    assert!(p.compose(&invert_formal(&p))?.is_identity());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("equivalence transport");
}
