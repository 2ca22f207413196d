//! Obstructions to extending a truncated deformation by one order.

use coalgebra_deform::coalgebra::fixtures::null_coalgebra;
use coalgebra_deform::coalgebra::CoalgebraMorphism;
use coalgebra_deform::cohomology::{DeformationComplex, MorphismCochain};
use coalgebra_deform::deformation::{
    divided_power_deformation, extend, obstruction, Extension, TruncatedDeformation,
};
use coalgebra_deform::linalg::{Field, Matrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;

    let d = divided_power_deformation(q, 2);
    let ob = obstruction(&d)?;
    println!("divided power, order 2: obstructed = {}", ob.is_obstructed());
    match extend(&d, None)? {
        Extension::Extended(e) => println!("extended to order {}, valid = {}", e.order(), e.verify().is_ok()),
        Extension::Obstructed(_) => return Err("divided power deformation is unobstructed".into()),
    }

    // With Δ = 0 every first-order term is a cocycle, but a non-coassociative
    // Δ_1 leaves an obstruction that no Δ_2 can cancel.
    let f = CoalgebraMorphism::identity(&null_coalgebra(q, 2));
    let complex = DeformationComplex::new(&f)?;
    let mut delta1 = Matrix::zeros(q, 4, 2);
    delta1.set(1, 0, q.one());
    let w = MorphismCochain::new(&complex, 2, delta1.clone(), delta1, Matrix::zeros(q, 2, 2))?;
    let d = TruncatedDeformation::new(&f, vec![w])?;
    println!(
        "null(2) with a broken first-order term: valid = {}",
        d.verify().is_ok()
    );
    match extend(&d, None)? {
        Extension::Obstructed(ob) => {
            let class: Vec<String> = ob.class.iter().map(ToString::to_string).collect();
            println!("obstructed; class in H^3 = {class:?}");
        }
        Extension::Extended(_) => return Err("expected an obstruction".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("obstruction extension");
}
