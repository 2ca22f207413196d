//! Trivialize deformations when the leading coefficients are coboundaries.

use coalgebra_deform::coalgebra::fixtures::grouplike;
use coalgebra_deform::coalgebra::CoalgebraMorphism;
use coalgebra_deform::cohomology::{DeformationComplex, MorphismCochain};
use coalgebra_deform::deformation::{
    apply_equivalence, divided_power_deformation, trivialize, FormalIsomorphism, Trivialization,
    TruncatedDeformation,
};
use coalgebra_deform::linalg::{Field, Matrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;

    // Move the trivial deformation of Id on grouplike(1) along Id + 2t + 3t².
    let f = CoalgebraMorphism::identity(&grouplike(q, 1));
    let complex = DeformationComplex::new(&f)?;
    let coeff = |c: i64| -> Result<MorphismCochain, Box<dyn std::error::Error>> {
        let m = Matrix::from_i64(q, &[&[c]]);
        Ok(MorphismCochain::first_degree(&complex, m.clone(), m)?)
    };
    let p = FormalIsomorphism::new(&f, vec![coeff(2)?, coeff(3)?])?;
    let moved = apply_equivalence(&p, &TruncatedDeformation::trivial(&f, 2)?)?;
    println!("moved deformation valid = {}", moved.verify().is_ok());

    match trivialize(&moved)? {
        Trivialization::Trivialized(back) => {
            let trivial = apply_equivalence(&back, &moved)?;
            println!(
                "trivialized; result is trivial = {}",
                trivial == TruncatedDeformation::trivial(&f, 2)?
            );
        }
        Trivialization::Blocked { .. } => return Err("H^2 = 0 here".into()),
    }

    match trivialize(&divided_power_deformation(q, 3))? {
        Trivialization::Blocked { order, class, .. } => {
            let class: Vec<String> = class.iter().map(ToString::to_string).collect();
            println!("divided power deformation blocked at order {order}, class {class:?}");
        }
        Trivialization::Trivialized(_) => return Err("expected a nontrivial deformation".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("rigidity trivialize");
}
