//! Integrate 2-cocycles of the deformation complex to higher order.

use coalgebra_deform::coalgebra::fixtures::truncation_inclusion;
use coalgebra_deform::cohomology::Complex;
use coalgebra_deform::deformation::{infinitesimal, integrate, Integration};
use coalgebra_deform::linalg::Field;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;
    let f = truncation_inclusion(q, 2, 3);
    let complex = Complex::morphism(&f)?;
    let h2 = complex.cohomology(2)?;
    println!(
        "H^2 of {} -> {}: {}",
        f.source().name(),
        f.target().name(),
        h2.h_dim
    );

    for (i, rep) in h2.representatives.iter().enumerate() {
        let w = rep
            .as_morphism()
            .ok_or("morphism complex yields morphism cochains")?;
        match integrate(&f, w, 4)? {
            Integration::Complete(d) => {
                let lead = infinitesimal(&d)?.expect("nonzero first order");
                println!(
                    "representative {i}: order {} deformation, valid = {}, leading order {} is a cocycle = {}",
                    d.order(),
                    d.verify().is_ok(),
                    lead.order,
                    lead.is_cocycle
                );
            }
            Integration::Obstructed { partial, obstruction } => {
                println!(
                    "representative {i}: stops at order {}, class {:?}",
                    partial.order() + 1,
                    obstruction.class
                );
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("integrate cocycle");
}
