//! The deformation complex of a morphism: dimensions, the differential and
//! its cohomology.

use coalgebra_deform::coalgebra::fixtures::{augmentation, collapse_morphism, divided_power, point};
use coalgebra_deform::coalgebra::CoalgebraMorphism;
use coalgebra_deform::cohomology::{Complex, DeformationComplex, MorphismCochain};
use coalgebra_deform::linalg::{Field, Matrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;
    let morphisms = [
        CoalgebraMorphism::identity(&divided_power(q, 2)),
        collapse_morphism(q, 2),
        augmentation(q, 2),
        point(q, 2),
    ];
    for f in &morphisms {
        let complex = Complex::morphism(f)?;
        let h: Vec<usize> = (1..=3)
            .map(|n| complex.cohomology(n).map(|h| h.h_dim))
            .collect::<Result<_, _>>()?;
        let dims: Vec<usize> = (1..=3).map(|n| complex.dim(n)).collect();
        println!(
            "{} -> {}: dim C^1..3 = {dims:?}, H^1..3 = {h:?}",
            f.source().name(),
            f.target().name()
        );
    }

    // d_c of a degree-1 cochain (ξ; π) is (δξ; δπ; π∘f − f∘ξ).
    let f = &morphisms[0];
    let dc = DeformationComplex::new(f)?;
    let mut chi = Matrix::zeros(q, 2, 2);
    chi.set(0, 1, q.one());
    let w = MorphismCochain::first_degree(&dc, chi, Matrix::zeros(q, 2, 2))?;
    let dw = dc.d_c(&w)?;
    println!(
        "d_c(chi) = {:?}",
        dw.first_nonzero()
            .map(|(slot, r, c, v)| (slot, r, c, v.to_string()))
    );
    assert!(dc.d_c(&dw)?.is_zero());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("deformation complex");
}
