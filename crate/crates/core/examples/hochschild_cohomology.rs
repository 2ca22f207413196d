//! Hochschild cohomology of coalgebras with coefficients in a bicomodule.

use coalgebra_deform::coalgebra::fixtures::{divided_power, grouplike};
use coalgebra_deform::coalgebra::Bicomodule;
use coalgebra_deform::cohomology::Complex;
use coalgebra_deform::linalg::Field;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;
    for a in [
        grouplike(q, 1),
        grouplike(q, 2),
        divided_power(q, 2),
        divided_power(q, 3),
    ] {
        let complex = Complex::hochschild(Bicomodule::regular(&a));
        let dims: Vec<usize> = (1..=3)
            .map(|n| complex.cohomology(n).map(|h| h.h_dim))
            .collect::<Result<_, _>>()?;
        println!("H^1..3({}) = {dims:?}", a.name());
    }

    // The single-point coalgebra has δ = 1, 0, 1, ... on one-dimensional cochain spaces.
    let g = Complex::hochschild(Bicomodule::regular(&grouplike(q, 1)));
    for n in 1..=4 {
        let entries: Vec<String> = g
            .differential_matrix(n)?
            .as_flat()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("delta_{n} on grouplike(1) = {entries:?}");
    }

    // Dual to k[x]/(x^2): x ↦ 1 is a derivation only in characteristic 2.
    let f2 = Field::prime(2)?;
    let h = Complex::hochschild(Bicomodule::regular(&divided_power(f2, 2))).cohomology(1)?;
    println!("H^1(divided_power(2)) over {f2}: {}", h.h_dim);
    assert_eq!(h.h_dim, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hochschild cohomology");
}
