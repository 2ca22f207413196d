//! Build coalgebras from structure constants and check them.

use coalgebra_deform::coalgebra::fixtures::{broken_coalgebra, divided_power, point};
use coalgebra_deform::coalgebra::{Bicomodule, Coalgebra};
use coalgebra_deform::linalg::Field;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;

    // Δ(e_0) = e_0⊗e_0, Δ(e_1) = e_0⊗e_1 + e_1⊗e_0
    let one = q.one();
    let a = Coalgebra::from_structure_constants(
        q,
        "dual numbers",
        2,
        &[(0, 0, 0, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one)],
    )?;
    println!(
        "{}: coassociative = {}",
        a.name(),
        a.check_coassociative().is_ok()
    );
    assert_eq!(a, divided_power(q, 2).with_name("dual numbers"));

    let broken = broken_coalgebra(q);
    match broken.check_coassociative().failure() {
        Some(f) => println!("{}: {f}", broken.name()),
        None => return Err("broken coalgebra passed".into()),
    }

    let f = point(q, 3);
    println!(
        "{} -> {}: morphism = {}",
        f.source().name(),
        f.target().name(),
        f.check_morphism().is_ok()
    );

    let via = Bicomodule::via(&f)?;
    println!(
        "divided_power(3) as a grouplike(1)-bicomodule: {}",
        via.check().is_ok()
    );
    assert!(via.check().is_ok());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("coalgebra checks");
}
