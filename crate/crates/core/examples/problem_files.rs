//! Read and write problem files and run the batch commands on them.

use coalgebra_deform::cli::{self, ComplexKind};
use coalgebra_deform::linalg::Field;
use coalgebra_deform::problem::ProblemFile;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = cli::fixture_corpus(Field::Rational);
    let text = corpus.to_json();
    let parsed = ProblemFile::parse(&text, None)?;
    println!(
        "fixture corpus: {} bytes, round trip = {}",
        text.len(),
        parsed == corpus
    );

    let report = cli::cmd_check(&parsed, "divided_power")?;
    print!("{}", report.to_json());
    let report = cli::cmd_cohomology(&parsed, ComplexKind::Morphism, "id_divided_power(2)", 2)?;
    println!("H^2 = {}", report.payload["h_dim"]);
    let report = cli::cmd_obstruct(&parsed, "null_broken")?;
    println!("null_broken: {} (exit {})", report.status, report.exit_code());

    let over_f3 = ProblemFile::parse(&text, Some(Field::prime(3)?))?;
    println!(
        "same corpus over {}: {} deformations",
        over_f3.field,
        over_f3.deformations.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("problem files");
}
