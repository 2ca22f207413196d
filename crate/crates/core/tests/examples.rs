#[path = "../examples/coalgebra_checks.rs"]
mod coalgebra_checks;

#[path = "../examples/hochschild_cohomology.rs"]
mod hochschild_cohomology;

#[path = "../examples/deformation_complex.rs"]
mod deformation_complex;

#[path = "../examples/obstruction_extension.rs"]
mod obstruction_extension;

#[path = "../examples/integrate_cocycle.rs"]
mod integrate_cocycle;

#[path = "../examples/rigidity_trivialize.rs"]
mod rigidity_trivialize;

#[path = "../examples/equivalence_transport.rs"]
mod equivalence_transport;

#[path = "../examples/problem_files.rs"]
mod problem_files;

#[test]
fn coalgebra_checks_runs() {
    coalgebra_checks::run_example().expect("coalgebra_checks example should run");
}

#[test]
fn hochschild_cohomology_runs() {
    hochschild_cohomology::run_example().expect("hochschild_cohomology example should run");
}

#[test]
fn deformation_complex_runs() {
    deformation_complex::run_example().expect("deformation_complex example should run");
}

#[test]
fn obstruction_extension_runs() {
    obstruction_extension::run_example().expect("obstruction_extension example should run");
}

#[test]
fn integrate_cocycle_runs() {
    integrate_cocycle::run_example().expect("integrate_cocycle example should run");
}

#[test]
fn rigidity_trivialize_runs() {
    rigidity_trivialize::run_example().expect("rigidity_trivialize example should run");
}

#[test]
fn equivalence_transport_runs() {
    equivalence_transport::run_example().expect("equivalence_transport example should run");
}

#[test]
fn problem_files_runs() {
    problem_files::run_example().expect("problem_files example should run");
}
