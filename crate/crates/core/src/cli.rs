//! Batch commands behind the `codef` binary.
//!
//! Each command reads a [`ProblemFile`], runs one computation and returns a
//! [`Report`]. Errors returned from a command are usage or parse errors
//! (exit code 2); mathematical failures are reports with status `fail` or
//! `obstructed` (exit code 1).

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::coalgebra::fixtures::{
    augmentation, broken_coalgebra, collapse_morphism, divided_power, grouplike, null_coalgebra, point,
    truncation_inclusion, zero_coalgebra,
};
use crate::coalgebra::{Bicomodule, CoalgebraMorphism};
use crate::cohomology::{Complex, DeformationComplex, Element, MorphismCochain};
use crate::deformation::{
    apply_equivalence, divided_power_deformation, integrate, obstruction, trivialize, FormalIsomorphism,
    Integration, Trivialization, TruncatedDeformation,
};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::problem::{Named, ProblemFile};
use crate::verdict::{Failure, Verdict};

/// Degrees above this trigger a size warning on coalgebras of dimension ≥ 3.
pub const DEGREE_WARNING: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Obstructed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Obstructed => "obstructed",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail | Status::Obstructed => 1,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub lines: Vec<String>,
    pub payload: Value,
    pub elapsed: Duration,
}

impl Report {
    fn new(command: String) -> Self {
        Report {
            command,
            status: Status::Ok,
            lines: Vec::new(),
            payload: json!({}),
            elapsed: Duration::ZERO,
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn set(&mut self, key: &str, v: Value) {
        self.payload
            .as_object_mut()
            .expect("payload is an object")
            .insert(key.to_string(), v);
    }

    fn fail(&mut self, failure: &Failure) {
        self.status = Status::Fail;
        self.line(format!("failed: {failure}"));
        self.set("failure", failure_json(failure));
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// Machine-readable form. Contains no timing, so it is byte-stable.
    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "status": self.status.as_str(),
            "lines": self.lines,
            "payload": self.payload,
        });
        let mut s = serde_json::to_string_pretty(&v).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Human-readable form; the final line is the timing.
    pub fn to_text(&self) -> String {
        let mut s = format!("$ {}\n", self.command);
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s.push_str(&format!("status: {}\n", self.status));
        s.push_str(&format!("time: {:.3} ms\n", self.elapsed.as_secs_f64() * 1e3));
        s
    }
}

/// Which cochain complex `cohomology` works in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// `C^*(A, A)`; the name may be a coalgebra or a morphism's source.
    Source,
    /// `C^*(B, B)`; the name may be a coalgebra or a morphism's target.
    Target,
    /// The deformation complex `C^*_c(f)`.
    Morphism,
    /// `C^*(A, B)` with `B` a bicomodule via `f`.
    Via,
}

impl FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "source" => Ok(ComplexKind::Source),
            "target" => Ok(ComplexKind::Target),
            "morphism" => Ok(ComplexKind::Morphism),
            "via" => Ok(ComplexKind::Via),
            _ => Err(Error::Parse(format!(
                "unknown complex `{s}` (expected source, target, morphism or via)"
            ))),
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Source => "source",
            ComplexKind::Target => "target",
            ComplexKind::Morphism => "morphism",
            ComplexKind::Via => "via",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check {
        file: PathBuf,
        name: String,
    },
    Cohomology {
        file: PathBuf,
        complex: ComplexKind,
        name: String,
        degree: usize,
    },
    Obstruct {
        file: PathBuf,
        name: String,
    },
    Integrate {
        file: PathBuf,
        name: String,
        order: usize,
        out: PathBuf,
    },
    Trivialize {
        file: PathBuf,
        name: String,
        out: PathBuf,
    },
}

impl Command {
    fn echo(&self) -> String {
        match self {
            Command::Check { file, name } => format!("check {} {name}", file.display()),
            Command::Cohomology {
                file,
                complex,
                name,
                degree,
            } => format!("cohomology {} {complex} {name} {degree}", file.display()),
            Command::Obstruct { file, name } => format!("obstruct {} {name}", file.display()),
            Command::Integrate {
                file,
                name,
                order,
                out,
            } => {
                format!("integrate {} {name} {order} -o {}", file.display(), out.display())
            }
            Command::Trivialize { file, name, out } => {
                format!("trivialize {} {name} -o {}", file.display(), out.display())
            }
        }
    }

    fn file(&self) -> &Path {
        match self {
            Command::Check { file, .. }
            | Command::Cohomology { file, .. }
            | Command::Obstruct { file, .. }
            | Command::Integrate { file, .. }
            | Command::Trivialize { file, .. } => file,
        }
    }
}

pub fn load(path: &Path, field: Option<Field>) -> Result<ProblemFile> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    ProblemFile::parse(&text, field)
}

/// Loads the command's input file and runs it.
pub fn run(cmd: &Command, field: Option<Field>) -> Result<Report> {
    let start = Instant::now();
    let problem = load(cmd.file(), field)?;
    let mut report = match cmd {
        Command::Check { name, .. } => cmd_check(&problem, name),
        Command::Cohomology {
            complex,
            name,
            degree,
            ..
        } => cmd_cohomology(&problem, *complex, name, *degree),
        Command::Obstruct { name, .. } => cmd_obstruct(&problem, name),
        Command::Integrate { name, order, out, .. } => cmd_integrate(&problem, name, *order, out),
        Command::Trivialize { name, out, .. } => cmd_trivialize(&problem, name, out),
    }?;
    report.command = cmd.echo();
    report.elapsed = start.elapsed();
    Ok(report)
}

fn unknown(kind: &str, name: &str) -> Error {
    Error::UnknownName(format!("no {kind} named `{name}`"))
}

fn failure_json(f: &Failure) -> Value {
    json!({
        "equation": f.equation,
        "order": f.order,
        "row": f.row,
        "col": f.col,
        "residual": f.residual.to_string(),
    })
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Nonzero entries as `[row, col, value]`.
fn sparse(m: &Matrix) -> Value {
    Value::Array(
        m.nonzeros()
            .map(|(r, c, v)| json!([r, c, v.to_string()]))
            .collect(),
    )
}

fn sparse_text(m: &Matrix) -> String {
    let entries: Vec<String> = m.nonzeros().map(|(r, c, v)| format!("({r},{c})={v}")).collect();
    if entries.is_empty() {
        "0".into()
    } else {
        entries.join(" ")
    }
}

fn cochain_json(w: &MorphismCochain) -> Value {
    json!({ "A": sparse(w.xi()), "B": sparse(w.pi()), "F": sparse(w.phi()) })
}

fn cochain_lines(report: &mut Report, label: &str, w: &MorphismCochain) {
    report.line(format!("{label} A: {}", sparse_text(w.xi())));
    report.line(format!("{label} B: {}", sparse_text(w.pi())));
    report.line(format!("{label} F: {}", sparse_text(w.phi())));
}

fn class_text(class: &[Scalar]) -> String {
    let parts: Vec<String> = class.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Checks the morphism and both of its coalgebras; `None` when all hold.
fn morphism_failure(f: &CoalgebraMorphism) -> Option<Failure> {
    let v = f
        .source()
        .check_coassociative()
        .and_then(|| f.target().check_coassociative())
        .and_then(|| f.check_morphism());
    v.failure().cloned()
}

pub fn cmd_check(p: &ProblemFile, name: &str) -> Result<Report> {
    let mut r = Report::new(format!("check {name}"));
    let verdict: Verdict;
    if let Some(c) = p.coalgebras.get(name) {
        r.set("kind", json!("coalgebra"));
        r.set("dim", json!(c.dim()));
        r.line(format!("coalgebra {name} of dimension {}", c.dim()));
        verdict = c.check_coassociative();
    } else if let Some(f) = p.morphisms.get(name) {
        r.set("kind", json!("morphism"));
        r.line(format!(
            "morphism {name}: {} -> {}",
            f.source().name(),
            f.target().name()
        ));
        verdict = f
            .source()
            .check_coassociative()
            .and_then(|| f.target().check_coassociative())
            .and_then(|| f.check_morphism());
    } else if let Some(d) = p.deformations.get(name) {
        r.set("kind", json!("deformation"));
        r.set("order", json!(d.value.order()));
        r.line(format!(
            "deformation {name} over {} to order {}",
            d.morphism,
            d.value.order()
        ));
        verdict = d.value.verify();
    } else if let Some(iso) = p.isomorphisms.get(name) {
        r.set("kind", json!("isomorphism"));
        r.set("order", json!(iso.value.order()));
        r.line(format!(
            "formal isomorphism {name} over {} to order {}",
            iso.morphism,
            iso.value.order()
        ));
        verdict = match morphism_failure(iso.value.morphism()) {
            Some(f) => Verdict::Failed(f),
            None => Verdict::Ok,
        };
    } else if let Some(w) = p.cocycles.get(name) {
        r.set("kind", json!("cocycle"));
        r.line(format!("cochain {name} over {}", w.morphism));
        let dw = DeformationComplex::new(&p.morphisms[&w.morphism])?.d_c(&w.value)?;
        verdict = match dw.first_nonzero() {
            None => Verdict::Ok,
            Some((slot, row, col, v)) => Verdict::Failed(Failure {
                equation: format!("d_c(w) = 0 in slot {}", slot_letter(slot)),
                order: None,
                row,
                col,
                residual: v.clone(),
            }),
        };
    } else {
        return Err(unknown("object", name));
    }
    match verdict.failure() {
        None => r.line("all checks hold"),
        Some(f) => r.fail(f),
    }
    Ok(r)
}

fn slot_letter(slot: &str) -> &'static str {
    match slot {
        "xi" => "A",
        "pi" => "B",
        _ => "F",
    }
}

pub fn cmd_cohomology(p: &ProblemFile, kind: ComplexKind, name: &str, degree: usize) -> Result<Report> {
    if degree == 0 {
        return Err(Error::OutOfRange("cohomology degree must be at least 1".into()));
    }
    let mut r = Report::new(format!("cohomology {kind} {name} {degree}"));
    let morphism = p.morphisms.get(name);
    let (complex, dim, failure) = match kind {
        ComplexKind::Source | ComplexKind::Target => {
            let c = match (p.coalgebras.get(name), morphism) {
                (Some(c), _) => c,
                (None, Some(f)) if kind == ComplexKind::Source => f.source(),
                (None, Some(f)) => f.target(),
                (None, None) => return Err(unknown("coalgebra or morphism", name)),
            };
            let failure = c.check_coassociative().failure().cloned();
            (
                failure
                    .is_none()
                    .then(|| Complex::hochschild(Bicomodule::regular(c))),
                c.dim(),
                failure,
            )
        }
        ComplexKind::Morphism | ComplexKind::Via => {
            let f = morphism.ok_or_else(|| unknown("morphism", name))?;
            let failure = morphism_failure(f);
            let complex = match (&failure, kind) {
                (Some(_), _) => None,
                (None, ComplexKind::Morphism) => Some(Complex::morphism(f)?),
                (None, _) => Some(Complex::hochschild(Bicomodule::via(f)?)),
            };
            (complex, f.source().dim().max(f.target().dim()), failure)
        }
    };
    if let Some(w) = degree_warning(degree, dim) {
        r.line(w.clone());
        r.set("warning", json!(w));
    }
    let Some(complex) = complex else {
        r.fail(failure.as_ref().expect("failure recorded"));
        return Ok(r);
    };
    let h = complex.cohomology(degree)?;
    r.line(format!("cocycle_dim: {}", h.cocycle_dim));
    r.line(format!("coboundary_dim: {}", h.coboundary_dim));
    r.line(format!("h_dim: {}", h.h_dim));
    let reps: Vec<Vec<Scalar>> = h.representatives.iter().map(Element::flatten).collect();
    for (i, rep) in reps.iter().enumerate() {
        r.line(format!("representative {i}: {}", class_text(rep)));
    }
    r.set("degree", json!(degree));
    r.set("cochain_dim", json!(complex.dim(degree)));
    r.set("cocycle_dim", json!(h.cocycle_dim));
    r.set("coboundary_dim", json!(h.coboundary_dim));
    r.set("h_dim", json!(h.h_dim));
    r.set(
        "representatives",
        Value::Array(reps.iter().map(|v| scalars(v)).collect()),
    );
    Ok(r)
}

/// Cochain matrices have `d^(n+1)` rows; warn before they get large.
pub fn degree_warning(degree: usize, dim: usize) -> Option<String> {
    (degree > DEGREE_WARNING && dim >= 3).then(|| {
        format!(
            "warning: degree {degree} over dimension {dim} builds matrices with {dim}^{} rows",
            degree + 1
        )
    })
}

fn deformation<'a>(p: &'a ProblemFile, name: &str) -> Result<&'a TruncatedDeformation> {
    p.deformations
        .get(name)
        .map(|d| &d.value)
        .ok_or_else(|| unknown("deformation", name))
}

pub fn cmd_obstruct(p: &ProblemFile, name: &str) -> Result<Report> {
    let d = deformation(p, name)?;
    let mut r = Report::new(format!("obstruct {name}"));
    r.set("order", json!(d.order()));
    if let Some(f) = d.verify().failure() {
        r.fail(f);
        return Ok(r);
    }
    let ob = obstruction(d)?;
    cochain_lines(&mut r, "Ob", &ob.cochain);
    r.set("obstruction", cochain_json(&ob.cochain));
    // obstruction() itself refuses to return a non-cocycle, so reaching
    // here means d_c(Ob) = 0 was checked.
    r.line("3-cocycle: confirmed");
    r.set("cocycle", json!(true));
    r.line(format!("class: {}", class_text(&ob.class)));
    r.set("class", scalars(&ob.class));
    if ob.is_obstructed() {
        r.status = Status::Obstructed;
        r.line(format!("order {} cannot be extended", d.order()));
    } else {
        r.line(format!("order {} extends to order {}", d.order(), d.order() + 1));
    }
    Ok(r)
}

fn write_problem(path: &Path, p: &ProblemFile) -> Result<()> {
    fs::write(path, p.to_json())?;
    Ok(())
}

/// A file holding `f`, its coalgebras and nothing else.
fn problem_for(p: &ProblemFile, morphism: &str) -> ProblemFile {
    let mut out = ProblemFile::new(p.field);
    out.add_morphism(morphism, &p.morphisms[morphism]);
    out
}

pub fn cmd_integrate(p: &ProblemFile, name: &str, order: usize, out: &Path) -> Result<Report> {
    if order == 0 {
        return Err(Error::OutOfRange("integration order must be at least 1".into()));
    }
    let w = p.cocycles.get(name).ok_or_else(|| unknown("cocycle", name))?;
    let f = &p.morphisms[&w.morphism];
    let mut r = Report::new(format!("integrate {name} {order}"));
    if let Some(failure) = morphism_failure(f) {
        r.fail(&failure);
        return Ok(r);
    }
    let complex = DeformationComplex::new(f)?;
    if let Some((slot, row, col, v)) = complex.d_c(&w.value)?.first_nonzero() {
        return Err(Error::NotACocycle(format!(
            "`{name}`: d_c(w) ≠ 0, slot {} entry ({row}, {col}) = {v}",
            slot_letter(slot)
        )));
    }
    let mut file = problem_for(p, &w.morphism);
    let reached = match integrate(f, &w.value, order)? {
        Integration::Complete(d) => {
            r.line(format!("integrated to order {order}"));
            d
        }
        Integration::Obstructed { partial, obstruction } => {
            let failing = partial.order() + 1;
            r.status = Status::Obstructed;
            r.line(format!("obstructed at order {failing}"));
            r.line(format!("class: {}", class_text(&obstruction.class)));
            r.set("failing_order", json!(failing));
            r.set("class", scalars(&obstruction.class));
            partial
        }
    };
    r.set("order", json!(reached.order()));
    file.deformations.insert(
        name.to_string(),
        Named {
            morphism: w.morphism.clone(),
            value: reached,
        },
    );
    write_problem(out, &file)?;
    r.line(format!("wrote deformation `{name}` to {}", out.display()));
    Ok(r)
}

pub fn cmd_trivialize(p: &ProblemFile, name: &str, out: &Path) -> Result<Report> {
    let named = p
        .deformations
        .get(name)
        .ok_or_else(|| unknown("deformation", name))?;
    let d = &named.value;
    let mut r = Report::new(format!("trivialize {name}"));
    if let Some(f) = d.verify().failure() {
        r.fail(f);
        return Ok(r);
    }
    match trivialize(d)? {
        Trivialization::Trivialized(iso) => {
            r.line(format!("trivial to order {}", d.order()));
            let mut file = problem_for(p, &named.morphism);
            file.isomorphisms.insert(
                name.to_string(),
                Named {
                    morphism: named.morphism.clone(),
                    value: iso,
                },
            );
            write_problem(out, &file)?;
            r.line(format!("wrote isomorphism `{name}` to {}", out.display()));
        }
        Trivialization::Blocked {
            order,
            cocycle,
            class,
        } => {
            r.status = Status::Fail;
            r.line(format!(
                "blocked at order {order}: leading coefficient has a nonzero class in H^2"
            ));
            cochain_lines(&mut r, "leading", &cocycle);
            r.line(format!("class: {}", class_text(&class)));
            r.set("blocked_order", json!(order));
            r.set("leading", cochain_json(&cocycle));
            r.set("class", scalars(&class));
        }
    }
    Ok(r)
}

/// The built-in corpus of valid objects.
pub fn fixture_corpus(field: Field) -> ProblemFile {
    let mut p = ProblemFile::new(field);
    for n in 1..=3 {
        p.add_coalgebra(&grouplike(field, n));
        p.add_coalgebra(&divided_power(field, n));
    }
    p.add_coalgebra(&zero_coalgebra(field));
    let null = null_coalgebra(field, 2);
    for c in [
        grouplike(field, 1),
        grouplike(field, 2),
        divided_power(field, 2),
        null.clone(),
    ] {
        p.add_morphism(&format!("id_{}", c.name()), &CoalgebraMorphism::identity(&c));
    }
    p.add_morphism("collapse(2)", &collapse_morphism(field, 2));
    p.add_morphism("collapse(3)", &collapse_morphism(field, 3));
    p.add_morphism("augmentation(2)", &augmentation(field, 2));
    p.add_morphism("point(2)", &point(field, 2));
    p.add_morphism("inclusion(2,3)", &truncation_inclusion(field, 2, 3));

    let id_g1 = "id_grouplike(1)".to_string();
    let id_dp2 = "id_divided_power(2)".to_string();
    let id_null = "id_null(2)".to_string();

    let dp = divided_power_deformation(field, 5);
    let iso = sample_isomorphism(&p.morphisms[&id_dp2]);
    let moved = apply_equivalence(&iso, &dp.truncate(2)).expect("orders agree");
    let trivial = TruncatedDeformation::trivial(&p.morphisms[&id_g1], 3).expect("valid morphism");
    let broken = broken_cochain(&p.morphisms[&id_null]);
    let null_deformation =
        TruncatedDeformation::new(&p.morphisms[&id_null], vec![broken.clone()]).expect("shapes agree");

    p.cocycles
        .insert("divided_power_1".into(), named(&id_dp2, dp.coefficient(1)));
    p.cocycles.insert(
        "zero".into(),
        named(&id_g1, MorphismCochain::zero(trivial.complex(), 2)),
    );
    p.cocycles.insert("null_broken".into(), named(&id_null, broken));
    p.deformations.insert("divided_power".into(), named(&id_dp2, dp));
    p.deformations
        .insert("divided_power_moved".into(), named(&id_dp2, moved));
    p.deformations.insert("trivial".into(), named(&id_g1, trivial));
    p.deformations
        .insert("null_broken".into(), named(&id_null, null_deformation));
    p.isomorphisms.insert("shear".into(), named(&id_dp2, iso));
    p
}

fn named<T>(morphism: &str, value: T) -> Named<T> {
    Named {
        morphism: morphism.to_string(),
        value,
    }
}

/// `Id + χ t` on `Id: divided_power(2) → divided_power(2)` with `χ_A = χ_B = e_1 ↦ e_0`.
fn sample_isomorphism(f: &CoalgebraMorphism) -> FormalIsomorphism {
    let field = f.field();
    let complex = DeformationComplex::new(f).expect("valid morphism");
    let mut chi = Matrix::zeros(field, 2, 2);
    chi.set(0, 1, field.one());
    let half = field.inv(&field.from_i64(2)).unwrap_or_else(|| field.one());
    let w1 = MorphismCochain::first_degree(&complex, chi.clone(), chi.clone()).expect("shapes agree");
    let w2 = MorphismCochain::first_degree(&complex, chi.scale(&half), chi).expect("shapes agree");
    FormalIsomorphism::new(f, vec![w1, w2]).expect("shapes agree")
}

/// `(Δ_1; Δ_1; 0)` with the non-coassociative `Δ_1(e_0) = e_0 ⊗ e_1` on both sides.
fn broken_cochain(f: &CoalgebraMorphism) -> MorphismCochain {
    let field = f.field();
    let complex = DeformationComplex::new(f).expect("valid morphism");
    let delta = broken_coalgebra(field).delta().clone();
    MorphismCochain::new(&complex, 2, delta.clone(), delta, Matrix::zeros(field, 2, 2)).expect("shapes agree")
}

/// Objects that fail their checks.
pub fn invalid_corpus(field: Field) -> ProblemFile {
    let mut p = ProblemFile::new(field);
    p.add_coalgebra(&broken_coalgebra(field));
    let g2 = grouplike(field, 2);
    let g1 = grouplike(field, 1);
    let mut doubling = Matrix::zeros(field, 1, 2);
    doubling.set(0, 0, field.from_i64(2));
    p.add_morphism(
        "doubling",
        &CoalgebraMorphism::new(g2, g1, doubling).expect("shapes agree"),
    );

    let id_dp2 = CoalgebraMorphism::identity(&divided_power(field, 2));
    p.add_morphism("id_divided_power(2)", &id_dp2);
    let complex = DeformationComplex::new(&id_dp2).expect("valid morphism");
    let mut delta1 = Matrix::zeros(field, 4, 2);
    delta1.set(3, 1, field.one());
    let source_only = MorphismCochain::new(
        &complex,
        2,
        delta1,
        Matrix::zeros(field, 4, 2),
        Matrix::zeros(field, 2, 2),
    )
    .expect("shapes agree");
    let one_sided = TruncatedDeformation::new(&id_dp2, vec![source_only.clone()]).expect("shapes agree");
    let name = "id_divided_power(2)".to_string();
    p.deformations.insert(
        "one_sided".into(),
        Named {
            morphism: name.clone(),
            value: one_sided,
        },
    );
    p.cocycles.insert(
        "one_sided".into(),
        Named {
            morphism: name,
            value: source_only,
        },
    );
    p
}

/// Writes `fixtures.json` and `invalid.json` into `dir`.
pub fn write_fixtures(dir: &Path, field: Field) -> Result<Report> {
    let start = Instant::now();
    fs::create_dir_all(dir)?;
    let mut r = Report::new(format!("--fixtures {}", dir.display()));
    for (file, corpus) in [
        ("fixtures.json", fixture_corpus(field)),
        ("invalid.json", invalid_corpus(field)),
    ] {
        let path = dir.join(file);
        write_problem(&path, &corpus)?;
        r.line(format!(
            "wrote {}: {} coalgebras, {} morphisms, {} deformations, {} isomorphisms, {} cocycles",
            path.display(),
            corpus.coalgebras.len(),
            corpus.morphisms.len(),
            corpus.deformations.len(),
            corpus.isomorphisms.len(),
            corpus.cocycles.len()
        ));
    }
    r.elapsed = start.elapsed();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn names(p: &ProblemFile) -> Vec<String> {
        p.coalgebras
            .keys()
            .chain(p.morphisms.keys())
            .chain(p.deformations.keys())
            .chain(p.isomorphisms.keys())
            .chain(p.cocycles.keys())
            .cloned()
            .collect()
    }

    #[test]
    fn corpora_round_trip() {
        for field in [Q, Field::Prime(5), Field::Prime(2)] {
            for corpus in [fixture_corpus(field), invalid_corpus(field)] {
                let text = corpus.to_json();
                let again = ProblemFile::parse(&text, None).unwrap();
                assert_eq!(again, corpus);
                assert_eq!(again.to_json(), text);
            }
        }
    }

    #[test]
    fn every_fixture_checks_ok() {
        let p = fixture_corpus(Q);
        for name in names(&p) {
            let r = cmd_check(&p, &name).unwrap();
            assert_eq!(r.status, Status::Ok, "{name}: {:?}", r.lines);
        }
    }

    #[test]
    fn invalid_objects_fail_with_location() {
        let p = invalid_corpus(Q);
        for name in ["broken", "doubling", "one_sided"] {
            let r = cmd_check(&p, name).unwrap();
            assert_eq!(r.status, Status::Fail, "{name}");
            assert!(r.payload["failure"]["row"].is_u64());
        }
        assert!(matches!(cmd_check(&p, "missing"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn cohomology_examples() {
        let p = fixture_corpus(Q);
        let h = |kind, name: &str, n| {
            cmd_cohomology(&p, kind, name, n).unwrap().payload["h_dim"]
                .as_u64()
                .unwrap()
        };
        assert_eq!(h(ComplexKind::Morphism, "id_grouplike(1)", 2), 0);
        assert_eq!(h(ComplexKind::Source, "grouplike(1)", 1), 0);
        for n in 1..=3 {
            assert_eq!(h(ComplexKind::Source, "zero", n), 0);
        }
        assert_eq!(h(ComplexKind::Morphism, "id_divided_power(2)", 2), 1);
        assert!(cmd_cohomology(&p, ComplexKind::Source, "grouplike(1)", 0).is_err());
        let broken = invalid_corpus(Q);
        let r = cmd_cohomology(&broken, ComplexKind::Source, "broken", 1).unwrap();
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn degree_warning_threshold() {
        let p = fixture_corpus(Q);
        let r = cmd_cohomology(&p, ComplexKind::Source, "grouplike(1)", 7).unwrap();
        assert!(r.payload.get("warning").is_none());
        let r = cmd_cohomology(&p, ComplexKind::Source, "divided_power(2)", 7).unwrap();
        assert!(r.payload.get("warning").is_none());
        assert!(degree_warning(7, 3).unwrap().contains("3^8"));
        assert!(degree_warning(6, 3).is_none());
        assert!(degree_warning(7, 2).is_none());
    }

    #[test]
    fn obstruct_reports() {
        let p = fixture_corpus(Q);
        for name in ["trivial", "divided_power"] {
            let r = cmd_obstruct(&p, name).unwrap();
            assert_eq!(r.status, Status::Ok);
            assert!(r.lines.iter().any(|l| l == "3-cocycle: confirmed"));
            assert_eq!(r.payload["class"], json!([]));
        }
        let r = cmd_obstruct(&p, "null_broken").unwrap();
        assert_eq!(r.status, Status::Obstructed);
        assert!(r.lines.iter().any(|l| l == "3-cocycle: confirmed"));
        let r = cmd_obstruct(&invalid_corpus(Q), "one_sided").unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(!r.lines.iter().any(|l| l.starts_with("3-cocycle")));
    }

    #[test]
    fn integrate_writes_checkable_files() {
        let dir = std::env::temp_dir().join(format!("codef-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let p = fixture_corpus(Q);

        let out = dir.join("zero.json");
        assert_eq!(cmd_integrate(&p, "zero", 3, &out).unwrap().status, Status::Ok);
        let q = load(&out, None).unwrap();
        let d = &q.deformations["zero"].value;
        assert_eq!(d.order(), 3);
        assert!(d.coefficients()[1..].iter().all(MorphismCochain::is_zero));

        let out = dir.join("dp.json");
        assert_eq!(
            cmd_integrate(&p, "divided_power_1", 4, &out).unwrap().status,
            Status::Ok
        );
        let q = load(&out, None).unwrap();
        assert_eq!(q.deformations["divided_power_1"].value.order(), 4);
        assert_eq!(cmd_check(&q, "divided_power_1").unwrap().status, Status::Ok);

        let out = dir.join("null.json");
        let r = cmd_integrate(&p, "null_broken", 3, &out).unwrap();
        assert_eq!(r.status, Status::Obstructed);
        assert_eq!(r.payload["failing_order"], json!(2));

        let err = cmd_integrate(&invalid_corpus(Q), "one_sided", 2, &dir.join("x.json")).unwrap_err();
        assert!(matches!(err, Error::NotACocycle(ref m) if m.contains("entry")));
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn trivialize_reports() {
        let dir = std::env::temp_dir().join(format!("codef-triv-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let p = fixture_corpus(Q);
        let out = dir.join("t.json");
        assert_eq!(cmd_trivialize(&p, "trivial", &out).unwrap().status, Status::Ok);
        assert!(load(&out, None).unwrap().isomorphisms["trivial"]
            .value
            .is_identity());
        let r = cmd_trivialize(&p, "divided_power", &dir.join("b.json")).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.payload["blocked_order"], json!(2));
        assert_eq!(r.payload["class"].as_array().unwrap().len(), 1);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn json_report_excludes_timing() {
        let p = fixture_corpus(Q);
        let mut a = cmd_check(&p, "divided_power").unwrap();
        let mut b = cmd_check(&p, "divided_power").unwrap();
        a.elapsed = Duration::from_millis(1);
        b.elapsed = Duration::from_millis(99);
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.to_text().lines().last().unwrap().starts_with("time: "));
    }
}
