//! The problem-file format: a JSON document holding named coalgebras,
//! morphisms, deformations, formal isomorphisms and cocycles.
//!
//! ```json
//! {
//!   "field": "rational",
//!   "coalgebras": { "A": { "dim": 2, "delta": [[0, 0, 0, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]] } },
//!   "morphisms": { "f": { "source": "A", "target": "A", "matrix": [["1", "0"], ["0", "1"]] } },
//!   "deformations": { "D": { "morphism": "f", "order": 1,
//!       "coefficients": [{ "order": 1, "A": [[1, 1, 1, "1"]], "B": [[1, 1, 1, "1"]] }] } },
//!   "isomorphisms": { "P": { "morphism": "f", "order": 1,
//!       "coefficients": [{ "order": 1, "A": [["0", "1"], ["0", "0"]] }] } },
//!   "cocycles": { "w": { "morphism": "f", "A": [[1, 1, 1, "1"]], "B": [[1, 1, 1, "1"]] } }
//! }
//! ```
//!
//! A structure constant `[a, b, c, coeff]` means `e_a ↦ coeff · e_b ⊗ e_c`
//! (0-based). Matrices are lists of rows. Scalars are strings such as `"3/7"`;
//! bare integers are accepted on input. Omitted slots are zero.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coalgebra::{structure_constants, structure_matrix, Coalgebra, CoalgebraMorphism};
use crate::cohomology::{DeformationComplex, MorphismCochain};
use crate::deformation::{FormalIsomorphism, TruncatedDeformation};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Text(String),
    Int(i64),
}

type RawConstant = (usize, usize, usize, RawScalar);
type RawMatrix = Vec<Vec<RawScalar>>;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    #[serde(default = "default_field")]
    field: String,
    #[serde(default)]
    coalgebras: BTreeMap<String, RawCoalgebra>,
    #[serde(default)]
    morphisms: BTreeMap<String, RawMorphism>,
    #[serde(default)]
    deformations: BTreeMap<String, RawSeries<RawDeformationTerm>>,
    #[serde(default)]
    isomorphisms: BTreeMap<String, RawSeries<RawIsomorphismTerm>>,
    #[serde(default)]
    cocycles: BTreeMap<String, RawCocycle>,
}

fn default_field() -> String {
    "rational".into()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoalgebra {
    dim: usize,
    #[serde(default)]
    delta: Vec<RawConstant>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    source: String,
    target: String,
    matrix: RawMatrix,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeries<T> {
    morphism: String,
    order: usize,
    #[serde(default = "Vec::new")]
    coefficients: Vec<T>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeformationTerm {
    order: usize,
    #[serde(rename = "A", default, skip_serializing_if = "Vec::is_empty")]
    a: Vec<RawConstant>,
    #[serde(rename = "B", default, skip_serializing_if = "Vec::is_empty")]
    b: Vec<RawConstant>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    f: Option<RawMatrix>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIsomorphismTerm {
    order: usize,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    a: Option<RawMatrix>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    b: Option<RawMatrix>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCocycle {
    morphism: String,
    #[serde(rename = "A", default)]
    a: Vec<RawConstant>,
    #[serde(rename = "B", default)]
    b: Vec<RawConstant>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    f: Option<RawMatrix>,
}

/// A value tied to a named morphism of the same file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Named<T> {
    pub morphism: String,
    pub value: T,
}

/// A parsed problem file. Coalgebra names equal their keys.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemFile {
    pub field: Field,
    pub coalgebras: BTreeMap<String, Coalgebra>,
    pub morphisms: BTreeMap<String, CoalgebraMorphism>,
    pub deformations: BTreeMap<String, Named<TruncatedDeformation>>,
    pub isomorphisms: BTreeMap<String, Named<FormalIsomorphism>>,
    pub cocycles: BTreeMap<String, Named<MorphismCochain>>,
}

fn scalar(field: Field, raw: &RawScalar) -> Result<Scalar> {
    match raw {
        RawScalar::Text(s) => field.parse_scalar(s),
        RawScalar::Int(v) => Ok(field.from_i64(*v)),
    }
}

fn constants(field: Field, raw: &[RawConstant]) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    raw.iter()
        .map(|(a, b, c, v)| Ok((*a, *b, *c, scalar(field, v)?)))
        .collect()
}

fn matrix(field: Field, raw: &RawMatrix, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    if raw.len() != rows {
        return Err(Error::Parse(format!(
            "{what}: expected {rows} rows, got {}",
            raw.len()
        )));
    }
    let parsed = raw
        .iter()
        .map(|row| row.iter().map(|v| scalar(field, v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, parsed).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn optional_matrix(
    field: Field,
    raw: Option<&RawMatrix>,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<Matrix> {
    match raw {
        Some(m) => matrix(field, m, rows, cols, what),
        None => Ok(Matrix::zeros(field, rows, cols)),
    }
}

fn raw_matrix(m: &Matrix) -> RawMatrix {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| RawScalar::Text(v.to_string())).collect())
        .collect()
}

fn raw_constants(m: &Matrix, target_dim: usize) -> Vec<RawConstant> {
    structure_constants(m, target_dim)
        .into_iter()
        .map(|(a, b, c, v)| (a, b, c, RawScalar::Text(v.to_string())))
        .collect()
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, kind: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| Error::Parse(format!("{kind} `{name}` is not defined")))
}

fn check_orders(orders: impl Iterator<Item = usize>, max: usize, name: &str) -> Result<()> {
    let mut seen = vec![false; max + 1];
    for n in orders {
        if n == 0 || n > max {
            return Err(Error::Parse(format!(
                "`{name}`: coefficient order {n} outside 1..={max}"
            )));
        }
        if std::mem::replace(&mut seen[n], true) {
            return Err(Error::Parse(format!("`{name}`: order {n} given twice")));
        }
    }
    Ok(())
}

impl ProblemFile {
    pub fn new(field: Field) -> Self {
        ProblemFile {
            field,
            ..Default::default()
        }
    }

    /// Parses a problem file. `field_override` replaces the file's field.
    pub fn parse(text: &str, field_override: Option<Field>) -> Result<Self> {
        let raw: RawProblem = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let field = match field_override {
            Some(f) => f,
            None => raw.field.parse()?,
        };
        let mut out = ProblemFile::new(field);

        for (name, c) in &raw.coalgebras {
            let sc = constants(field, &c.delta)?;
            let coalgebra = Coalgebra::from_structure_constants(field, name.clone(), c.dim, &sc)
                .map_err(|e| Error::Parse(format!("coalgebra `{name}`: {e}")))?;
            out.coalgebras.insert(name.clone(), coalgebra);
        }
        for (name, m) in &raw.morphisms {
            let source = lookup(&out.coalgebras, &m.source, "coalgebra")?.clone();
            let target = lookup(&out.coalgebras, &m.target, "coalgebra")?.clone();
            let mat = matrix(
                field,
                &m.matrix,
                target.dim(),
                source.dim(),
                &format!("morphism `{name}`"),
            )?;
            out.morphisms
                .insert(name.clone(), CoalgebraMorphism::new(source, target, mat)?);
        }
        for (name, d) in &raw.deformations {
            let f = lookup(&out.morphisms, &d.morphism, "morphism")?;
            check_orders(d.coefficients.iter().map(|t| t.order), d.order, name)?;
            let complex =
                DeformationComplex::new(f).map_err(|e| Error::Parse(format!("deformation `{name}`: {e}")))?;
            let mut higher = vec![MorphismCochain::zero(&complex, 2); d.order];
            for term in &d.coefficients {
                higher[term.order - 1] = deformation_term(&complex, &term.a, &term.b, term.f.as_ref(), name)?;
            }
            let value = TruncatedDeformation::new(f, higher)?;
            out.deformations.insert(
                name.clone(),
                Named {
                    morphism: d.morphism.clone(),
                    value,
                },
            );
        }
        for (name, p) in &raw.isomorphisms {
            let f = lookup(&out.morphisms, &p.morphism, "morphism")?;
            check_orders(p.coefficients.iter().map(|t| t.order), p.order, name)?;
            let complex =
                DeformationComplex::new(f).map_err(|e| Error::Parse(format!("isomorphism `{name}`: {e}")))?;
            let (da, db) = (f.source().dim(), f.target().dim());
            let mut higher = vec![MorphismCochain::zero(&complex, 1); p.order];
            for term in &p.coefficients {
                let what = format!("isomorphism `{name}` order {}", term.order);
                let a = optional_matrix(field, term.a.as_ref(), da, da, &what)?;
                let b = optional_matrix(field, term.b.as_ref(), db, db, &what)?;
                higher[term.order - 1] = MorphismCochain::first_degree(&complex, a, b)?;
            }
            let value = FormalIsomorphism::new(f, higher)?;
            out.isomorphisms.insert(
                name.clone(),
                Named {
                    morphism: p.morphism.clone(),
                    value,
                },
            );
        }
        for (name, w) in &raw.cocycles {
            let f = lookup(&out.morphisms, &w.morphism, "morphism")?;
            let complex =
                DeformationComplex::new(f).map_err(|e| Error::Parse(format!("cocycle `{name}`: {e}")))?;
            let value = deformation_term(&complex, &w.a, &w.b, w.f.as_ref(), name)?;
            out.cocycles.insert(
                name.clone(),
                Named {
                    morphism: w.morphism.clone(),
                    value,
                },
            );
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let mut raw = RawProblem {
            field: self.field.to_string(),
            coalgebras: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            deformations: BTreeMap::new(),
            isomorphisms: BTreeMap::new(),
            cocycles: BTreeMap::new(),
        };
        for (name, c) in &self.coalgebras {
            raw.coalgebras.insert(
                name.clone(),
                RawCoalgebra {
                    dim: c.dim(),
                    delta: raw_constants(c.delta(), c.dim()),
                },
            );
        }
        for (name, f) in &self.morphisms {
            raw.morphisms.insert(
                name.clone(),
                RawMorphism {
                    source: f.source().name().to_string(),
                    target: f.target().name().to_string(),
                    matrix: raw_matrix(f.matrix()),
                },
            );
        }
        for (name, d) in &self.deformations {
            let (da, db) = (
                d.value.morphism().source().dim(),
                d.value.morphism().target().dim(),
            );
            let coefficients = d.value.coefficients()[1..]
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .map(|(k, w)| RawDeformationTerm {
                    order: k + 1,
                    a: raw_constants(w.xi(), da),
                    b: raw_constants(w.pi(), db),
                    f: (!w.phi().is_zero()).then(|| raw_matrix(w.phi())),
                })
                .collect();
            raw.deformations.insert(
                name.clone(),
                RawSeries {
                    morphism: d.morphism.clone(),
                    order: d.value.order(),
                    coefficients,
                },
            );
        }
        for (name, p) in &self.isomorphisms {
            let coefficients = p.value.coefficients()[1..]
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .map(|(k, w)| RawIsomorphismTerm {
                    order: k + 1,
                    a: (!w.xi().is_zero()).then(|| raw_matrix(w.xi())),
                    b: (!w.pi().is_zero()).then(|| raw_matrix(w.pi())),
                })
                .collect();
            raw.isomorphisms.insert(
                name.clone(),
                RawSeries {
                    morphism: p.morphism.clone(),
                    order: p.value.order(),
                    coefficients,
                },
            );
        }
        for (name, w) in &self.cocycles {
            let f = lookup(&self.morphisms, &w.morphism, "morphism").expect("cocycle morphism is present");
            raw.cocycles.insert(
                name.clone(),
                RawCocycle {
                    morphism: w.morphism.clone(),
                    a: raw_constants(w.value.xi(), f.source().dim()),
                    b: raw_constants(w.value.pi(), f.target().dim()),
                    f: (!w.value.phi().is_zero()).then(|| raw_matrix(w.value.phi())),
                },
            );
        }
        let mut text = serde_json::to_string_pretty(&raw).expect("problem files serialize");
        text.push('\n');
        text
    }

    /// Adds a coalgebra under its own name.
    pub fn add_coalgebra(&mut self, c: &Coalgebra) {
        self.coalgebras.insert(c.name().to_string(), c.clone());
    }

    /// Adds a morphism together with its source and target.
    pub fn add_morphism(&mut self, name: &str, f: &CoalgebraMorphism) {
        self.add_coalgebra(f.source());
        self.add_coalgebra(f.target());
        self.morphisms.insert(name.to_string(), f.clone());
    }
}

fn deformation_term(
    complex: &DeformationComplex,
    a: &[RawConstant],
    b: &[RawConstant],
    f: Option<&RawMatrix>,
    name: &str,
) -> Result<MorphismCochain> {
    let field = complex.field();
    let (da, db) = (complex.source().dim(), complex.target().dim());
    let xi = structure_matrix(field, da, da, &constants(field, a)?)?;
    let pi = structure_matrix(field, db, db, &constants(field, b)?)?;
    let phi = optional_matrix(field, f, db, da, &format!("`{name}` slot F"))?;
    MorphismCochain::new(complex, 2, xi, pi, phi)
}
