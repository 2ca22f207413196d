//! Finite-dimensional coalgebras, their morphisms and bicomodules, all given
//! by structure constants.
//!
//! Validity checks are explicit and return a [`Verdict`]; constructors only
//! check shapes.

pub mod fixtures;
pub mod tensor;

use crate::error::{Error, Result};
use crate::linalg::{inverse, Field, Matrix, Scalar};
use crate::verdict::Verdict;

pub use tensor::{middle_insertion, tensor_power_map};

/// A coalgebra `(A, Δ)`. `delta` has shape `(d², d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    name: String,
    delta: Matrix,
}

impl Coalgebra {
    pub fn new(name: impl Into<String>, delta: Matrix) -> Result<Self> {
        let d = delta.cols();
        if delta.rows() != d * d {
            return Err(Error::Dimension(format!(
                "comultiplication of a {d}-dimensional coalgebra must be {}x{d}, got {}x{}",
                d * d,
                delta.rows(),
                delta.cols()
            )));
        }
        Ok(Coalgebra {
            name: name.into(),
            delta,
        })
    }

    /// Builds Δ from quadruples `(a, b, c, coeff)` meaning
    /// `Δ(e_a) += coeff · e_b ⊗ e_c`.
    pub fn from_structure_constants(
        field: Field,
        name: impl Into<String>,
        dim: usize,
        constants: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        Self::new(name, structure_matrix(field, dim, dim, constants)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.delta.cols()
    }

    pub fn field(&self) -> Field {
        self.delta.field()
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim())
    }

    /// `(Id ⊗ Δ)∘Δ = (Δ ⊗ Id)∘Δ`, compared as `d³ × d` matrices.
    pub fn check_coassociative(&self) -> Verdict {
        let id = self.identity();
        let lhs = &id.kron(&self.delta) * &self.delta;
        let rhs = &self.delta.kron(&id) * &self.delta;
        Verdict::compare("coassociativity", None, &lhs, &rhs)
    }

    /// Structure constants of Δ as sorted `(a, b, c, coeff)` quadruples.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        structure_constants(&self.delta, self.dim())
    }

    /// Transports Δ along the change of basis `t: A → A'`, giving
    /// `(t ⊗ t)∘Δ∘t⁻¹`.
    pub fn transport(&self, t: &Matrix) -> Result<Coalgebra> {
        let t_inv = inverse(t).ok_or_else(|| Error::Invalid {
            kind: "change of basis",
            detail: "singular".into(),
        })?;
        if t.rows() != self.dim() {
            return Err(Error::Dimension("change of basis has the wrong size".into()));
        }
        Coalgebra::new(self.name.clone(), &(&t.kron(t) * &self.delta) * &t_inv)
    }
}

/// Matrix of a map `V → W ⊗ W` (`dim V = source_dim`, `dim W = target_dim`)
/// from quadruples.
pub fn structure_matrix(
    field: Field,
    source_dim: usize,
    target_dim: usize,
    constants: &[(usize, usize, usize, Scalar)],
) -> Result<Matrix> {
    let mut m = Matrix::zeros(field, target_dim * target_dim, source_dim);
    for (a, b, c, coeff) in constants {
        if *a >= source_dim || *b >= target_dim || *c >= target_dim {
            return Err(Error::OutOfRange(format!(
                "structure constant [{a}, {b}, {c}] outside dimensions {source_dim}/{target_dim}"
            )));
        }
        m.add_to(b * target_dim + c, *a, coeff);
    }
    Ok(m)
}

/// Nonzero entries of a `(t², s)` matrix as `(a, b, c, coeff)`, sorted.
pub fn structure_constants(m: &Matrix, target_dim: usize) -> Vec<(usize, usize, usize, Scalar)> {
    let mut out: Vec<_> = m
        .nonzeros()
        .map(|(row, a, v)| (a, row / target_dim, row % target_dim, v.clone()))
        .collect();
    out.sort_by_key(|x| (x.0, x.1, x.2));
    out
}

/// A coalgebra morphism `f: A → B`; `matrix` has shape `(dim B, dim A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraMorphism {
    source: Coalgebra,
    target: Coalgebra,
    matrix: Matrix,
}

impl CoalgebraMorphism {
    pub fn new(source: Coalgebra, target: Coalgebra, matrix: Matrix) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::Dimension(format!(
                "morphism {} -> {} must be {}x{}, got {}x{}",
                source.name(),
                target.name(),
                target.dim(),
                source.dim(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        if source.field() != target.field() || matrix.field() != source.field() {
            return Err(Error::InvalidField("morphism mixes ground fields".into()));
        }
        Ok(CoalgebraMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(a: &Coalgebra) -> Self {
        CoalgebraMorphism {
            source: a.clone(),
            target: a.clone(),
            matrix: a.identity(),
        }
    }

    pub fn source(&self) -> &Coalgebra {
        &self.source
    }

    pub fn target(&self) -> &Coalgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// `Δ_B ∘ f = (f ⊗ f) ∘ Δ_A`.
    pub fn check_morphism(&self) -> Verdict {
        let lhs = self.target.delta() * &self.matrix;
        let rhs = &self.matrix.kron(&self.matrix) * self.source.delta();
        Verdict::compare("morphism compatibility", None, &lhs, &rhs)
    }

    /// Conjugates by changes of basis on source and target:
    /// `t_b ∘ f ∘ t_a⁻¹` between the transported coalgebras.
    pub fn transport(&self, t_a: &Matrix, t_b: &Matrix) -> Result<Self> {
        let t_a_inv = inverse(t_a).ok_or_else(|| Error::Invalid {
            kind: "change of basis",
            detail: "singular".into(),
        })?;
        let source = self.source.transport(t_a)?;
        let target = self.target.transport(t_b)?;
        let matrix = &(t_b * &self.matrix) * &t_a_inv;
        CoalgebraMorphism::new(source, target, matrix)
    }
}

/// A bicomodule `M` over `A` with coactions `ψ_l: M → A⊗M` and
/// `ψ_r: M → M⊗A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    over: Coalgebra,
    psi_l: Matrix,
    psi_r: Matrix,
}

impl Bicomodule {
    pub fn new(over: Coalgebra, psi_l: Matrix, psi_r: Matrix) -> Result<Self> {
        let m = psi_l.cols();
        let d = over.dim();
        if psi_l.rows() != d * m || psi_r.shape() != (m * d, m) {
            return Err(Error::Dimension(format!(
                "coactions of a {m}-dimensional bicomodule over a {d}-dimensional coalgebra \
                 must be {}x{m}",
                d * m
            )));
        }
        Ok(Bicomodule { over, psi_l, psi_r })
    }

    /// `A` as a bicomodule over itself, `ψ_l = ψ_r = Δ`.
    pub fn regular(a: &Coalgebra) -> Self {
        Bicomodule {
            over: a.clone(),
            psi_l: a.delta().clone(),
            psi_r: a.delta().clone(),
        }
    }

    /// The source of `f: A → B` as a `B`-bicomodule, with
    /// `ψ_l = (f ⊗ Id)∘Δ_A` and `ψ_r = (Id ⊗ f)∘Δ_A`.
    pub fn via(f: &CoalgebraMorphism) -> Result<Self> {
        if let Verdict::Failed(failure) = f.check_morphism() {
            return Err(Error::Invalid {
                kind: "coalgebra morphism",
                detail: failure.to_string(),
            });
        }
        let id = f.source().identity();
        let delta = f.source().delta();
        Ok(Bicomodule {
            over: f.target().clone(),
            psi_l: &f.matrix().kron(&id) * delta,
            psi_r: &id.kron(f.matrix()) * delta,
        })
    }

    pub fn over(&self) -> &Coalgebra {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.psi_l.cols()
    }

    pub fn field(&self) -> Field {
        self.over.field()
    }

    pub fn psi_l(&self) -> &Matrix {
        &self.psi_l
    }

    pub fn psi_r(&self) -> &Matrix {
        &self.psi_r
    }

    /// Left and right coassociativity and compatibility of the two coactions.
    pub fn check(&self) -> Verdict {
        let f = self.field();
        let id_a = self.over.identity();
        let id_m = Matrix::identity(f, self.dim());
        let delta = self.over.delta();
        let (l, r) = (&self.psi_l, &self.psi_r);
        Verdict::compare(
            "left coassociativity",
            None,
            &(&id_a.kron(l) * l),
            &(&delta.kron(&id_m) * l),
        )
        .and_then(|| {
            Verdict::compare(
                "right coassociativity",
                None,
                &(&r.kron(&id_a) * r),
                &(&id_m.kron(delta) * r),
            )
        })
        .and_then(|| {
            Verdict::compare(
                "coaction compatibility",
                None,
                &(&id_a.kron(r) * l),
                &(&l.kron(&id_a) * r),
            )
        })
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn coassociativity_examples() {
        assert!(grouplike(Q, 1).check_coassociative().is_ok());
        assert!(divided_power(Q, 2).check_coassociative().is_ok());
        let verdict = broken_coalgebra(Q).check_coassociative();
        let failure = verdict.failure().expect("broken coalgebra must fail");
        // (Id⊗Δ)Δ(e0) = 0 while (Δ⊗Id)Δ(e0) = e0⊗e1⊗e1, flat index 3.
        assert_eq!((failure.row, failure.col), (3, 0));
        assert_eq!(failure.residual, Q.from_i64(-1));
    }

    #[test]
    fn morphism_examples() {
        let dp = divided_power(Q, 3);
        assert!(CoalgebraMorphism::identity(&dp).check_morphism().is_ok());
        let zero = CoalgebraMorphism::new(dp.clone(), grouplike(Q, 2), Matrix::zeros(Q, 2, 3)).unwrap();
        assert!(zero.check_morphism().is_ok());
        assert!(collapse_morphism(Q, 2).check_morphism().is_ok());
        let bad =
            CoalgebraMorphism::new(grouplike(Q, 1), grouplike(Q, 1), Matrix::from_i64(Q, &[&[2]])).unwrap();
        assert!(!bad.check_morphism().is_ok());
        assert!(CoalgebraMorphism::new(dp, grouplike(Q, 1), Matrix::zeros(Q, 1, 2)).is_err());
    }

    #[test]
    fn via_identity_is_regular() {
        for a in [grouplike(Q, 2), divided_power(Q, 3), zero_coalgebra(Q)] {
            let via = Bicomodule::via(&CoalgebraMorphism::identity(&a)).unwrap();
            assert_eq!(via, Bicomodule::regular(&a));
            assert!(via.check().is_ok());
        }
    }

    #[test]
    fn via_collapse() {
        let f = collapse_morphism(Q, 2);
        let m = Bicomodule::via(&f).unwrap();
        assert!(m.check().is_ok());
        // ψ_l(e_i) = g ⊗ e_i and ψ_r(e_i) = e_i ⊗ g.
        assert_eq!(m.psi_l(), &Matrix::identity(Q, 2));
        assert_eq!(m.psi_r(), &Matrix::identity(Q, 2));
    }

    #[test]
    fn via_zero_map_is_accepted() {
        let a = divided_power(Q, 2);
        let f = CoalgebraMorphism::new(a.clone(), a, Matrix::zeros(Q, 2, 2)).unwrap();
        let m = Bicomodule::via(&f).unwrap();
        assert!(m.psi_l().is_zero() && m.psi_r().is_zero());
        assert!(m.check().is_ok());
    }

    #[test]
    fn via_rejects_non_morphisms() {
        let g = grouplike(Q, 1);
        let bad = CoalgebraMorphism::new(g.clone(), g, Matrix::from_i64(Q, &[&[3]])).unwrap();
        assert!(Bicomodule::via(&bad).is_err());
    }

    #[test]
    fn regular_examples() {
        let g = Bicomodule::regular(&grouplike(Q, 1));
        assert_eq!(g.psi_l(), &Matrix::from_i64(Q, &[&[1]]));
        let z = Bicomodule::regular(&zero_coalgebra(Q));
        assert_eq!(z.dim(), 0);
        assert!(z.check().is_ok());
        let dp = Bicomodule::regular(&divided_power(Q, 2));
        // ψ_l(e1) = e0⊗e1 + e1⊗e0: flat indices 1 and 2.
        assert_eq!(dp.psi_l().column(1), vec![Q.zero(), Q.one(), Q.one(), Q.zero()]);
    }

    #[test]
    fn structure_constants_round_trip() {
        let dp = divided_power(Q, 3);
        let sc = dp.structure_constants();
        let back = Coalgebra::from_structure_constants(Q, dp.name(), 3, &sc).unwrap();
        assert_eq!(back, dp);
        assert!(Coalgebra::from_structure_constants(Q, "x", 1, &[(0, 1, 0, Q.one())]).is_err());
    }

    #[test]
    fn transport_preserves_validity() {
        let t = Matrix::from_i64(Q, &[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1]]);
        let a = divided_power(Q, 3).transport(&t).unwrap();
        assert!(a.check_coassociative().is_ok());
        let f = CoalgebraMorphism::identity(&divided_power(Q, 3))
            .transport(&t, &Matrix::identity(Q, 3))
            .unwrap();
        assert!(f.check_morphism().is_ok());
    }
}
