use num_traits::Zero;

use crate::coalgebra::tensor::{middle_insertion, power, tensor_power_map};
use crate::coalgebra::{Bicomodule, Coalgebra, CoalgebraMorphism};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

/// An element of `C^n_c(M, A) = Hom(M, A^{⊗n})`, stored as a
/// `(d^n, dim M)` matrix. Degree 0 is the zero module: the matrix is a zero
/// `(1, dim M)` placeholder and flattens to the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    matrix: Matrix,
}

/// Dimension of `C^n_c(M, A)`.
pub fn cochain_dim(m: &Bicomodule, n: usize) -> usize {
    if n == 0 {
        0
    } else {
        power(m.over().dim(), n) * m.dim()
    }
}

fn cochain_shape(m: &Bicomodule, n: usize) -> (usize, usize) {
    (power(m.over().dim(), n), m.dim())
}

impl Cochain {
    pub fn new(m: &Bicomodule, degree: usize, matrix: Matrix) -> Result<Self> {
        let shape = cochain_shape(m, degree);
        if matrix.shape() != shape {
            return Err(Error::Dimension(format!(
                "degree-{degree} cochain must be {}x{}, got {}x{}",
                shape.0,
                shape.1,
                matrix.rows(),
                matrix.cols()
            )));
        }
        if degree == 0 && !matrix.is_zero() {
            return Err(Error::Invalid {
                kind: "cochain",
                detail: "degree-0 cochains are identically zero".into(),
            });
        }
        Ok(Cochain { degree, matrix })
    }

    pub fn zero(m: &Bicomodule, degree: usize) -> Self {
        let (r, c) = cochain_shape(m, degree);
        Cochain {
            degree,
            matrix: Matrix::zeros(m.field(), r, c),
        }
    }

    pub fn from_flat(m: &Bicomodule, degree: usize, flat: Vec<Scalar>) -> Result<Self> {
        if degree == 0 {
            if !flat.is_empty() {
                return Err(Error::Dimension("degree-0 cochains have no entries".into()));
            }
            return Ok(Self::zero(m, 0));
        }
        let (r, c) = cochain_shape(m, degree);
        Self::new(m, degree, Matrix::from_flat(m.field(), r, c, flat)?)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Row-major entries; empty in degree 0.
    pub fn flatten(&self) -> Vec<Scalar> {
        if self.degree == 0 {
            Vec::new()
        } else {
            self.matrix.to_flat()
        }
    }

    fn check(&self, m: &Bicomodule) -> Result<()> {
        if self.matrix.shape() != cochain_shape(m, self.degree) {
            return Err(Error::Dimension(format!(
                "degree-{} cochain has shape {:?}, expected {:?}",
                self.degree,
                self.matrix.shape(),
                cochain_shape(m, self.degree)
            )));
        }
        Ok(())
    }
}

fn signed(field: Field, k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        field.one()
    } else {
        field.from_i64(-1)
    }
}

/// The Hochschild coalgebra differential
/// `δσ = (Id⊗σ)∘ψ_l + Σ_{i=1}^n (-1)^i (Id^{⊗(i-1)}⊗Δ⊗Id^{⊗(n-i)})∘σ + (-1)^{n+1} (σ⊗Id)∘ψ_r`.
pub fn delta_c(m: &Bicomodule, s: &Cochain) -> Result<Cochain> {
    s.check(m)?;
    let n = s.degree;
    if n == 0 {
        return Ok(Cochain::zero(m, 1));
    }
    let a = m.over();
    let field = a.field();
    let id_a = a.identity();
    let sigma = &s.matrix;
    let mut out = &id_a.kron(sigma) * m.psi_l();
    for i in 1..=n {
        let term = &middle_insertion(a.delta(), n, i)? * sigma;
        out = &out + &term.scale(&signed(field, i));
    }
    let last = &sigma.kron(&id_a) * m.psi_r();
    out = &out + &last.scale(&signed(field, n + 1));
    Ok(Cochain {
        degree: n + 1,
        matrix: out,
    })
}

/// The deformation complex of a morphism `f: A → B`, with the three
/// bicomodules its components live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationComplex {
    morphism: CoalgebraMorphism,
    source: Bicomodule,
    target: Bicomodule,
    via: Bicomodule,
}

impl DeformationComplex {
    /// Fails if `f` is not a coalgebra morphism.
    pub fn new(f: &CoalgebraMorphism) -> Result<Self> {
        Ok(DeformationComplex {
            morphism: f.clone(),
            source: Bicomodule::regular(f.source()),
            target: Bicomodule::regular(f.target()),
            via: Bicomodule::via(f)?,
        })
    }

    pub fn morphism(&self) -> &CoalgebraMorphism {
        &self.morphism
    }

    pub fn field(&self) -> Field {
        self.morphism.field()
    }

    /// `A` as an `A`-bicomodule.
    pub fn source_module(&self) -> &Bicomodule {
        &self.source
    }

    /// `B` as a `B`-bicomodule.
    pub fn target_module(&self) -> &Bicomodule {
        &self.target
    }

    /// `A` as a `B`-bicomodule via `f`.
    pub fn via_module(&self) -> &Bicomodule {
        &self.via
    }

    pub fn source(&self) -> &Coalgebra {
        self.morphism.source()
    }

    pub fn target(&self) -> &Coalgebra {
        self.morphism.target()
    }

    /// Dimension of `C^n_c(f)`.
    pub fn dim(&self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        cochain_dim(&self.source, n) + cochain_dim(&self.target, n) + cochain_dim(&self.via, n - 1)
    }

    /// `d_c(ξ; π; φ) = (δξ; δπ; π∘f − f^{⊗n}∘ξ − δφ)`.
    pub fn d_c(&self, w: &MorphismCochain) -> Result<MorphismCochain> {
        w.check(self)?;
        let n = w.degree;
        if n == 0 {
            return Ok(MorphismCochain::zero(self, 1));
        }
        let xi = delta_c(&self.source, &w.xi)?;
        let pi = delta_c(&self.target, &w.pi)?;
        let f = self.morphism.matrix();
        let pulled = w.pi.matrix() * f;
        let pushed = &tensor_power_map(f, n) * w.xi.matrix();
        let phi_term = delta_c(&self.via, &w.phi)?;
        let phi = &(&pulled - &pushed) - phi_term.matrix();
        Ok(MorphismCochain {
            degree: n + 1,
            xi,
            pi,
            phi: Cochain::new(&self.via, n, phi)?,
        })
    }
}

/// An element `(ξ; π; φ)` of `C^n_c(f) = C^n_c(A,A) × C^n_c(B,B) × C^{n-1}_c(A,B)`.
///
/// In degree 1 the `φ` slot is the zero degree-0 cochain. Degree 0 is the
/// zero module and only appears as a preimage of coboundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCochain {
    degree: usize,
    xi: Cochain,
    pi: Cochain,
    phi: Cochain,
}

impl MorphismCochain {
    pub fn new(
        complex: &DeformationComplex,
        degree: usize,
        xi: Matrix,
        pi: Matrix,
        phi: Matrix,
    ) -> Result<Self> {
        let w = MorphismCochain {
            degree,
            xi: Cochain::new(&complex.source, degree, xi)?,
            pi: Cochain::new(&complex.target, degree, pi)?,
            phi: Cochain::new(&complex.via, degree.saturating_sub(1), phi)?,
        };
        Ok(w)
    }

    /// Degree-1 cochain `(ξ; π)`.
    pub fn first_degree(complex: &DeformationComplex, xi: Matrix, pi: Matrix) -> Result<Self> {
        let phi = Cochain::zero(&complex.via, 0).into_matrix();
        Self::new(complex, 1, xi, pi, phi)
    }

    pub fn zero(complex: &DeformationComplex, degree: usize) -> Self {
        MorphismCochain {
            degree,
            xi: Cochain::zero(&complex.source, degree),
            pi: Cochain::zero(&complex.target, degree),
            phi: Cochain::zero(&complex.via, degree.saturating_sub(1)),
        }
    }

    /// Inverse of [`MorphismCochain::flatten`].
    pub fn from_flat(complex: &DeformationComplex, degree: usize, flat: &[Scalar]) -> Result<Self> {
        if flat.len() != complex.dim(degree) {
            return Err(Error::Dimension(format!(
                "degree-{degree} morphism cochain has {} entries, got {}",
                complex.dim(degree),
                flat.len()
            )));
        }
        if degree == 0 {
            return Ok(Self::zero(complex, 0));
        }
        let a = cochain_dim(&complex.source, degree);
        let b = cochain_dim(&complex.target, degree);
        Ok(MorphismCochain {
            degree,
            xi: Cochain::from_flat(&complex.source, degree, flat[..a].to_vec())?,
            pi: Cochain::from_flat(&complex.target, degree, flat[a..a + b].to_vec())?,
            phi: Cochain::from_flat(&complex.via, degree - 1, flat[a + b..].to_vec())?,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn xi(&self) -> &Matrix {
        self.xi.matrix()
    }

    pub fn pi(&self) -> &Matrix {
        self.pi.matrix()
    }

    pub fn phi(&self) -> &Matrix {
        self.phi.matrix()
    }

    pub fn is_zero(&self) -> bool {
        self.xi.is_zero() && self.pi.is_zero() && self.phi.is_zero()
    }

    /// `(ξ, π, φ)` blocks concatenated, each row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = self.xi.flatten();
        out.extend(self.pi.flatten());
        out.extend(self.phi.flatten());
        out
    }

    /// First nonzero flat entry, as `(component, row, col, value)`.
    pub fn first_nonzero(&self) -> Option<(&'static str, usize, usize, &Scalar)> {
        [("xi", &self.xi), ("pi", &self.pi), ("phi", &self.phi)]
            .into_iter()
            .find_map(|(name, c)| c.matrix.first_nonzero().map(|(r, k, v)| (name, r, k, v)))
    }

    fn zip(&self, other: &Self, op: impl Fn(&Matrix, &Matrix) -> Matrix) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let degree = self.degree;
        let wrap = |d: usize, m: Matrix| Cochain { degree: d, matrix: m };
        MorphismCochain {
            degree,
            xi: wrap(degree, op(self.xi(), other.xi())),
            pi: wrap(degree, op(self.pi(), other.pi())),
            phi: wrap(self.phi.degree, op(self.phi(), other.phi())),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.zip(self, |a, _| a.scale(c))
    }

    fn check(&self, complex: &DeformationComplex) -> Result<()> {
        self.xi.check(&complex.source)?;
        self.pi.check(&complex.target)?;
        self.phi.check(&complex.via)?;
        if self.phi.degree != self.degree.saturating_sub(1) {
            return Err(Error::Dimension("φ component has the wrong degree".into()));
        }
        Ok(())
    }
}

/// Convenience form of [`DeformationComplex::d_c`].
pub fn d_c(f: &CoalgebraMorphism, w: &MorphismCochain) -> Result<MorphismCochain> {
    DeformationComplex::new(f)?.d_c(w)
}

pub(crate) fn all_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}
