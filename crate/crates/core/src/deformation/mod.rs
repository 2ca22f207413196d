//! Truncated formal deformations `Ω_t = Σ_{n=0}^N ω_n t^n` of a coalgebra
//! morphism, with `ω_n = (Δ_{A,n}; Δ_{B,n}; f_n) ∈ C^2_c(f)` and
//! `ω_0 = (Δ_A; Δ_B; f)`.

mod equivalence;
mod obstruction;

pub use equivalence::{apply_equivalence, invert_formal, trivialize, FormalIsomorphism, Trivialization};
pub use obstruction::{comp_bar, extend, integrate, obstruction, Extension, Integration, ObstructionClass};

use crate::coalgebra::fixtures::divided_power;
use crate::coalgebra::CoalgebraMorphism;
use crate::cohomology::{DeformationComplex, MorphismCochain};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    complex: DeformationComplex,
    coeffs: Vec<MorphismCochain>,
}

/// `ω_0 = (Δ_A; Δ_B; f)` as a degree-2 morphism cochain.
pub(crate) fn base_coefficient(complex: &DeformationComplex) -> MorphismCochain {
    let f = complex.morphism();
    MorphismCochain::new(
        complex,
        2,
        f.source().delta().clone(),
        f.target().delta().clone(),
        f.matrix().clone(),
    )
    .expect("structure maps have cochain shapes")
}

impl TruncatedDeformation {
    /// The deformation with all higher coefficients zero.
    pub fn trivial(f: &CoalgebraMorphism, order: usize) -> Result<Self> {
        let complex = DeformationComplex::new(f)?;
        let mut coeffs = vec![base_coefficient(&complex)];
        coeffs.extend((0..order).map(|_| MorphismCochain::zero(&complex, 2)));
        Ok(TruncatedDeformation { complex, coeffs })
    }

    /// Builds `ω_0 + Σ_{n≥1} higher[n-1]·t^n`; the order is `higher.len()`.
    pub fn new(f: &CoalgebraMorphism, higher: Vec<MorphismCochain>) -> Result<Self> {
        let complex = DeformationComplex::new(f)?;
        Self::with_complex(complex, higher)
    }

    pub(crate) fn with_complex(complex: DeformationComplex, higher: Vec<MorphismCochain>) -> Result<Self> {
        let zero = MorphismCochain::zero(&complex, 2);
        for (n, w) in higher.iter().enumerate() {
            if w.degree() != 2 || w.flatten().len() != zero.flatten().len() {
                return Err(Error::Dimension(format!(
                    "coefficient of t^{} must be a degree-2 cochain of f",
                    n + 1
                )));
            }
        }
        let mut coeffs = vec![base_coefficient(&complex)];
        coeffs.extend(higher);
        Ok(TruncatedDeformation { complex, coeffs })
    }

    /// Builds a deformation from `ω_0, …, ω_N`, rejecting a wrong `ω_0`.
    pub fn from_coefficients(f: &CoalgebraMorphism, mut coeffs: Vec<MorphismCochain>) -> Result<Self> {
        let complex = DeformationComplex::new(f)?;
        if coeffs.is_empty() || coeffs[0] != base_coefficient(&complex) {
            return Err(Error::Invalid {
                kind: "deformation",
                detail: "constant coefficient must be (Δ_A; Δ_B; f)".into(),
            });
        }
        let higher = coeffs.split_off(1);
        Self::with_complex(complex, higher)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn morphism(&self) -> &CoalgebraMorphism {
        self.complex.morphism()
    }

    pub fn complex(&self) -> &DeformationComplex {
        &self.complex
    }

    pub fn coefficients(&self) -> &[MorphismCochain] {
        &self.coeffs
    }

    /// `ω_n`, or zero beyond the order.
    pub fn coefficient(&self, n: usize) -> MorphismCochain {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(|| MorphismCochain::zero(&self.complex, 2))
    }

    pub fn delta_a(&self, n: usize) -> &Matrix {
        self.coeffs[n].xi()
    }

    pub fn delta_b(&self, n: usize) -> &Matrix {
        self.coeffs[n].pi()
    }

    pub fn map(&self, n: usize) -> &Matrix {
        self.coeffs[n].phi()
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate(order + 1);
        out
    }

    /// `Ω_t + w·t^{N+1}`, without any validity check.
    pub fn append(&self, w: MorphismCochain) -> Result<Self> {
        let mut higher = self.coeffs[1..].to_vec();
        higher.push(w);
        Self::with_complex(self.complex.clone(), higher)
    }

    /// Substitutes `t ↦ t^k`, giving a deformation of order `k·N` whose
    /// coefficients vanish outside multiples of `k`.
    pub fn substitute_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("t ↦ t^0 is not a substitution".into()));
        }
        let higher = (1..=k * self.order())
            .map(|n| {
                if n % k == 0 {
                    self.coeffs[n / k].clone()
                } else {
                    MorphismCochain::zero(&self.complex, 2)
                }
            })
            .collect();
        Self::with_complex(self.complex.clone(), higher)
    }

    /// Checks coassociativity of `Δ_{A,t}`, `Δ_{B,t}` and the morphism
    /// condition `Σ_{i+j+k=n} (f_j⊗f_k)∘Δ_{A,i} = Σ_i Δ_{B,i}∘f_{n-i}`
    /// coefficientwise through order N.
    pub fn verify(&self) -> Verdict {
        for n in 0..=self.order() {
            let verdict = coassociativity_residual(self, n, Side::Source)
                .and_then(|| coassociativity_residual(self, n, Side::Target))
                .and_then(|| morphism_residual(self, n));
            if !verdict.is_ok() {
                return verdict;
            }
        }
        Verdict::Ok
    }

    pub(crate) fn side(&self, side: Side, n: usize) -> &Matrix {
        match side {
            Side::Source => self.delta_a(n),
            Side::Target => self.delta_b(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Source,
    Target,
}

fn coassociativity_residual(d: &TruncatedDeformation, n: usize, side: Side) -> Verdict {
    let field = d.complex.field();
    let dim = d.side(side, 0).cols();
    let id = Matrix::identity(field, dim);
    let mut acc = Matrix::zeros(field, dim * dim * dim, dim);
    for i in 0..=n {
        let (di, dj) = (d.side(side, i), d.side(side, n - i));
        acc = &acc + &(&(&di.kron(&id) * dj) - &(&id.kron(di) * dj));
    }
    let name = match side {
        Side::Source => "coassociativity of Δ_A,t",
        Side::Target => "coassociativity of Δ_B,t",
    };
    Verdict::residual(name, Some(n), &acc)
}

fn morphism_residual(d: &TruncatedDeformation, n: usize) -> Verdict {
    let field = d.complex.field();
    let (db, da) = d.map(0).shape();
    let mut acc = Matrix::zeros(field, db * db, da);
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            acc = &acc + &(&d.map(j).kron(d.map(k)) * d.delta_a(i));
        }
        acc = &acc - &(d.delta_b(i) * d.map(n - i));
    }
    Verdict::residual("morphism condition of F_t", Some(n), &acc)
}

/// Free-function form of [`TruncatedDeformation::verify`].
pub fn verify_deformation(d: &TruncatedDeformation) -> Verdict {
    d.verify()
}

/// The leading nonzero coefficient `ω_l` (`l ≥ 1`) of a deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infinitesimal {
    pub cochain: MorphismCochain,
    /// The index `l` of the leading nonzero coefficient.
    pub order: usize,
    pub is_cocycle: bool,
}

/// Extracts the leading nonzero higher coefficient. `None` means the
/// deformation is trivial to its order.
pub fn infinitesimal(d: &TruncatedDeformation) -> Result<Option<Infinitesimal>> {
    if let Verdict::Failed(failure) = d.verify() {
        return Err(Error::Invalid {
            kind: "deformation",
            detail: failure.to_string(),
        });
    }
    let Some(l) = (1..=d.order()).find(|&n| !d.coeffs[n].is_zero()) else {
        return Ok(None);
    };
    let cochain = d.coeffs[l].clone();
    let is_cocycle = d.complex.d_c(&cochain)?.is_zero();
    Ok(Some(Infinitesimal {
        cochain,
        order: l,
        is_cocycle,
    }))
}

/// Divided-power deformation: `Δ_1(e_1) = e_1⊗e_1` on both sides of
/// `Id: divided_power(2) → divided_power(2)`, `f_1 = 0`, higher terms zero.
/// Valid to every order.
pub fn divided_power_deformation(field: Field, order: usize) -> TruncatedDeformation {
    let f = CoalgebraMorphism::identity(&divided_power(field, 2));
    let complex = DeformationComplex::new(&f).expect("identity is a morphism");
    let mut delta1 = Matrix::zeros(field, 4, 2);
    delta1.set(3, 1, field.one());
    let w = MorphismCochain::new(&complex, 2, delta1.clone(), delta1, Matrix::zeros(field, 2, 2))
        .expect("shapes match");
    let mut higher = vec![w];
    higher.truncate(order);
    higher.extend((higher.len()..order).map(|_| MorphismCochain::zero(&complex, 2)));
    TruncatedDeformation::with_complex(complex, higher).expect("shapes match")
}
