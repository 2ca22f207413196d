use super::cochain::{all_zero, cochain_dim, Cochain, DeformationComplex, MorphismCochain};
use crate::coalgebra::tensor::{middle_insertion, power, tensor_power_map};
use crate::coalgebra::{Bicomodule, CoalgebraMorphism};
use crate::error::{Error, Result};
use crate::linalg::{
    class_coordinates, image_basis, kernel_basis, quotient_data, solve, Field, Matrix, Scalar, Subspace,
};

/// One of the two cochain complexes: `C^*_c(M, A)` or `C^*_c(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Complex {
    Hochschild(Bicomodule),
    Morphism(DeformationComplex),
}

/// An element of either complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Hochschild(Cochain),
    Morphism(MorphismCochain),
}

impl Element {
    pub fn degree(&self) -> usize {
        match self {
            Element::Hochschild(c) => c.degree(),
            Element::Morphism(w) => w.degree(),
        }
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        match self {
            Element::Hochschild(c) => c.flatten(),
            Element::Morphism(w) => w.flatten(),
        }
    }

    pub fn is_zero(&self) -> bool {
        all_zero(&self.flatten())
    }

    pub fn as_morphism(&self) -> Option<&MorphismCochain> {
        match self {
            Element::Morphism(w) => Some(w),
            Element::Hochschild(_) => None,
        }
    }

    pub fn as_hochschild(&self) -> Option<&Cochain> {
        match self {
            Element::Hochschild(c) => Some(c),
            Element::Morphism(_) => None,
        }
    }
}

impl From<Cochain> for Element {
    fn from(c: Cochain) -> Self {
        Element::Hochschild(c)
    }
}

impl From<MorphismCochain> for Element {
    fn from(w: MorphismCochain) -> Self {
        Element::Morphism(w)
    }
}

/// Cohomology in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub h_dim: usize,
    /// Cocycles completing a basis of the coboundaries to one of the cocycles.
    pub representatives: Vec<Element>,
    coboundaries: Subspace,
}

impl CohomologyReport {
    /// Coordinates of a cocycle's class against `representatives`.
    pub fn class_of(&self, w: &Element) -> Result<Vec<Scalar>> {
        let reps: Vec<Vec<Scalar>> = self.representatives.iter().map(Element::flatten).collect();
        class_coordinates(&self.coboundaries, &reps, &w.flatten())?
            .ok_or_else(|| Error::NotACocycle(format!("degree-{} element", self.degree)))
    }
}

// Adds the matrix of σ ↦ (Id_A ⊗ σ)∘ψ_l + Σ ± ins_i∘σ ± (σ ⊗ Id_A)∘ψ_r,
// written entry by entry, into `out` at the given block offset.
fn hochschild_block(
    m: &Bicomodule,
    n: usize,
    out: &mut Matrix,
    row0: usize,
    col0: usize,
    sign: &Scalar,
) -> Result<()> {
    if n == 0 {
        return Ok(());
    }
    let f = m.field();
    let a = m.over();
    let d = a.dim();
    let dm = m.dim();
    let dn = power(d, n);
    let coeff = |k: usize| {
        let s = if k.is_multiple_of(2) {
            f.one()
        } else {
            f.from_i64(-1)
        };
        f.mul(&s, sign)
    };
    let plus = coeff(0);
    // (Id ⊗ σ)∘ψ_l: output (a·d^n + r, μ) gets ψ_l[(a, m'), μ]·σ[r, m'].
    for (row, mu, v) in m.psi_l().nonzeros() {
        let (ai, mp) = (row / dm, row % dm);
        let v = f.mul(v, &plus);
        for r in 0..dn {
            out.add_to(row0 + (ai * dn + r) * dm + mu, col0 + r * dm + mp, &v);
        }
    }
    for i in 1..=n {
        let s = coeff(i);
        let ins = middle_insertion(a.delta(), n, i)?;
        for (srow, r, v) in ins.nonzeros() {
            let v = f.mul(v, &s);
            for mu in 0..dm {
                out.add_to(row0 + srow * dm + mu, col0 + r * dm + mu, &v);
            }
        }
    }
    // (σ ⊗ Id)∘ψ_r: output (r·d + a, μ) gets ψ_r[(m', a), μ]·σ[r, m'].
    let last = coeff(n + 1);
    for (row, mu, v) in m.psi_r().nonzeros() {
        let (mp, ai) = (row / d, row % d);
        let v = f.mul(v, &last);
        for r in 0..dn {
            out.add_to(row0 + (r * d + ai) * dm + mu, col0 + r * dm + mp, &v);
        }
    }
    Ok(())
}

impl Complex {
    pub fn hochschild(m: Bicomodule) -> Self {
        Complex::Hochschild(m)
    }

    pub fn morphism(f: &CoalgebraMorphism) -> Result<Self> {
        Ok(Complex::Morphism(DeformationComplex::new(f)?))
    }

    pub fn field(&self) -> Field {
        match self {
            Complex::Hochschild(m) => m.field(),
            Complex::Morphism(c) => c.field(),
        }
    }

    /// Dimension of the degree-`n` cochain space.
    pub fn dim(&self, n: usize) -> usize {
        match self {
            Complex::Hochschild(m) => cochain_dim(m, n),
            Complex::Morphism(c) => c.dim(n),
        }
    }

    pub fn zero(&self, n: usize) -> Element {
        match self {
            Complex::Hochschild(m) => Cochain::zero(m, n).into(),
            Complex::Morphism(c) => MorphismCochain::zero(c, n).into(),
        }
    }

    pub fn element_from_flat(&self, n: usize, flat: &[Scalar]) -> Result<Element> {
        match self {
            Complex::Hochschild(m) => Ok(Cochain::from_flat(m, n, flat.to_vec())?.into()),
            Complex::Morphism(c) => Ok(MorphismCochain::from_flat(c, n, flat)?.into()),
        }
    }

    /// Applies the differential in operation form.
    pub fn differential(&self, w: &Element) -> Result<Element> {
        match (self, w) {
            (Complex::Hochschild(m), Element::Hochschild(s)) => Ok(super::cochain::delta_c(m, s)?.into()),
            (Complex::Morphism(c), Element::Morphism(w)) => Ok(c.d_c(w)?.into()),
            _ => Err(Error::Invalid {
                kind: "cochain",
                detail: "element belongs to a different complex".into(),
            }),
        }
    }

    /// The differential `C^n → C^{n+1}` as a matrix over the flattened
    /// cochain bases. Built from index formulas, independently of
    /// [`Complex::differential`].
    pub fn differential_matrix(&self, n: usize) -> Result<Matrix> {
        let f = self.field();
        let mut out = Matrix::zeros(f, self.dim(n + 1), self.dim(n));
        let one = f.one();
        match self {
            Complex::Hochschild(m) => hochschild_block(m, n, &mut out, 0, 0, &one)?,
            Complex::Morphism(c) => {
                if n == 0 {
                    return Ok(out);
                }
                let (sa, sb) = (c.source_module(), c.target_module());
                let via = c.via_module();
                let (xa, xb) = (cochain_dim(sa, n), cochain_dim(sb, n));
                let (ya, yb) = (cochain_dim(sa, n + 1), cochain_dim(sb, n + 1));
                hochschild_block(sa, n, &mut out, 0, 0, &one)?;
                hochschild_block(sb, n, &mut out, ya, xa, &one)?;
                let minus = f.from_i64(-1);
                hochschild_block(via, n - 1, &mut out, ya + yb, xa + xb, &minus)?;
                let fm = c.morphism().matrix();
                let (db, da) = fm.shape();
                let rows_b = power(db, n);
                // π ↦ π∘f: output (r, a) gets f[b, a]·π[r, b].
                for (b, a, v) in fm.nonzeros() {
                    for r in 0..rows_b {
                        out.add_to(ya + yb + r * da + a, xa + r * db + b, v);
                    }
                }
                // ξ ↦ −f^{⊗n}∘ξ: output (s, a) gets −T[s, r]·ξ[r, a].
                let t = tensor_power_map(fm, n);
                for (s, r, v) in t.nonzeros() {
                    let v = f.neg(v);
                    for a in 0..da {
                        out.add_to(ya + yb + s * da + a, r * da + a, &v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_cocycle(&self, w: &Element) -> Result<bool> {
        Ok(self.differential(w)?.is_zero())
    }

    /// A canonical `u` with `d(u) = w`, or `None` if `w` is not a coboundary.
    pub fn is_coboundary(&self, w: &Element) -> Result<Option<Element>> {
        let n = w.degree();
        if n == 0 {
            return Ok(Some(self.zero(0)));
        }
        let d = self.differential_matrix(n - 1)?;
        match solve(&d, &w.flatten())? {
            Some(x) => Ok(Some(self.element_from_flat(n - 1, &x)?)),
            None => Ok(None),
        }
    }

    /// `H^n = ker d_n / im d_{n-1}` for `n ≥ 1`, with `d_0 = 0`.
    pub fn cohomology(&self, n: usize) -> Result<CohomologyReport> {
        if n == 0 {
            return Err(Error::OutOfRange("cohomology is indexed from degree 1".into()));
        }
        let cocycles = kernel_basis(&self.differential_matrix(n)?);
        let coboundaries = image_basis(&self.differential_matrix(n - 1)?);
        let quotient = quotient_data(&cocycles, &coboundaries)?;
        let representatives = quotient
            .representatives
            .iter()
            .map(|v| self.element_from_flat(n, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(CohomologyReport {
            degree: n,
            cocycle_dim: cocycles.dim(),
            coboundary_dim: coboundaries.dim(),
            h_dim: quotient.dim,
            representatives,
            coboundaries,
        })
    }
}
