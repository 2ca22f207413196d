use super::{infinitesimal, Side, TruncatedDeformation};
use crate::coalgebra::CoalgebraMorphism;
use crate::cohomology::{Complex, DeformationComplex, Element, MorphismCochain};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// A formal isomorphism `Φ_t = Σ_{n=0}^N φ_n t^n`, `φ_n = (φ_{A,n}; φ_{B,n})`
/// of degree 1, with `φ_0 = (Id_A; Id_B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalIsomorphism {
    complex: DeformationComplex,
    coeffs: Vec<MorphismCochain>,
}

impl FormalIsomorphism {
    pub fn identity(f: &CoalgebraMorphism, order: usize) -> Result<Self> {
        let complex = DeformationComplex::new(f)?;
        let mut coeffs = vec![identity_coefficient(&complex)];
        coeffs.extend((0..order).map(|_| MorphismCochain::zero(&complex, 1)));
        Ok(FormalIsomorphism { complex, coeffs })
    }

    /// `Id + Σ_{n≥1} higher[n-1]·t^n`.
    pub fn new(f: &CoalgebraMorphism, higher: Vec<MorphismCochain>) -> Result<Self> {
        let complex = DeformationComplex::new(f)?;
        let mut coeffs = vec![identity_coefficient(&complex)];
        coeffs.extend(higher);
        Self::checked(complex, coeffs)
    }

    /// From `φ_0, …, φ_N`; fails unless `φ_0 = (Id_A; Id_B)`.
    pub fn from_coefficients(f: &CoalgebraMorphism, coeffs: Vec<MorphismCochain>) -> Result<Self> {
        Self::checked(DeformationComplex::new(f)?, coeffs)
    }

    fn checked(complex: DeformationComplex, coeffs: Vec<MorphismCochain>) -> Result<Self> {
        if coeffs.first() != Some(&identity_coefficient(&complex)) {
            return Err(Error::Invalid {
                kind: "formal isomorphism",
                detail: "constant coefficient must be (Id_A; Id_B)".into(),
            });
        }
        let expected = complex.dim(1);
        for (n, c) in coeffs.iter().enumerate() {
            if c.degree() != 1 || c.flatten().len() != expected {
                return Err(Error::Dimension(format!(
                    "coefficient of t^{n} must be a degree-1 cochain of f"
                )));
            }
        }
        Ok(FormalIsomorphism { complex, coeffs })
    }

    /// `Id − χ·t^l` truncated at `order`.
    pub fn elementary(f: &CoalgebraMorphism, chi: &MorphismCochain, l: usize, order: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::OutOfRange(
                "the perturbation must have positive order".into(),
            ));
        }
        let mut p = Self::identity(f, order)?;
        if l <= order {
            let minus = p.complex.field().from_i64(-1);
            p.coeffs[l] = chi.scale(&minus);
        }
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn morphism(&self) -> &CoalgebraMorphism {
        self.complex.morphism()
    }

    pub fn coefficients(&self) -> &[MorphismCochain] {
        &self.coeffs
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[1..].iter().all(MorphismCochain::is_zero)
    }

    fn series(&self, side: Side) -> Vec<Matrix> {
        self.coeffs
            .iter()
            .map(|c| match side {
                Side::Source => c.xi().clone(),
                Side::Target => c.pi().clone(),
            })
            .collect()
    }

    fn from_series(complex: DeformationComplex, a: Vec<Matrix>, b: Vec<Matrix>) -> Result<Self> {
        let coeffs = a
            .into_iter()
            .zip(b)
            .map(|(x, y)| MorphismCochain::first_degree(&complex, x, y))
            .collect::<Result<Vec<_>>>()?;
        Self::checked(complex, coeffs)
    }

    /// Componentwise truncated inverse: `ψ_0 = Id`,
    /// `ψ_n = −Σ_{k=1}^n φ_k∘ψ_{n-k}`.
    pub fn inverse(&self) -> FormalIsomorphism {
        let a = invert_series(&self.series(Side::Source));
        let b = invert_series(&self.series(Side::Target));
        Self::from_series(self.complex.clone(), a, b).expect("inverse keeps the identity constant term")
    }

    /// `self ∘ other`, truncated at the smaller order.
    pub fn compose(&self, other: &FormalIsomorphism) -> Result<FormalIsomorphism> {
        if self.complex != other.complex {
            return Err(Error::Invalid {
                kind: "formal isomorphism",
                detail: "isomorphisms of different morphisms".into(),
            });
        }
        let order = self.order().min(other.order());
        let a = series_mul(&self.series(Side::Source), &other.series(Side::Source), order);
        let b = series_mul(&self.series(Side::Target), &other.series(Side::Target), order);
        Self::from_series(self.complex.clone(), a, b)
    }
}

fn identity_coefficient(complex: &DeformationComplex) -> MorphismCochain {
    MorphismCochain::first_degree(complex, complex.source().identity(), complex.target().identity())
        .expect("identities have degree-1 shapes")
}

/// `c_n = Σ_{i+j=n} a_i ∘ b_j` for `n ≤ order`.
fn series_mul(a: &[Matrix], b: &[Matrix], order: usize) -> Vec<Matrix> {
    (0..=order)
        .map(|n| {
            let mut acc = Matrix::zeros(a[0].field(), a[0].rows(), b[0].cols());
            for i in 0..=n {
                if let (Some(x), Some(y)) = (a.get(i), b.get(n - i)) {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}

/// Coefficients of `Φ_t ⊗ Φ_t`.
fn series_square(a: &[Matrix]) -> Vec<Matrix> {
    let order = a.len() - 1;
    (0..=order)
        .map(|n| {
            let d = a[0].rows();
            let mut acc = Matrix::zeros(a[0].field(), d * d, a[0].cols() * a[0].cols());
            for i in 0..=n {
                acc = &acc + &a[i].kron(&a[n - i]);
            }
            acc
        })
        .collect()
}

fn invert_series(a: &[Matrix]) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = vec![a[0].clone()];
    for n in 1..a.len() {
        let mut acc = Matrix::zeros(a[0].field(), a[0].rows(), a[0].cols());
        for k in 1..=n {
            acc = &acc + &(&a[k] * &out[n - k]);
        }
        out.push(-&acc);
    }
    out
}

/// Free-function form of [`FormalIsomorphism::inverse`].
pub fn invert_formal(p: &FormalIsomorphism) -> FormalIsomorphism {
    p.inverse()
}

/// Transports a deformation along a formal isomorphism:
/// `Δ̄_{X,t} = (Φ_X ⊗ Φ_X)∘Δ_{X,t}∘Φ_X^{-1}` and `F̄_t = Φ_B∘F_t∘Φ_A^{-1}`,
/// truncated at the common order.
pub fn apply_equivalence(p: &FormalIsomorphism, d: &TruncatedDeformation) -> Result<TruncatedDeformation> {
    if p.order() != d.order() {
        return Err(Error::Dimension(format!(
            "isomorphism of order {} cannot transport a deformation of order {}",
            p.order(),
            d.order()
        )));
    }
    if &p.complex != d.complex() {
        return Err(Error::Invalid {
            kind: "formal isomorphism",
            detail: "isomorphism and deformation belong to different morphisms".into(),
        });
    }
    let order = d.order();
    let phi_a = p.series(Side::Source);
    let phi_b = p.series(Side::Target);
    let inv_a = invert_series(&phi_a);
    let delta = |side: Side| -> Vec<Matrix> { (0..=order).map(|n| d.side(side, n).clone()).collect() };
    let new_a = series_mul(
        &series_mul(&series_square(&phi_a), &delta(Side::Source), order),
        &inv_a,
        order,
    );
    let inv_b = invert_series(&phi_b);
    let new_b = series_mul(
        &series_mul(&series_square(&phi_b), &delta(Side::Target), order),
        &inv_b,
        order,
    );
    let maps: Vec<Matrix> = (0..=order).map(|n| d.map(n).clone()).collect();
    let new_f = series_mul(&series_mul(&phi_b, &maps, order), &inv_a, order);
    let higher = (1..=order)
        .map(|n| {
            MorphismCochain::new(
                d.complex(),
                2,
                new_a[n].clone(),
                new_b[n].clone(),
                new_f[n].clone(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    TruncatedDeformation::with_complex(d.complex().clone(), higher)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Trivialization {
    /// An isomorphism carrying the deformation to the trivial one.
    Trivialized(FormalIsomorphism),
    /// The leading coefficient at `order` is a cocycle with nonzero class in `H^2_c(f)`.
    Blocked {
        order: usize,
        cocycle: MorphismCochain,
        class: Vec<Scalar>,
    },
}

/// Kills the leading coefficient one order at a time: if `ω_l = d_c χ`,
/// transport along `Id − χ·t^l`, and compose the steps.
pub fn trivialize(d: &TruncatedDeformation) -> Result<Trivialization> {
    let f = d.morphism();
    let complex = Complex::Morphism(d.complex().clone());
    let mut current = d.clone();
    let mut total = FormalIsomorphism::identity(f, d.order())?;
    while let Some(lead) = infinitesimal(&current)? {
        if !lead.is_cocycle {
            return Err(Error::Internal(format!(
                "leading coefficient at order {} is not a 2-cocycle",
                lead.order
            )));
        }
        let element = Element::Morphism(lead.cochain.clone());
        let Some(chi) = complex.is_coboundary(&element)? else {
            let class = complex.cohomology(2)?.class_of(&element)?;
            return Ok(Trivialization::Blocked {
                order: lead.order,
                cocycle: lead.cochain,
                class,
            });
        };
        let chi = chi.as_morphism().expect("morphism complex").clone();
        let step = FormalIsomorphism::elementary(f, &chi, lead.order, d.order())?;
        current = apply_equivalence(&step, &current)?;
        if !current.coefficient(lead.order).is_zero() {
            return Err(Error::Internal(
                "elementary isomorphism did not kill its order".into(),
            ));
        }
        total = step.compose(&total)?;
    }
    Ok(Trivialization::Trivialized(total))
}

#[cfg(test)]
mod tests {
    use super::super::test_support::divided_power_deformation;
    use super::*;
    use crate::coalgebra::fixtures::*;
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    fn scalar(v: i64) -> Matrix {
        Matrix::from_i64(Q, &[&[v]])
    }

    fn id_grouplike() -> CoalgebraMorphism {
        CoalgebraMorphism::identity(&grouplike(Q, 1))
    }

    #[test]
    fn inverse_examples() {
        let f = id_grouplike();
        let id = FormalIsomorphism::identity(&f, 3).unwrap();
        assert_eq!(id.inverse(), id);

        let c = DeformationComplex::new(&f).unwrap();
        let g = MorphismCochain::first_degree(&c, scalar(2), scalar(-5)).unwrap();
        let p1 = FormalIsomorphism::new(&f, vec![g.clone()]).unwrap();
        let inv1 = p1.inverse();
        assert_eq!(inv1.order(), 1);
        assert_eq!(inv1.coefficients()[1], g.scale(&Q.from_i64(-1)));

        let p2 = FormalIsomorphism::new(&f, vec![g.clone(), MorphismCochain::zero(&c, 1)]).unwrap();
        let inv2 = p2.inverse();
        assert_eq!(inv2.coefficients()[2].xi(), &scalar(4));
        assert_eq!(inv2.coefficients()[2].pi(), &scalar(25));
        assert!(p2.compose(&inv2).unwrap().is_identity());
        assert!(inv2.compose(&p2).unwrap().is_identity());
    }

    #[test]
    fn constant_term_must_be_identity() {
        let f = id_grouplike();
        let c = DeformationComplex::new(&f).unwrap();
        let bad = MorphismCochain::first_degree(&c, scalar(2), scalar(1)).unwrap();
        assert!(FormalIsomorphism::from_coefficients(&f, vec![bad]).is_err());
    }

    #[test]
    fn identity_transport_is_noop() {
        let d = divided_power_deformation(3);
        let id = FormalIsomorphism::identity(d.morphism(), 3).unwrap();
        assert_eq!(apply_equivalence(&id, &d).unwrap(), d);
        let short = FormalIsomorphism::identity(d.morphism(), 2).unwrap();
        assert!(apply_equivalence(&short, &d).is_err());
    }

    #[test]
    fn transport_of_trivial_is_valid_and_trivializable() {
        let f = CoalgebraMorphism::identity(&divided_power(Q, 2));
        let c = DeformationComplex::new(&f).unwrap();
        let chi = MorphismCochain::first_degree(
            &c,
            Matrix::from_i64(Q, &[&[1, 2], &[0, -1]]),
            Matrix::from_i64(Q, &[&[0, 1], &[3, 0]]),
        )
        .unwrap();
        let p = FormalIsomorphism::new(&f, vec![chi.clone(), chi.scale(&Q.from_i64(2))]).unwrap();
        let trivial = TruncatedDeformation::trivial(&f, 2).unwrap();
        let moved = apply_equivalence(&p, &trivial).unwrap();
        assert!(moved.verify().is_ok());
        // The first-order change is d_c χ.
        assert_eq!(moved.coefficient(1), c.d_c(&chi).unwrap());
        assert_eq!(apply_equivalence(&p.inverse(), &moved).unwrap(), trivial);

        let Trivialization::Trivialized(q) = trivialize(&moved).unwrap() else {
            panic!("a transported trivial deformation is trivializable");
        };
        let back = apply_equivalence(&q, &moved).unwrap();
        assert_eq!(back, trivial);
    }

    #[test]
    fn trivial_deformation_trivializes_with_identity() {
        let d = TruncatedDeformation::trivial(&id_grouplike(), 3).unwrap();
        assert_eq!(
            trivialize(&d).unwrap(),
            Trivialization::Trivialized(FormalIsomorphism::identity(d.morphism(), 3).unwrap())
        );
    }

    #[test]
    fn divided_power_deformation_is_blocked_at_second_order() {
        // x² = t·x is first-order trivial (x ↦ x − t/2) but leaves x² = t²/4.
        let d = divided_power_deformation(2);
        let complex = Complex::Morphism(d.complex().clone());
        let h2 = complex.cohomology(2).unwrap();
        assert!(h2.h_dim > 0);
        match trivialize(&d).unwrap() {
            Trivialization::Blocked {
                order,
                cocycle,
                class,
            } => {
                assert_eq!(order, 2);
                let e = Element::Morphism(cocycle);
                assert!(complex.is_cocycle(&e).unwrap());
                assert!(complex.is_coboundary(&e).unwrap().is_none());
                assert_eq!(class.len(), h2.h_dim);
                assert!(class.iter().any(|c| c != &Q.zero()));
            }
            other => panic!("expected a blocked trivialization, got {other:?}"),
        }
    }

    #[test]
    fn nonzero_class_blocks_at_first_order() {
        let f = CoalgebraMorphism::identity(&divided_power(Q, 2));
        let complex = Complex::morphism(&f).unwrap();
        let h2 = complex.cohomology(2).unwrap();
        let rep = h2.representatives[0].as_morphism().unwrap().clone();
        let d = TruncatedDeformation::new(&f, vec![rep.clone()]).unwrap();
        assert!(d.verify().is_ok());
        match trivialize(&d).unwrap() {
            Trivialization::Blocked {
                order,
                cocycle,
                class,
            } => {
                assert_eq!((order, cocycle), (1, rep));
                let mut expected = vec![Q.zero(); h2.h_dim];
                expected[0] = Q.one();
                assert_eq!(class, expected);
            }
            other => panic!("expected a blocked trivialization, got {other:?}"),
        }
    }
}
