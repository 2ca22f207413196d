use super::{Side, TruncatedDeformation};
use crate::coalgebra::CoalgebraMorphism;
use crate::cohomology::{Complex, DeformationComplex, Element, MorphismCochain};
use crate::error::{Error, Result};
use crate::linalg::{solve, Matrix, Scalar};
use crate::verdict::Verdict;

/// `(s ⊗ Id)∘t − (Id ⊗ s)∘t` for 2-cochains `s, t` on the same coalgebra.
pub fn comp_bar(s: &Matrix, t: &Matrix) -> Result<Matrix> {
    let d = s.cols();
    if s.shape() != (d * d, d) || t.shape() != (d * d, d) {
        return Err(Error::Dimension(format!(
            "comp expects two {}x{d} cochains, got {:?} and {:?}",
            d * d,
            s.shape(),
            t.shape()
        )));
    }
    let id = Matrix::identity(s.field(), d);
    Ok(&(&s.kron(&id) * t) - &(&id.kron(s) * t))
}

/// The obstruction `Ob_Ω = (Ob_A; Ob_B; Ob_F) ∈ C^3_c(f)` to extending an
/// order-N deformation, together with its cohomology class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionClass {
    pub cochain: MorphismCochain,
    /// Coordinates in `H^3_c(f)`; empty when `Ob_Ω` is a coboundary.
    pub class: Vec<Scalar>,
    /// Canonical `ω` with `d_c ω = Ob_Ω`, when one exists.
    pub cobounding: Option<MorphismCochain>,
}

impl ObstructionClass {
    pub fn is_obstructed(&self) -> bool {
        self.cobounding.is_none()
    }
}

fn obstruction_cochain(d: &TruncatedDeformation) -> Result<MorphismCochain> {
    let complex = d.complex();
    let field = complex.field();
    let n = d.order();
    let ob_side = |side: Side| -> Result<Matrix> {
        let dim = d.side(side, 0).cols();
        let mut acc = Matrix::zeros(field, dim * dim * dim, dim);
        for i in 1..=n {
            acc = &acc + &comp_bar(d.side(side, i), d.side(side, n + 1 - i))?;
        }
        Ok(acc)
    };
    let ob_a = ob_side(Side::Source)?;
    let ob_b = ob_side(Side::Target)?;

    let (db, da) = d.map(0).shape();
    let mut ob_f = Matrix::zeros(field, db * db, da);
    // i + j + k = N + 1 with every index at most N.
    for i in 0..=n {
        for j in 0..=n {
            let Some(k) = (n + 1).checked_sub(i + j) else {
                continue;
            };
            if k > n {
                continue;
            }
            ob_f = &ob_f + &(&d.map(j).kron(d.map(k)) * d.delta_a(i));
        }
    }
    for i in 1..=n {
        ob_f = &ob_f - &(d.delta_b(n + 1 - i) * d.map(i));
    }
    MorphismCochain::new(complex, 3, ob_a, ob_b, ob_f)
}

fn require_valid(d: &TruncatedDeformation) -> Result<()> {
    match d.verify() {
        Verdict::Ok => Ok(()),
        Verdict::Failed(failure) => Err(Error::Invalid {
            kind: "deformation",
            detail: failure.to_string(),
        }),
    }
}

/// Computes `Ob_Ω`, confirms it is a 3-cocycle, and finds either a
/// canonical cobounding 2-cochain or its class in `H^3_c(f)`.
pub fn obstruction(d: &TruncatedDeformation) -> Result<ObstructionClass> {
    require_valid(d)?;
    let cochain = obstruction_cochain(d)?;
    let complex = d.complex();
    if !complex.d_c(&cochain)?.is_zero() {
        return Err(Error::Internal(
            "obstruction of a valid deformation is not a 3-cocycle".into(),
        ));
    }
    let whole = Complex::Morphism(complex.clone());
    let d2 = whole.differential_matrix(2)?;
    if let Some(x) = solve(&d2, &cochain.flatten())? {
        return Ok(ObstructionClass {
            cochain,
            class: Vec::new(),
            cobounding: Some(MorphismCochain::from_flat(complex, 2, &x)?),
        });
    }
    let class = whole
        .cohomology(3)?
        .class_of(&Element::Morphism(cochain.clone()))?;
    Ok(ObstructionClass {
        cochain,
        class,
        cobounding: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Extension {
    Extended(TruncatedDeformation),
    Obstructed(ObstructionClass),
}

/// Extends an order-N deformation to order N+1.
///
/// With `w` given, it is accepted iff `d_c w = Ob_Ω`. Without it, the
/// canonical solution of `d_c ω = Ob_Ω` is used, or the obstruction class is
/// returned when none exists.
pub fn extend(d: &TruncatedDeformation, w: Option<&MorphismCochain>) -> Result<Extension> {
    let ob = obstruction(d)?;
    let next = match w {
        Some(w) => {
            let dw = d.complex().d_c(w)?;
            let diff = dw.sub(&ob.cochain);
            if let Some((component, row, col, v)) = diff.first_nonzero() {
                return Err(Error::Rejected(format!(
                    "d_c(w) − Ob differs in {component} at ({row}, {col}) by {v}"
                )));
            }
            w.clone()
        }
        None => match ob.cobounding {
            Some(ref w) => w.clone(),
            None => return Ok(Extension::Obstructed(ob)),
        },
    };
    Ok(Extension::Extended(d.append(next)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Integration {
    Complete(TruncatedDeformation),
    Obstructed {
        partial: TruncatedDeformation,
        obstruction: ObstructionClass,
    },
}

/// Integrates a 2-cocycle `w` to a deformation `ω_0 + w·t + …` of the
/// requested order, extending with canonical solutions at every step.
pub fn integrate(f: &CoalgebraMorphism, w: &MorphismCochain, target_order: usize) -> Result<Integration> {
    if target_order == 0 {
        return Err(Error::OutOfRange(
            "integration needs a target order of at least 1".into(),
        ));
    }
    let complex = DeformationComplex::new(f)?;
    let dw = complex.d_c(w)?;
    if let Some((component, row, col, v)) = dw.first_nonzero() {
        return Err(Error::NotACocycle(format!(
            "not an infinitesimal candidate: d_c(w) has {v} in {component} at ({row}, {col})"
        )));
    }
    let mut current = TruncatedDeformation::with_complex(complex, vec![w.clone()])?;
    while current.order() < target_order {
        match extend(&current, None)? {
            Extension::Extended(next) => current = next,
            Extension::Obstructed(obstruction) => {
                return Ok(Integration::Obstructed {
                    partial: current,
                    obstruction,
                })
            }
        }
    }
    Ok(Integration::Complete(current))
}

#[cfg(test)]
mod tests {
    use super::super::test_support::divided_power_deformation;
    use super::*;
    use crate::coalgebra::fixtures::*;
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn comp_bar_examples() {
        let dp = divided_power(Q, 2);
        assert!(comp_bar(dp.delta(), dp.delta()).unwrap().is_zero());
        let zero = Matrix::zeros(Q, 4, 2);
        assert!(comp_bar(&zero, dp.delta()).unwrap().is_zero());
        assert!(comp_bar(dp.delta(), &zero).unwrap().is_zero());
        let mut s = Matrix::zeros(Q, 4, 2);
        s.set(3, 1, Q.one());
        assert!(comp_bar(&s, &s).unwrap().is_zero());
        assert!(comp_bar(&s, &Matrix::zeros(Q, 2, 1)).is_err());
    }

    #[test]
    fn trivial_deformation_is_unobstructed() {
        for f in small_morphisms(Q).into_iter().take(6) {
            let d = TruncatedDeformation::trivial(&f, 2).unwrap();
            let ob = obstruction(&d).unwrap();
            assert!(ob.cochain.is_zero());
            assert!(!ob.is_obstructed() && ob.class.is_empty());
            match extend(&d, Some(&MorphismCochain::zero(d.complex(), 2))).unwrap() {
                Extension::Extended(e) => assert_eq!(e, TruncatedDeformation::trivial(&f, 3).unwrap()),
                Extension::Obstructed(_) => panic!("trivial deformation is unobstructed"),
            }
        }
    }

    #[test]
    fn divided_power_fixture_extends() {
        let d = divided_power_deformation(1);
        let ob = obstruction(&d).unwrap();
        assert!(ob.cochain.is_zero());
        let Extension::Extended(e) = extend(&d, None).unwrap() else {
            panic!("expected an extension");
        };
        assert_eq!(e.order(), 2);
        assert!(e.verify().is_ok());
        assert!(d.complex().d_c(&e.coefficient(2)).unwrap().is_zero());
        // Any 2-cocycle is an acceptable ω_2 here since Ob = 0.
        let w = d.coefficient(1).scale(&Q.from_i64(-3));
        assert!(matches!(extend(&d, Some(&w)).unwrap(), Extension::Extended(_)));
    }

    #[test]
    fn wrong_extension_is_rejected() {
        let d = divided_power_deformation(1);
        let mut bad = Matrix::zeros(Q, 4, 2);
        bad.set(0, 0, Q.one());
        let w = MorphismCochain::new(
            d.complex(),
            2,
            bad,
            Matrix::zeros(Q, 4, 2),
            Matrix::zeros(Q, 2, 2),
        )
        .unwrap();
        assert!(matches!(extend(&d, Some(&w)), Err(Error::Rejected(_))));
    }

    #[test]
    fn integration_examples() {
        let f = CoalgebraMorphism::identity(&divided_power(Q, 2));
        let zero = MorphismCochain::zero(&DeformationComplex::new(&f).unwrap(), 2);
        assert_eq!(
            integrate(&f, &zero, 3).unwrap(),
            Integration::Complete(TruncatedDeformation::trivial(&f, 3).unwrap())
        );
        let w = divided_power_deformation(1).coefficient(1);
        let Integration::Complete(d) = integrate(&f, &w, 4).unwrap() else {
            panic!("divided-power infinitesimal integrates");
        };
        assert_eq!(d.order(), 4);
        assert!(d.verify().is_ok());
        assert_eq!(d.coefficient(1), w);

        let mut bad = Matrix::zeros(Q, 4, 2);
        bad.set(0, 0, Q.one());
        let not = MorphismCochain::new(
            d.complex(),
            2,
            bad,
            Matrix::zeros(Q, 4, 2),
            Matrix::zeros(Q, 2, 2),
        )
        .unwrap();
        assert!(matches!(integrate(&f, &not, 2), Err(Error::NotACocycle(_))));
    }

    #[test]
    fn invalid_deformation_has_no_obstruction() {
        let d = divided_power_deformation(1);
        let w = d.coefficient(1);
        let broken = MorphismCochain::new(
            d.complex(),
            2,
            w.xi().clone(),
            Matrix::zeros(Q, 4, 2),
            w.phi().clone(),
        )
        .unwrap();
        let bad = TruncatedDeformation::new(d.morphism(), vec![broken]).unwrap();
        assert!(matches!(obstruction(&bad), Err(Error::Invalid { .. })));
    }

    #[test]
    fn null_coalgebra_with_broken_term_is_obstructed() {
        let q = Field::Rational;
        let f = CoalgebraMorphism::identity(&null_coalgebra(q, 2));
        let complex = DeformationComplex::new(&f).unwrap();
        let delta1 = broken_coalgebra(q).delta().clone();
        let w = MorphismCochain::new(&complex, 2, delta1.clone(), delta1.clone(), Matrix::zeros(q, 2, 2)).unwrap();
        // Δ = 0 makes every cochain a cocycle.
        assert!(complex.d_c(&w).unwrap().is_zero());
        let d = TruncatedDeformation::new(&f, vec![w.clone()]).unwrap();
        assert!(d.verify().is_ok());
        let ob = obstruction(&d).unwrap();
        assert_eq!(ob.cochain.xi(), &comp_bar(&delta1, &delta1).unwrap());
        assert!(ob.is_obstructed());
        assert!(ob.class.iter().any(|c| *c != q.zero()));
        match integrate(&f, &w, 3).unwrap() {
            Integration::Obstructed { partial, .. } => assert_eq!(partial.order(), 1),
            Integration::Complete(_) => panic!("expected an obstruction"),
        }
    }
}
