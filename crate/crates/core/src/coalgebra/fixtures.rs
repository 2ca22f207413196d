//! Built-in coalgebras and morphisms used as a test corpus.

use super::{Coalgebra, CoalgebraMorphism};
use crate::linalg::{Field, Matrix};

/// `Δ(e_i) = e_i ⊗ e_i` on `n` basis elements.
pub fn grouplike(field: Field, n: usize) -> Coalgebra {
    let constants: Vec<_> = (0..n).map(|i| (i, i, i, field.one())).collect();
    Coalgebra::from_structure_constants(field, format!("grouplike({n})"), n, &constants)
        .expect("indices in range")
}

/// `Δ(e_k) = Σ_{i+j=k} e_i ⊗ e_j` on `e_0 … e_{n-1}`, dual to `K[x]/(x^n)`.
pub fn divided_power(field: Field, n: usize) -> Coalgebra {
    let constants: Vec<_> = (0..n)
        .flat_map(|k| (0..=k).map(move |i| (k, i, k - i, field.one())))
        .collect();
    Coalgebra::from_structure_constants(field, format!("divided_power({n})"), n, &constants)
        .expect("indices in range")
}

pub fn zero_coalgebra(field: Field) -> Coalgebra {
    Coalgebra::new("zero", Matrix::zeros(field, 0, 0)).expect("0x0 is a valid shape")
}

/// Blockwise comultiplication on `A ⊕ B`; basis of `A` first.
pub fn direct_sum(a: &Coalgebra, b: &Coalgebra) -> Coalgebra {
    let da = a.dim();
    let field = a.field();
    let mut constants = a.structure_constants();
    constants.extend(
        b.structure_constants()
            .into_iter()
            .map(|(x, y, z, c)| (x + da, y + da, z + da, c)),
    );
    Coalgebra::from_structure_constants(
        field,
        format!("{}+{}", a.name(), b.name()),
        da + b.dim(),
        &constants,
    )
    .expect("indices in range")
}

/// `Δ = 0` on `n` basis elements. Every cochain is a cocycle, so first-order
/// deformations are unconstrained while higher orders are obstructed.
pub fn null_coalgebra(field: Field, n: usize) -> Coalgebra {
    Coalgebra::new(format!("null({n})"), Matrix::zeros(field, n * n, n)).expect("shape")
}

/// A two-dimensional non-coassociative map with `Δ(e_0) = e_0 ⊗ e_1` only.
pub fn broken_coalgebra(field: Field) -> Coalgebra {
    Coalgebra::from_structure_constants(field, "broken", 2, &[(0, 0, 1, field.one())])
        .expect("indices in range")
}

/// `grouplike(n) → grouplike(1)`, sending every `e_i` to `g`.
pub fn collapse_morphism(field: Field, n: usize) -> CoalgebraMorphism {
    let matrix = Matrix::from_fn(field, 1, n, |_, _| field.one());
    CoalgebraMorphism::new(grouplike(field, n), grouplike(field, 1), matrix).expect("shapes agree")
}

/// `divided_power(n) → grouplike(1)`, `e_0 ↦ g`, `e_k ↦ 0` otherwise.
pub fn augmentation(field: Field, n: usize) -> CoalgebraMorphism {
    let matrix = Matrix::from_fn(
        field,
        1,
        n,
        |_, j| if j == 0 { field.one() } else { field.zero() },
    );
    CoalgebraMorphism::new(divided_power(field, n), grouplike(field, 1), matrix).expect("shapes agree")
}

/// `grouplike(1) → divided_power(n)`, `g ↦ e_0`.
pub fn point(field: Field, n: usize) -> CoalgebraMorphism {
    let matrix = Matrix::from_fn(
        field,
        n,
        1,
        |i, _| if i == 0 { field.one() } else { field.zero() },
    );
    CoalgebraMorphism::new(grouplike(field, 1), divided_power(field, n), matrix).expect("shapes agree")
}

/// Subcoalgebra inclusion `divided_power(m) → divided_power(n)` for `m ≤ n`.
pub fn truncation_inclusion(field: Field, m: usize, n: usize) -> CoalgebraMorphism {
    assert!(m <= n);
    let matrix = Matrix::from_fn(
        field,
        n,
        m,
        |i, j| if i == j { field.one() } else { field.zero() },
    );
    CoalgebraMorphism::new(divided_power(field, m), divided_power(field, n), matrix).expect("shapes agree")
}

/// `e_k ↦ c^k e_k` on `divided_power(n)`, dual to `x ↦ c·x`.
pub fn scaling(field: Field, n: usize, c: i64) -> CoalgebraMorphism {
    let c = field.from_i64(c);
    let mut matrix = Matrix::zeros(field, n, n);
    let mut power = field.one();
    for k in 0..n {
        matrix.set(k, k, power.clone());
        power = field.mul(&power, &c);
    }
    let a = divided_power(field, n);
    CoalgebraMorphism::new(a.clone(), a, matrix).expect("shapes agree")
}

/// First-summand inclusion `A → A ⊕ B`.
pub fn summand_inclusion(a: &Coalgebra, b: &Coalgebra) -> CoalgebraMorphism {
    let field = a.field();
    let sum = direct_sum(a, b);
    let matrix = Matrix::from_fn(field, sum.dim(), a.dim(), |i, j| {
        if i == j {
            field.one()
        } else {
            field.zero()
        }
    });
    CoalgebraMorphism::new(a.clone(), sum, matrix).expect("shapes agree")
}

/// First-summand projection `A ⊕ B → A`.
pub fn summand_projection(a: &Coalgebra, b: &Coalgebra) -> CoalgebraMorphism {
    let field = a.field();
    let sum = direct_sum(a, b);
    let matrix = Matrix::from_fn(field, a.dim(), sum.dim(), |i, j| {
        if i == j {
            field.one()
        } else {
            field.zero()
        }
    });
    CoalgebraMorphism::new(sum, a.clone(), matrix).expect("shapes agree")
}

/// All built-in coalgebras of dimension at most 3.
pub fn small_coalgebras(field: Field) -> Vec<Coalgebra> {
    vec![
        zero_coalgebra(field),
        grouplike(field, 1),
        grouplike(field, 2),
        grouplike(field, 3),
        divided_power(field, 1),
        divided_power(field, 2),
        divided_power(field, 3),
        direct_sum(&grouplike(field, 1), &divided_power(field, 2)),
        null_coalgebra(field, 2),
    ]
}

/// All built-in morphisms between coalgebras of dimension at most 3.
pub fn small_morphisms(field: Field) -> Vec<CoalgebraMorphism> {
    let mut out: Vec<_> = small_coalgebras(field)
        .iter()
        .map(CoalgebraMorphism::identity)
        .collect();
    out.extend([
        collapse_morphism(field, 2),
        collapse_morphism(field, 3),
        augmentation(field, 2),
        augmentation(field, 3),
        point(field, 2),
        point(field, 3),
        truncation_inclusion(field, 2, 3),
        scaling(field, 3, 2),
        scaling(field, 2, -1),
        summand_inclusion(&grouplike(field, 1), &divided_power(field, 2)),
        summand_projection(&grouplike(field, 1), &divided_power(field, 2)),
        summand_inclusion(&divided_power(field, 2), &grouplike(field, 1)),
    ]);
    out
}
