//! Tensor-power index conventions.
//!
//! The basis vector `e_{i_1} ⊗ … ⊗ e_{i_n}` of `V^{⊗n}` (with `dim V = d`) has
//! flat index `Σ_k i_k · d^{n-k}`: row-major, leftmost factor most
//! significant. `V^{⊗0}` is the ground field with the single index 0. This
//! is exactly the ordering produced by [`Matrix::kron`].

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

pub fn power(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

pub fn flat_index(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &i| {
        debug_assert!(i < d);
        acc * d + i
    })
}

pub fn digits(mut index: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = index % d.max(1);
        index /= d.max(1);
    }
    out
}

pub fn identity_power(field: Field, d: usize, n: usize) -> Matrix {
    Matrix::identity(field, power(d, n))
}

/// `f^{⊗n}`; `n = 0` gives the 1×1 identity.
pub fn tensor_power_map(f: &Matrix, n: usize) -> Matrix {
    (0..n).fold(Matrix::identity(f.field(), 1), |acc, _| acc.kron(f))
}

/// The matrix of `Id^{⊗(i-1)} ⊗ Δ ⊗ Id^{⊗(n-i)}` from `A^{⊗n}` to
/// `A^{⊗(n+1)}`, for `1 ≤ i ≤ n`.
pub fn middle_insertion(delta: &Matrix, n: usize, i: usize) -> Result<Matrix> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!(
            "insertion position {i} outside 1..={n}"
        )));
    }
    let d = delta.cols();
    let f = delta.field();
    Ok(identity_power(f, d, i - 1)
        .kron(delta)
        .kron(&identity_power(f, d, n - i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::fixtures;
    use num_traits::Zero;

    const Q: Field = Field::Rational;

    #[test]
    fn index_round_trip() {
        for d in 1..4 {
            for n in 0..4 {
                for k in 0..power(d, n) {
                    assert_eq!(flat_index(&digits(k, d, n), d), k);
                }
            }
        }
        assert_eq!(flat_index(&[1, 0, 1], 2), 5);
    }

    #[test]
    fn tensor_power_examples() {
        assert_eq!(
            tensor_power_map(&Matrix::from_i64(Q, &[&[5]]), 0),
            Matrix::identity(Q, 1)
        );
        assert_eq!(
            tensor_power_map(&Matrix::identity(Q, 2), 3),
            Matrix::identity(Q, 8)
        );
        assert_eq!(
            tensor_power_map(&Matrix::from_i64(Q, &[&[2]]), 3),
            Matrix::from_i64(Q, &[&[8]])
        );
    }

    #[test]
    fn tensor_power_splits() {
        let f = Matrix::from_i64(Q, &[&[1, 2], &[0, -1], &[3, 1]]);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(
                    tensor_power_map(&f, a + b),
                    tensor_power_map(&f, a).kron(&tensor_power_map(&f, b))
                );
            }
        }
    }

    #[test]
    fn insertion_examples() {
        let dp = fixtures::divided_power(Q, 2);
        assert_eq!(&middle_insertion(dp.delta(), 1, 1).unwrap(), dp.delta());
        let g = fixtures::grouplike(Q, 1);
        for n in 1..4 {
            for i in 1..=n {
                assert_eq!(middle_insertion(g.delta(), n, i).unwrap(), Matrix::identity(Q, 1));
            }
        }
        assert!(middle_insertion(g.delta(), 2, 3).is_err());
        assert!(middle_insertion(g.delta(), 2, 0).is_err());

        // Column of e1⊗e0 hits e0⊗e1⊗e0 and e1⊗e0⊗e0.
        let m = middle_insertion(dp.delta(), 2, 1).unwrap();
        assert_eq!(m.shape(), (8, 4));
        let col = m.column(flat_index(&[1, 0], 2));
        let hits: Vec<usize> = (0..8).filter(|&r| !col[r].is_zero()).collect();
        assert_eq!(hits, vec![flat_index(&[0, 1, 0], 2), flat_index(&[1, 0, 0], 2)]);
    }

    // Brute-force oracle: apply Δ to the i-th tensor factor of each basis vector.
    #[test]
    fn insertion_matches_basis_enumeration() {
        let a = fixtures::divided_power(Q, 3);
        let d = 3;
        for n in 1..4 {
            for i in 1..=n {
                let m = middle_insertion(a.delta(), n, i).unwrap();
                let mut expected = Matrix::zeros(Q, power(d, n + 1), power(d, n));
                for col in 0..power(d, n) {
                    let ds = digits(col, d, n);
                    for pair in 0..d * d {
                        let c = a.delta().get(pair, ds[i - 1]);
                        if c.is_zero() {
                            continue;
                        }
                        let mut out = ds[..i - 1].to_vec();
                        out.extend([pair / d, pair % d]);
                        out.extend_from_slice(&ds[i..]);
                        expected.add_to(flat_index(&out, d), col, c);
                    }
                }
                assert_eq!(m, expected, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn insertion_lattice_is_coassociativity() {
        for a in [fixtures::divided_power(Q, 3), fixtures::grouplike(Q, 2)] {
            let delta = a.delta();
            let lhs = &middle_insertion(delta, 2, 2).unwrap() * delta;
            let rhs = &middle_insertion(delta, 2, 1).unwrap() * delta;
            assert_eq!(lhs, rhs);
        }
        let broken = fixtures::broken_coalgebra(Q);
        let delta = broken.delta();
        assert_ne!(
            &middle_insertion(delta, 2, 2).unwrap() * delta,
            &middle_insertion(delta, 2, 1).unwrap() * delta
        );
    }
}
