use num_traits::Zero;

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Reduced row echelon form with leftmost pivots. Returns the reduced matrix
/// and the pivot column of each nonzero row.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let f = m.field();
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<Scalar>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = f.inv(&a[r][c]).expect("pivot is nonzero");
        for v in a[r][c..].iter_mut() {
            if !v.is_zero() {
                *v = f.mul(v, &inv);
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *v = f.sub(v, &f.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let reduced = Matrix::from_rows(f, cols, a).expect("rows keep their width");
    (reduced, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Incrementally maintained reduced echelon basis of a subspace.
#[derive(Clone, Debug)]
struct Echelon {
    field: Field,
    dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    fn new(field: Field, dim: usize) -> Self {
        Echelon {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns false when it was already contained.
    fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        self.rows.push((p, r));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn into_basis(self) -> Vec<Vec<Scalar>> {
        self.rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// A subspace of `F^n` with its basis in reduced echelon form, so equal
/// subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Self::span(
            field,
            ambient_dim,
            Matrix::identity(field, ambient_dim).rows_iter(),
        )
    }

    pub fn span<I, V>(field: Field, ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Scalar]>,
    {
        let mut e = Echelon::new(field, ambient_dim);
        for v in vectors {
            e.insert(v.as_ref());
        }
        Subspace {
            field,
            ambient_dim,
            basis: e.into_basis(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn echelon(&self) -> Echelon {
        Echelon {
            field: self.field,
            dim: self.ambient_dim,
            rows: self
                .basis
                .iter()
                .map(|r| (r.iter().position(|x| !x.is_zero()).expect("nonzero"), r.clone()))
                .collect(),
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && self.echelon().reduce(v).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }
}

impl Matrix {
    fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows()).map(move |i| self.row(i))
    }
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    let f = m.field();
    let cols = m.cols();
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Scalar>> = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); cols];
            v[free] = f.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(row, free));
            }
            v
        })
        .collect();
    Subspace::span(f, cols, vectors)
}

pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::span(m.field(), m.rows(), (0..m.cols()).map(|j| m.column(j)))
}

/// Particular solution of `m·x = b` with free variables set to zero, or
/// `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let f = m.field();
    let cols = m.cols();
    let augmented = m.hstack(&Matrix::from_columns(f, m.rows(), &[b.to_vec()]));
    let (r, pivots) = rref(&augmented);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, cols).clone();
    }
    Ok(Some(x))
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    if m.cols() != n {
        return None;
    }
    let f = m.field();
    let (r, pivots) = rref(&m.hstack(&Matrix::identity(f, n)));
    if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
        return None;
    }
    Some(Matrix::from_fn(f, n, n, |i, j| r.get(i, n + j).clone()))
}

/// Dimension of `ker / im` and representatives completing a basis of `im`
/// to a basis of `ker`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub dim: usize,
    pub representatives: Vec<Vec<Scalar>>,
}

pub fn quotient_data(ker: &Subspace, im: &Subspace) -> Result<Quotient> {
    if ker.ambient_dim() != im.ambient_dim() {
        return Err(Error::Dimension(format!(
            "ambient dimensions differ: {} vs {}",
            ker.ambient_dim(),
            im.ambient_dim()
        )));
    }
    if !im.is_subspace_of(ker) {
        return Err(Error::BrokenComplex);
    }
    let mut e = im.echelon();
    let mut representatives = Vec::new();
    for v in ker.basis() {
        if e.insert(v) {
            representatives.push(v.clone());
        }
    }
    debug_assert_eq!(e.len(), ker.dim());
    Ok(Quotient {
        dim: ker.dim() - im.dim(),
        representatives,
    })
}

/// Coordinates of `v` against the quotient representatives, i.e. its class in
/// `ker / im`. Returns `None` if `v` is not in `im + span(representatives)`.
pub fn class_coordinates(
    im: &Subspace,
    representatives: &[Vec<Scalar>],
    v: &[Scalar],
) -> Result<Option<Vec<Scalar>>> {
    let f = im.field();
    let columns: Vec<Vec<Scalar>> = im.basis().iter().chain(representatives).cloned().collect();
    let m = Matrix::from_columns(f, im.ambient_dim(), &columns);
    Ok(solve(&m, v)?.map(|x| x[im.dim()..].to_vec()))
}
