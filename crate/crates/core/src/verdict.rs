use std::fmt;

use crate::linalg::{Matrix, Scalar};

/// Location of the first entry at which an identity between two linear maps fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub equation: String,
    /// Power of `t` at which the failure occurs, for deformation checks.
    pub order: Option<usize>,
    pub row: usize,
    pub col: usize,
    /// `lhs - rhs` at `(row, col)`.
    pub residual: Scalar,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.equation)?;
        if let Some(n) = self.order {
            write!(f, " at order {n}")?;
        }
        write!(
            f,
            ": entry ({}, {}) has residual {}",
            self.row, self.col, self.residual
        )
    }
}

/// Outcome of a structural check. A failed check is data, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Failed(Failure),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    pub fn failure(&self) -> Option<&Failure> {
        match self {
            Verdict::Ok => None,
            Verdict::Failed(f) => Some(f),
        }
    }

    /// Compares two equally shaped matrices entrywise.
    pub fn compare(equation: &str, order: Option<usize>, lhs: &Matrix, rhs: &Matrix) -> Self {
        Self::residual(equation, order, &(lhs - rhs))
    }

    /// Reports the first nonzero entry of a residual that should vanish.
    pub fn residual(equation: &str, order: Option<usize>, residual: &Matrix) -> Self {
        match residual.first_nonzero() {
            None => Verdict::Ok,
            Some((row, col, v)) => Verdict::Failed(Failure {
                equation: equation.to_string(),
                order,
                row,
                col,
                residual: v.clone(),
            }),
        }
    }

    /// Keeps the first failure.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Ok => next(),
            failed => failed,
        }
    }
}
