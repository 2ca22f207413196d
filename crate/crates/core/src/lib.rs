//! Exact computation of Hochschild coalgebra cohomology, the deformation
//! complex of a coalgebra morphism, obstruction classes, and truncated formal
//! deformations.

pub mod cli;
pub mod coalgebra;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod linalg;
pub mod problem;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::{Failure, Verdict};
