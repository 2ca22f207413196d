//! The Hochschild coalgebra complex `C^*_c(M, A)` and the deformation
//! complex `C^*_c(f)` of a morphism, with their cohomology.

mod cochain;
mod complex;

pub use cochain::{cochain_dim, d_c, delta_c, Cochain, DeformationComplex, MorphismCochain};
pub use complex::{CohomologyReport, Complex, Element};
