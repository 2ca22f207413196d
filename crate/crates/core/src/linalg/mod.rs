//! Exact linear algebra over Q or GF(p).

mod field;
mod matrix;
mod reduce;

pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use reduce::{
    class_coordinates, image_basis, inverse, kernel_basis, quotient_data, rank, rref, solve, Quotient,
    Subspace,
};
