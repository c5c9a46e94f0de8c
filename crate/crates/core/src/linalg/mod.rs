//! Exact linear algebra: matrices, canonical subspaces, kernels, polynomial
//! evaluation at a matrix and the Fitting decomposition.

mod matrix;
mod subspace;

pub use matrix::{apply_poly, fitting_components, Matrix};
pub use subspace::Subspace;

pub(crate) use subspace::unit;

use crate::field::Scalar;

/// A coordinate vector.
pub type Vector = Vec<Scalar>;
