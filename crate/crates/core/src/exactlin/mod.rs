//! Exact linear algebra over a rational field.
//!
//! Everything above this layer talks about subspaces of coordinate space: ideals,
//! central series terms, cocycle and coboundary spaces. [`Subspace`] keeps its basis
//! in reduced row-echelon form, so two equal subspaces compare equal structurally.

mod mat;
mod scalar;
mod subspace;

pub use mat::{Mat, Rref};
pub(crate) use mat::dot;
pub use scalar::{format_vector, parse_vector, Scalar};
pub use subspace::{unit_vector, Subspace};

/// Computes the canonical reduced row-echelon form of `m`.
pub fn rref<S: Scalar>(m: &Mat<S>) -> Rref<S> {
    m.rref()
}

/// The subspace `{v : m v = 0}`.
pub fn nullspace<S: Scalar>(m: &Mat<S>) -> Subspace<S> {
    m.nullspace()
}
