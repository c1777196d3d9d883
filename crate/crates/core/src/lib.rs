//! Exact computations with finite-dimensional diassociative algebras.
//!
//! An algebra is given by two structure-constant tensors, one for `⊣` and one for `⊢`.
//! On top of that the crate computes ideals and central series, second cohomology with
//! trivial coefficients (and therefore the Schur multiplier), the maps of the five-term
//! sequence of a central extension together with its `δ` extension, and the dimension
//! bounds on the multiplier of a nilpotent algebra. Associative algebras are handled as
//! the special case `⊣ = ⊢`, with their own (single-form) cohomology.
//!
//! All arithmetic is exact. The kernel is generic over [`Scalar`], which is implemented
//! for `num_rational` ratios; [`Rat`] (arbitrary precision) is what the CLI uses.

pub mod bounds;
pub mod cli;
pub mod cohomology;
pub mod dialg;
pub mod exactlin;

use num_bigint::BigInt;
use num_rational::Ratio;

pub use bounds::{BoundKind, BoundReport, SequenceReport};
pub use cohomology::{Category, CentralExtension, CocyclePair, CocycleSpace};
pub use dialg::{DiAlgebra, Product, SeriesReport, Variant};
pub use exactlin::{Mat, Scalar, Subspace};

/// Arbitrary-precision rationals.
pub type Rat = Ratio<BigInt>;
/// Fixed-width rationals; fast, but they overflow on large coefficients.
pub type Rat64 = Ratio<i64>;

pub type QMat = Mat<Rat>;
pub type QSubspace = Subspace<Rat>;
pub type QDiAlgebra = DiAlgebra<Rat>;
pub type QCocyclePair = CocyclePair<Rat>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the given space")]
    NotContained,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("subspace is not central")]
    NotCentral,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("product is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("associative category requested but the two products differ")]
    CategoryMismatch,
    #[error("pair of forms is not a 2-cocycle")]
    NotACocycle,
    #[error("map is not a section of the projection")]
    NotASection,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("algebra violates {0} axiom instance(s)")]
    InvalidAlgebra(usize),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
