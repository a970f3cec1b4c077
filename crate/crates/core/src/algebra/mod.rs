//! Exact arithmetic over the rationals: scalars, dense matrices, polynomials in
//! one indeterminate, polynomial matrices, subspaces in canonical form, and
//! Möbius transformations of the projective line.
//!
//! Nothing in this module touches floating point. Every value is immutable once
//! built and all operations are pure.

mod matrix;
mod moebius;
mod poly;
mod poly_matrix;
mod rational;
mod subspace;

pub use matrix::Matrix;
pub use moebius::{Moebius, ProjectivePoint};
pub use poly::Poly;
pub use poly_matrix::PolyMatrix;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use subspace::{image_kernel, projector_from_pair, BilinearForm, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspaces are not complementary (nontrivial intersection or deficient span)")]
    ComplementarityViolation,
    #[error("matrix is not a projector: P*P != P")]
    NotAProjector,
    #[error("Möbius transformation is singular (ad - bc = 0)")]
    SingularMoebius,
    #[error("(0:0) is not a point of the projective line")]
    ZeroProjectivePoint,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
}
