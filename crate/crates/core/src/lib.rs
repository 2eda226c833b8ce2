//! Exact-arithmetic toolkit for finite-dimensional Lie-Yamaguti algebras:
//! structure constants, the derivation hierarchy (derivations through
//! generalized derivations, centroid and quasi-centroid), the graded
//! enlargement that turns quasi-derivations into derivations, and the
//! perturbation/coboundary machinery, all over ℚ or 𝔽_p with zero
//! tolerance.

pub mod algebra;
pub mod deformation;
pub mod der_spaces;
pub mod embedding;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod sampling;
pub mod subspace;

pub use field::{BigRat, Field, Fp, Rat};
pub use matrix::{Matrix, Vector};
pub use poly::{minimal_polynomial, Polynomial};
pub use subspace::Subspace;

/// The default exact rational instance of everything.
pub type QAlgebra = algebra::LYAlgebra<Rat>;
pub type QMatrix = Matrix<Rat>;
pub type QSubspace = Subspace<Rat>;
