//! Exact-arithmetic toolkit for reflection representations of finitely
//! generated groups.
//!
//! A *generalized reflection* is a diagonalizable linear map `s` with
//! `rank(s - I) = 1`: it fixes a hyperplane and scales one vector, the
//! reflection vector, by an eigenvalue different from 1. A representation
//! sending every distinguished generator of a group to such a map is a
//! reflection representation. This crate constructs these representations
//! over exact coefficient fields (big rationals, optionally extended by one
//! square root), builds their exterior powers as compound matrices, and
//! decides module-theoretic questions about them with certificates:
//!
//! * simplicity of each exterior power and pairwise non-isomorphism across
//!   degrees ([`modtheory::check_theorem1`]),
//! * rigidity across two representations — an isomorphism of intermediate
//!   exterior powers forces equal degrees, equal dimensions, and an
//!   isomorphism in degree 1, which [`lifting`] reconstructs explicitly
//!   ([`modtheory::check_theorem2`]).
//!
//! Everything is exact: no floats, no tolerances. Verdicts are certified
//! (invariant subspaces are returned and re-checkable, intertwiners are
//! verified against every generator) and a finite-group character oracle
//! cross-checks the linear-algebra decisions whenever the generated matrix
//! group is small enough to enumerate.

pub mod digraph;
pub mod exterior;
pub mod families;
pub mod lifting;
pub mod matrix;
pub mod modtheory;
pub mod reflection;
pub mod repfile;
pub mod report;
pub mod scalar;

pub use matrix::{EchelonBasis, Matrix};
pub use reflection::{ReflectionGenerator, ReflectionRep};
pub use scalar::{FieldContext, Scalar};
