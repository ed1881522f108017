//! Exact computations with big Witt vectors over affine monoids, graded
//! Hochschild and cyclic homology of truncated monoid algebras, and the
//! ray-indexed decomposition formulas for K-groups of polynomial and
//! Laurent polynomial rings.

pub mod error;
pub mod hochschild;
pub mod kgroup;
pub mod linalg;
pub mod monoid;
pub mod ring;
pub mod witt;

pub use error::{HomologyError, KGroupError, MonoidError, RingError, WittError};
pub use monoid::{AffineMonoid, MonoidIdeal, MonoidSpec, Ray, TruncatedMonoid, Truncation};
pub use ring::{Field, FiniteAlgebra, Integers, Polynomials, PrimeField, Rationals, Ring};
pub use witt::{GhostVector, WittVector};
pub use hochschild::{AlgebraSpec, ComplexOptions, GradedAlgebra, HochschildComplex, HomologyKind, HomologyReport};
pub use kgroup::{FormalGroupExpr, LPoly, RaySet, SignedPermutation};
