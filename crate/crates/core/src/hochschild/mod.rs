//! `Γ`-graded Hochschild and cyclic homology of finite-dimensional algebras.
//!
//! Chains are the normalized Hochschild complex `A ⊗ Ā^{⊗n}` split into cells by
//! homological degree and `Γ`-degree. Homology is computed cell by cell with exact
//! elimination over `Q` or `Z/p`; cyclic homology uses the `(b, B)` bicomplex and
//! is restricted to characteristic 0.

mod algebra;
mod checks;
mod complex;
mod homology;
mod kahler;

pub use algebra::{AlgebraSpec, Degree0Spec, FieldSpec, GradedAlgebra};
pub use checks::{kassel_check, kunneth_check, ungraded_hh_dims, DecompositionReport, DecompositionRow};
pub use complex::{Cell, ComplexOptions, HochschildComplex, DEFAULT_CELL_CAP, DEFAULT_DEGREE_BOUND, DEFAULT_N_MAX};
pub use homology::{ChainModule, HomologyCell, HomologyEntry, HomologyKind, HomologyReport};
pub use kahler::{kahler, DeRham, FormModule, KahlerForms};

use std::sync::Arc;

use crate::error::HomologyError;
use crate::ring::Field;

/// Builds the normalized Hochschild complex through degree `n_max + 1`.
pub fn hochschild_complex<F: Field>(
    algebra: &GradedAlgebra<F>,
    relative: bool,
    n_max: usize,
) -> Result<HochschildComplex<F>, HomologyError> {
    HochschildComplex::new(Arc::new(algebra.clone()), ComplexOptions::new(n_max, relative))
}
