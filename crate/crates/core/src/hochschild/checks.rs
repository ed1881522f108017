use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::HomologyError;
use crate::monoid::{TruncatedMonoid, Vector};
use crate::ring::{Field, FiniteAlgebra};

use super::{ComplexOptions, GradedAlgebra, HochschildComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub n: usize,
    pub eta: Vector,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub rows: Vec<DecompositionRow>,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.lhs == r.rhs)
    }
}

/// `dim HH_i(B)` for `i = 0..=n_max`, with `B` ungraded.
pub fn ungraded_hh_dims<F: Field>(b: &FiniteAlgebra<F>, n_max: usize) -> Result<Vec<usize>, HomologyError> {
    let alg = Arc::new(GradedAlgebra::trivially_graded(b.clone()));
    let cx = HochschildComplex::new(alg, ComplexOptions::new(n_max, false))?;
    (0..=n_max).map(|i| cx.hh_dim(i, &[0])).collect()
}

fn union_degrees<F: Field>(a: &HochschildComplex<F>, b: &HochschildComplex<F>) -> Vec<Vector> {
    let s: BTreeSet<Vector> = a.all_degrees().into_iter().chain(b.all_degrees()).collect();
    s.into_iter().collect()
}

/// Compares `dim HH_n(A ⊗ B, A₀ ⊗ B)_η` with `Σ_i dim HH_i(B) · dim HH_{n-i}(A, A₀)_η`.
pub fn kunneth_check<F: Field>(
    a: &GradedAlgebra<F>,
    b: &FiniteAlgebra<F>,
    options: &ComplexOptions,
) -> Result<DecompositionReport, HomologyError> {
    if a.field() != b.field() {
        return Err(HomologyError::Mismatch);
    }
    let opts = ComplexOptions { relative: true, ..options.clone() };
    let n_max = opts.n_max;
    let product = HochschildComplex::new(Arc::new(a.tensor_degree_zero(b)), opts.clone())?;
    let left = HochschildComplex::new(Arc::new(a.clone()), opts)?;
    let hh_b = ungraded_hh_dims(b, n_max)?;
    let mut rows = Vec::new();
    for eta in union_degrees(&product, &left) {
        for n in 0..=n_max {
            let lhs = product.hh_dim(n, &eta)?;
            let mut rhs = 0;
            for (i, d) in hh_b.iter().enumerate().take(n + 1) {
                rhs += d * left.hh_dim(n - i, &eta)?;
            }
            rows.push(DecompositionRow { n, eta: eta.clone(), lhs, rhs });
        }
    }
    Ok(DecompositionReport { rows })
}

/// Compares `dim HC_n(R[Γ/I], R)_η` with `Σ_i dim HH_i(R) · dim HC_{n-i}(k₀[Γ/I], k₀)_η`.
pub fn kassel_check<F: Field>(
    coefficients: &FiniteAlgebra<F>,
    base: &TruncatedMonoid,
    options: &ComplexOptions,
) -> Result<DecompositionReport, HomologyError> {
    let field = coefficients.field().clone();
    if field.characteristic() != 0 {
        return Err(HomologyError::PositiveCharacteristic(field.characteristic()));
    }
    let opts = ComplexOptions { relative: true, ..options.clone() };
    let n_max = opts.n_max;
    let with_r = HochschildComplex::new(Arc::new(GradedAlgebra::monoid_algebra(coefficients.clone(), base)), opts.clone())?;
    let plain =
        HochschildComplex::new(Arc::new(GradedAlgebra::monoid_algebra(FiniteAlgebra::ground(field), base)), opts)?;
    let hh_r = ungraded_hh_dims(coefficients, n_max)?;
    let mut rows = Vec::new();
    for eta in union_degrees(&with_r, &plain) {
        for n in 0..=n_max {
            let lhs = with_r.hc_dim(n, &eta)?;
            let mut rhs = 0;
            for (i, d) in hh_r.iter().enumerate().take(n + 1) {
                rhs += d * plain.hc_dim(n - i, &eta)?;
            }
            rows.push(DecompositionRow { n, eta: eta.clone(), lhs, rhs });
        }
    }
    Ok(DecompositionReport { rows })
}
