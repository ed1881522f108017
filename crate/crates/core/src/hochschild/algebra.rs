use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::HomologyError;
use crate::linalg::{axpy, SparseVec};
use crate::monoid::{dot, MonoidSpec, TruncatedMonoid, Vector};
use crate::ring::{Field, FiniteAlgebra, PrimeField, Rationals};

/// A finite-dimensional `Γ`-graded algebra over a field `k₀`, given on a basis of
/// homogeneous elements. Basis element 0 is the unit.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<F: Field> {
    field: F,
    labels: Vec<String>,
    degrees: Vec<Vector>,
    weight: Vector,
    table: Vec<Vec<SparseVec<F::Elem>>>,
    coefficients: FiniteAlgebra<F>,
    /// basis index in `self` of each basis element of the coefficient algebra
    embedding: Vec<usize>,
    commutative: bool,
}

impl<F: Field> GradedAlgebra<F> {
    /// General constructor. `degrees` must be homogeneous for `table`, basis 0 the unit;
    /// the coefficient algebra is the ground field.
    pub fn from_table(
        field: F,
        labels: Vec<String>,
        degrees: Vec<Vector>,
        weight: Vector,
        table: Vec<Vec<SparseVec<F::Elem>>>,
    ) -> Result<Self, HomologyError> {
        let n = labels.len();
        let malformed = |s: &str| HomologyError::Malformed(s.to_string());
        if n == 0 || degrees.len() != n || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(malformed("table shape does not match basis"));
        }
        if degrees.iter().any(|d| d.len() != weight.len()) {
            return Err(malformed("degree vectors have the wrong length"));
        }
        if degrees[0].iter().any(|x| *x != 0) {
            return Err(malformed("the unit must have degree 0"));
        }
        if degrees.iter().any(|d| dot(d, &weight) < 0) || degrees.iter().any(|d| d.iter().any(|x| *x != 0) && dot(d, &weight) == 0) {
            return Err(malformed("the weight must be positive on nonzero degrees"));
        }
        let coefficients = FiniteAlgebra::ground(field.clone());
        let mut alg = GradedAlgebra {
            field,
            labels,
            degrees,
            weight,
            table,
            coefficients,
            embedding: vec![0],
            commutative: false,
        };
        alg.check_axioms()?;
        alg.commutative = alg.compute_commutative();
        Ok(alg)
    }

    /// `R[Γ/I]` truncated at the degree bound of `base`: basis `r·[γ]` with
    /// `r` running over the basis of `R` and `γ` over `{0} ∪ base`.
    pub fn monoid_algebra(coefficients: FiniteAlgebra<F>, base: &TruncatedMonoid) -> Self {
        let field = coefficients.field().clone();
        let rd = coefficients.dim();
        let rank = base.rank();
        let mut monomials: Vec<Vector> = vec![vec![0; rank]];
        monomials.extend(base.enumerate().iter().cloned());
        let slot_of = |v: &[i64]| -> Option<usize> {
            if v.iter().all(|x| *x == 0) {
                Some(0)
            } else {
                base.index_of(v).map(|i| i + 1)
            }
        };
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        for (s, g) in monomials.iter().enumerate() {
            for r in 0..rd {
                let rl = &coefficients.labels()[r];
                labels.push(match (s, rl.as_str()) {
                    (0, _) => rl.clone(),
                    (_, "1") => format!("{g:?}"),
                    _ => format!("{rl}{g:?}"),
                });
                degrees.push(g.clone());
            }
        }
        let dim = monomials.len() * rd;
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for (s1, g1) in monomials.iter().enumerate() {
            for (s2, g2) in monomials.iter().enumerate() {
                let sum: Vector = g1.iter().zip(g2).map(|(a, b)| a + b).collect();
                let Some(s3) = slot_of(&sum) else { continue };
                for r1 in 0..rd {
                    for r2 in 0..rd {
                        table[s1 * rd + r1][s2 * rd + r2] = coefficients
                            .product(r1, r2)
                            .iter()
                            .map(|(k, c)| (s3 * rd + k, c.clone()))
                            .collect();
                    }
                }
            }
        }
        GradedAlgebra {
            field,
            labels,
            degrees,
            weight: base.weight().to_vec(),
            table,
            embedding: (0..rd).collect(),
            coefficients,
            commutative: true,
        }
    }

    /// A finite-dimensional algebra placed entirely in degree 0.
    pub fn trivially_graded(alg: FiniteAlgebra<F>) -> Self {
        let d = alg.dim();
        let table = (0..d).map(|i| (0..d).map(|j| alg.product(i, j).to_vec()).collect()).collect();
        GradedAlgebra {
            field: alg.field().clone(),
            labels: alg.labels().to_vec(),
            degrees: vec![vec![0]; d],
            weight: vec![1],
            table,
            embedding: (0..d).collect(),
            coefficients: alg,
            commutative: true,
        }
    }

    /// `self ⊗ other` with `other` placed in degree 0; basis `(a, b)` is flattened to `a * dim(other) + b`.
    pub fn tensor_degree_zero(&self, other: &FiniteAlgebra<F>) -> Self {
        let f = &self.field;
        let (n, m) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(n * m);
        let mut degrees = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in &other.labels()[..] {
                let al = &self.labels[a];
                labels.push(match (a, b.as_str()) {
                    (0, _) => b.clone(),
                    (_, "1") => al.clone(),
                    _ => format!("{b}{al}"),
                });
                degrees.push(self.degrees[a].clone());
            }
        }
        let mut table = vec![vec![Vec::new(); n * m]; n * m];
        for i in 0..n * m {
            for j in 0..n * m {
                let (i1, i2, j1, j2) = (i / m, i % m, j / m, j % m);
                let mut acc = BTreeMap::new();
                for (k1, c1) in &self.table[i1][j1] {
                    for (k2, c2) in other.product(i2, j2) {
                        axpy(f, &mut acc, &f.mul(c1, c2), &[(k1 * m + k2, f.one())]);
                    }
                }
                table[i][j] = acc.into_iter().collect();
            }
        }
        let coefficients = self.coefficients.tensor(other);
        let cm = other.dim();
        let embedding = (0..coefficients.dim()).map(|x| self.embedding[x / cm] * m + x % cm).collect();
        GradedAlgebra {
            field: f.clone(),
            labels,
            degrees,
            weight: self.weight.clone(),
            table,
            coefficients,
            embedding,
            commutative: self.commutative && other_commutes(other),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.weight.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> &[i64] {
        &self.degrees[i]
    }

    pub fn degrees(&self) -> &[Vector] {
        &self.degrees
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i][j]
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// The degree-0 coefficient algebra `R` acting on chains through slot 0.
    pub fn coefficients(&self) -> &FiniteAlgebra<F> {
        &self.coefficients
    }

    /// Image in `self` of an element of the coefficient algebra.
    pub fn embed_coefficient(&self, r: &[F::Elem]) -> SparseVec<F::Elem> {
        let mut acc = BTreeMap::new();
        for (i, c) in r.iter().enumerate() {
            axpy(&self.field, &mut acc, c, &[(self.embedding[i], self.field.one())]);
        }
        acc.into_iter().collect()
    }

    pub fn mul(&self, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut acc = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                axpy(f, &mut acc, &f.mul(x, y), &self.table[*i][*j]);
            }
        }
        acc.into_iter().collect()
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec<F::Elem> {
        vec![(i, self.field.one())]
    }

    fn check_axioms(&self) -> Result<(), HomologyError> {
        let n = self.dim();
        let bad = |s: String| Err(HomologyError::Malformed(s));
        for i in 0..n {
            let bi = self.basis_vector(i);
            if self.mul(&self.basis_vector(0), &bi) != bi || self.mul(&bi, &self.basis_vector(0)) != bi {
                return bad(format!("basis 0 is not a unit at {i}"));
            }
            for j in 0..n {
                let deg: Vector = self.degrees[i].iter().zip(&self.degrees[j]).map(|(a, b)| a + b).collect();
                if self.table[i][j].iter().any(|(k, _)| self.degrees[*k] != deg) {
                    return bad(format!("product ({i},{j}) is not homogeneous"));
                }
                if self.table[i][j].iter().any(|(k, _)| *k >= n) {
                    return bad(format!("product ({i},{j}) leaves the basis"));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                for k in 0..n {
                    let bk = self.basis_vector(k);
                    let jk = self.mul(&self.basis_vector(j), &bk);
                    if self.mul(&ij, &bk) != self.mul(&self.basis_vector(i), &jk) {
                        return bad(format!("not associative at ({i},{j},{k})"));
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }
}

fn other_commutes<F: Field>(a: &FiniteAlgebra<F>) -> bool {
    let n = a.dim();
    (0..n).all(|i| (0..n).all(|j| a.product(i, j) == a.product(j, i)))
}

/// Ground field of an algebra description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", deny_unknown_fields)]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn prime_field(&self) -> Result<Option<PrimeField>, HomologyError> {
        match self {
            FieldSpec::Rationals => Ok(None),
            FieldSpec::Prime { p } => Ok(Some(PrimeField::new(*p)?)),
        }
    }
}

/// Degree-0 coefficient algebra `k₀[var]/(var^nilpotency)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Degree0Spec {
    pub var: String,
    pub nilpotency: usize,
}

/// JSON description of a truncated monoid algebra `R[Γ/I]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub monoid: MonoidSpec,
    #[serde(default = "default_field")]
    pub field: FieldSpec,
    #[serde(default)]
    pub degree0: Option<Degree0Spec>,
}

fn default_field() -> FieldSpec {
    FieldSpec::Rationals
}

impl AlgebraSpec {
    pub fn build<F: Field>(&self, field: F) -> Result<GradedAlgebra<F>, HomologyError> {
        let base = self.monoid.truncated()?;
        let coefficients = match &self.degree0 {
            None => FiniteAlgebra::ground(field),
            Some(d) => FiniteAlgebra::truncated_polynomial(field, &d.var, d.nilpotency)?,
        };
        Ok(GradedAlgebra::monoid_algebra(coefficients, &base))
    }

    pub fn build_rational(&self) -> Result<GradedAlgebra<Rationals>, HomologyError> {
        self.build(Rationals)
    }
}
