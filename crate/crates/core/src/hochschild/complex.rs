use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::HomologyError;
use crate::linalg::{axpy, SparseMatrix, SparseVec};
use crate::monoid::{dot, Vector};
use crate::ring::Field;

use super::GradedAlgebra;

pub const DEFAULT_CELL_CAP: usize = 20_000;
pub const DEFAULT_N_MAX: usize = 4;
pub const DEFAULT_DEGREE_BOUND: i64 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexOptions {
    /// Homology is available through this degree; chains are built through `n_max + 1`.
    pub n_max: usize,
    /// Keep only the cells of nonzero `Γ`-degree.
    pub relative: bool,
    pub cell_cap: usize,
    /// Keep only cells whose degree has weight at most this bound.
    pub max_weight: Option<i64>,
}

impl Default for ComplexOptions {
    fn default() -> Self {
        ComplexOptions { n_max: DEFAULT_N_MAX, relative: true, cell_cap: DEFAULT_CELL_CAP, max_weight: None }
    }
}

impl ComplexOptions {
    pub fn new(n_max: usize, relative: bool) -> Self {
        ComplexOptions { n_max, relative, ..Default::default() }
    }

    pub fn with_max_weight(mut self, w: i64) -> Self {
        self.max_weight = Some(w);
        self
    }

    pub fn with_cell_cap(mut self, cap: usize) -> Self {
        self.cell_cap = cap;
        self
    }
}

/// Basis of `A ⊗ Ā^{⊗n}` in a single `Γ`-degree: tuples of algebra basis indices
/// with no unit in slots `1..=n`.
#[derive(Clone, Debug)]
pub struct Cell {
    pub n: usize,
    pub degree: Vector,
    basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Cell {
    fn new(n: usize, degree: Vector, basis: Vec<Vec<usize>>) -> Self {
        let index = basis.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Cell { n, degree, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }
}

/// The normalized Hochschild complex of a graded algebra, split into `(n, η)` cells.
#[derive(Clone, Debug)]
pub struct HochschildComplex<F: Field> {
    algebra: Arc<GradedAlgebra<F>>,
    options: ComplexOptions,
    cells: BTreeMap<(usize, Vector), Cell>,
}

fn add_vec(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(|x| *x == 0)
}

impl<F: Field> HochschildComplex<F> {
    pub fn new(algebra: Arc<GradedAlgebra<F>>, options: ComplexOptions) -> Result<Self, HomologyError> {
        let mut by_degree: BTreeMap<Vector, Vec<usize>> = BTreeMap::new();
        for i in 0..algebra.dim() {
            by_degree.entry(algebra.degree(i).to_vec()).or_default().push(i);
        }
        let bar: BTreeMap<Vector, Vec<usize>> = by_degree
            .iter()
            .filter_map(|(d, v)| {
                let w: Vec<usize> = v.iter().copied().filter(|i| *i != 0).collect();
                (!w.is_empty()).then(|| (d.clone(), w))
            })
            .collect();
        let weight = algebra.weight().to_vec();
        let within = |d: &[i64]| options.max_weight.map_or(true, |m| dot(d, &weight) <= m);
        let keep = |d: &[i64]| within(d) && !(options.relative && is_zero_vec(d));

        let mut cells = BTreeMap::new();
        for n in 0..=options.n_max + 1 {
            // sizes first, so an oversized cell is reported before it is built
            let mut counts: BTreeMap<Vector, usize> =
                by_degree.iter().filter(|(d, _)| within(d)).map(|(d, v)| (d.clone(), v.len())).collect();
            for _ in 0..n {
                let mut next: BTreeMap<Vector, usize> = BTreeMap::new();
                for (d, c) in &counts {
                    for (e, v) in &bar {
                        let s = add_vec(d, e);
                        if within(&s) {
                            *next.entry(s).or_default() += c.saturating_mul(v.len());
                        }
                    }
                }
                counts = next;
            }
            for (d, c) in &counts {
                if keep(d) && *c > options.cell_cap {
                    return Err(HomologyError::CellTooLarge { n, eta: Some(d.clone()), dim: *c, cap: options.cell_cap });
                }
            }
            let mut buckets: BTreeMap<Vector, Vec<Vec<usize>>> = BTreeMap::new();
            let mut tuple = Vec::with_capacity(n + 1);
            for (d, v) in &by_degree {
                if !within(d) {
                    continue;
                }
                for &a in v {
                    tuple.push(a);
                    extend_tuples(&bar, n, d.clone(), &mut tuple, &within, &keep, &mut buckets);
                    tuple.pop();
                }
            }
            for (d, basis) in buckets {
                cells.insert((n, d.clone()), Cell::new(n, d, basis));
            }
        }
        Ok(HochschildComplex { algebra, options, cells })
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra<F>> {
        &self.algebra
    }

    pub fn options(&self) -> &ComplexOptions {
        &self.options
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn top(&self) -> usize {
        self.options.n_max + 1
    }

    pub fn cell(&self, n: usize, eta: &[i64]) -> Option<&Cell> {
        self.cells.get(&(n, eta.to_vec()))
    }

    pub fn cell_dim(&self, n: usize, eta: &[i64]) -> usize {
        self.cell(n, eta).map_or(0, Cell::dim)
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.values()
    }

    /// All degrees carrying a nonzero cell in homological degree `n`.
    pub fn degrees(&self, n: usize) -> Vec<Vector> {
        self.cells.keys().filter(|(m, _)| *m == n).map(|(_, d)| d.clone()).collect()
    }

    /// All degrees carrying a nonzero cell in any homological degree.
    pub fn all_degrees(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = self.cells.keys().map(|(_, d)| d.clone()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// `b` on a basis tuple, with terms carrying the unit in a slot `>= 1` dropped.
    pub fn b_tuple(&self, t: &[usize]) -> Vec<(Vec<usize>, F::Elem)> {
        let f = self.field();
        let alg = &self.algebra;
        let n = t.len() - 1;
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        for i in 0..n {
            let sign = if i % 2 == 0 { f.one() } else { f.neg(&f.one()) };
            for (k, c) in alg.product(t[i], t[i + 1]) {
                if i > 0 && *k == 0 {
                    continue;
                }
                let mut s = Vec::with_capacity(n);
                s.extend_from_slice(&t[..i]);
                s.push(*k);
                s.extend_from_slice(&t[i + 2..]);
                out.push((s, f.mul(&sign, c)));
            }
        }
        let sign = if n % 2 == 0 { f.one() } else { f.neg(&f.one()) };
        for (k, c) in alg.product(t[n], t[0]) {
            let mut s = Vec::with_capacity(n);
            s.push(*k);
            s.extend_from_slice(&t[1..n]);
            out.push((s, f.mul(&sign, c)));
        }
        out
    }

    /// Connes' `B` on a basis tuple:
    /// `Σ_i (-1)^{ni} 1 ⊗ a_i ⊗ … ⊗ a_n ⊗ a_0 ⊗ … ⊗ a_{i-1}`.
    pub fn connes_tuple(&self, t: &[usize]) -> Vec<(Vec<usize>, F::Elem)> {
        let f = self.field();
        let n = t.len() - 1;
        if t[0] == 0 {
            return Vec::new();
        }
        (0..=n)
            .map(|i| {
                let sign = if (n * i) % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                let mut s = Vec::with_capacity(n + 2);
                s.push(0);
                s.extend_from_slice(&t[i..]);
                s.extend_from_slice(&t[..i]);
                (s, sign)
            })
            .collect()
    }

    fn matrix(
        &self,
        source: Option<&Cell>,
        target: Option<&Cell>,
        rows: usize,
        op: impl Fn(&[usize]) -> Vec<(Vec<usize>, F::Elem)>,
    ) -> SparseMatrix<F::Elem> {
        let f = self.field();
        let Some(source) = source else { return SparseMatrix::zero(rows, 0) };
        let columns = source
            .basis
            .iter()
            .map(|t| {
                let mut acc = BTreeMap::new();
                for (s, c) in op(t) {
                    let i = target.and_then(|tc| tc.index_of(&s)).expect("differential leaves the complex");
                    axpy(f, &mut acc, &c, &[(i, f.one())]);
                }
                acc.into_iter().collect()
            })
            .collect();
        SparseMatrix { rows, cols: source.dim(), columns }
    }

    /// `b : C_n → C_{n-1}` in degree `η` (zero for `n = 0`).
    pub fn b_matrix(&self, n: usize, eta: &[i64]) -> SparseMatrix<F::Elem> {
        if n == 0 {
            return SparseMatrix::zero(0, self.cell_dim(0, eta));
        }
        let target = self.cell(n - 1, eta);
        self.matrix(self.cell(n, eta), target, self.cell_dim(n - 1, eta), |t| self.b_tuple(t))
    }

    /// `B : C_n → C_{n+1}` in degree `η`; requires `n + 1 <= n_max + 1`.
    pub fn connes_matrix(&self, n: usize, eta: &[i64]) -> SparseMatrix<F::Elem> {
        assert!(n < self.top(), "B leaves the constructed range");
        let target = self.cell(n + 1, eta);
        self.matrix(self.cell(n, eta), target, self.cell_dim(n + 1, eta), |t| self.connes_tuple(t))
    }

    pub fn hochschild_b(&self, n: usize, eta: &[i64], chain: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        self.b_matrix(n, eta).apply(self.field(), chain)
    }

    pub fn connes_b(&self, n: usize, eta: &[i64], chain: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        self.connes_matrix(n, eta).apply(self.field(), chain)
    }

    /// Left multiplication of slot 0 by an algebra element of degree 0.
    pub fn slot_zero_matrix(&self, n: usize, eta: &[i64], r: &[(usize, F::Elem)]) -> SparseMatrix<F::Elem> {
        let alg = self.algebra.clone();
        let cell = self.cell(n, eta);
        self.matrix(cell, cell, self.cell_dim(n, eta), |t| {
            let prod = alg.mul(r, &alg.basis_vector(t[0]));
            prod.into_iter()
                .map(|(k, c)| {
                    let mut s = t.to_vec();
                    s[0] = k;
                    (s, c)
                })
                .collect()
        })
    }

    /// Human-readable form of a chain, e.g. `1*x⊗x + -1*x^2⊗1`.
    pub fn format_chain(&self, n: usize, eta: &[i64], chain: &[(usize, F::Elem)]) -> Vec<(String, String)> {
        let Some(cell) = self.cell(n, eta) else { return Vec::new() };
        let labels = self.algebra.labels();
        chain
            .iter()
            .map(|(i, c)| {
                let t: Vec<&str> = cell.basis[*i].iter().map(|k| labels[*k].as_str()).collect();
                (t.join("⊗"), self.field().format(c))
            })
            .collect()
    }
}

fn extend_tuples(
    bar: &BTreeMap<Vector, Vec<usize>>,
    n: usize,
    degree: Vector,
    tuple: &mut Vec<usize>,
    within: &dyn Fn(&[i64]) -> bool,
    keep: &dyn Fn(&[i64]) -> bool,
    buckets: &mut BTreeMap<Vector, Vec<Vec<usize>>>,
) {
    if tuple.len() == n + 1 {
        if keep(&degree) {
            buckets.entry(degree).or_default().push(tuple.clone());
        }
        return;
    }
    for (d, v) in bar {
        let s = add_vec(&degree, d);
        if !within(&s) {
            continue;
        }
        for &a in v {
            tuple.push(a);
            extend_tuples(bar, n, s.clone(), tuple, within, keep, buckets);
            tuple.pop();
        }
    }
}
