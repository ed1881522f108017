//! Exact sparse linear algebra over a field: echelon bases, ranks, kernels.

use std::collections::BTreeMap;

use crate::ring::Field;

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no zero values.
pub type SparseVec<E> = Vec<(usize, E)>;

pub fn sparse_from_map<F: Field>(field: &F, m: BTreeMap<usize, F::Elem>) -> SparseVec<F::Elem> {
    m.into_iter().filter(|(_, v)| !field.is_zero(v)).collect()
}

/// Accumulate `coeff * v` into `acc`.
pub fn axpy<F: Field>(field: &F, acc: &mut BTreeMap<usize, F::Elem>, coeff: &F::Elem, v: &[(usize, F::Elem)]) {
    for (i, x) in v {
        let term = field.mul(coeff, x);
        match acc.get_mut(i) {
            Some(y) => {
                *y = field.add(y, &term);
                if field.is_zero(y) {
                    acc.remove(i);
                }
            }
            None => {
                if !field.is_zero(&term) {
                    acc.insert(*i, term);
                }
            }
        }
    }
}

/// Matrix stored by columns; `columns[j]` is the image of the j-th source basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<SparseVec<E>>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[(usize, E)]) -> SparseVec<E> {
        let mut acc = BTreeMap::new();
        for (j, c) in v {
            axpy(field, &mut acc, c, &self.columns[*j]);
        }
        acc.into_iter().collect()
    }

    /// `self ∘ other`.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, other: &SparseMatrix<E>) -> SparseMatrix<E> {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let columns = other.columns.iter().map(|c| self.apply(field, c)).collect();
        SparseMatrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &SparseMatrix<E>) -> SparseMatrix<E> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "incompatible shapes");
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, E> = a.iter().cloned().collect();
                axpy(field, &mut acc, &field.one(), b);
                acc.into_iter().collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> SparseMatrix<E> {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(i, x)| (*i, field.mul(c, x)))
                    .filter(|(_, x)| !field.is_zero(x))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        let mut ech = Echelon::new(field.clone());
        for c in &self.columns {
            ech.insert(c.clone());
        }
        ech.rank()
    }

    /// Basis of the null space.
    pub fn kernel<F: Field<Elem = E>>(&self, field: &F) -> Vec<SparseVec<E>> {
        let mut ech = Echelon::new(field.clone());
        let mut out = Vec::new();
        for (j, c) in self.columns.iter().enumerate() {
            if let Some(k) = ech.insert_tracked(c.clone(), vec![(j, field.one())]) {
                out.push(k);
            }
        }
        out
    }
}

/// Incrementally built row-echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    /// pivot index -> (row with leading entry 1 at the pivot, tracked combination)
    rows: BTreeMap<usize, (SparseVec<F::Elem>, SparseVec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon { field, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; returns the residue and the applied combination
    /// (the residue equals `v` minus the combination's image).
    fn reduce(
        &self,
        v: SparseVec<F::Elem>,
        mut tag: BTreeMap<usize, F::Elem>,
    ) -> (BTreeMap<usize, F::Elem>, BTreeMap<usize, F::Elem>) {
        let f = &self.field;
        let mut work: BTreeMap<usize, F::Elem> = v.into_iter().collect();
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).find(|(i, _)| self.rows.contains_key(i)).map(|(i, c)| (*i, c.clone()));
            let Some((i, c)) = next else { break };
            let (row, comb) = &self.rows[&i];
            let neg = f.neg(&c);
            axpy(f, &mut work, &neg, row);
            axpy(f, &mut tag, &neg, comb);
            cursor = i + 1;
        }
        (work, tag)
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v.to_vec(), BTreeMap::new()).0.is_empty()
    }

    /// Representative of `v` modulo the span with no entries at pivot indices.
    pub fn normal_form(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        // Rows only have entries at or after their pivot, so a single left-to-right
        // sweep clears every pivot coordinate.
        self.reduce(v.to_vec(), BTreeMap::new()).0.into_iter().collect()
    }

    /// Insert `v`; returns `true` when the rank grew.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let before = self.rank();
        self.insert_tracked(v, Vec::new());
        self.rank() > before
    }

    /// Insert `v` carrying a combination tag. When `v` reduces to zero, the reduced tag
    /// (a relation among inserted vectors) is returned.
    pub fn insert_tracked(
        &mut self,
        v: SparseVec<F::Elem>,
        tag: SparseVec<F::Elem>,
    ) -> Option<SparseVec<F::Elem>> {
        let f = self.field.clone();
        let (work, tag) = self.reduce(v, tag.into_iter().collect());
        let Some((&lead, lc)) = work.iter().next() else {
            return Some(tag.into_iter().collect());
        };
        let inv = f.inv(lc).expect("nonzero leading coefficient");
        let row = work.into_iter().map(|(i, x)| (i, f.mul(&x, &inv))).collect();
        let comb = tag.into_iter().map(|(i, x)| (i, f.mul(&x, &inv))).collect();
        self.rows.insert(lead, (row, comb));
        None
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }
}
