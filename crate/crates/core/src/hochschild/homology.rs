use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::HomologyError;
use crate::linalg::{Echelon, SparseMatrix, SparseVec};
use crate::monoid::Vector;
use crate::ring::{Field, FiniteAlgebra, Ring};
use crate::witt::{act_on_graded, GradedModule, WittVector};

use super::HochschildComplex;

/// Dimension of a homology cell together with cycles representing a basis.
#[derive(Clone, Debug)]
pub struct HomologyCell<F: Field> {
    pub dim: usize,
    pub representatives: Vec<SparseVec<F::Elem>>,
}

/// `ker d_n / im d_{n+1}` with representatives taken from the kernel.
fn homology_of<F: Field>(field: &F, d_n: &SparseMatrix<F::Elem>, d_next: &SparseMatrix<F::Elem>) -> HomologyCell<F> {
    let mut ech = Echelon::new(field.clone());
    for c in &d_next.columns {
        ech.insert(c.clone());
    }
    let representatives: Vec<_> = d_n.kernel(field).into_iter().filter(|z| ech.insert(z.clone())).collect();
    HomologyCell { dim: representatives.len(), representatives }
}

impl<F: Field> HochschildComplex<F> {
    fn check_degree(&self, n: usize) -> Result<(), HomologyError> {
        if n > self.options().n_max {
            return Err(HomologyError::Malformed(format!(
                "degree {n} is above the constructed bound {}",
                self.options().n_max
            )));
        }
        Ok(())
    }

    /// `HH_n` in degree `η`.
    pub fn hh(&self, n: usize, eta: &[i64]) -> Result<HomologyCell<F>, HomologyError> {
        self.check_degree(n)?;
        Ok(homology_of(self.field(), &self.b_matrix(n, eta), &self.b_matrix(n + 1, eta)))
    }

    pub fn hh_dim(&self, n: usize, eta: &[i64]) -> Result<usize, HomologyError> {
        self.check_degree(n)?;
        let b_n = self.b_matrix(n, eta);
        let ker = b_n.cols - b_n.rank(self.field());
        Ok(ker - self.b_matrix(n + 1, eta).rank(self.field()))
    }

    fn require_char_zero(&self) -> Result<(), HomologyError> {
        match self.field().characteristic() {
            0 => Ok(()),
            p => Err(HomologyError::PositiveCharacteristic(p)),
        }
    }

    /// Offsets of the blocks `C_n, C_{n-2}, …` inside `Tot_n`.
    fn total_blocks(&self, n: usize, eta: &[i64]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut offset = 0;
        let mut m = n as i64;
        while m >= 0 {
            out.push((m as usize, offset));
            offset += self.cell_dim(m as usize, eta);
            m -= 2;
        }
        out
    }

    pub fn total_dim(&self, n: usize, eta: &[i64]) -> usize {
        self.total_blocks(n, eta).iter().map(|(m, _)| self.cell_dim(*m, eta)).sum()
    }

    /// `b + B : Tot_n → Tot_{n-1}` of the `(b, B)` bicomplex, `Tot_n = C_n ⊕ C_{n-2} ⊕ …`.
    pub fn total_differential(&self, n: usize, eta: &[i64]) -> SparseMatrix<F::Elem> {
        let source = self.total_blocks(n, eta);
        let rows = if n == 0 { 0 } else { self.total_dim(n - 1, eta) };
        let target = if n == 0 { Vec::new() } else { self.total_blocks(n - 1, eta) };
        let mut columns = Vec::new();
        for (k, (m, _)) in source.iter().enumerate() {
            let b = (*m > 0).then(|| self.b_matrix(*m, eta));
            let big_b = (k > 0).then(|| self.connes_matrix(*m, eta));
            for j in 0..self.cell_dim(*m, eta) {
                let mut col: SparseVec<F::Elem> = Vec::new();
                if k > 0 {
                    let off = target[k - 1].1;
                    col.extend(big_b.as_ref().unwrap().columns[j].iter().map(|(i, c)| (i + off, c.clone())));
                }
                if let Some(b) = &b {
                    let off = target[k].1;
                    col.extend(b.columns[j].iter().map(|(i, c)| (i + off, c.clone())));
                }
                col.sort_by_key(|(i, _)| *i);
                columns.push(col);
            }
        }
        SparseMatrix { rows, cols: columns.len(), columns }
    }

    /// `HC_n` in degree `η` from the total complex; characteristic 0 only.
    pub fn hc(&self, n: usize, eta: &[i64]) -> Result<HomologyCell<F>, HomologyError> {
        self.require_char_zero()?;
        self.check_degree(n)?;
        Ok(homology_of(self.field(), &self.total_differential(n, eta), &self.total_differential(n + 1, eta)))
    }

    pub fn hc_dim(&self, n: usize, eta: &[i64]) -> Result<usize, HomologyError> {
        self.require_char_zero()?;
        self.check_degree(n)?;
        let d = self.total_differential(n, eta);
        let ker = d.cols - d.rank(self.field());
        Ok(ker - self.total_differential(n + 1, eta).rank(self.field()))
    }

    /// The projection `S : Tot_n → Tot_{n-2}` dropping the `C_n` block.
    pub fn s_matrix(&self, n: usize, eta: &[i64]) -> SparseMatrix<F::Elem> {
        assert!(n >= 2);
        let top = self.cell_dim(n, eta);
        let cols = self.total_dim(n, eta);
        let columns = (0..cols).map(|j| if j < top { Vec::new() } else { vec![(j - top, self.field().one())] }).collect();
        SparseMatrix { rows: self.total_dim(n - 2, eta), cols, columns }
    }

    /// Rank of `S : HC_n → HC_{n-2}` in degree `η`.
    pub fn s_rank(&self, n: usize, eta: &[i64]) -> Result<usize, HomologyError> {
        self.require_char_zero()?;
        self.check_degree(n)?;
        let f = self.field();
        let s = self.s_matrix(n, eta);
        let mut ech = Echelon::new(f.clone());
        for c in &self.total_differential(n - 1, eta).columns {
            ech.insert(c.clone());
        }
        let before = ech.rank();
        for z in self.total_differential(n, eta).kernel(f) {
            ech.insert(s.apply(f, &z));
        }
        Ok(ech.rank() - before)
    }

    /// Matrix of `ω ∗ -` on the chains of cell `(n, η)`, computed through the ghost component at `η`.
    pub fn witt_action_matrix<W>(
        &self,
        omega: &WittVector<W>,
        n: usize,
        eta: &[i64],
    ) -> Result<SparseMatrix<F::Elem>, HomologyError>
    where
        W: Ring,
        for<'a> ChainModule<'a, F>: GradedModule<W, Element = SparseVec<F::Elem>>,
    {
        let module = ChainModule { complex: self, n, eta: eta.to_vec() };
        let dim = self.cell_dim(n, eta);
        let columns = (0..dim)
            .map(|j| act_on_graded(omega, &module, eta, &vec![(j, self.field().one())]))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseMatrix { rows: dim, cols: dim, columns })
    }

    /// Action of `ω` on a homogeneous chain (and hence on its class).
    pub fn witt_action_hh<W>(
        &self,
        omega: &WittVector<W>,
        n: usize,
        eta: &[i64],
        class: &SparseVec<F::Elem>,
    ) -> Result<SparseVec<F::Elem>, HomologyError>
    where
        W: Ring,
        for<'a> ChainModule<'a, F>: GradedModule<W, Element = SparseVec<F::Elem>>,
    {
        let module = ChainModule { complex: self, n, eta: eta.to_vec() };
        Ok(act_on_graded(omega, &module, eta, class)?)
    }

    /// `true` when `x` and `y` define the same class in `HH_n(η)`.
    pub fn same_hh_class(&self, n: usize, eta: &[i64], x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>) -> bool {
        let f = self.field();
        let mut ech = Echelon::new(f.clone());
        for c in &self.b_matrix(n + 1, eta).columns {
            ech.insert(c.clone());
        }
        let mut diff: std::collections::BTreeMap<usize, F::Elem> = x.iter().cloned().collect();
        crate::linalg::axpy(f, &mut diff, &f.neg(&f.one()), y);
        ech.contains(&diff.into_iter().collect::<Vec<_>>())
    }

    /// Dimensions (and optionally representatives) of every cell through `n_max`.
    pub fn report(&self, kind: HomologyKind, with_basis: bool) -> Result<HomologyReport, HomologyError> {
        if kind == HomologyKind::Cyclic {
            self.require_char_zero()?;
        }
        let mut jobs = Vec::new();
        for n in 0..=self.options().n_max {
            let mut degrees = self.degrees(n);
            if kind == HomologyKind::Cyclic {
                let mut m = n;
                while m >= 2 {
                    m -= 2;
                    degrees.extend(self.degrees(m));
                }
                degrees.sort();
                degrees.dedup();
            }
            jobs.extend(degrees.into_iter().map(|d| (n, d)));
        }
        let entries = jobs
            .par_iter()
            .map(|(n, eta)| {
                let cell = match kind {
                    HomologyKind::Hochschild => self.hh(*n, eta)?,
                    HomologyKind::Cyclic => self.hc(*n, eta)?,
                };
                let basis = with_basis.then(|| {
                    cell.representatives
                        .iter()
                        .map(|z| match kind {
                            HomologyKind::Hochschild => self.format_chain(*n, eta, z),
                            HomologyKind::Cyclic => self.format_total_chain(*n, eta, z),
                        })
                        .collect()
                });
                Ok(HomologyEntry { n: *n, eta: eta.clone(), dim: cell.dim, basis })
            })
            .collect::<Result<Vec<_>, HomologyError>>()?
            .into_iter()
            .filter(|e| e.dim > 0)
            .collect();
        Ok(HomologyReport {
            kind,
            relative: self.options().relative,
            field: self.field().name(),
            n_max: self.options().n_max,
            entries,
        })
    }

    fn format_total_chain(&self, n: usize, eta: &[i64], z: &SparseVec<F::Elem>) -> Vec<(String, String)> {
        let blocks = self.total_blocks(n, eta);
        let mut out = Vec::new();
        for (m, off) in blocks {
            let dim = self.cell_dim(m, eta);
            let part: SparseVec<F::Elem> =
                z.iter().filter(|(i, _)| *i >= off && *i < off + dim).map(|(i, c)| (i - off, c.clone())).collect();
            out.extend(self.format_chain(m, eta, &part));
        }
        out
    }
}

/// Chains of one cell, viewed as a graded module over `k₀` or over the coefficient algebra `R`.
pub struct ChainModule<'a, F: Field> {
    complex: &'a HochschildComplex<F>,
    n: usize,
    eta: Vector,
}

impl<F: Field> GradedModule<F> for ChainModule<'_, F> {
    type Element = SparseVec<F::Elem>;
    fn scale(&self, r: &F::Elem, x: &Self::Element) -> Self::Element {
        let f = self.complex.field();
        x.iter().map(|(i, c)| (*i, f.mul(r, c))).filter(|(_, c)| !f.is_zero(c)).collect()
    }
}

impl<F: Field> GradedModule<FiniteAlgebra<F>> for ChainModule<'_, F> {
    type Element = SparseVec<F::Elem>;
    fn scale(&self, r: &Vec<F::Elem>, x: &Self::Element) -> Self::Element {
        let alg = self.complex.algebra();
        let embedded = alg.embed_coefficient(r);
        self.complex.slot_zero_matrix(self.n, &self.eta, &embedded).apply(self.complex.field(), x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HomologyKind {
    Hochschild,
    Cyclic,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyEntry {
    pub n: usize,
    pub eta: Vector,
    pub dim: usize,
    /// Representative cycles as `(tensor, coefficient)` pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<(String, String)>>>,
}

/// Nonzero homology cells of a graded algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyReport {
    pub kind: HomologyKind,
    pub relative: bool,
    pub field: String,
    pub n_max: usize,
    pub entries: Vec<HomologyEntry>,
}

impl HomologyReport {
    pub fn dim(&self, n: usize, eta: &[i64]) -> usize {
        self.entries.iter().find(|e| e.n == n && e.eta == eta).map_or(0, |e| e.dim)
    }
}
