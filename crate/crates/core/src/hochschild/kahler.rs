use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use itertools::Itertools;

use crate::error::HomologyError;
use crate::linalg::{axpy, Echelon, SparseVec};
use crate::monoid::Vector;
use crate::ring::{Field, FiniteAlgebra, Ring};
use crate::witt::GradedModule;

use super::GradedAlgebra;

/// `Ω^n_{A/k₀}` as a quotient of the free `k₀`-space on `b_k · db_I`
/// (`I` a strictly increasing set of non-unit basis indices).
#[derive(Clone, Debug)]
pub struct KahlerForms<F: Field> {
    n: usize,
    basis: Vec<(usize, Vec<usize>)>,
    index: HashMap<(usize, Vec<usize>), usize>,
    relations: Echelon<F>,
}

impl<F: Field> KahlerForms<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the free space before relations.
    pub fn free_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len() - self.relations.rank()
    }

    pub fn basis(&self) -> &[(usize, Vec<usize>)] {
        &self.basis
    }

    pub fn normal_form(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        self.relations.normal_form(v)
    }

    pub fn is_zero(&self, v: &[(usize, F::Elem)]) -> bool {
        self.relations.contains(v)
    }

    pub fn index_of(&self, k: usize, set: &[usize]) -> Option<usize> {
        self.index.get(&(k, set.to_vec())).copied()
    }
}

/// Sorts `set ∪ {l}` and returns the permutation sign, or `None` if `l ∈ set`.
fn insert_sorted(l: usize, set: &[usize]) -> Option<(Vec<usize>, bool)> {
    if set.contains(&l) {
        return None;
    }
    let pos = set.iter().filter(|x| **x < l).count();
    let mut out = set.to_vec();
    out.insert(pos, l);
    Some((out, pos % 2 == 1))
}

/// The de Rham complex `Ω^0 → Ω^1 → … → Ω^{n_max}` of a commutative graded algebra.
#[derive(Clone, Debug)]
pub struct DeRham<F: Field> {
    algebra: Arc<GradedAlgebra<F>>,
    forms: Vec<KahlerForms<F>>,
}

/// Builds `Ω^0, …, Ω^n_max`.
pub fn kahler<F: Field>(algebra: Arc<GradedAlgebra<F>>, n_max: usize) -> Result<DeRham<F>, HomologyError> {
    if !algebra.is_commutative() {
        return Err(HomologyError::NotCommutative);
    }
    let forms = (0..=n_max).map(|n| build_forms(&algebra, n)).collect();
    Ok(DeRham { algebra, forms })
}

fn build_forms<F: Field>(alg: &GradedAlgebra<F>, n: usize) -> KahlerForms<F> {
    let f = alg.field();
    let dim = alg.dim();
    let sets: Vec<Vec<usize>> = (1..dim).combinations(n).collect();
    let mut basis = Vec::new();
    for k in 0..dim {
        for s in &sets {
            basis.push((k, s.clone()));
        }
    }
    let index: HashMap<_, _> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let mut relations = Echelon::new(f.clone());
    if n > 0 {
        let smaller: Vec<Vec<usize>> = (1..dim).combinations(n - 1).collect();
        for i in 1..dim {
            for j in i..dim {
                // d(b_i b_j) - b_i db_j - b_j db_i as a 1-form `Σ c (b_p, l)`
                let mut one_form: Vec<(usize, usize, F::Elem)> = Vec::new();
                for (k, c) in alg.product(i, j) {
                    if *k != 0 {
                        one_form.push((0, *k, c.clone()));
                    }
                }
                one_form.push((i, j, f.neg(&f.one())));
                one_form.push((j, i, f.neg(&f.one())));
                for j_set in &smaller {
                    for p in 0..dim {
                        let mut acc = BTreeMap::new();
                        for (q, l, c) in &one_form {
                            let Some((set, odd)) = insert_sorted(*l, j_set) else { continue };
                            let c = if odd { f.neg(c) } else { c.clone() };
                            for (r, c2) in alg.product(p, *q) {
                                axpy(f, &mut acc, &f.mul(&c, c2), &[(index[&(*r, set.clone())], f.one())]);
                            }
                        }
                        if !acc.is_empty() {
                            relations.insert(acc.into_iter().collect());
                        }
                    }
                }
            }
        }
    }
    KahlerForms { n, basis, index, relations }
}

impl<F: Field> DeRham<F> {
    pub fn algebra(&self) -> &Arc<GradedAlgebra<F>> {
        &self.algebra
    }

    pub fn forms(&self, n: usize) -> &KahlerForms<F> {
        &self.forms[n]
    }

    pub fn n_max(&self) -> usize {
        self.forms.len() - 1
    }

    /// Algebra element (coordinates on the algebra basis) as a 0-form.
    pub fn zero_form(&self, a: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        a.iter().map(|(k, c)| (self.forms[0].index[&(*k, Vec::new())], c.clone())).collect()
    }

    /// `d(b_k db_I) = db_k ∧ db_I`.
    pub fn d(&self, n: usize, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = self.algebra.field();
        let (src, dst) = (&self.forms[n], &self.forms[n + 1]);
        let mut acc = BTreeMap::new();
        for (i, c) in v {
            let (k, set) = &src.basis[*i];
            if *k == 0 {
                continue;
            }
            if let Some((s, odd)) = insert_sorted(*k, set) {
                let c = if odd { f.neg(c) } else { c.clone() };
                axpy(f, &mut acc, &c, &[(dst.index[&(0, s)], f.one())]);
            }
        }
        acc.into_iter().collect()
    }

    /// `a · ω` for an algebra element `a` and an `n`-form `ω`.
    pub fn multiply(&self, n: usize, a: &[(usize, F::Elem)], v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = self.algebra.field();
        let forms = &self.forms[n];
        let mut acc = BTreeMap::new();
        for (p, c1) in a {
            for (i, c2) in v {
                let (k, set) = &forms.basis[*i];
                for (r, c3) in self.algebra.product(*p, *k) {
                    axpy(f, &mut acc, &f.mul(&f.mul(c1, c2), c3), &[(forms.index[&(*r, set.clone())], f.one())]);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// `u = v` in `Ω^n`.
    pub fn equal(&self, n: usize, u: &[(usize, F::Elem)], v: &[(usize, F::Elem)]) -> bool {
        let f = self.algebra.field();
        let mut diff: BTreeMap<usize, F::Elem> = u.iter().cloned().collect();
        axpy(f, &mut diff, &f.neg(&f.one()), v);
        self.forms[n].is_zero(&diff.into_iter().collect::<Vec<_>>())
    }

    /// `Γ`-degree of a basis form.
    pub fn degree(&self, n: usize, i: usize) -> Vector {
        let (k, set) = &self.forms[n].basis[i];
        let mut d = self.algebra.degree(*k).to_vec();
        for l in set {
            for (x, y) in d.iter_mut().zip(self.algebra.degree(*l)) {
                *x += y;
            }
        }
        d
    }

    /// Dimension of `Ω^n` in each `Γ`-degree.
    pub fn dims_by_degree(&self, n: usize) -> BTreeMap<Vector, usize> {
        let forms = &self.forms[n];
        let mut free: BTreeMap<Vector, usize> = BTreeMap::new();
        for i in 0..forms.basis.len() {
            *free.entry(self.degree(n, i)).or_default() += 1;
        }
        for p in forms.relations.pivots() {
            *free.get_mut(&self.degree(n, p)).unwrap() -= 1;
        }
        free.retain(|_, v| *v > 0);
        free
    }

    /// `d` maps relations into relations, so it descends to `Ω^n → Ω^{n+1}`.
    pub fn d_is_well_defined(&self, n: usize) -> bool {
        let f = self.algebra.field();
        let forms = &self.forms[n];
        (0..forms.basis.len()).all(|i| {
            let v = vec![(i, f.one())];
            let nf = forms.normal_form(&v);
            // d(v) and d(normal form of v) must agree modulo relations
            self.equal(n + 1, &self.d(n, &v), &self.d(n, &nf))
        })
    }
}

/// Forms of a fixed degree `η`, as a module over `k₀` and over the coefficient algebra.
pub struct FormModule<'a, F: Field> {
    pub complex: &'a DeRham<F>,
    pub n: usize,
}

impl<F: Field> GradedModule<F> for FormModule<'_, F> {
    type Element = SparseVec<F::Elem>;
    fn scale(&self, r: &F::Elem, x: &Self::Element) -> Self::Element {
        let f = self.complex.algebra.field();
        x.iter().map(|(i, c)| (*i, f.mul(r, c))).filter(|(_, c)| !f.is_zero(c)).collect()
    }
}

impl<F: Field> GradedModule<FiniteAlgebra<F>> for FormModule<'_, F> {
    type Element = SparseVec<F::Elem>;
    fn scale(&self, r: &<FiniteAlgebra<F> as Ring>::Elem, x: &Self::Element) -> Self::Element {
        let a = self.complex.algebra.embed_coefficient(r);
        self.complex.multiply(self.n, &a, x)
    }
}
