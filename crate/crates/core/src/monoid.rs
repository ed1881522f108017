//! Affine monoids Γ ⊂ Zⁿ, their ideals, and finite truncations.
//!
//! A monoid is described either by inequalities `w_j · v >= 0` (always normal)
//! or by generators. The generator description is checked for pointedness by
//! finding a positive grading, and for normality on a finite window only.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::MonoidError;
use crate::linalg::SparseMatrix;
use crate::ring::{gcd_slice, Field, Rationals};

pub type Vector = Vec<i64>;

/// Default half-width of the window on which generator-given monoids are checked for normality.
pub const DEFAULT_NORMALITY_WINDOW: i64 = 16;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(e: i64, v: &[i64]) -> Vector {
    v.iter().map(|x| e * x).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Inequalities,
    Generators,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMonoid {
    rank: usize,
    inequalities: Vec<Vector>,
    generators: Vec<Vector>,
    representation: Representation,
    /// Vectors whose cone contains Γ: extreme rays (inequalities) or the generators.
    spanning: Vec<Vector>,
    /// Positive grading used to bound generator searches.
    grading: Option<Vector>,
}

impl AffineMonoid {
    /// `Γ = {v : w_j · v >= 0 for all j}`; the inequalities must cut out a pointed cone.
    pub fn from_inequalities(rank: usize, inequalities: Vec<Vector>) -> Result<Self, MonoidError> {
        if rank == 0 {
            return Err(MonoidError::BadDescription("rank must be positive".into()));
        }
        for w in &inequalities {
            check_len(rank, w)?;
        }
        let rows = to_rational_rows(&inequalities, rank);
        if rows.rank(&Rationals) < rank {
            let line = rows_kernel_vector(&inequalities, rank).unwrap_or_default();
            return Err(MonoidError::HasUnits(line));
        }
        let spanning = extreme_rays(rank, &inequalities);
        if spanning.is_empty() {
            return Err(MonoidError::BadDescription("the cone is {0}".into()));
        }
        Ok(AffineMonoid {
            rank,
            inequalities,
            generators: Vec::new(),
            representation: Representation::Inequalities,
            spanning,
            grading: None,
        })
    }

    /// The monoid generated by `generators`, checked for normality on the default window.
    pub fn from_generators(rank: usize, generators: Vec<Vector>) -> Result<Self, MonoidError> {
        Self::from_generators_with_window(rank, generators, DEFAULT_NORMALITY_WINDOW)
    }

    pub fn from_generators_with_window(
        rank: usize,
        generators: Vec<Vector>,
        window: i64,
    ) -> Result<Self, MonoidError> {
        if rank == 0 || generators.is_empty() {
            return Err(MonoidError::BadDescription("need a positive rank and at least one generator".into()));
        }
        for g in &generators {
            check_len(rank, g)?;
            if g.iter().all(|x| *x == 0) {
                return Err(MonoidError::BadDescription("zero generator".into()));
            }
        }
        let grading = find_grading(rank, &generators).ok_or_else(|| MonoidError::HasUnits(generators[0].clone()))?;
        let m = AffineMonoid {
            rank,
            inequalities: Vec::new(),
            generators: generators.clone(),
            representation: Representation::Generators,
            spanning: generators,
            grading: Some(grading),
        };
        m.check_normal_on_window(window)?;
        Ok(m)
    }

    /// `Nⁿ`.
    pub fn orthant(rank: usize) -> Self {
        let ineqs = (0..rank).map(|i| unit(rank, i)).collect();
        Self::from_inequalities(rank, ineqs).expect("the orthant is pointed")
    }

    /// Attach an alternative generator list (informational unless the representation is switched).
    pub fn with_generators(mut self, generators: Vec<Vector>) -> Result<Self, MonoidError> {
        for g in &generators {
            check_len(self.rank, g)?;
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn inequalities(&self) -> &[Vector] {
        &self.inequalities
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool, MonoidError> {
        check_len(self.rank, v)?;
        match self.representation {
            Representation::Inequalities => Ok(self.inequalities.iter().all(|w| dot(w, v) >= 0)),
            Representation::Generators => self.contains_by_generators(v),
        }
    }

    /// Membership decided by bounded search over non-negative generator combinations.
    pub fn contains_by_generators(&self, v: &[i64]) -> Result<bool, MonoidError> {
        check_len(self.rank, v)?;
        let grading = match &self.grading {
            Some(g) => g.clone(),
            None => find_grading(self.rank, &self.generators).ok_or_else(|| MonoidError::UndecidableUnderBounds(v.to_vec()))?,
        };
        if self.generators.is_empty() {
            return Err(MonoidError::UndecidableUnderBounds(v.to_vec()));
        }
        Ok(combination_exists(&self.generators, &grading, v))
    }

    /// Exact test for lying in the rational cone spanned by the description.
    fn in_rational_cone(&self, v: &[i64]) -> bool {
        match self.representation {
            Representation::Inequalities => self.inequalities.iter().all(|w| dot(w, v) >= 0),
            Representation::Generators => in_cone_of(&self.generators, v),
        }
    }

    fn check_normal_on_window(&self, window: i64) -> Result<(), MonoidError> {
        for v in (0..self.rank).map(|_| -window..=window).multi_cartesian_product() {
            if v.iter().all(|x| *x == 0) || !self.in_rational_cone(&v) {
                continue;
            }
            if !self.contains(&v)? {
                let multiple = (2..=64).find(|d| self.contains(&scale(*d, &v)).unwrap_or(false)).unwrap_or(0);
                return Err(MonoidError::NotNormal { vector: v, multiple });
            }
        }
        Ok(())
    }

    pub fn content(&self, gamma: &[i64]) -> Result<u64, MonoidError> {
        self.require_nonzero_member(gamma)?;
        Ok(gcd_slice(gamma) as u64)
    }

    pub fn is_primitive(&self, gamma: &[i64]) -> Result<bool, MonoidError> {
        Ok(self.content(gamma)? == 1)
    }

    pub fn ray_of(&self, gamma: &[i64]) -> Result<Ray, MonoidError> {
        let c = self.content(gamma)? as i64;
        Ok(Ray { primitive: gamma.iter().map(|x| x / c).collect() })
    }

    fn require_nonzero_member(&self, gamma: &[i64]) -> Result<(), MonoidError> {
        check_len(self.rank, gamma)?;
        if gamma.iter().all(|x| *x == 0) {
            return Err(MonoidError::ZeroElement);
        }
        if !self.contains(gamma)? {
            return Err(MonoidError::NotMember(gamma.to_vec()));
        }
        Ok(())
    }

    /// Every member with `weight · v <= bound`, including 0, in (degree, lex) order.
    pub fn window(&self, weight: &[i64], bound: i64) -> Result<Vec<Vector>, MonoidError> {
        check_len(self.rank, weight)?;
        for r in &self.spanning {
            if dot(weight, r) <= 0 {
                return Err(MonoidError::WeightNotPositive(weight.to_vec()));
            }
        }
        if bound < 0 {
            return Ok(Vec::new());
        }
        // Members lie in conv(0, bound * r / (w · r)); take its bounding box.
        let mut lo = vec![0i64; self.rank];
        let mut hi = vec![0i64; self.rank];
        for r in &self.spanning {
            let wr = dot(weight, r);
            for i in 0..self.rank {
                let num = bound * r[i];
                lo[i] = lo[i].min(num.div_euclid(wr));
                hi[i] = hi[i].max(-((-num).div_euclid(wr)));
            }
        }
        let mut out = Vec::new();
        for v in (0..self.rank).map(|i| lo[i]..=hi[i]).multi_cartesian_product() {
            if dot(weight, &v) <= bound && self.contains(&v)? {
                out.push(v);
            }
        }
        out.sort_by(|a, b| (dot(weight, a), a).cmp(&(dot(weight, b), b)));
        Ok(out)
    }
}

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn check_len(rank: usize, v: &[i64]) -> Result<(), MonoidError> {
    if v.len() != rank {
        return Err(MonoidError::DimensionMismatch { expected: rank, got: v.len() });
    }
    Ok(())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Matrix whose columns are the given covectors (so its rank is the rank of the row system).
fn to_rational_rows(rows: &[Vector], rank: usize) -> SparseMatrix<BigRational> {
    let columns = rows
        .iter()
        .map(|w| w.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, q(*x))).collect())
        .collect();
    SparseMatrix { rows: rank, cols: rows.len(), columns }
}

/// Primitive integer vector spanning the common kernel of `rows`, when that kernel is nonzero.
fn rows_kernel_vector(rows: &[Vector], rank: usize) -> Option<Vector> {
    // kernel of the map v -> (w_j · v): columns indexed by coordinates
    let columns = (0..rank)
        .map(|i| rows.iter().enumerate().filter(|(_, w)| w[i] != 0).map(|(j, w)| (j, q(w[i]))).collect())
        .collect();
    let m = SparseMatrix { rows: rows.len(), cols: rank, columns };
    let k = m.kernel(&Rationals);
    let v = k.first()?;
    Some(primitive_integer(rank, v))
}

fn primitive_integer(rank: usize, v: &[(usize, BigRational)]) -> Vector {
    let lcm = v.iter().fold(BigInt::one(), |acc, (_, x)| num_integer::lcm(acc, x.denom().clone()));
    let mut out = vec![0i64; rank];
    for (i, x) in v {
        out[*i] = (x * BigRational::from_integer(lcm.clone())).to_integer().to_i64().expect("small vector");
    }
    let g = gcd_slice(&out);
    if g > 1 {
        for x in &mut out {
            *x /= g;
        }
    }
    out
}

/// Extreme rays of a pointed cone `{v : w_j · v >= 0}`.
fn extreme_rays(rank: usize, ineqs: &[Vector]) -> Vec<Vector> {
    if rank == 1 {
        return [vec![1], vec![-1]].into_iter().filter(|r| ineqs.iter().all(|w| dot(w, r) >= 0)).collect();
    }
    let mut rays = BTreeSet::new();
    for subset in (0..ineqs.len()).combinations(rank - 1) {
        let rows: Vec<Vector> = subset.iter().map(|&j| ineqs[j].clone()).collect();
        if to_rational_rows(&rows, rank).rank(&Rationals) < rank - 1 {
            continue;
        }
        let Some(r) = rows_kernel_vector(&rows, rank) else { continue };
        for cand in [r.clone(), scale(-1, &r)] {
            if ineqs.iter().all(|w| dot(w, &cand) >= 0) {
                rays.insert(cand);
            }
        }
    }
    rays.into_iter().collect()
}

/// Small integer covector strictly positive on all `gens`.
fn find_grading(rank: usize, gens: &[Vector]) -> Option<Vector> {
    let bound: i64 = match rank {
        1..=3 => 4,
        4 => 3,
        _ => 2,
    };
    let mut cands: Vec<Vector> = (0..rank).map(|_| -bound..=bound).multi_cartesian_product().collect();
    cands.sort_by_key(|w| (w.iter().map(|x| x.abs()).sum::<i64>(), w.clone()));
    cands.into_iter().find(|w| gens.iter().all(|g| dot(w, g) > 0))
}

fn combination_exists(gens: &[Vector], grading: &[i64], target: &[i64]) -> bool {
    fn go(gens: &[Vector], grading: &[i64], i: usize, rest: Vector) -> bool {
        let deg = dot(grading, &rest);
        if deg < 0 {
            return false;
        }
        if rest.iter().all(|x| *x == 0) {
            return true;
        }
        if i == gens.len() {
            return false;
        }
        let gdeg = dot(grading, &gens[i]);
        let max = deg / gdeg;
        (0..=max).rev().any(|c| go(gens, grading, i + 1, sub(&rest, &scale(c, &gens[i]))))
    }
    go(gens, grading, 0, target.to_vec())
}

/// Exact rational cone membership by Carathéodory: `v` is a non-negative combination
/// of some linearly independent subset of `gens`.
fn in_cone_of(gens: &[Vector], v: &[i64]) -> bool {
    let n = v.len();
    for k in 1..=n.min(gens.len()) {
        for subset in (0..gens.len()).combinations(k) {
            let cols: Vec<&Vector> = subset.iter().map(|&j| &gens[j]).collect();
            if let Some(lambda) = solve_exact(&cols, v) {
                if lambda.iter().all(|x| !x.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Unique solution of `sum λ_j cols_j = v` when the columns are independent and `v` is in their span.
fn solve_exact(cols: &[&Vector], v: &[i64]) -> Option<Vec<BigRational>> {
    let n = v.len();
    let k = cols.len();
    let f = Rationals;
    // augmented rows: n equations in k unknowns
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| q(c[i])).collect();
            row.push(q(v[i]));
            row
        })
        .collect();
    let mut piv_row = 0;
    let mut pivots = Vec::new();
    for col in 0..k {
        let Some(p) = (piv_row..n).find(|&r| !a[r][col].is_zero()) else { return None };
        a.swap(piv_row, p);
        let inv = f.inv(&a[piv_row][col]).unwrap();
        for x in a[piv_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != piv_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pr = a[piv_row].clone();
                for (x, y) in a[r].iter_mut().zip(pr) {
                    *x = &*x - &factor * y;
                }
            }
        }
        pivots.push(col);
        piv_row += 1;
    }
    if a[piv_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| a[i][k].clone()).collect())
}

/// An ideal `I = ∪ (η + Γ)` of a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidIdeal {
    generators: Vec<Vector>,
}

impl MonoidIdeal {
    pub fn new(parent: &AffineMonoid, generators: Vec<Vector>) -> Result<Self, MonoidError> {
        if generators.is_empty() {
            return Err(MonoidError::BadDescription("an ideal needs at least one generator".into()));
        }
        for g in &generators {
            check_len(parent.rank(), g)?;
            if g.iter().all(|x| *x == 0) || !parent.contains(g)? {
                return Err(MonoidError::BadIdealGenerator(g.clone()));
            }
        }
        Ok(MonoidIdeal { generators })
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn contains(&self, parent: &AffineMonoid, gamma: &[i64]) -> Result<bool, MonoidError> {
        check_len(parent.rank(), gamma)?;
        for g in &self.generators {
            if parent.contains(&sub(gamma, g))? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// A ray `N v` with `v` primitive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ray {
    primitive: Vector,
}

impl Ray {
    pub fn new(v: Vector) -> Result<Self, MonoidError> {
        if v.iter().all(|x| *x == 0) {
            return Err(MonoidError::ZeroElement);
        }
        if gcd_slice(&v) != 1 {
            return Err(MonoidError::UnknownRay(v));
        }
        Ok(Ray { primitive: v })
    }

    pub fn primitive(&self) -> &[i64] {
        &self.primitive
    }

    pub fn multiple(&self, e: u64) -> Vector {
        scale(e as i64, &self.primitive)
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N({})", self.primitive.iter().join(","))
    }
}

/// Per-ray view of a truncation: the primitive and the classical truncation set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayData {
    pub ray: Ray,
    /// `{e >= 1 : e v ∈ T}`, increasing.
    pub multiples: Vec<u64>,
    /// element index of `e v` for each entry of `multiples`.
    pub members: Vec<usize>,
}

/// The finite truncation `{γ ∈ Γ \ I : w · γ <= D}`; `0` is implicit and never stored.
#[derive(Clone, Debug)]
pub struct TruncatedMonoid {
    parent: AffineMonoid,
    ideal: Option<MonoidIdeal>,
    weight: Vector,
    degree_bound: i64,
    elements: Vec<Vector>,
    index: HashMap<Vector, usize>,
    rays: Vec<RayData>,
    /// element index -> (ray index, multiple)
    position: Vec<(usize, u64)>,
}

impl PartialEq for TruncatedMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.parent.rank == other.parent.rank && self.elements == other.elements
    }
}

impl TruncatedMonoid {
    pub fn new(
        parent: AffineMonoid,
        ideal: Option<MonoidIdeal>,
        weight: Vector,
        degree_bound: i64,
    ) -> Result<Self, MonoidError> {
        let window = parent.window(&weight, degree_bound)?;
        let mut elements = Vec::new();
        for v in window {
            if v.iter().all(|x| *x == 0) {
                continue;
            }
            if let Some(i) = &ideal {
                if i.contains(&parent, &v)? {
                    continue;
                }
            }
            elements.push(v);
        }
        Ok(Self::from_elements(parent, ideal, weight, degree_bound, elements))
    }

    fn from_elements(
        parent: AffineMonoid,
        ideal: Option<MonoidIdeal>,
        weight: Vector,
        degree_bound: i64,
        elements: Vec<Vector>,
    ) -> Self {
        let index: HashMap<Vector, usize> = elements.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut rays: Vec<RayData> = Vec::new();
        let mut ray_index: HashMap<Vector, usize> = HashMap::new();
        let mut position = vec![(0usize, 0u64); elements.len()];
        for (i, v) in elements.iter().enumerate() {
            let c = gcd_slice(v);
            let prim: Vector = v.iter().map(|x| x / c).collect();
            let r = *ray_index.entry(prim.clone()).or_insert_with(|| {
                rays.push(RayData { ray: Ray { primitive: prim }, multiples: Vec::new(), members: Vec::new() });
                rays.len() - 1
            });
            rays[r].multiples.push(c as u64);
            rays[r].members.push(i);
            position[i] = (r, c as u64);
        }
        for rd in &mut rays {
            let mut pairs: Vec<(u64, usize)> = rd.multiples.iter().copied().zip(rd.members.iter().copied()).collect();
            pairs.sort();
            rd.multiples = pairs.iter().map(|p| p.0).collect();
            rd.members = pairs.iter().map(|p| p.1).collect();
        }
        TruncatedMonoid { parent, ideal, weight, degree_bound, elements, index, rays, position }
    }

    /// `N` truncated at degree `d`.
    pub fn naturals(d: i64) -> Self {
        Self::new(AffineMonoid::orthant(1), None, vec![1], d).expect("valid truncation")
    }

    /// `N / (a)`, i.e. `{1, ..., a-1}`.
    pub fn naturals_mod(a: i64) -> Result<Self, MonoidError> {
        let n = AffineMonoid::orthant(1);
        let ideal = MonoidIdeal::new(&n, vec![vec![a]])?;
        Self::new(n, Some(ideal), vec![1], a)
    }

    pub fn parent(&self) -> &AffineMonoid {
        &self.parent
    }

    pub fn ideal(&self) -> Option<&MonoidIdeal> {
        self.ideal.as_ref()
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    pub fn degree_bound(&self) -> i64 {
        self.degree_bound
    }

    pub fn rank(&self) -> usize {
        self.parent.rank()
    }

    /// Nonzero members in (weight-degree, lexicographic) order.
    pub fn enumerate(&self) -> &[Vector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &[i64] {
        &self.elements[i]
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    pub fn degree(&self, v: &[i64]) -> i64 {
        dot(&self.weight, v)
    }

    pub fn rays(&self) -> &[RayData] {
        &self.rays
    }

    pub fn rays_up_to(&self) -> Vec<Ray> {
        self.rays.iter().map(|r| r.ray.clone()).collect()
    }

    /// `(ray index, multiple)` of the element with the given index.
    pub fn position(&self, i: usize) -> (usize, u64) {
        self.position[i]
    }

    /// Content of a member; `1` for primitives.
    pub fn content_at(&self, i: usize) -> u64 {
        self.position[i].1
    }

    pub fn ray_truncation_set(&self, ray: &Ray) -> Result<Vec<u64>, MonoidError> {
        check_len(self.rank(), ray.primitive())?;
        if !self.parent.contains(ray.primitive())? {
            return Err(MonoidError::UnknownRay(ray.primitive.clone()));
        }
        Ok(self.rays.iter().find(|r| &r.ray == ray).map(|r| r.multiples.clone()).unwrap_or_default())
    }

    pub fn ideal_membership(&self, gamma: &[i64]) -> Result<bool, MonoidError> {
        match &self.ideal {
            Some(i) => i.contains(&self.parent, gamma),
            None => {
                check_len(self.rank(), gamma)?;
                Ok(false)
            }
        }
    }

    /// The truncation `{γ : mγ ∈ T}` on which Frobenius `F_m` lands.
    pub fn divided(&self, m: u64) -> Result<Self, MonoidError> {
        let m = m as i64;
        if m <= 0 {
            return Err(MonoidError::BadDescription("division by a non-positive integer".into()));
        }
        let bound = self.degree_bound.div_euclid(m);
        let window = self.parent.window(&self.weight, bound)?;
        let ideal = match &self.ideal {
            None => None,
            Some(i) => {
                let mut cands = Vec::new();
                for v in &window {
                    if v.iter().any(|x| *x != 0) && i.contains(&self.parent, &scale(m, v))? {
                        cands.push(v.clone());
                    }
                }
                // keep Γ-minimal elements
                let mut gens = Vec::new();
                for v in &cands {
                    let mut minimal = true;
                    for u in &cands {
                        if u != v && self.parent.contains(&sub(v, u))? {
                            minimal = false;
                            break;
                        }
                    }
                    if minimal {
                        gens.push(v.clone());
                    }
                }
                if gens.is_empty() {
                    None
                } else {
                    Some(MonoidIdeal { generators: gens })
                }
            }
        };
        let elements: Vec<Vector> =
            self.elements.iter().filter(|v| self.contains(&scale(m, v))).cloned().collect();
        Ok(Self::from_elements(self.parent.clone(), ideal, self.weight.clone(), bound, elements))
    }

    pub fn to_spec(&self) -> MonoidSpec {
        MonoidSpec {
            rank: self.rank(),
            inequalities: self.parent.inequalities.clone(),
            generators: self.parent.generators.clone(),
            representation: Some(self.parent.representation),
            ideal: self.ideal.as_ref().map(|i| i.generators.clone()).unwrap_or_default(),
            weight: Some(self.weight.clone()),
            degree_bound: Some(self.degree_bound),
        }
    }
}

/// JSON description of a monoid and (optionally) its truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidSpec {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inequalities: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<Representation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideal: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<i64>,
}

impl MonoidSpec {
    pub fn monoid(&self) -> Result<AffineMonoid, MonoidError> {
        let rep = self.representation.unwrap_or(if self.inequalities.is_empty() {
            Representation::Generators
        } else {
            Representation::Inequalities
        });
        match rep {
            Representation::Inequalities => {
                let m = AffineMonoid::from_inequalities(self.rank, self.inequalities.clone())?;
                if self.generators.is_empty() {
                    Ok(m)
                } else {
                    m.with_generators(self.generators.clone())
                }
            }
            Representation::Generators => {
                let mut m = AffineMonoid::from_generators(self.rank, self.generators.clone())?;
                for w in &self.inequalities {
                    check_len(self.rank, w)?;
                }
                m.inequalities = self.inequalities.clone();
                Ok(m)
            }
        }
    }

    pub fn truncated(&self) -> Result<TruncatedMonoid, MonoidError> {
        let parent = self.monoid()?;
        let weight = self.weight.clone().ok_or_else(|| MonoidError::BadDescription("missing weight".into()))?;
        let bound = self.degree_bound.ok_or_else(|| MonoidError::BadDescription("missing degree_bound".into()))?;
        if bound < 0 {
            return Err(MonoidError::BadDescription("degree_bound must be non-negative".into()));
        }
        let ideal = if self.ideal.is_empty() { None } else { Some(MonoidIdeal::new(&parent, self.ideal.clone())?) };
        TruncatedMonoid::new(parent, ideal, weight, bound)
    }
}

/// Shared handle used by Witt vectors and graded algebras.
pub type Truncation = Arc<TruncatedMonoid>;
