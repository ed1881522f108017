//! Big Witt vectors `W_T(k)` on a finite truncation `T` of an affine monoid.
//!
//! A Witt vector is a pointed function `T -> k`. The ring structure is the
//! product over rays of classical big Witt rings, computed coordinatewise from
//! the cached universal polynomials in [`universal`], so it is correct over
//! rings with torsion where the ghost map is not injective.

pub mod universal;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::WittError;
use crate::monoid::{MonoidSpec, Ray, RayData, Truncation, TruncatedMonoid};
use crate::ring::Ring;
use universal::{frobenius_polynomial, negation_polynomial, product_polynomial, sum_polynomial, Operand, Var};

#[derive(Clone, Debug, PartialEq)]
pub struct WittVector<R: Ring> {
    base: Truncation,
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// Element of `∏_T k` with componentwise operations.
#[derive(Clone, Debug, PartialEq)]
pub struct GhostVector<R: Ring> {
    base: Truncation,
    ring: R,
    components: Vec<R::Elem>,
}

/// A classical truncated big Witt vector on one ray: coordinates indexed by a truncation set.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalWitt<R: Ring> {
    pub truncation_set: Vec<u64>,
    pub coeffs: Vec<R::Elem>,
}

fn index_in(rd: &RayData, d: u64) -> usize {
    let pos = rd.multiples.binary_search(&d).expect("truncation sets are divisor closed");
    rd.members[pos]
}

fn check_index(m: i64) -> Result<u64, WittError> {
    if m <= 0 {
        Err(WittError::NonPositiveIndex(m))
    } else {
        Ok(m as u64)
    }
}

impl<R: Ring> WittVector<R> {
    pub fn zero(base: Truncation, ring: R) -> Self {
        let coeffs = vec![ring.zero(); base.len()];
        WittVector { base, ring, coeffs }
    }

    /// `δ_prim`, the multiplicative identity.
    pub fn one(base: Truncation, ring: R) -> Self {
        let coeffs = (0..base.len())
            .map(|i| if base.content_at(i) == 1 { ring.one() } else { ring.zero() })
            .collect();
        WittVector { base, ring, coeffs }
    }

    pub fn from_coeffs(base: Truncation, ring: R, coeffs: Vec<R::Elem>) -> Result<Self, WittError> {
        if coeffs.len() != base.len() {
            return Err(WittError::BaseMismatch);
        }
        Ok(WittVector { base, ring, coeffs })
    }

    /// Vector from `(γ, value)` pairs; unlisted members are zero.
    pub fn from_pairs(base: Truncation, ring: R, pairs: &[(Vec<i64>, R::Elem)]) -> Result<Self, WittError> {
        let mut v = Self::zero(base, ring);
        for (g, x) in pairs {
            let i = v.base.index_of(g).ok_or_else(|| WittError::NotInTruncation(g.clone()))?;
            v.coeffs[i] = v.ring.add(&v.coeffs[i], x);
        }
        Ok(v)
    }

    /// `r[γ]`: the function with value `r` at `γ` and 0 elsewhere.
    pub fn teichmuller(base: Truncation, ring: R, r: R::Elem, gamma: &[i64]) -> Result<Self, WittError> {
        let i = base.index_of(gamma).ok_or_else(|| WittError::NotInTruncation(gamma.to_vec()))?;
        let mut v = Self::zero(base, ring);
        v.coeffs[i] = r;
        Ok(v)
    }

    /// The ray idempotent `[v]`.
    pub fn ray_idempotent(base: Truncation, ring: R, ray: &Ray) -> Result<Self, WittError> {
        let one = ring.one();
        Self::teichmuller(base, ring, one, ray.primitive())
    }

    /// `V_m([r])` along `ray`, the Witt vector of the series `1 - r t^m`; zero when `m v` is truncated away.
    pub fn one_minus(base: Truncation, ring: R, r: R::Elem, m: i64, ray: &Ray) -> Result<Self, WittError> {
        let m = check_index(m)?;
        let mut v = Self::zero(base, ring);
        if let Some(i) = v.base.index_of(&ray.multiple(m)) {
            v.coeffs[i] = r;
        }
        Ok(v)
    }

    pub fn base(&self) -> &Truncation {
        &self.base
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn get(&self, gamma: &[i64]) -> Option<&R::Elem> {
        self.base.index_of(gamma).map(|i| &self.coeffs[i])
    }

    /// Nonzero coordinates in base order.
    pub fn support(&self) -> Vec<(&[i64], &R::Elem)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, x)| !self.ring.is_zero(x))
            .map(|(i, x)| (self.base.element(i), x))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|x| self.ring.is_zero(x))
    }

    fn same_shape(&self, other: &Self) -> Result<(), WittError> {
        if (Arc::ptr_eq(&self.base, &other.base) || self.base == other.base) && self.ring == other.ring {
            Ok(())
        } else {
            Err(WittError::BaseMismatch)
        }
    }

    pub fn ghost(&self) -> GhostVector<R> {
        let ring = &self.ring;
        let mut components = vec![ring.zero(); self.base.len()];
        for rd in self.base.rays() {
            for (&e, &idx) in rd.multiples.iter().zip(&rd.members) {
                let mut acc = ring.zero();
                for (&d, &j) in rd.multiples.iter().zip(&rd.members) {
                    if e % d == 0 {
                        let term = ring.pow(&self.coeffs[j], e / d);
                        acc = ring.add(&acc, &ring.scale_integer(&BigInt::from(d), &term));
                    }
                }
                components[idx] = acc;
            }
        }
        GhostVector { base: self.base.clone(), ring: ring.clone(), components }
    }

    /// Ghost component at `η` (the scalar by which the vector acts on degree `η`).
    pub fn ghost_at(&self, eta: &[i64]) -> Result<R::Elem, WittError> {
        if eta.iter().all(|x| *x == 0) {
            return Err(WittError::DegreeZero);
        }
        let i = self.base.index_of(eta).ok_or_else(|| WittError::NotInTruncation(eta.to_vec()))?;
        let (r, e) = self.base.position(i);
        let rd = &self.base.rays()[r];
        let ring = &self.ring;
        let mut acc = ring.zero();
        for (&d, &j) in rd.multiples.iter().zip(&rd.members) {
            if e % d == 0 {
                let term = ring.pow(&self.coeffs[j], e / d);
                acc = ring.add(&acc, &ring.scale_integer(&BigInt::from(d), &term));
            }
        }
        Ok(acc)
    }

    /// Apply a binary universal polynomial family ray by ray.
    fn binary_op(
        &self,
        other: &Self,
        family: fn(u64) -> Result<Arc<universal::IntPoly>, WittError>,
    ) -> Result<Self, WittError> {
        self.same_shape(other)?;
        let ring = &self.ring;
        let mut coeffs = vec![ring.zero(); self.base.len()];
        for rd in self.base.rays() {
            for (&e, &idx) in rd.multiples.iter().zip(&rd.members) {
                let poly = family(e)?;
                coeffs[idx] = poly.eval(ring, |v| {
                    let j = index_in(rd, v.index);
                    match v.operand {
                        Operand::A => self.coeffs[j].clone(),
                        Operand::B => other.coeffs[j].clone(),
                    }
                });
            }
        }
        Ok(WittVector { base: self.base.clone(), ring: ring.clone(), coeffs })
    }

    pub fn add(&self, other: &Self) -> Result<Self, WittError> {
        self.binary_op(other, sum_polynomial)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WittError> {
        self.binary_op(other, product_polynomial)
    }

    pub fn neg(&self) -> Result<Self, WittError> {
        let ring = &self.ring;
        let mut coeffs = vec![ring.zero(); self.base.len()];
        for rd in self.base.rays() {
            for (&e, &idx) in rd.multiples.iter().zip(&rd.members) {
                coeffs[idx] = negation_polynomial(e)?.eval(ring, |v| self.coeffs[index_in(rd, v.index)].clone());
            }
        }
        Ok(WittVector { base: self.base.clone(), ring: ring.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, WittError> {
        self.add(&other.neg()?)
    }

    /// `n · x` for an integer `n` (repeated Witt addition).
    pub fn scale_integer(&self, n: i64) -> Result<Self, WittError> {
        let mut acc = Self::zero(self.base.clone(), self.ring.clone());
        let mut base = if n < 0 { self.neg()? } else { self.clone() };
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.add(&base)?;
            }
        }
        Ok(acc)
    }

    /// Verschiebung `V_m` on the same truncation: the coordinate at `γ` moves to `mγ`,
    /// coordinates pushed out of the truncation are dropped.
    pub fn verschiebung(&self, m: i64) -> Result<Self, WittError> {
        self.verschiebung_onto(m, self.base.clone())
    }

    /// `V_m` into `target`; every `γ` with `mγ ∈ target` must lie in this vector's base.
    pub fn verschiebung_onto(&self, m: i64, target: Truncation) -> Result<Self, WittError> {
        let m = check_index(m)?;
        let mut coeffs = vec![self.ring.zero(); target.len()];
        for (i, gamma) in target.enumerate().iter().enumerate() {
            if gamma.iter().all(|x| x % m as i64 == 0) {
                let src: Vec<i64> = gamma.iter().map(|x| x / m as i64).collect();
                let j = self.base.index_of(&src).ok_or_else(|| WittError::NotInTruncation(src.clone()))?;
                coeffs[i] = self.coeffs[j].clone();
            }
        }
        Ok(WittVector { base: target, ring: self.ring.clone(), coeffs })
    }

    /// Frobenius `F_m`, landing on the truncation `{γ : mγ ∈ T}`.
    pub fn frobenius(&self, m: i64) -> Result<Self, WittError> {
        let mu = check_index(m)?;
        let target: Truncation = Arc::new(self.base.divided(mu)?);
        let ring = &self.ring;
        let mut coeffs = vec![ring.zero(); target.len()];
        for rd in target.rays() {
            let src = self
                .base
                .rays()
                .iter()
                .find(|s| s.ray == rd.ray)
                .expect("a ray of T/m is a ray of T");
            for (&e, &idx) in rd.multiples.iter().zip(&rd.members) {
                let poly = frobenius_polynomial(mu, e)?;
                coeffs[idx] = poly.eval(ring, |v: Var| self.coeffs[index_in(src, v.index)].clone());
            }
        }
        Ok(WittVector { base: target, ring: ring.clone(), coeffs })
    }

    /// Restriction `W_T(k) -> W_S(k)` to a sub-truncation `S ⊆ T`.
    pub fn restrict(&self, target: Truncation) -> Result<Self, WittError> {
        let coeffs = target
            .enumerate()
            .iter()
            .map(|g| {
                self.base
                    .index_of(g)
                    .map(|j| self.coeffs[j].clone())
                    .ok_or_else(|| WittError::NotInTruncation(g.clone()))
            })
            .collect::<Result<_, _>>()?;
        Ok(WittVector { base: target, ring: self.ring.clone(), coeffs })
    }

    /// Apply a ring homomorphism coordinatewise (functoriality in `k`).
    pub fn map_ring<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> WittVector<S> {
        WittVector { base: self.base.clone(), ring: target, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn ray_decompose(&self) -> BTreeMap<Ray, ClassicalWitt<R>> {
        self.base
            .rays()
            .iter()
            .map(|rd| {
                let coeffs = rd.members.iter().map(|&j| self.coeffs[j].clone()).collect();
                (rd.ray.clone(), ClassicalWitt { truncation_set: rd.multiples.clone(), coeffs })
            })
            .collect()
    }

    pub fn ray_assemble(
        base: Truncation,
        ring: R,
        parts: &BTreeMap<Ray, ClassicalWitt<R>>,
    ) -> Result<Self, WittError> {
        let mut v = Self::zero(base, ring);
        for (ray, part) in parts {
            let rd = v
                .base
                .rays()
                .iter()
                .find(|rd| &rd.ray == ray)
                .ok_or_else(|| WittError::NotInTruncation(ray.primitive().to_vec()))?;
            if rd.multiples != part.truncation_set || part.coeffs.len() != rd.members.len() {
                return Err(WittError::BaseMismatch);
            }
            for (&j, x) in rd.members.iter().zip(&part.coeffs) {
                v.coeffs[j] = x.clone();
            }
        }
        Ok(v)
    }

    /// `F_m [r] V_m`-style composite: multiplication by `V_m([r])` along `ray`.
    pub fn act_one_minus(&self, r: &R::Elem, m: i64, ray: &Ray) -> Result<Self, WittError> {
        let w = Self::one_minus(self.base.clone(), self.ring.clone(), r.clone(), m, ray)?;
        w.mul(self)
    }

    pub fn to_json(&self) -> WittJson {
        WittJson {
            monoid: self.base.to_spec(),
            ring: None,
            coeffs: self
                .support()
                .into_iter()
                .map(|(g, x)| CoeffJson { gamma: g.to_vec(), value: self.ring.format(x) })
                .collect(),
        }
    }

    pub fn from_json(json: &WittJson, ring: R) -> Result<Self, WittError> {
        let base = Arc::new(json.monoid.truncated()?);
        let pairs = json
            .coeffs
            .iter()
            .map(|c| Ok((c.gamma.clone(), ring.parse(&c.value)?)))
            .collect::<Result<Vec<_>, WittError>>()?;
        Self::from_pairs(base, ring, &pairs)
    }
}

impl<R: Ring> GhostVector<R> {
    pub fn new(base: Truncation, ring: R, components: Vec<R::Elem>) -> Result<Self, WittError> {
        if components.len() != base.len() {
            return Err(WittError::BaseMismatch);
        }
        Ok(GhostVector { base, ring, components })
    }

    pub fn constant(base: Truncation, ring: R, c: R::Elem) -> Self {
        let components = vec![c; base.len()];
        GhostVector { base, ring, components }
    }

    pub fn components(&self) -> &[R::Elem] {
        &self.components
    }

    pub fn base(&self) -> &Truncation {
        &self.base
    }

    pub fn get(&self, eta: &[i64]) -> Option<&R::Elem> {
        self.base.index_of(eta).map(|i| &self.components[i])
    }

    fn zip(&self, other: &Self, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Result<Self, WittError> {
        if self.base != other.base || self.ring != other.ring {
            return Err(WittError::BaseMismatch);
        }
        let components = self.components.iter().zip(&other.components).map(|(a, b)| f(a, b)).collect();
        Ok(GhostVector { base: self.base.clone(), ring: self.ring.clone(), components })
    }

    pub fn add(&self, other: &Self) -> Result<Self, WittError> {
        self.zip(other, |a, b| self.ring.add(a, b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WittError> {
        self.zip(other, |a, b| self.ring.mul(a, b))
    }

    /// Inverse of the ghost map, solving the triangular system ray by ray.
    pub fn from_ghost(&self) -> Result<WittVector<R>, WittError> {
        let ring = &self.ring;
        let mut coeffs = vec![ring.zero(); self.base.len()];
        for rd in self.base.rays() {
            for (&e, &idx) in rd.multiples.iter().zip(&rd.members) {
                let mut rest = self.components[idx].clone();
                for (&d, &j) in rd.multiples.iter().zip(&rd.members) {
                    if d < e && e % d == 0 {
                        let term = ring.scale_integer(&BigInt::from(d), &ring.pow(&coeffs[j], e / d));
                        rest = ring.sub(&rest, &term);
                    }
                }
                coeffs[idx] = ring.div_integer(&rest, &BigInt::from(e)).ok_or_else(|| WittError::NonExactDivision {
                    eta: self.base.element(idx).to_vec(),
                    divisor: e,
                })?;
            }
        }
        Ok(WittVector { base: self.base.clone(), ring: ring.clone(), coeffs })
    }
}

/// A `Γ`-graded module on which `∏_T k`, hence `W_T(k)`, acts degreewise.
pub trait GradedModule<R: Ring> {
    type Element;
    /// Multiply a homogeneous element by a scalar of the degree-0 ring.
    fn scale(&self, r: &R::Elem, x: &Self::Element) -> Self::Element;
}

/// `ω * x = gh(ω)_η · x` for `x` homogeneous of degree `η ≠ 0`.
pub fn act_on_graded<R: Ring, M: GradedModule<R>>(
    omega: &WittVector<R>,
    module: &M,
    eta: &[i64],
    x: &M::Element,
) -> Result<M::Element, WittError> {
    let g = omega.ghost_at(eta)?;
    Ok(module.scale(&g, x))
}

/// Scalar by which `r[γ]` acts on degree `η`: `c(γ) r^e` if `η = eγ`, else 0.
pub fn teichmuller_scalar<R: Ring>(ring: &R, base: &TruncatedMonoid, r: &R::Elem, gamma: &[i64], eta: &[i64]) -> Result<R::Elem, WittError> {
    if eta.iter().all(|x| *x == 0) {
        return Err(WittError::DegreeZero);
    }
    let gi = base.index_of(gamma).ok_or_else(|| WittError::NotInTruncation(gamma.to_vec()))?;
    let c = base.content_at(gi);
    let Some(e) = exact_multiple(gamma, eta) else { return Ok(ring.zero()) };
    Ok(ring.scale_integer(&BigInt::from(c), &ring.pow(r, e)))
}

/// `e >= 1` with `η = eγ`, if any.
pub fn exact_multiple(gamma: &[i64], eta: &[i64]) -> Option<u64> {
    let (i, g) = gamma.iter().enumerate().find(|(_, x)| **x != 0)?;
    if eta[i] % g != 0 {
        return None;
    }
    let e = eta[i] / g;
    (e >= 1 && gamma.iter().zip(eta).all(|(x, y)| x * e == *y)).then_some(e as u64)
}

/// Convert an integer Witt vector to `Z/p` (or any ring) through `Z -> k`.
pub fn reduce_integers<S: Ring>(v: &WittVector<crate::ring::Integers>, target: S) -> WittVector<S> {
    let t = target.clone();
    v.map_ring(target, move |x| t.from_integer(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffJson {
    pub gamma: Vec<i64>,
    pub value: String,
}

/// `{"monoid": ..., "ring": ..., "coeffs": [{"gamma": [...], "value": "..."}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WittJson {
    pub monoid: MonoidSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    #[serde(default)]
    pub coeffs: Vec<CoeffJson>,
}

/// `{"kind": "Z" | "Q" | "Fp" | "poly", "p": ..., "base": ..., "var": ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<RingSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub var: Option<String>,
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec { kind: "Z".into(), p: None, base: None, var: None }
    }
}
