use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::KGroupError;
use crate::ring::binomial;

use super::lpoly::{LPoly, MAX_RANK};
use super::rays::RaySet;
use super::wreath::orbit_patterns;

/// `N^power K_{q-shift}`; `power = 0` is `K`, `power = 1` is `NK`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Atom {
    pub power: u32,
    pub shift: u32,
}

/// A formal direct sum of atoms and ray-indexed families `⊕_{ρ⊂S} P(L) NK_q`.
///
/// Stored in canonical form: maps keyed by atom and by ray set, zero entries removed,
/// and abstract families over a finite ray set expanded into atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormalGroupExpr {
    atoms: BTreeMap<Atom, u64>,
    families: BTreeMap<RaySet, LPoly>,
}

fn binom(n: u32, r: u32) -> u64 {
    binomial(u64::from(n), u64::from(r)).try_into().expect("binomial fits in u64")
}

fn rank(n: usize) -> Result<u32, KGroupError> {
    if n as u32 > MAX_RANK {
        return Err(KGroupError::RankTooLarge { n, r: 0 });
    }
    Ok(n as u32)
}

fn positive(n: usize, what: &'static str) -> Result<u32, KGroupError> {
    if n == 0 {
        return Err(KGroupError::NonPositive(what));
    }
    rank(n)
}

impl FormalGroupExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn atom(power: u32, shift: u32, multiplicity: u64) -> Self {
        let mut e = Self::zero();
        e.add_atom(Atom { power, shift }, multiplicity);
        e
    }

    /// `⊕_{ρ⊂rays} inner(L) NK_q`.
    pub fn family(rays: RaySet, inner: LPoly) -> Self {
        let mut e = Self::zero();
        e.add_family(rays, inner);
        e
    }

    fn add_atom(&mut self, a: Atom, m: u64) {
        if m > 0 {
            *self.atoms.entry(a).or_default() += m;
        }
    }

    fn add_family(&mut self, rays: RaySet, inner: LPoly) {
        if inner.is_zero() {
            return;
        }
        if let Some(count) = rays.finite_count() {
            for (s, c) in inner.terms() {
                self.add_atom(Atom { power: 1, shift: s }, count * c);
            }
            return;
        }
        let slot = self.families.entry(rays).or_default();
        *slot = slot.add(&inner);
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty() && self.families.is_empty()
    }

    pub fn atoms(&self) -> &BTreeMap<Atom, u64> {
        &self.atoms
    }

    pub fn families(&self) -> &BTreeMap<RaySet, LPoly> {
        &self.families
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut e = self.clone();
        for (a, m) in &other.atoms {
            e.add_atom(*a, *m);
        }
        for (r, p) in &other.families {
            e.add_family(r.clone(), p.clone());
        }
        e
    }

    pub fn scale(&self, k: u64) -> Self {
        let mut e = Self::zero();
        for (a, m) in &self.atoms {
            e.add_atom(*a, m * k);
        }
        for (r, p) in &self.families {
            e.add_family(r.clone(), p.scale(k));
        }
        e
    }

    /// Applies a polynomial in `L` to every summand (`L^r X_q = X_{q-r}`).
    pub fn apply(&self, p: &LPoly) -> Self {
        let mut e = Self::zero();
        for (a, m) in &self.atoms {
            for (s, c) in p.terms() {
                e.add_atom(Atom { power: a.power, shift: a.shift + s }, m * c);
            }
        }
        for (r, q) in &self.families {
            e.add_family(r.clone(), q.mul(p));
        }
        e
    }

    /// `self - other` when `other` is a sub-sum of `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut e = self.clone();
        for (a, m) in &other.atoms {
            let slot = e.atoms.get_mut(a)?;
            *slot = slot.checked_sub(*m)?;
            if *slot == 0 {
                e.atoms.remove(a);
            }
        }
        for (r, p) in &other.families {
            let mine = e.families.get(r)?.clone();
            let mut rest = LPoly::zero();
            for (s, c) in mine.terms() {
                let left = c.checked_sub(p.coefficient(s))?;
                rest = rest.add(&LPoly::monomial(s, left));
            }
            if p.terms().any(|(s, _)| mine.coefficient(s) == 0) {
                return None;
            }
            if rest.is_zero() {
                e.families.remove(r);
            } else {
                e.families.insert(r.clone(), rest);
            }
        }
        Some(e)
    }

    /// Replaces every `N^iK_{q-s}` with `i >= 2` by `L^s` applied to `nk_power(i)`.
    pub fn substitute_nk_powers(&self) -> Result<Self, KGroupError> {
        let mut e = Self::zero();
        for (a, m) in &self.atoms {
            if a.power >= 2 {
                let sub = nk_power(a.power as usize)?.apply(&LPoly::monomial(a.shift, *m));
                e = e.add(&sub);
            } else {
                e.add_atom(*a, *m);
            }
        }
        for (r, p) in &self.families {
            e.add_family(r.clone(), p.clone());
        }
        Ok(e)
    }

    /// Folds each `⊕_{ρ⊂ℕ₊^m} Q(L)(1+L)^{m-1} NK_q` back into `Q(L) N^mK_q`.
    /// Families whose inner polynomial is not divisible are kept.
    pub fn rebundle(&self) -> Self {
        let mut e = Self::zero();
        for (a, m) in &self.atoms {
            e.add_atom(*a, *m);
        }
        for (r, p) in &self.families {
            let quotient = match r {
                RaySet::PositiveOrthant { m } => p.div_one_plus_l_pow(*m as u32 - 1).map(|q| (*m as u32, q)),
                _ => None,
            };
            match quotient {
                Some((m, q)) => {
                    for (s, c) in q.terms() {
                        e.add_atom(Atom { power: m, shift: s }, c);
                    }
                }
                None => e.add_family(r.clone(), p.clone()),
            }
        }
        e
    }

    /// Splits each `ℤⁿ` family by sign pattern into `2^r C(n,r)` copies of `ℕ₊^r` families.
    pub fn split_lattice(&self) -> Self {
        let mut e = Self::zero();
        for (a, m) in &self.atoms {
            e.add_atom(*a, *m);
        }
        for (r, p) in &self.families {
            match r {
                RaySet::Lattice { n } => {
                    let n = *n as u32;
                    for k in 1..=n {
                        e.add_family(RaySet::PositiveOrthant { m: k as usize }, p.scale((1u64 << k) * binom(n, k)));
                    }
                }
                _ => e.add_family(r.clone(), p.clone()),
            }
        }
        e
    }

    /// Like [`split_lattice`](Self::split_lattice), but with one embedded family per sign pattern
    /// (the components of the `W_n`-orbits of the `R_r`).
    pub fn split_lattice_embedded(&self) -> Result<Self, KGroupError> {
        let mut e = Self::zero();
        for (a, m) in &self.atoms {
            e.add_atom(*a, *m);
        }
        for (r, p) in &self.families {
            match r {
                RaySet::Lattice { n } => {
                    for k in 1..=*n {
                        for pattern in orbit_patterns(*n, k)? {
                            let coords: Vec<usize> = (0..*n).filter(|i| pattern[*i] != 0).collect();
                            let signs = coords.iter().map(|i| pattern[*i] as i8).collect();
                            e.add_family(RaySet::Embedded { n: *n, coords, signs }, p.clone());
                        }
                    }
                }
                _ => e.add_family(r.clone(), p.clone()),
            }
        }
        Ok(e)
    }

    /// Forgets the placement of embedded families, turning them into abstract `ℕ₊^m` families.
    pub fn forget_embedding(&self) -> Self {
        let mut e = Self::zero();
        for (a, m) in &self.atoms {
            e.add_atom(*a, *m);
        }
        for (r, p) in &self.families {
            let r = match r {
                RaySet::Embedded { coords, .. } => RaySet::PositiveOrthant { m: coords.len() },
                other => other.clone(),
            };
            e.add_family(r, p.clone());
        }
        e
    }

    /// Replaces every family by one single-ray family per ray of height at most `height`.
    pub fn instantiate_rays(&self, height: i64) -> Result<Self, KGroupError> {
        if height < 1 {
            return Err(KGroupError::NonPositive("height"));
        }
        let mut e = Self::zero();
        for (a, m) in &self.atoms {
            e.add_atom(*a, *m);
        }
        for (r, p) in &self.families {
            for v in r.instantiate(height) {
                e.add_family(RaySet::SingleRay { primitive: v }, p.clone());
            }
        }
        Ok(e)
    }

    /// Keeps only the single-ray families whose ray satisfies `keep`, and no atoms.
    pub fn filter_rays(&self, keep: impl Fn(&[i64]) -> bool) -> Self {
        let mut e = Self::zero();
        for (r, p) in &self.families {
            if let RaySet::SingleRay { primitive } = r {
                if keep(primitive) {
                    e.add_family(r.clone(), p.clone());
                }
            }
        }
        e
    }
}

/// `K_q(k[t₁,…,t_n]) ≅ K_q ⊕ ⊕_{i=1}^n C(n,i) N^iK_q`.
pub fn fundamental_theorem(n: usize) -> Result<FormalGroupExpr, KGroupError> {
    let n = rank(n)?;
    let mut e = FormalGroupExpr::atom(0, 0, 1);
    for i in 1..=n {
        e.add_atom(Atom { power: i, shift: 0 }, binom(n, i));
    }
    Ok(e)
}

/// `K_q(k[ℤⁿ]) ≅ (1+L)ⁿ K_q ⊕ ⊕_{ρ⊂ℤⁿ} (1+L)^{n-1} NK_q`.
pub fn davis_laurent(n: usize) -> Result<FormalGroupExpr, KGroupError> {
    let n32 = positive(n, "n")?;
    let k = FormalGroupExpr::atom(0, 0, 1).apply(&LPoly::one_plus_l_pow(n32)?);
    Ok(k.add(&FormalGroupExpr::family(RaySet::Lattice { n }, LPoly::one_plus_l_pow(n32 - 1)?)))
}

/// `N^nK_q ≅ ⊕_{ρ⊂ℕ₊ⁿ} (1+L)^{n-1} NK_q`.
pub fn nk_power(n: usize) -> Result<FormalGroupExpr, KGroupError> {
    let n32 = positive(n, "n")?;
    Ok(FormalGroupExpr::family(RaySet::PositiveOrthant { m: n }, LPoly::one_plus_l_pow(n32 - 1)?))
}

/// `K_q(k[x₁,…,x_n]) ≅ K_q ⊕ ⊕_{r=1}^n ⊕_{ρ⊂ℕ₊^r} C(n,r)(1+L)^{r-1} NK_q`.
pub fn polynomial_decomposition(n: usize) -> Result<FormalGroupExpr, KGroupError> {
    let n32 = positive(n, "n")?;
    let mut e = FormalGroupExpr::atom(0, 0, 1);
    for r in 1..=n32 {
        let inner = LPoly::one_plus_l_pow(r - 1)?.scale(binom(n32, r));
        e.add_family(RaySet::PositiveOrthant { m: r as usize }, inner);
    }
    Ok(e)
}

/// `⊕_{ρ⊂ℕⁿ} inner(L) NK_q`, written as a disjoint union over the coordinate supports of the rays.
pub fn orthant_family(n: usize, inner: &LPoly) -> Result<FormalGroupExpr, KGroupError> {
    let n32 = positive(n, "n")?;
    let mut e = FormalGroupExpr::zero();
    for r in 1..=n32 {
        e.add_family(RaySet::PositiveOrthant { m: r as usize }, inner.scale(binom(n32, r)));
    }
    Ok(e)
}

/// One summand of an expression, as written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum TermJson {
    Atom {
        power: u32,
        shift: u32,
        multiplicity: u64,
    },
    Family {
        rays: RaySet,
        inner: Vec<InnerTerm>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InnerTerm {
    pub shift: u32,
    pub multiplicity: u64,
}

impl FormalGroupExpr {
    pub fn to_terms(&self) -> Vec<TermJson> {
        let mut out: Vec<TermJson> = self
            .atoms
            .iter()
            .map(|(a, m)| TermJson::Atom { power: a.power, shift: a.shift, multiplicity: *m })
            .collect();
        out.extend(self.families.iter().map(|(r, p)| TermJson::Family {
            rays: r.clone(),
            inner: p.terms().map(|(shift, multiplicity)| InnerTerm { shift, multiplicity }).collect(),
        }));
        out
    }

    pub fn from_terms(terms: &[TermJson]) -> Self {
        let mut e = Self::zero();
        for t in terms {
            match t {
                TermJson::Atom { power, shift, multiplicity } => {
                    e.add_atom(Atom { power: *power, shift: *shift }, *multiplicity)
                }
                TermJson::Family { rays, inner } => {
                    let p = inner.iter().fold(LPoly::zero(), |acc, t| acc.add(&LPoly::monomial(t.shift, t.multiplicity)));
                    e.add_family(rays.clone(), p);
                }
            }
        }
        e
    }
}
