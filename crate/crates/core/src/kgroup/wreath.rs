use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::KGroupError;

/// Largest `n` for which groups are enumerated element by element.
pub const MAX_ENUMERATED_RANK: usize = 6;

/// An element of `W_n = (Z/2) ≀ S_n`: `x ↦ (signs[i] · x[perm⁻¹(i)])_i`,
/// i.e. coordinate `j` is moved to `perm[j]` and then multiplied by `signs[perm[j]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Option<Self> {
        let n = perm.len();
        let distinct: BTreeSet<_> = perm.iter().collect();
        if signs.len() != n || distinct.len() != n || perm.iter().any(|p| *p >= n) || signs.iter().any(|s| s.abs() != 1)
        {
            return None;
        }
        Some(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for (j, v) in x.iter().enumerate() {
            let i = self.perm[j];
            out[i] = i64::from(self.signs[i]) * v;
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        let perm: Vec<usize> = (0..n).map(|j| self.perm[other.perm[j]]).collect();
        let mut signs = vec![1i8; n];
        for (j, &i) in perm.iter().enumerate() {
            // sign picked up by coordinate j: first from `other`, then from `self`
            signs[i] = other.signs[other.perm[j]] * self.signs[i];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for (j, &i) in self.perm.iter().enumerate() {
            perm[i] = j;
            signs[j] = self.signs[i];
        }
        SignedPermutation { perm, signs }
    }

    pub fn is_unsigned(&self) -> bool {
        self.signs.iter().all(|s| *s == 1)
    }

    /// All `2^n n!` elements of `W_n`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for perm in (0..n).permutations(n) {
            for mask in 0..(1u32 << n) {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPermutation { perm: perm.clone(), signs });
            }
        }
        out
    }

    /// All `n!` unsigned permutations.
    pub fn all_unsigned(n: usize) -> Vec<Self> {
        (0..n).permutations(n).map(|perm| SignedPermutation { perm, signs: vec![1; n] }).collect()
    }
}

/// Sign pattern of the ray set `R_r`: rays with positive first `r` coordinates and zeros after.
pub fn ray_set_pattern(n: usize, r: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(i < r)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitData {
    pub orbit_size: u64,
    pub stabilizer_order: u64,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn binom(n: usize, r: usize) -> u64 {
    crate::ring::binomial(n as u64, r as u64).try_into().unwrap_or(u64::MAX)
}

/// Largest `n` for which `n! 2ⁿ` fits in a `u64`.
pub const MAX_ORBIT_RANK: usize = 16;

fn check(n: usize, r: usize) -> Result<(), KGroupError> {
    if r > n || n > MAX_ORBIT_RANK {
        return Err(KGroupError::RankTooLarge { n, r });
    }
    Ok(())
}

/// Orbit and stabilizer of `R_r` under `W_n`; enumerated explicitly for `n <= 6`.
pub fn wreath_orbit(n: usize, r: usize) -> Result<OrbitData, KGroupError> {
    check(n, r)?;
    let closed = OrbitData {
        orbit_size: (1u64 << r) * binom(n, r),
        stabilizer_order: factorial(r) * (1u64 << (n - r)) * factorial(n - r),
    };
    if n <= MAX_ENUMERATED_RANK {
        let explicit = enumerate_orbit(&SignedPermutation::all(n), &ray_set_pattern(n, r));
        assert_eq!(explicit, closed, "orbit enumeration disagrees with the closed form");
    }
    Ok(closed)
}

/// Orbit and stabilizer of `R_r` under `S_n`; enumerated explicitly for `n <= 6`.
pub fn symmetric_orbit(n: usize, r: usize) -> Result<OrbitData, KGroupError> {
    check(n, r)?;
    let closed = OrbitData { orbit_size: binom(n, r), stabilizer_order: factorial(r) * factorial(n - r) };
    if n <= MAX_ENUMERATED_RANK {
        let explicit = enumerate_orbit(&SignedPermutation::all_unsigned(n), &ray_set_pattern(n, r));
        assert_eq!(explicit, closed, "orbit enumeration disagrees with the closed form");
    }
    Ok(closed)
}

/// Orbit size and stabilizer order of a sign pattern under a list of group elements.
pub fn enumerate_orbit(group: &[SignedPermutation], pattern: &[i64]) -> OrbitData {
    let mut orbit = BTreeSet::new();
    let mut stab = 0u64;
    for g in group {
        let image = g.apply(pattern);
        if image == pattern {
            stab += 1;
        }
        orbit.insert(image);
    }
    OrbitData { orbit_size: orbit.len() as u64, stabilizer_order: stab }
}

/// The distinct sign patterns in the `W_n`-orbit of `R_r`, i.e. the components of the orbit.
pub fn orbit_patterns(n: usize, r: usize) -> Result<Vec<Vec<i64>>, KGroupError> {
    check(n, r)?;
    if n > MAX_ENUMERATED_RANK {
        return Err(KGroupError::RankTooLarge { n, r });
    }
    let p = ray_set_pattern(n, r);
    let set: BTreeSet<Vec<i64>> = SignedPermutation::all(n).iter().map(|g| g.apply(&p)).collect();
    Ok(set.into_iter().collect())
}
