use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::KGroupError;

/// Largest exponent accepted for `(1+L)^n`, keeping binomials inside `u64`.
pub const MAX_RANK: u32 = 40;

/// A polynomial in the shift operator `L` with non-negative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LPoly(BTreeMap<u32, u64>);

impl LPoly {
    pub fn zero() -> Self {
        LPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(shift: u32, c: u64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(shift, c);
        }
        LPoly(m)
    }

    /// `(1+L)^n = Σ_r C(n,r) L^r`.
    pub fn one_plus_l_pow(n: u32) -> Result<Self, KGroupError> {
        if n > MAX_RANK {
            return Err(KGroupError::RankTooLarge { n: n as usize, r: 0 });
        }
        let mut m = BTreeMap::new();
        let mut c: u64 = 1;
        for r in 0..=n {
            m.insert(r, c);
            c = c * u64::from(n - r) / u64::from(r + 1);
        }
        Ok(LPoly(m))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.0.iter().map(|(s, c)| (*s, *c))
    }

    pub fn coefficient(&self, shift: u32) -> u64 {
        self.0.get(&shift).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (s, c) in &other.0 {
            *m.entry(*s).or_default() += c;
        }
        LPoly(m)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m: BTreeMap<u32, u64> = BTreeMap::new();
        for (s1, c1) in &self.0 {
            for (s2, c2) in &other.0 {
                *m.entry(s1 + s2).or_default() += c1 * c2;
            }
        }
        LPoly(m)
    }

    pub fn scale(&self, k: u64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LPoly(self.0.iter().map(|(s, c)| (*s, c * k)).collect())
    }

    /// Exact quotient by `(1+L)^n`, if it exists with non-negative coefficients.
    pub fn div_one_plus_l_pow(&self, n: u32) -> Option<Self> {
        let mut rem: BTreeMap<u32, i128> = self.0.iter().map(|(s, c)| (*s, *c as i128)).collect();
        let mut q = BTreeMap::new();
        let divisor = Self::one_plus_l_pow(n).ok()?;
        while let Some((&s, &c)) = rem.iter().next() {
            if c == 0 {
                rem.remove(&s);
                continue;
            }
            if c < 0 {
                return None;
            }
            q.insert(s, c as u64);
            for (r, b) in divisor.terms() {
                *rem.entry(s + r).or_default() -= c * b as i128;
            }
            rem.retain(|_, v| *v != 0);
        }
        Some(LPoly(q))
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(s, c)| match (s, c) {
                (0, c) => c.to_string(),
                (s, 1) if *s == 1 => "L".to_string(),
                (s, c) if *s == 1 => format!("{c}L"),
                (s, 1) => format!("L^{s}"),
                (s, c) => format!("{c}L^{s}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
