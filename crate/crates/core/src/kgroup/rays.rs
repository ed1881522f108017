use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::gcd_slice;

/// A set of rays indexing a family of summands.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", deny_unknown_fields)]
pub enum RaySet {
    /// All rays of `Zⁿ`.
    Lattice { n: usize },
    /// Rays of `ℕ₊^m` in an unspecified coordinate subset.
    PositiveOrthant { m: usize },
    /// Rays of `ℕ₊^{|coords|}` placed on the given coordinates of `Zⁿ`, with the given signs.
    Embedded { n: usize, coords: Vec<usize>, signs: Vec<i8> },
    /// One named ray.
    SingleRay { primitive: Vec<i64> },
}

impl RaySet {
    /// Number of rays when it is finite and the descriptor is abstract.
    pub fn finite_count(&self) -> Option<u64> {
        match self {
            RaySet::Lattice { n: 1 } => Some(2),
            RaySet::PositiveOrthant { m: 1 } => Some(1),
            _ => None,
        }
    }

    /// Rays whose primitive vector has all coordinates of absolute value at most `height`.
    pub fn instantiate(&self, height: i64) -> Vec<Vec<i64>> {
        match self {
            RaySet::PositiveOrthant { m } => positive_orthant_rays(*m, height),
            RaySet::Lattice { n } => lattice_rays(*n, height),
            RaySet::Embedded { n, coords, signs } => positive_orthant_rays(coords.len(), height)
                .into_iter()
                .map(|v| {
                    let mut out = vec![0; *n];
                    for ((c, s), x) in coords.iter().zip(signs).zip(v) {
                        out[*c] = i64::from(*s) * x;
                    }
                    out
                })
                .collect(),
            RaySet::SingleRay { primitive } => {
                if primitive.iter().all(|x| x.abs() <= height) {
                    vec![primitive.clone()]
                } else {
                    Vec::new()
                }
            }
        }
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for RaySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RaySet::Lattice { n } => write!(f, "ℤ{}", superscript(*n)),
            RaySet::PositiveOrthant { m } => write!(f, "ℕ₊{}", superscript(*m)),
            RaySet::Embedded { n, coords, signs } => {
                let parts: Vec<String> = (0..*n)
                    .map(|i| match coords.iter().position(|c| *c == i) {
                        Some(k) if signs[k] < 0 => "−ℕ₊".to_string(),
                        Some(_) => "ℕ₊".to_string(),
                        None => "0".to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join("×"))
            }
            RaySet::SingleRay { primitive } => {
                let parts: Vec<String> = primitive.iter().map(i64::to_string).collect();
                write!(f, "ℕ({})", parts.join(","))
            }
        }
    }
}

/// Primitive vectors of `ℕ₊^m` with every coordinate in `1..=height`,
/// ordered by maximal coordinate, then coordinate sum, then lexicographically.
pub fn positive_orthant_rays(m: usize, height: i64) -> Vec<Vec<i64>> {
    let mut out = enumerate_box(m, height);
    out.sort_by_key(|v| (v.iter().copied().max(), v.iter().sum::<i64>(), v.clone()));
    out
}

fn enumerate_box(m: usize, height: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if m == 0 || height < 1 {
        return out;
    }
    let mut v = vec![1i64; m];
    loop {
        if gcd_slice(&v) == 1 {
            out.push(v.clone());
        }
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < height {
                v[i] += 1;
                for x in &mut v[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// Rays of `Zⁿ` up to `height`, as the sign orbits of rays of coordinate-subset positive orthants.
pub fn lattice_rays(n: usize, height: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let coords: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let base = positive_orthant_rays(coords.len(), height);
        for signs in 0u32..(1 << coords.len()) {
            for v in &base {
                let mut w = vec![0; n];
                for (k, c) in coords.iter().enumerate() {
                    w[*c] = if signs >> k & 1 == 1 { -v[k] } else { v[k] };
                }
                out.push(w);
            }
        }
    }
    out.sort();
    out
}
