//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use gammawitt::{AffineMonoid, GradedAlgebra, Rationals, Ring};

pub fn quadric_cone() -> AffineMonoid {
    AffineMonoid::from_generators(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]]).unwrap()
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, x| g.gcd(x))
}

/// Ghost components of an integer Witt vector given as a map `γ -> a_γ`, computed from
/// `gh_η = Σ_{d | c(η)} d · a_{dv}^{c(η)/d}` with `η = c(η) v`.
pub fn ghost(support: &[Vec<i64>], coeffs: &BTreeMap<Vec<i64>, BigInt>) -> BTreeMap<Vec<i64>, BigInt> {
    let mut out = BTreeMap::new();
    for eta in support {
        let c = gcd_all(eta);
        let v: Vec<i64> = eta.iter().map(|x| x / c).collect();
        let mut acc = BigInt::zero();
        for d in 1..=c {
            if c % d != 0 {
                continue;
            }
            let g: Vec<i64> = v.iter().map(|x| x * d).collect();
            if let Some(a) = coeffs.get(&g) {
                acc += BigInt::from(d) * Pow::pow(a, (c / d) as u32);
            }
        }
        out.insert(eta.clone(), acc);
    }
    out
}

/// Witt coordinates from ghost components over `Q`, solving ray by ray in order of content.
pub fn from_ghost_q(support: &[Vec<i64>], ghost: &BTreeMap<Vec<i64>, BigRational>) -> BTreeMap<Vec<i64>, BigRational> {
    let mut sorted = support.to_vec();
    sorted.sort_by_key(|v| gcd_all(v));
    let mut a: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
    for eta in &sorted {
        let c = gcd_all(eta);
        let v: Vec<i64> = eta.iter().map(|x| x / c).collect();
        let mut rest = ghost[eta].clone();
        for d in 1..c {
            if c % d != 0 {
                continue;
            }
            let g: Vec<i64> = v.iter().map(|x| x * d).collect();
            let ad = &a[&g];
            rest -= BigRational::from_integer(BigInt::from(d)) * Pow::pow(ad, (c / d) as u32);
        }
        a.insert(eta.clone(), rest / BigRational::from_integer(BigInt::from(c)));
    }
    a
}

/// Rank of an integer matrix (given by columns as maps row -> value) modulo `p`, dense elimination.
pub fn rank_mod_p(rows: usize, columns: &[Vec<(usize, i64)>], p: u64) -> usize {
    let cols = columns.len();
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut m = vec![vec![0u64; cols]; rows];
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col {
            m[*i][j] = (m[*i][j] + v.rem_euclid(p as i64) as u64) % p;
        }
    }
    let inv = |a: u64| -> u64 {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = (r as u128 * b as u128 % p as u128) as u64;
            }
            b = (b as u128 * b as u128 % p as u128) as u64;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|r| m[*r][c] != 0) else { continue };
        m.swap(rank, piv);
        let iv = inv(m[rank][c]);
        for x in m[rank].iter_mut() {
            *x = (*x as u128 * iv as u128 % p as u128) as u64;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in c..cols {
                    let sub = (f as u128 * m[rank][k] as u128 % p as u128) as u64;
                    m[r][k] = (m[r][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Integer structure constants of a graded algebra over `Q` (all tested algebras are integral).
fn integer_table(alg: &GradedAlgebra<Rationals>) -> Vec<Vec<Vec<(usize, i64)>>> {
    let d = alg.dim();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    alg.product(i, j)
                        .iter()
                        .map(|(k, c)| {
                            assert!(c.is_integer());
                            (*k, i64::try_from(c.to_integer()).unwrap())
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `dim HH_n` per degree from the unnormalized bar complex `A^{⊗(n+1)}`, restricted to degrees of
/// weight at most `max_weight`; ranks are taken modulo two large primes and the larger is kept.
pub fn unnormalized_hh(alg: &GradedAlgebra<Rationals>, n_max: usize, max_weight: i64) -> BTreeMap<(usize, Vec<i64>), usize> {
    let table = integer_table(alg);
    let d = alg.dim();
    let weight = alg.weight().to_vec();
    let wt = |v: &[i64]| v.iter().zip(&weight).map(|(a, b)| a * b).sum::<i64>();
    let deg = |t: &[usize]| {
        let mut s = vec![0i64; weight.len()];
        for k in t {
            for (x, y) in s.iter_mut().zip(alg.degree(*k)) {
                *x += y;
            }
        }
        s
    };
    // tuples of each length, bucketed by degree
    let mut cells: Vec<BTreeMap<Vec<i64>, Vec<Vec<usize>>>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = (0..d).filter(|k| wt(alg.degree(*k)) <= max_weight).map(|k| vec![k]).collect();
    for _ in 0..=n_max + 1 {
        let mut buckets: BTreeMap<Vec<i64>, Vec<Vec<usize>>> = BTreeMap::new();
        for t in &layer {
            buckets.entry(deg(t)).or_default().push(t.clone());
        }
        cells.push(buckets);
        let mut next = Vec::new();
        for t in &layer {
            for k in 0..d {
                let mut s = t.clone();
                s.push(k);
                if wt(&deg(&s)) <= max_weight {
                    next.push(s);
                }
            }
        }
        layer = next;
    }
    let boundary = |n: usize, eta: &Vec<i64>| -> (usize, Vec<Vec<(usize, i64)>>) {
        let src = cells[n].get(eta).cloned().unwrap_or_default();
        let tgt = cells[n - 1].get(eta).cloned().unwrap_or_default();
        let index: HashMap<Vec<usize>, usize> = tgt.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let cols = src
            .iter()
            .map(|t| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for i in 0..n {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    for (k, c) in &table[t[i]][t[i + 1]] {
                        let mut s = t[..i].to_vec();
                        s.push(*k);
                        s.extend_from_slice(&t[i + 2..]);
                        *acc.entry(index[&s]).or_default() += sign * c;
                    }
                }
                let sign = if n % 2 == 0 { 1 } else { -1 };
                for (k, c) in &table[t[n]][t[0]] {
                    let mut s = vec![*k];
                    s.extend_from_slice(&t[1..n]);
                    *acc.entry(index[&s]).or_default() += sign * c;
                }
                acc.into_iter().filter(|(_, v)| *v != 0).collect()
            })
            .collect();
        (tgt.len(), cols)
    };
    let rank = |rows: usize, cols: &[Vec<(usize, i64)>]| {
        rank_mod_p(rows, cols, 1_000_000_007).max(rank_mod_p(rows, cols, 998_244_353))
    };
    let mut out = BTreeMap::new();
    let degrees: BTreeSet<Vec<i64>> = cells.iter().flat_map(|c| c.keys().cloned()).collect();
    for eta in degrees {
        for n in 0..=n_max {
            let dim_n = cells[n].get(&eta).map_or(0, Vec::len);
            let rank_n = if n == 0 {
                0
            } else {
                let (rows, cols) = boundary(n, &eta);
                rank(rows, &cols)
            };
            let (rows, cols) = boundary(n + 1, &eta);
            let rank_next = rank(rows, &cols);
            let h = dim_n - rank_n - rank_next;
            if h > 0 {
                out.insert((n, eta.clone()), h);
            }
        }
    }
    out
}

/// Signed permutation matrices of size `n`, as `(perm, signs)` with `x ↦ (signs[i] x[perm[i]])_i`.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, Vec<i64>)> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for k in 0..n {
                if !p.contains(&k) {
                    let mut q = p.clone();
                    q.push(k);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    let mut out = Vec::new();
    for p in perms {
        for mask in 0..(1u32 << n) {
            let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push((p.clone(), signs));
        }
    }
    out
}

/// Orbit size and stabilizer order of the sign pattern `(1,…,1,0,…,0)` (r ones).
pub fn orbit_by_matrices(n: usize, r: usize, signed: bool) -> (u64, u64) {
    let pattern: Vec<i64> = (0..n).map(|i| i64::from(i < r)).collect();
    let mut orbit = BTreeSet::new();
    let mut stab = 0;
    for (perm, signs) in signed_permutations(n) {
        if !signed && signs.iter().any(|s| *s < 0) {
            continue;
        }
        let image: Vec<i64> = (0..n).map(|i| signs[i] * pattern[perm[i]]).collect();
        if image == pattern {
            stab += 1;
        }
        orbit.insert(image);
    }
    (orbit.len() as u64, stab)
}

/// Coprime pairs in `[1, h]²` by brute force.
pub fn coprime_pairs(h: i64) -> usize {
    let mut n = 0;
    for a in 1..=h {
        for b in 1..=h {
            if a.gcd(&b) == 1 {
                n += 1;
            }
        }
    }
    n
}

/// `2 Σ_{k<=h} φ(k) − 1` with a sieve for Euler's totient.
pub fn totient_count(h: usize) -> usize {
    let mut phi: Vec<usize> = (0..=h).collect();
    for i in 2..=h {
        if phi[i] == i {
            for j in (i..=h).step_by(i) {
                phi[j] -= phi[j] / i;
            }
        }
    }
    2 * phi[1..].iter().sum::<usize>() - 1
}

pub fn q(n: i64) -> BigRational {
    Rationals.from_i64(n)
}

pub fn one() -> BigRational {
    BigRational::one()
}
