//! Universal integral polynomials for the classical big Witt ring on one ray.
//!
//! With ghost components `w_e(a) = Σ_{d | e} d a_d^{e/d}`, the sum, product,
//! negation and Frobenius coordinates are the unique integral polynomials
//! solving the triangular system `w_e(result) = op(w(a), w(b))`. They are
//! derived once per index and cached for the lifetime of the process.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::WittError;
use crate::ring::Ring;

/// Which operand a variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operand {
    A,
    B,
}

/// Variable `a_d` or `b_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub operand: Operand,
    pub index: u64,
}

impl Var {
    pub fn a(d: u64) -> Self {
        Var { operand: Operand::A, index: d }
    }
    pub fn b(d: u64) -> Self {
        Var { operand: Operand::B, index: d }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.operand {
            Operand::A => 'a',
            Operand::B => 'b',
        };
        write!(f, "{}_{}", c, self.index)
    }
}

/// Sorted `(variable, exponent)` list.
pub type Monomial = Vec<(Var, u32)>;

/// Polynomial with integer coefficients in the variables `a_d`, `b_d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

fn mono_mul(x: &Monomial, y: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => {
                out.push(x[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(y[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((x[i].0, x[i].1 + y[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    out
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = IntPoly::zero();
        p.add_term(vec![(v, 1)], BigInt::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[(Var, u32)]) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        let mut out = IntPoly::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(mono_mul(m1, m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        IntPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, mut e: u64) -> IntPoly {
        let mut acc = IntPoly::constant(BigInt::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division of every coefficient; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<IntPoly> {
        let mut out = IntPoly::zero();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.terms.insert(m.clone(), q);
        }
        Some(out)
    }

    /// Evaluate by a ring map sending integers to `ring` and each variable to `value(var)`.
    pub fn eval<R: Ring>(&self, ring: &R, value: impl Fn(Var) -> R::Elem) -> R::Elem {
        let mut powers: HashMap<(Var, u32), R::Elem> = HashMap::new();
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.from_integer(c);
            for (v, e) in m {
                if ring.is_zero(&t) {
                    break;
                }
                let p = powers.entry((*v, *e)).or_insert_with(|| ring.pow(&value(*v), *e as u64));
                t = ring.mul(&t, p);
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = m
                .iter()
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .join("*");
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

pub fn divisors(e: u64) -> Vec<u64> {
    (1..=e).filter(|d| e % d == 0).collect()
}

/// `w_e(x) = Σ_{d | e} d x_d^{e/d}` for the given operand.
pub fn ghost_polynomial(operand: Operand, e: u64) -> IntPoly {
    divisors(e).into_iter().fold(IntPoly::zero(), |acc, d| {
        acc.add(&IntPoly::var(Var { operand, index: d }).pow(e / d).scale(&BigInt::from(d)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Op {
    Add,
    Mul,
    Neg,
    Frobenius(u64),
}

type Cache = RwLock<HashMap<(Op, u64), Arc<IntPoly>>>;

static CACHE: Lazy<Cache> = Lazy::new(|| RwLock::new(HashMap::new()));

fn cached(op: Op, e: u64) -> Result<Arc<IntPoly>, WittError> {
    if let Some(p) = CACHE.read().get(&(op, e)) {
        return Ok(p.clone());
    }
    // Lower indices first; each is inserted once and then only read.
    let lower: Vec<(u64, Arc<IntPoly>)> = divisors(e)
        .into_iter()
        .filter(|d| *d < e)
        .map(|d| cached(op, d).map(|p| (d, p)))
        .collect::<Result<_, _>>()?;
    let target = match op {
        Op::Add => ghost_polynomial(Operand::A, e).add(&ghost_polynomial(Operand::B, e)),
        Op::Mul => ghost_polynomial(Operand::A, e).mul(&ghost_polynomial(Operand::B, e)),
        Op::Neg => ghost_polynomial(Operand::A, e).scale(&BigInt::from(-1)),
        Op::Frobenius(m) => ghost_polynomial(Operand::A, m * e),
    };
    let rest = lower
        .iter()
        .fold(target, |acc, (d, p)| acc.sub(&p.pow(e / d).scale(&BigInt::from(*d))));
    let poly = rest.div_exact(&BigInt::from(e)).ok_or(WittError::NonIntegral { index: e })?;
    let poly = Arc::new(poly);
    Ok(CACHE.write().entry((op, e)).or_insert(poly).clone())
}

/// Sum coordinate `s_e(a, b)`.
pub fn sum_polynomial(e: u64) -> Result<Arc<IntPoly>, WittError> {
    cached(Op::Add, e)
}

/// Product coordinate `m_e(a, b)`.
pub fn product_polynomial(e: u64) -> Result<Arc<IntPoly>, WittError> {
    cached(Op::Mul, e)
}

/// Additive inverse coordinate `n_e(a)`.
pub fn negation_polynomial(e: u64) -> Result<Arc<IntPoly>, WittError> {
    cached(Op::Neg, e)
}

/// Frobenius coordinate `f_{m,e}(a)`, a polynomial in `a_d` for `d | m e`.
pub fn frobenius_polynomial(m: u64, e: u64) -> Result<Arc<IntPoly>, WittError> {
    cached(Op::Frobenius(m), e)
}

/// The addition and multiplication families for a truncation set.
#[derive(Clone, Debug)]
pub struct UniversalPolynomials {
    pub truncation_set: Vec<u64>,
    pub sums: Vec<Arc<IntPoly>>,
    pub products: Vec<Arc<IntPoly>>,
}

pub fn universal_witt_polynomials(set: &[u64]) -> Result<UniversalPolynomials, WittError> {
    let mut s: Vec<u64> = set.to_vec();
    s.sort_unstable();
    s.dedup();
    for &e in &s {
        if e == 0 || divisors(e).iter().any(|d| s.binary_search(d).is_err()) {
            return Err(WittError::NotInTruncation(vec![e as i64]));
        }
    }
    let sums = s.iter().map(|&e| sum_polynomial(e)).collect::<Result<_, _>>()?;
    let products = s.iter().map(|&e| product_polynomial(e)).collect::<Result<_, _>>()?;
    Ok(UniversalPolynomials { truncation_set: s, sums, products })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(vs: &[(Var, u32)]) -> Monomial {
        vs.to_vec()
    }

    #[test]
    fn first_coordinates() {
        assert_eq!(sum_polynomial(1).unwrap().to_string(), "a_1 + b_1");
        assert_eq!(product_polynomial(1).unwrap().to_string(), "a_1*b_1");
        let s2 = sum_polynomial(2).unwrap();
        assert_eq!(s2.len(), 3);
        assert_eq!(s2.coefficient(&mono(&[(Var::a(2), 1)])), BigInt::one());
        assert_eq!(s2.coefficient(&mono(&[(Var::b(2), 1)])), BigInt::one());
        assert_eq!(s2.coefficient(&mono(&[(Var::a(1), 1), (Var::b(1), 1)])), BigInt::from(-1));
        let m2 = product_polynomial(2).unwrap();
        assert_eq!(m2.coefficient(&mono(&[(Var::a(1), 2), (Var::b(2), 1)])), BigInt::one());
        assert_eq!(m2.coefficient(&mono(&[(Var::a(2), 1), (Var::b(1), 2)])), BigInt::one());
        assert_eq!(m2.coefficient(&mono(&[(Var::a(2), 1), (Var::b(2), 1)])), BigInt::from(2));
        assert_eq!(m2.len(), 3);
    }

    #[test]
    fn third_sum_coordinate() {
        // s_3 = a_3 + b_3 - a_1^2 b_1 - a_1 b_1^2
        let s3 = sum_polynomial(3).unwrap();
        assert_eq!(s3.len(), 4);
        assert_eq!(s3.coefficient(&mono(&[(Var::a(1), 2), (Var::b(1), 1)])), BigInt::from(-1));
        assert_eq!(s3.coefficient(&mono(&[(Var::a(1), 1), (Var::b(1), 2)])), BigInt::from(-1));
    }

    #[test]
    fn negation_and_frobenius_low_degree() {
        // w_2(n) = -w_2(a): n_1 = -a_1, n_1^2 + 2 n_2 = -a_1^2 - 2 a_2  =>  n_2 = -a_2 - a_1^2
        let n2 = negation_polynomial(2).unwrap();
        assert_eq!(n2.coefficient(&mono(&[(Var::a(1), 2)])), BigInt::from(-1));
        assert_eq!(n2.coefficient(&mono(&[(Var::a(2), 1)])), BigInt::from(-1));
        // f_{2,1} = w_2(a) = a_1^2 + 2 a_2
        assert_eq!(frobenius_polynomial(2, 1).unwrap().to_string(), "a_1^2 + 2*a_2");
    }

    #[test]
    fn truncation_set_must_be_divisor_closed() {
        assert!(universal_witt_polynomials(&[1, 2, 4]).is_ok());
        assert!(universal_witt_polynomials(&[1, 4]).is_err());
    }
}
