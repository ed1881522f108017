//! Exact coefficient rings.
//!
//! Every ring is a small value object (`Integers`, `Rationals`, `PrimeField`,
//! `Polynomials<R>`, `FiniteAlgebra<F>`) that knows how to do arithmetic on
//! its associated element type. Elements carry no reference to their ring.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::RingError;

pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Image of an integer under the unique ring map `Z -> self`.
    fn from_integer(&self, n: &BigInt) -> Self::Elem;

    /// Exact division by a nonzero integer, `None` when the quotient does not exist.
    fn div_integer(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem>;

    fn parse(&self, s: &str) -> Result<Self::Elem, RingError>;
    fn format(&self, a: &Self::Elem) -> String;

    /// Short human readable name, e.g. `Z`, `F_7`, `Q[x]`.
    fn name(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_integer(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn scale_integer(&self, n: &BigInt, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_integer(n), a)
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn div_integer(&self, a: &BigInt, n: &BigInt) -> Option<BigInt> {
        if n.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(n);
        r.is_zero().then_some(q)
    }
    fn parse(&self, s: &str) -> Result<BigInt, RingError> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| RingError::Parse { ring: self.name(), input: s.to_string() })
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        "Z".into()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn div_integer(&self, a: &BigRational, n: &BigInt) -> Option<BigRational> {
        (!n.is_zero()).then(|| a / BigRational::from_integer(n.clone()))
    }
    fn parse(&self, s: &str) -> Result<BigRational, RingError> {
        let err = || RingError::Parse { ring: self.name(), input: s.to_string() };
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| err())?)),
        }
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn name(&self) -> String {
        "Q".into()
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// The prime field `Z/p`, elements stored as canonical residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, RingError> {
        if p < 2 || p >= (1 << 32) || !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduction `Z -> Z/p`.
    pub fn reduce(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_integer(&self, n: &BigInt) -> u64 {
        self.reduce(n)
    }
    fn div_integer(&self, a: &u64, n: &BigInt) -> Option<u64> {
        let n = self.reduce(n);
        self.inv(&n).map(|ni| self.mul(a, &ni))
    }
    fn parse(&self, s: &str) -> Result<u64, RingError> {
        let n: BigInt = s
            .trim()
            .parse()
            .map_err(|_| RingError::Parse { ring: self.name(), input: s.to_string() })?;
        Ok(self.reduce(&n))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a % self.p == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        Some(self.pow(a, self.p - 2))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Univariate polynomials over `R`; elements are coefficient vectors with no
/// trailing zeros (the zero polynomial is the empty vector).
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomials<R: Ring> {
    base: R,
    var: String,
}

impl<R: Ring> Polynomials<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        Polynomials { base, var: var.into() }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn variable(&self) -> Vec<R::Elem> {
        vec![self.base.zero(), self.base.one()]
    }

    pub fn constant(&self, c: R::Elem) -> Vec<R::Elem> {
        self.trim(vec![c])
    }

    pub fn monomial(&self, c: R::Elem, deg: usize) -> Vec<R::Elem> {
        let mut v = vec![self.base.zero(); deg + 1];
        v[deg] = c;
        self.trim(v)
    }

    fn trim(&self, mut v: Vec<R::Elem>) -> Vec<R::Elem> {
        while v.last().map_or(false, |c| self.base.is_zero(c)) {
            v.pop();
        }
        v
    }

    /// Apply a coefficient ring map.
    pub fn map_coefficients<S: Ring>(
        &self,
        target: &Polynomials<S>,
        f: impl Fn(&R::Elem) -> S::Elem,
        p: &[R::Elem],
    ) -> Vec<S::Elem> {
        target.trim(p.iter().map(f).collect())
    }

    fn parse_term(&self, term: &str, input: &str) -> Result<(R::Elem, usize), RingError> {
        let err = || RingError::Parse { ring: self.name(), input: input.to_string() };
        let term = term.trim();
        let Some(pos) = term.find(self.var.as_str()) else {
            return Ok((self.base.parse(term)?, 0));
        };
        let (coef, rest) = term.split_at(pos);
        let rest = &rest[self.var.len()..];
        let deg = match rest.trim().strip_prefix('^') {
            Some(d) => d.trim().parse::<usize>().map_err(|_| err())?,
            None if rest.trim().is_empty() => 1,
            None => return Err(err()),
        };
        let coef = coef.trim().trim_end_matches('*').trim();
        let c = if coef.is_empty() { self.base.one() } else { self.base.parse(coef)? };
        Ok((c, deg))
    }
}

impl<R: Ring> Ring for Polynomials<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let z = self.base.zero();
        let v = (0..n)
            .map(|i| self.base.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.trim(v)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| self.base.neg(c)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                v[i + j] = self.base.add(&v[i + j], &self.base.mul(x, y));
            }
        }
        self.trim(v)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn from_integer(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_integer(n))
    }
    fn div_integer(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem> {
        a.iter().map(|c| self.base.div_integer(c, n)).collect()
    }
    fn parse(&self, s: &str) -> Result<Self::Elem, RingError> {
        // Sum of terms `c*x^k`, `c x^k`, `x^k`, `x`, `c`; signs split terms.
        let mut acc = self.zero();
        let mut term = String::new();
        let mut sign_neg = false;
        let flush = |term: &mut String, neg: bool, acc: &mut Self::Elem| -> Result<(), RingError> {
            if term.trim().is_empty() {
                return Ok(());
            }
            let (c, d) = self.parse_term(term, s)?;
            let c = if neg { self.base.neg(&c) } else { c };
            *acc = self.add(acc, &self.monomial(c, d));
            term.clear();
            Ok(())
        };
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            // A '-' right after '/' or '^' is part of the token, not a term separator.
            let separator = (ch == '+' || ch == '-') && !matches!(prev, Some('/') | Some('^'));
            if separator {
                if term.trim().is_empty() {
                    if ch == '-' {
                        sign_neg = !sign_neg;
                    }
                } else {
                    flush(&mut term, sign_neg, &mut acc)?;
                    sign_neg = ch == '-';
                }
            } else {
                term.push(ch);
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        flush(&mut term, sign_neg, &mut acc)?;
        Ok(acc)
    }
    fn format(&self, a: &Self::Elem) -> String {
        if a.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (d, c) in a.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let cs = self.base.format(c);
            let mono = match d {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, d),
            };
            parts.push(match (d, cs.as_str()) {
                (0, _) => cs,
                (_, "1") => mono,
                _ => format!("{}*{}", paren_if_compound(&cs), mono),
            });
        }
        parts.join(" + ")
    }
    fn name(&self) -> String {
        format!("{}[{}]", self.base.name(), self.var)
    }
}

fn paren_if_compound(s: &str) -> String {
    if s.contains(' ') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// A finite-dimensional commutative unital algebra over a field, given by
/// structure constants on a basis whose element 0 is the unit.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteAlgebra<F: Field> {
    field: F,
    labels: Vec<String>,
    /// `table[i][j]` lists `(k, c)` with `b_i * b_j = sum c b_k`.
    table: Vec<Vec<Vec<(usize, F::Elem)>>>,
}

impl<F: Field> FiniteAlgebra<F> {
    pub fn new(
        field: F,
        labels: Vec<String>,
        table: Vec<Vec<Vec<(usize, F::Elem)>>>,
    ) -> Result<Self, RingError> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(RingError::BadStructureConstants("table shape does not match basis".into()));
        }
        if table.iter().flatten().flatten().any(|(k, _)| *k >= n) {
            return Err(RingError::BadStructureConstants("basis index out of range".into()));
        }
        let alg = FiniteAlgebra { field, labels, table };
        alg.check_axioms()?;
        Ok(alg)
    }

    /// The ground field itself, as a one-dimensional algebra.
    pub fn ground(field: F) -> Self {
        let one = field.one();
        FiniteAlgebra { field, labels: vec!["1".into()], table: vec![vec![vec![(0, one)]]] }
    }

    /// `k[var]/(var^nilpotency)` with monomial basis `1, var, ..., var^(nilpotency-1)`.
    pub fn truncated_polynomial(field: F, var: &str, nilpotency: usize) -> Result<Self, RingError> {
        if nilpotency == 0 {
            return Err(RingError::BadStructureConstants("nilpotency must be positive".into()));
        }
        let labels = (0..nilpotency)
            .map(|d| match d {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            })
            .collect();
        let one = field.one();
        let table = (0..nilpotency)
            .map(|i| {
                (0..nilpotency)
                    .map(|j| if i + j < nilpotency { vec![(i + j, one.clone())] } else { vec![] })
                    .collect()
            })
            .collect();
        Ok(FiniteAlgebra { field, labels, table })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i][j]
    }

    pub fn basis_element(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn scalar(&self, c: F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[0] = c;
        v
    }

    /// Tensor product over the ground field; basis `(i, j)` is flattened to `i * other.dim() + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let f = &self.field;
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(match (a.as_str(), b.as_str()) {
                    ("1", _) => b.clone(),
                    (_, "1") => a.clone(),
                    _ => format!("{a}{b}"),
                });
            }
        }
        let mut table = vec![vec![Vec::new(); n * m]; n * m];
        for i in 0..n * m {
            for j in 0..n * m {
                let (i1, i2) = (i / m, i % m);
                let (j1, j2) = (j / m, j % m);
                let mut terms = Vec::new();
                for (k1, c1) in &self.table[i1][j1] {
                    for (k2, c2) in &other.table[i2][j2] {
                        terms.push((k1 * m + k2, f.mul(c1, c2)));
                    }
                }
                table[i][j] = terms;
            }
        }
        FiniteAlgebra { field: self.field.clone(), labels, table }
    }

    fn check_axioms(&self) -> Result<(), RingError> {
        let n = self.dim();
        for i in 0..n {
            let unit_left = self.mul(&self.basis_element(0), &self.basis_element(i));
            let unit_right = self.mul(&self.basis_element(i), &self.basis_element(0));
            if unit_left != self.basis_element(i) || unit_right != self.basis_element(i) {
                return Err(RingError::BadStructureConstants(format!("basis 0 is not a unit at {i}")));
            }
            for j in 0..n {
                let bi = self.basis_element(i);
                let bj = self.basis_element(j);
                if self.mul(&bi, &bj) != self.mul(&bj, &bi) {
                    return Err(RingError::BadStructureConstants(format!("not commutative at ({i},{j})")));
                }
                for k in 0..n {
                    let bk = self.basis_element(k);
                    if self.mul(&self.mul(&bi, &bj), &bk) != self.mul(&bi, &self.mul(&bj, &bk)) {
                        return Err(RingError::BadStructureConstants(format!(
                            "not associative at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> Ring for FiniteAlgebra<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.field.zero(); self.dim()]
    }
    fn one(&self) -> Self::Elem {
        self.basis_element(0)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.field.neg(x)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in &self.table[i][j] {
                    out[*k] = f.add(&out[*k], &f.mul(&xy, c));
                }
            }
        }
        out
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }
    fn from_integer(&self, n: &BigInt) -> Self::Elem {
        self.scalar(self.field.from_integer(n))
    }
    fn div_integer(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem> {
        a.iter().map(|x| self.field.div_integer(x, n)).collect()
    }
    fn parse(&self, s: &str) -> Result<Self::Elem, RingError> {
        // Linear combination of basis labels, e.g. `2 + 3*y` or `1/2*y`.
        let err = || RingError::Parse { ring: self.name(), input: s.to_string() };
        let mut out = self.zero();
        let normalized = s.replace('-', "+-");
        for term in normalized.split('+').map(str::trim).filter(|t| !t.is_empty()) {
            let (neg, term) = match term.strip_prefix('-') {
                Some(t) => (true, t.trim()),
                None => (false, term),
            };
            let (coef, label) = match term.rsplit_once('*') {
                Some((c, l)) => (c.trim(), l.trim()),
                None if self.labels.iter().any(|l| l == term) => ("1", term),
                None => (term, "1"),
            };
            let idx = self.labels.iter().position(|l| l == label).ok_or_else(err)?;
            let mut c = self.field.parse(coef)?;
            if neg {
                c = self.field.neg(&c);
            }
            out[idx] = self.field.add(&out[idx], &c);
        }
        Ok(out)
    }
    fn format(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| {
                let cs = self.field.format(c);
                match (i, cs.as_str()) {
                    (0, _) => cs,
                    (_, "1") => self.labels[i].clone(),
                    _ => format!("{}*{}", cs, self.labels[i]),
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
    fn name(&self) -> String {
        format!("{}<{}>", self.field.name(), self.labels.join(","))
    }
}

/// Gcd of a list of integers, 0 for the empty or all-zero list.
pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, x| g.gcd(x)).abs()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
