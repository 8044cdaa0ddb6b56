//! Multivariate polynomials over GF(q) in the variables X_0..X_{q-1}.
//!
//! X_k stands for the k-th iterated derivation of a fixed power series, so
//! the ring carries a derivation `∂` acting by X_k -> X_{k+1} with the
//! Fermat wrap-around X_{q-1} -> X_1 (the derivation has period q on
//! series coefficients, and constants die under one application).
//!
//! Terms are kept in descending grevlex order with the variable precedence
//! X_{q-1} > ... > X_1 > X_0, i.e. higher derivatives rank higher. Reduced
//! Gröbner bases and certificates depend on this choice; ideal membership
//! does not.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use crate::fq::{Fq, FqElem};
use crate::Error;

/// Exponent vector of a power product of X_0..X_{n-1}, with cached total
/// degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 18]>,
    deg: u32,
}

impl Monomial {
    pub fn unit(nvars: usize) -> Monomial {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    pub fn var(nvars: usize, k: usize) -> Monomial {
        assert!(k < nvars, "variable index {k} out of range");
        let mut m = Monomial::unit(nvars);
        m.exps[k] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Monomial {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, k: usize) -> u16 {
        self.exps[k]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_unit(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e += o;
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if divisible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps.clone();
        for (e, s) in exps.iter_mut().zip(&self.exps) {
            *e -= s;
        }
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e = (*e).max(*o);
        }
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e = (*e).min(*o);
        }
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Grevlex: compare by total degree; on ties the monomial with the smaller
/// exponent on the least variable (scanning X_0 upward) is the larger one.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {
                for (a, b) in self.exps.iter().zip(&other.exps) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in GF(q)[X_0..X_{q-1}]: nonzero coefficients attached to
/// distinct monomials, sorted descending, so equal polynomials have
/// identical term lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffPoly {
    q: u64,
    terms: Vec<(Monomial, FqElem)>,
}

impl DiffPoly {
    pub fn zero(q: u64) -> DiffPoly {
        DiffPoly { q, terms: Vec::new() }
    }

    pub fn constant(q: u64, c: FqElem) -> DiffPoly {
        let c = c % q;
        if c == 0 {
            return DiffPoly::zero(q);
        }
        DiffPoly {
            q,
            terms: vec![(Monomial::unit(q as usize), c)],
        }
    }

    /// The variable X_k.
    pub fn var(q: u64, k: usize) -> DiffPoly {
        assert!(k < q as usize, "X_{k} does not exist modulo {q}");
        DiffPoly {
            q,
            terms: vec![(Monomial::var(q as usize, k), 1)],
        }
    }

    /// Normalize an arbitrary term list: merge duplicates, drop zeros, sort.
    pub fn from_terms(q: u64, terms: Vec<(Monomial, FqElem)>) -> DiffPoly {
        let mut map: HashMap<Monomial, FqElem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            let e = map.entry(m).or_insert(0);
            *e = (*e + c % q) % q;
        }
        Self::from_map(q, map)
    }

    fn from_map(q: u64, map: HashMap<Monomial, FqElem>) -> DiffPoly {
        let mut terms: Vec<(Monomial, FqElem)> =
            map.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        DiffPoly { q, terms }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn nvars(&self) -> usize {
        self.q as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, FqElem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    /// Leading term in grevlex order, if any.
    pub fn leading(&self) -> Option<(&Monomial, FqElem)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn coeff(&self, m: &Monomial) -> FqElem {
        // Terms are sorted descending; binary search by reversed order.
        self.terms
            .binary_search_by(|(tm, _)| m.cmp(tm))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn add(&self, other: &DiffPoly) -> DiffPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &DiffPoly) -> DiffPoly {
        self.merge(other, true)
    }

    /// Merged addition/subtraction of two sorted term lists.
    fn merge(&self, other: &DiffPoly, negate: bool) -> DiffPoly {
        assert_eq!(self.q, other.q, "mixed moduli: {} vs {}", self.q, other.q);
        let q = self.q;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            let cb = if negate { (q - cb) % q } else { *cb };
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = (*ca + cb) % q;
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &other.terms[j..] {
            let c = if negate { (q - c) % q } else { *c };
            out.push((m.clone(), c));
        }
        DiffPoly { q, terms: out }
    }

    pub fn neg(&self) -> DiffPoly {
        let q = self.q;
        DiffPoly {
            q,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), q - c))
                .collect(),
        }
    }

    pub fn scale(&self, c: FqElem) -> DiffPoly {
        let c = c % self.q;
        if c == 0 {
            return DiffPoly::zero(self.q);
        }
        if c == 1 {
            return self.clone();
        }
        let fq = self.fq();
        DiffPoly {
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| (m.clone(), fq.mul(*cc, c)))
                .collect(),
        }
    }

    /// Multiply by the single term `c * m` (order is preserved).
    pub fn mul_term(&self, m: &Monomial, c: FqElem) -> DiffPoly {
        let c = c % self.q;
        if c == 0 {
            return DiffPoly::zero(self.q);
        }
        let fq = self.fq();
        DiffPoly {
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), fq.mul(*tc, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &DiffPoly) -> DiffPoly {
        assert_eq!(self.q, other.q, "mixed moduli: {} vs {}", self.q, other.q);
        let q = self.q;
        let mut map: HashMap<Monomial, FqElem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = (*ca as u128 * *cb as u128 % q as u128) as u64;
                let e = map.entry(ma.mul(mb)).or_insert(0);
                *e = (*e + c) % q;
            }
        }
        Self::from_map(q, map)
    }

    pub fn pow(&self, e: u32) -> DiffPoly {
        let mut acc = DiffPoly::constant(self.q, 1);
        let mut base = self.clone();
        let mut e = e;
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

    /// Apply the derivation: Leibniz rule over each term, with
    /// ∂X_k = X_{k+1} for k < q-1 and ∂X_{q-1} = X_1.
    pub fn derive(&self) -> DiffPoly {
        let q = self.q;
        let n = self.nvars();
        let mut map: HashMap<Monomial, FqElem> = HashMap::new();
        for (m, c) in &self.terms {
            for k in 0..n {
                let e = m.exponent(k);
                if e == 0 {
                    continue;
                }
                let coeff = (*c as u128 * e as u128 % q as u128) as u64;
                if coeff == 0 {
                    continue;
                }
                let target = if k + 1 < n { k + 1 } else { 1 };
                let mut exps: SmallVec<[u16; 18]> = m.exps.clone();
                exps[k] -= 1;
                exps[target] += 1;
                let nm = Monomial {
                    deg: m.deg,
                    exps,
                };
                let entry = map.entry(nm).or_insert(0);
                *entry = (*entry + coeff) % q;
            }
        }
        Self::from_map(q, map)
    }

    pub fn derive_n(&self, n: u32) -> DiffPoly {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derive();
        }
        p
    }

    /// Divide out the largest monomial dividing every term; returns the
    /// quotient and the stripped monomial.
    ///
    /// Panics on the zero polynomial.
    pub fn strip_common_factor(&self) -> (DiffPoly, Monomial) {
        assert!(!self.is_zero(), "cannot strip the zero polynomial");
        let mut common = self.terms[0].0.clone();
        for (m, _) in &self.terms[1..] {
            if common.is_unit() {
                break;
            }
            common = common.gcd(m);
        }
        if common.is_unit() {
            return (self.clone(), common);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (common.try_div(m).expect("gcd divides"), *c))
            .collect();
        (DiffPoly { q: self.q, terms }, common)
    }

    /// Scale so the leading coefficient is 1. No-op on zero.
    pub fn monic(&self) -> DiffPoly {
        match self.leading() {
            Some((_, c)) if c != 1 => self.scale(self.fq().inv(c)),
            _ => self.clone(),
        }
    }

    fn fq(&self) -> Fq {
        // The modulus was validated at construction time of the containers.
        Fq::new(self.q).expect("modulus already validated")
    }

    /// Parse the canonical rendering, e.g. `2*X0^2*X1 + 4*X2 + 3`.
    /// Accepts terms in any order and normalizes.
    pub fn parse(s: &str, q: u64) -> Result<DiffPoly, Error> {
        let nvars = q as usize;
        let mut terms = Vec::new();
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if body.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if body == "0" {
            return Ok(DiffPoly::zero(q));
        }
        for piece in body.split('+') {
            if piece.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let mut coeff: u64 = 1;
            let mut exps = vec![0u16; nvars];
            let mut saw_coeff = false;
            let mut saw_var = false;
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{piece}`")));
                }
                if let Some(rest) = factor.strip_prefix('X') {
                    let (var, exp) = match rest.split_once('^') {
                        Some((v, e)) => (v, e),
                        None => (rest, "1"),
                    };
                    let k: usize = var
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
                    if k >= nvars {
                        return Err(Error::Parse(format!(
                            "variable X{k} out of range for q = {q}"
                        )));
                    }
                    let e: u16 = exp
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent `{factor}`")))?;
                    exps[k] += e;
                    saw_var = true;
                } else {
                    if saw_coeff || saw_var {
                        return Err(Error::Parse(format!(
                            "coefficient must lead the term in `{piece}`"
                        )));
                    }
                    coeff = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{factor}`")))?;
                    saw_coeff = true;
                }
            }
            terms.push((Monomial::from_exps(&exps), coeff % q));
        }
        Ok(DiffPoly::from_terms(q, terms))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{k}")?;
            } else {
                write!(f, "X{k}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Canonical rendering: terms descending, coefficients in `[1, q)`,
/// unit coefficients elided except on the constant term.
impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Expansion of the j-th derivative of X_0^m, used to translate targets
/// written in one series into the variables of another.
pub fn power_derivative(q: u64, m: u32, j: u32) -> DiffPoly {
    assert!(j < q as u32, "derivative order {j} exceeds q - 1");
    DiffPoly::var(q, 0).pow(m).derive_n(j)
}

impl std::ops::Add for &DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        DiffPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        DiffPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        DiffPoly::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, q: u64) -> DiffPoly {
        DiffPoly::parse(s, q).unwrap()
    }

    #[test]
    fn grevlex_single_variables() {
        // Higher derivatives rank higher.
        let n = 5;
        for k in 0..n - 1 {
            assert!(Monomial::var(n, k + 1) > Monomial::var(n, k));
        }
    }

    #[test]
    fn grevlex_known_comparisons() {
        let m = |e: &[u16]| Monomial::from_exps(e);
        // degree dominates
        assert!(m(&[0, 0, 0, 0, 2]) > m(&[1, 0, 0, 0, 0]));
        // X1^2 > X0*X2 > X0*X1 at q = 5
        assert!(m(&[0, 2, 0, 0, 0]) > m(&[1, 0, 1, 0, 0]));
        assert!(m(&[1, 0, 1, 0, 0]) > m(&[1, 1, 0, 0, 0]));
        // X1^4 beats every degree-4 monomial containing X0
        assert!(m(&[0, 4, 0, 0, 0]) > m(&[1, 3, 0, 0, 0]));
        assert!(m(&[0, 4, 0, 0, 0]) > m(&[3, 0, 0, 1, 0]));
    }

    #[test]
    fn ring_ops() {
        let q = 5;
        let a = p("X1 + X0", q);
        let b = p("X1 + 4*X0", q); // X1 - X0
        assert_eq!(a.mul(&b), p("X1^2 + 4*X0^2", q));
        assert!(a.sub(&a).is_zero());
        assert!(a.add(&a.neg()).is_zero());
        assert_eq!(p("2*X0", q).scale(3), p("X0", q));
    }

    #[test]
    fn derive_product_rule_example() {
        let q = 5;
        let x0x1 = p("X0*X1", q);
        assert_eq!(x0x1.derive(), p("X1^2 + X0*X2", q));
    }

    #[test]
    fn derive_wraps_at_top_variable() {
        assert_eq!(DiffPoly::var(5, 4).derive(), DiffPoly::var(5, 1));
        assert_eq!(DiffPoly::var(7, 6).derive(), DiffPoly::var(7, 1));
    }

    #[test]
    fn derive_kills_qth_powers() {
        let q = 5;
        assert!(DiffPoly::var(q, 0).pow(5).derive().is_zero());
    }

    #[test]
    fn power_derivative_examples() {
        let q = 5;
        assert_eq!(power_derivative(q, 3, 0), p("X0^3", q));
        assert_eq!(power_derivative(q, 3, 1), p("3*X0^2*X1", q));
        // second derivative of X0^4: 12*X0^2*X1^2 + 4*X0^3*X2 = 2*.. + 4*..
        assert_eq!(
            power_derivative(q, 4, 2),
            p("2*X0^2*X1^2 + 4*X0^3*X2", q)
        );
    }

    #[test]
    fn strip_common_factor_examples() {
        let q = 5;
        let (quot, m) = p("X0^2*X1 + X0*X2", q).strip_common_factor();
        assert_eq!(quot, p("X0*X1 + X2", q));
        assert_eq!(m, Monomial::var(5, 0));

        let (quot, m) = p("X1^3", q).strip_common_factor();
        assert_eq!(quot, DiffPoly::constant(q, 1));
        assert_eq!(m, Monomial::from_exps(&[0, 3, 0, 0, 0]));

        let (quot, m) = p("X1^2 + 3*X0*X2", q).strip_common_factor();
        assert!(m.is_unit());
        assert_eq!(quot, p("X1^2 + 3*X0*X2", q));
    }

    #[test]
    fn display_roundtrip() {
        let q = 7;
        let poly = p("2*X0^2*X1 + 4*X2 + 6", q);
        let s = poly.to_string();
        assert_eq!(DiffPoly::parse(&s, q).unwrap(), poly);
        assert_eq!(DiffPoly::zero(q).to_string(), "0");
        assert_eq!(DiffPoly::parse("0", q).unwrap(), DiffPoly::zero(q));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(DiffPoly::parse("X9", 5).is_err());
        assert!(DiffPoly::parse("2**X1", 5).is_err());
        assert!(DiffPoly::parse("", 5).is_err());
        assert!(DiffPoly::parse("X1+", 5).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed moduli")]
    fn mixed_moduli_panics() {
        let _ = p("X1", 5).add(&p("X1", 7));
    }
}
