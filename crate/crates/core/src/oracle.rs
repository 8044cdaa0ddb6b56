//! Ground-truth integer sequences modulo q and their convolutions.
//!
//! This is the independent numerical layer: partition numbers via the
//! pentagonal recurrence, divisor sums via sieves, plain and weighted
//! convolutions, and the battery of divisor-function identity checks in
//! [`verify_section5`]. Every algebraic proof produced elsewhere in the
//! crate is cross-checked against these sequences.
//!
//! All sequence arithmetic stays in GF(q); partition numbers overflow
//! machine words near n = 400 otherwise. The one exception is the exact
//! integer identity checked by [`verify_section5`] item (c), which uses
//! 128-bit integers.

use std::fmt;

use crate::fq::{Fq, FqElem};
use crate::Error;

/// A truncated integer sequence mod q: `coeffs[n]` is the coefficient of
/// X^n in the corresponding generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqModQ {
    q: u64,
    coeffs: Vec<FqElem>,
}

/// Which divisors `sigma` sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaVariant {
    All,
    Odd,
    Even,
    /// Sum of cubes of all divisors.
    Cubes,
}

/// Outcome of scanning an arithmetic progression for nonzero entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceCheck {
    Holds,
    /// Smallest violating index and the nonzero residue found there.
    Counterexample { index: usize, value: u64 },
}

impl CongruenceCheck {
    pub fn holds(&self) -> bool {
        matches!(self, CongruenceCheck::Holds)
    }
}

impl SeqModQ {
    pub fn from_coeffs(q: u64, coeffs: Vec<u64>) -> SeqModQ {
        assert!(!coeffs.is_empty(), "sequence length must be at least 1");
        let coeffs = coeffs.into_iter().map(|c| c % q).collect();
        SeqModQ { q, coeffs }
    }

    /// The convolution identity (1, 0, 0, ...).
    pub fn delta(q: u64, len: usize) -> SeqModQ {
        let mut coeffs = vec![0; len.max(1)];
        coeffs[0] = 1;
        SeqModQ { q, coeffs }
    }

    /// Partition numbers p(n) mod q via the pentagonal-number recurrence.
    pub fn partition(q: u64, len: usize) -> SeqModQ {
        assert!(len >= 1);
        let mut p = vec![0u64; len];
        p[0] = 1;
        for i in 1..len {
            let mut s: i64 = 0;
            let mut k: usize = 1;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let sign: i64 = if k % 2 == 1 { 1 } else { -1 };
                s += sign * p[i - g1] as i64;
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    s += sign * p[i - g2] as i64;
                }
                k += 1;
            }
            p[i] = s.rem_euclid(q as i64) as u64;
        }
        SeqModQ { q, coeffs: p }
    }

    /// Euler's pentagonal series E(X) = sum (-1)^n X^{n(3n+1)/2} mod q.
    pub fn euler(q: u64, len: usize) -> SeqModQ {
        assert!(len >= 1);
        let mut e = vec![0u64; len];
        let mut n: i64 = 0;
        loop {
            let idx = n * (3 * n + 1) / 2;
            let idx_neg = n * (3 * n - 1) / 2;
            if idx as usize >= len && idx_neg as usize >= len && n > 0 {
                break;
            }
            let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
            for k in [idx, idx_neg] {
                if (k as usize) < len {
                    e[k as usize] =
                        (e[k as usize] as i64 + sign).rem_euclid(q as i64) as u64;
                    if n == 0 {
                        break; // both formulas give index 0
                    }
                }
            }
            n += 1;
        }
        SeqModQ { q, coeffs: e }
    }

    /// Jacobi's series J(X) = sum (-1)^n (2n+1) X^{n(n+1)/2} mod q.
    pub fn jacobi(q: u64, len: usize) -> SeqModQ {
        assert!(len >= 1);
        let mut j = vec![0u64; len];
        let mut n: i64 = 0;
        loop {
            let idx = (n * (n + 1) / 2) as usize;
            if idx >= len {
                break;
            }
            let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
            j[idx] = (j[idx] as i64 + sign * (2 * n + 1)).rem_euclid(q as i64) as u64;
            n += 1;
        }
        SeqModQ { q, coeffs: j }
    }

    /// Divisor sums mod q via a sieve; `coeffs[0] = 0` by convention.
    pub fn sigma(q: u64, len: usize, variant: SigmaVariant) -> SeqModQ {
        assert!(len >= 1);
        let mut s = vec![0u64; len];
        for d in 1..len {
            let val = match variant {
                SigmaVariant::All => d as u64 % q,
                SigmaVariant::Odd => {
                    if d % 2 == 1 {
                        d as u64 % q
                    } else {
                        continue;
                    }
                }
                SigmaVariant::Even => {
                    if d % 2 == 0 {
                        d as u64 % q
                    } else {
                        continue;
                    }
                }
                SigmaVariant::Cubes => {
                    let dm = d as u64 % q;
                    dm * dm % q * dm % q
                }
            };
            if val == 0 {
                continue;
            }
            let mut m = d;
            while m < len {
                s[m] = (s[m] + val) % q;
                m += d;
            }
        }
        SeqModQ { q, coeffs: s }
    }

    /// Convolution inverse of the shifted divisor sequence sigma(n+1),
    /// by forward substitution (sigma(1) = 1 is invertible).
    pub fn sigma_inv(q: u64, len: usize) -> SeqModQ {
        assert!(len >= 1);
        let fq = Fq::new(q).expect("validated modulus");
        let sig = SeqModQ::sigma(q, len + 1, SigmaVariant::All);
        let mut inv = vec![0u64; len];
        inv[0] = 1;
        for n in 1..len {
            let mut acc: u64 = 0;
            for k in 1..=n {
                acc += sig.coeffs[k + 1] * inv[n - k];
            }
            inv[n] = fq.neg(acc % q);
        }
        SeqModQ { q, coeffs: inv }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty() // never true: len >= 1 is an invariant
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn get(&self, n: usize) -> u64 {
        self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn truncate(&self, len: usize) -> SeqModQ {
        assert!(len >= 1 && len <= self.coeffs.len());
        SeqModQ {
            q: self.q,
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    pub fn add(&self, other: &SeqModQ) -> SeqModQ {
        assert_eq!(self.q, other.q, "mixed moduli");
        let n = self.len().min(other.len());
        let coeffs = (0..n)
            .map(|i| (self.coeffs[i] + other.coeffs[i]) % self.q)
            .collect();
        SeqModQ { q: self.q, coeffs }
    }

    pub fn scale(&self, c: u64) -> SeqModQ {
        let c = c % self.q;
        SeqModQ {
            q: self.q,
            coeffs: self.coeffs.iter().map(|&x| x * c % self.q).collect(),
        }
    }

    /// The derivation: multiply the coefficient of X^n by n.
    pub fn derive(&self) -> SeqModQ {
        let q = self.q;
        SeqModQ {
            q,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| (n as u64 % q) * c % q)
                .collect(),
        }
    }

    /// Cauchy product truncated to the shorter length.
    pub fn convolve(&self, other: &SeqModQ) -> SeqModQ {
        assert_eq!(self.q, other.q, "mixed moduli: {} vs {}", self.q, other.q);
        let q = self.q;
        let n = self.len().min(other.len());
        let a = &self.coeffs[..n];
        let b = &other.coeffs[..n];
        let mut out = vec![0u64; n];
        // Each entry accumulates at most n products below q^2; for small q
        // that never overflows, so reduce once at the end.
        let lazy = (q - 1)
            .checked_mul(q - 1)
            .and_then(|p| p.checked_mul(n as u64))
            .is_some();
        if lazy {
            for (i, &ai) in a.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &bj) in b[..n - i].iter().enumerate() {
                    out[i + j] += ai * bj;
                }
            }
            for v in &mut out {
                *v %= q;
            }
        } else {
            for (i, &ai) in a.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &bj) in b[..n - i].iter().enumerate() {
                    out[i + j] =
                        ((out[i + j] as u128 + ai as u128 * bj as u128) % q as u128) as u64;
                }
            }
        }
        SeqModQ { q, coeffs: out }
    }

    /// k-fold convolution power by binary powering.
    pub fn self_convolve(&self, k: u32) -> SeqModQ {
        assert!(k >= 1, "convolution power must be positive");
        let mut acc: Option<SeqModQ> = None;
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.convolve(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.convolve(&base);
        }
        acc.expect("k >= 1")
    }

    /// Weighted convolution of two sequences: coefficient n is
    /// `sum_{i+j=n} w(i mod q, j mod q) a_i b_j`, the weight evaluated as
    /// written on ordered pairs.
    pub fn weighted_convolve2(&self, other: &SeqModQ, w: &WeightPoly2) -> SeqModQ {
        assert_eq!(self.q, other.q, "mixed moduli");
        assert_eq!(self.q, w.q, "weight and sequence moduli differ");
        let q = self.q;
        let n = self.len().min(other.len());
        let table = w.value_table();
        let mut out = vec![0u64; n];
        for (i, &ai) in self.coeffs[..n].iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &table[(i as u64 % q) as usize];
            for (j, &bj) in other.coeffs[..n - i].iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let wij = row[(j as u64 % q) as usize];
                if wij != 0 {
                    let prod = wij as u128 * ai as u128 % q as u128 * bj as u128;
                    out[i + j] = ((out[i + j] as u128 + prod) % q as u128) as u64;
                }
            }
        }
        SeqModQ { q, coeffs: out }
    }

    /// Does `coeffs[qn + r] = 0` hold for every index below the truncation?
    pub fn check_congruence(&self, r: u64) -> CongruenceCheck {
        assert!(r < self.q, "residue {r} out of range for q = {}", self.q);
        let mut idx = r as usize;
        while idx < self.coeffs.len() {
            if self.coeffs[idx] != 0 {
                return CongruenceCheck::Counterexample {
                    index: idx,
                    value: self.coeffs[idx],
                };
            }
            idx += self.q as usize;
        }
        CongruenceCheck::Holds
    }
}

/// A weight polynomial w(a, b) over GF(q): a list of monomials
/// `c * a^i b^j` with exponents listed in decreasing order (i >= j),
/// sorted by (total degree, a-exponent) descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPoly2 {
    q: u64,
    terms: Vec<WeightTerm>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightTerm {
    pub a_exp: u32,
    pub b_exp: u32,
    pub coeff: FqElem,
}

impl WeightPoly2 {
    /// Normalize a raw term list: orient each monomial so the a-exponent is
    /// the larger one, merge duplicates, drop zeros, sort canonically.
    pub fn new(q: u64, raw: Vec<(u32, u32, u64)>) -> Result<WeightPoly2, Error> {
        let mut terms: Vec<WeightTerm> = Vec::new();
        for (i, j, c) in raw {
            let (i, j) = if i >= j { (i, j) } else { (j, i) };
            if i as u64 > q - 1 {
                return Err(Error::WeightExponent { e: i, max: q - 1 });
            }
            let c = c % q;
            if c == 0 {
                continue;
            }
            match terms.iter_mut().find(|t| t.a_exp == i && t.b_exp == j) {
                Some(t) => t.coeff = (t.coeff + c) % q,
                None => terms.push(WeightTerm {
                    a_exp: i,
                    b_exp: j,
                    coeff: c,
                }),
            }
        }
        terms.retain(|t| t.coeff != 0);
        if terms.is_empty() {
            return Err(Error::EmptyWeight);
        }
        terms.sort_by(|x, y| {
            (y.a_exp + y.b_exp, y.a_exp).cmp(&(x.a_exp + x.b_exp, x.a_exp))
        });
        Ok(WeightPoly2 { q, terms })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn terms(&self) -> &[WeightTerm] {
        &self.terms
    }

    /// Tabulate w on residue pairs: `table[a][b] = w(a, b) mod q`, with the
    /// convention 0^0 = 1.
    pub fn value_table(&self) -> Vec<Vec<u64>> {
        let q = self.q as usize;
        let fq = Fq::new(self.q).expect("validated modulus");
        let mut table = vec![vec![0u64; q]; q];
        for (a, row) in table.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                let mut acc = 0u64;
                for t in &self.terms {
                    let va = fq.pow_u(a as u64, t.a_exp as u64);
                    let vb = fq.pow_u(b as u64, t.b_exp as u64);
                    acc = (acc + t.coeff * va % self.q * vb) % self.q;
                }
                *cell = acc;
            }
        }
        table
    }

    /// Parse the table grammar: terms separated by `+`, each term
    /// `[coeff][a[^e]][b[^e]]`, implicit coefficient 1 and exponent 1,
    /// whitespace ignored. Examples: `a^2+3ab+a`, `a^6b^2+6a^5b^3+3ab`, `2`.
    pub fn parse(s: &str, q: u64) -> Result<WeightPoly2, Error> {
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if body.is_empty() {
            return Err(Error::EmptyWeight);
        }
        let mut raw = Vec::new();
        for term in body.split('+') {
            if term.is_empty() {
                return Err(Error::Parse(format!("empty weight term in `{s}`")));
            }
            let bytes = term.as_bytes();
            let mut pos = 0;
            let digits_end = bytes
                .iter()
                .position(|b| !b.is_ascii_digit())
                .unwrap_or(bytes.len());
            let coeff: u64 = if digits_end == 0 {
                1
            } else {
                term[..digits_end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in `{term}`")))?
            };
            pos = digits_end;
            let mut a_exp = 0u32;
            let mut b_exp = 0u32;
            while pos < bytes.len() {
                let var = bytes[pos];
                if var != b'a' && var != b'b' {
                    return Err(Error::Parse(format!(
                        "unexpected `{}` in weight term `{term}`",
                        var as char
                    )));
                }
                pos += 1;
                let mut exp = 1u32;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(Error::Parse(format!("missing exponent in `{term}`")));
                    }
                    exp = term[start..pos]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?;
                }
                if var == b'a' {
                    a_exp += exp;
                } else {
                    b_exp += exp;
                }
            }
            raw.push((a_exp, b_exp, coeff));
        }
        WeightPoly2::new(q, raw)
    }
}

impl fmt::Display for WeightPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if t.coeff != 1 || (t.a_exp == 0 && t.b_exp == 0) {
                write!(f, "{}", t.coeff)?;
            }
            for (var, e) in [('a', t.a_exp), ('b', t.b_exp)] {
                if e == 1 {
                    write!(f, "{var}")?;
                } else if e > 1 {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

mod section5;
pub use section5::{verify_section5, Section5Item, Section5Report};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_small_values() {
        let p = SeqModQ::partition(5, 10);
        assert_eq!(p.coeffs(), &[1, 1, 2, 3, 0, 2, 1, 0, 2, 0]);
        // p(5n + 4) vanishes mod 5
        assert_eq!(p.get(4), 0);
        assert_eq!(p.get(9), 0);
        // p(5) = 7
        assert_eq!(SeqModQ::partition(7, 6).get(5), 0);
    }

    #[test]
    fn partition_congruence_large() {
        let p = SeqModQ::partition(5, 10_000);
        assert!(p.check_congruence(4).holds());
        let p7 = SeqModQ::partition(7, 5_000);
        assert!(p7.check_congruence(5).holds());
    }

    #[test]
    fn sigma_small_values() {
        let s = SeqModQ::sigma(101, 13, SigmaVariant::All);
        assert_eq!(&s.coeffs()[..7], &[0, 1, 3, 4, 7, 6, 12]);
        let se = SeqModQ::sigma(101, 13, SigmaVariant::Even);
        assert_eq!(se.get(6), 8); // 2 + 6
        let so = SeqModQ::sigma(101, 13, SigmaVariant::Odd);
        assert_eq!(so.get(1), 1);
        assert_eq!(so.get(6), 4); // 1 + 3
        let s3 = SeqModQ::sigma(10_007, 13, SigmaVariant::Cubes);
        assert_eq!(s3.get(2), 9);
        assert_eq!(s3.get(6), 1 + 8 + 27 + 216);
    }

    #[test]
    fn sigma_no_congruence_at_zero() {
        let s = SeqModQ::sigma(5, 100, SigmaVariant::All);
        match s.check_congruence(0) {
            CongruenceCheck::Counterexample { index, value } => {
                assert_eq!(index, 5); // sigma(5) = 6 = 1 mod 5
                assert_eq!(value, 1);
            }
            CongruenceCheck::Holds => panic!("sigma(5n) is not identically 0 mod 5"),
        }
    }

    #[test]
    fn convolve_identity_and_values() {
        let q = 5;
        let s = SeqModQ::sigma(q, 16, SigmaVariant::All);
        let delta = SeqModQ::delta(q, 16);
        assert_eq!(s.convolve(&delta), s);

        // sigma^{*2}(11) = 490 = 0 mod 5
        let s2 = s.self_convolve(2);
        assert_eq!(s2.get(11), 490 % 5);
        assert_eq!(s2.get(11), 0);

        // p^{*2}(n) = 1, 2, 5, 10 -> 1, 2, 0, 0 mod 5
        let p2 = SeqModQ::partition(q, 8).self_convolve(2);
        assert_eq!(&p2.coeffs()[..4], &[1, 2, 0, 0]);
    }

    #[test]
    fn self_convolve_one_is_identity() {
        let s = SeqModQ::sigma(7, 64, SigmaVariant::All);
        assert_eq!(s.self_convolve(1), s);
    }

    #[test]
    fn sigma_cubed_congruence_family() {
        // sigma^{*3}(5n + 1) = 0 mod 5; spot-check the family member at 6.
        let s3 = SeqModQ::sigma(5, 1_000, SigmaVariant::All).self_convolve(3);
        assert_eq!(s3.get(6), 0);
        assert!(s3.check_congruence(1).holds());
    }

    #[test]
    fn sigma_double_congruence_mod7() {
        let s2 = SeqModQ::sigma(7, 10_000, SigmaVariant::All).self_convolve(2);
        assert!(s2.check_congruence(6).holds());
    }

    #[test]
    fn weighted_convolution_example() {
        // w = a^2 + 3ab + a applied to sigma at n = 3:
        // w(1,2) s(1) s(2) + w(2,1) s(2) s(1) = 24 + 36 = 60 = 0 mod 5.
        let q = 5;
        let w = WeightPoly2::parse("a^2+3ab+a", q).unwrap();
        let s = SeqModQ::sigma(q, 2_000, SigmaVariant::All);
        let conv = s.weighted_convolve2(&s, &w);
        assert_eq!(conv.get(3), 0);
        assert!(conv.is_zero(), "a^2+3ab+a is a valid weight mod 5");
    }

    #[test]
    fn weighted_with_unit_weight_is_convolve() {
        let q = 7;
        let w = WeightPoly2::parse("1", q).unwrap();
        let s = SeqModQ::sigma(q, 200, SigmaVariant::All);
        assert_eq!(s.weighted_convolve2(&s, &w), s.convolve(&s));
    }

    #[test]
    fn single_variable_weight_annihilates_partitions() {
        // w = x(x-1)(x-2)(x-3) = x^4 + 4x^3 + x^2 + 4x mod 5 kills p(n)
        // at every n, the operator form of the first partition congruence.
        let q = 5;
        let w = WeightPoly2::new(q, vec![(4, 0, 1), (3, 0, 4), (2, 0, 1), (1, 0, 4)]).unwrap();
        let p = SeqModQ::partition(q, 3_000);
        let delta = SeqModQ::delta(q, 3_000);
        let conv = p.weighted_convolve2(&delta, &w);
        assert!(conv.is_zero());
    }

    #[test]
    fn sigma_inv_values() {
        let si = SeqModQ::sigma_inv(5, 20);
        assert_eq!(si.get(0), 1);
        assert_eq!(si.get(1), 2); // -sigma(2) = -3
        for n in [2usize, 3, 4, 7, 8, 9, 12] {
            assert_eq!(si.get(n), 0, "sigma_inv({n}) should vanish mod 5");
        }
        // convolution with sigma(n+1) gives delta
        let q = 5;
        let n = 20;
        let sig_shift = SeqModQ::from_coeffs(
            q,
            SeqModQ::sigma(q, n + 1, SigmaVariant::All).coeffs()[1..].to_vec(),
        );
        assert_eq!(si.convolve(&sig_shift), SeqModQ::delta(q, n));
    }

    #[test]
    fn series_identities() {
        // E * P = 1, J * P^3 = 1, S = dP / P as truncated series.
        for q in [5u64, 7, 11] {
            let n = 600;
            let p = SeqModQ::partition(q, n);
            let e = SeqModQ::euler(q, n);
            let j = SeqModQ::jacobi(q, n);
            assert_eq!(e.convolve(&p), SeqModQ::delta(q, n), "E*P != 1 mod {q}");
            assert_eq!(
                j.convolve(&p.self_convolve(3)),
                SeqModQ::delta(q, n),
                "J*P^3 != 1 mod {q}"
            );
            assert_eq!(e.self_convolve(3), j, "E^3 != J mod {q}");
            let s = SeqModQ::sigma(q, n, SigmaVariant::All);
            assert_eq!(s.convolve(&p), p.derive(), "S*P != dP mod {q}");
        }
    }

    #[test]
    fn exponent_shift_by_q_preserves_congruence() {
        // (k, r) valid implies (k + q, r) valid; check on a known pair.
        let q = 5;
        let s = SeqModQ::sigma(q, 3_000, SigmaVariant::All);
        assert!(s.self_convolve(2).check_congruence(1).holds());
        assert!(s.self_convolve(2 + 5).check_congruence(1).holds());
        let p = SeqModQ::partition(q, 3_000);
        assert!(p.self_convolve(1).check_congruence(4).holds());
        assert!(p.self_convolve(6).check_congruence(4).holds());
    }

    #[test]
    fn weight_parse_and_display() {
        let q = 7;
        for s in ["a^6b^2+6a^5b^3+4a^4b^4+3ab", "a^2+ab+4a", "5", "2ab"] {
            let w = WeightPoly2::parse(s, q).unwrap();
            assert_eq!(w.to_string(), s, "weight rendering should round-trip");
        }
        // symmetrized orientation: b-heavy monomials flip
        let w = WeightPoly2::parse("ab^3", q).unwrap();
        assert_eq!(w.to_string(), "a^3b");
        assert!(WeightPoly2::parse("a^9", 7).is_err());
        assert!(WeightPoly2::parse("c+1", 7).is_err());
        assert!(WeightPoly2::parse("", 7).is_err());
        assert!(WeightPoly2::parse("7a", 7).is_err(), "zero weight mod 7");
    }
}
