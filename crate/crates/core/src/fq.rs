//! Arithmetic in the prime field GF(q) for a runtime-chosen prime q > 3.
//!
//! The modulus lives in a small copyable context; elements are canonical
//! residues in `[0, q)` stored as plain `u64`. Container types (sequences,
//! polynomials) carry their own `q` and assert agreement, so values of
//! different moduli cannot be mixed silently.

use crate::Error;

/// An element of GF(q): a canonical residue in `[0, q)`.
pub type FqElem = u64;

/// Context for arithmetic modulo a prime q > 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fq {
    q: u64,
}

impl Fq {
    /// Build a field context. Rejects composites and the primes 2 and 3,
    /// for which the whole method degenerates.
    pub fn new(q: u64) -> Result<Fq, Error> {
        if q <= 3 || !is_prime(q) {
            return Err(Error::BadModulus(q));
        }
        Ok(Fq { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// Reduce an arbitrary signed integer into `[0, q)`.
    pub fn reduce(&self, n: i64) -> FqElem {
        n.rem_euclid(self.q as i64) as u64
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    /// Multiplicative inverse via Fermat's little theorem.
    ///
    /// Panics if `a == 0`.
    pub fn inv(&self, a: FqElem) -> FqElem {
        assert!(a % self.q != 0, "division by zero in GF({})", self.q);
        self.pow_u(a, self.q - 2)
    }

    /// `a^e` for a nonnegative exponent, with the convention `0^0 = 1`.
    pub fn pow_u(&self, a: FqElem, mut e: u64) -> FqElem {
        let mut base = a % self.q;
        let mut acc: u64 = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a signed exponent; negative exponents go through `inv`
    /// and therefore panic on `a == 0`.
    pub fn pow(&self, a: FqElem, e: i64) -> FqElem {
        if e >= 0 {
            self.pow_u(a, e as u64)
        } else {
            self.pow_u(self.inv(a), e.unsigned_abs())
        }
    }
}

/// Deterministic trial-division primality test; q stays tiny in practice.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_moduli() {
        for q in [0, 1, 2, 3, 4, 6, 9, 15, 21] {
            assert!(Fq::new(q).is_err(), "q = {q} should be rejected");
        }
        for q in [5, 7, 11, 13, 17, 101] {
            assert!(Fq::new(q).is_ok());
        }
    }

    #[test]
    fn basic_arithmetic() {
        let f5 = Fq::new(5).unwrap();
        assert_eq!(f5.add(3, 4), 2);
        assert_eq!(f5.mul(2, 3), 1);
        assert_eq!(f5.inv(2), 3);
        let f7 = Fq::new(7).unwrap();
        assert_eq!(f7.neg(3), 4);
        assert_eq!(f7.inv(3), 5);
        assert_eq!(f7.pow(3, 0), 1);
        assert_eq!(f7.pow(2, 5), 4);
        let f11 = Fq::new(11).unwrap();
        assert_eq!(f11.inv(10), 10);
    }

    #[test]
    fn fermat_pow() {
        let f5 = Fq::new(5).unwrap();
        assert_eq!(f5.pow_u(2, 4), 1);
        for q in [5u64, 7, 11, 13, 17] {
            let f = Fq::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.pow_u(a, q), a, "a^q != a for a={a}, q={q}");
            }
        }
    }

    #[test]
    fn negative_exponent() {
        let f7 = Fq::new(7).unwrap();
        assert_eq!(f7.mul(f7.pow(3, -2), f7.pow(3, 2)), 1);
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn inv_zero_panics() {
        Fq::new(5).unwrap().inv(0);
    }

    #[test]
    fn reduce_signed() {
        let f5 = Fq::new(5).unwrap();
        assert_eq!(f5.reduce(-3), 2);
        assert_eq!(f5.reduce(12), 2);
        assert_eq!(f5.reduce(0), 0);
    }

    /// Field axioms by full enumeration for the small acceptance primes.
    #[test]
    fn field_axioms_small_primes() {
        for q in [5u64, 7, 11, 13] {
            let f = Fq::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }
}
