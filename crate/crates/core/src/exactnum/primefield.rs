//! Word-size prime field arithmetic.

use super::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// The field Z/p for a prime p < 2^31. Elements are canonical residues in
/// `[0, p)` stored as `u64`; products never overflow `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31), "modulus out of range");
        debug_assert!(super::is_prime_u64(p), "modulus {p} is not prime");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        // Fermat: p is prime.
        self.pow(a, self.p - 2)
    }

    /// Canonical residue of an arbitrary integer.
    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n.mod_floor(&p);
        if r.is_negative() {
            r += &p;
        }
        r.to_u64().expect("residue fits in u64")
    }

    /// Residue of a rational; `None` when the denominator vanishes mod p
    /// (the prime is unusable for this value).
    pub fn reduce_rat(&self, r: &Rat) -> Option<u64> {
        let den = self.reduce_bigint(r.denom());
        if den == 0 {
            return None;
        }
        let num = self.reduce_bigint(r.numer());
        Some(self.mul(num, self.inv(den)))
    }
}
