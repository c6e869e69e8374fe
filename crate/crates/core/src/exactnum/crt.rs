//! Chinese remaindering by iterative pairwise (Garner-style) combination.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

/// Combine residues `(value_i, prime_i)` into the unique `r mod prod(primes)`
/// with `r = value_i (mod prime_i)` for every i. Primes must be pairwise
/// distinct. Returns `(r, modulus)` with `0 <= r < modulus`.
pub fn crt_combine(residues: &[(BigInt, BigInt)]) -> Result<(BigInt, BigInt)> {
    for (i, (_, p)) in residues.iter().enumerate() {
        for (_, q) in &residues[..i] {
            if p == q {
                return Err(Error::DuplicatePrime(p.to_string()));
            }
        }
    }
    let mut acc = BigInt::ZERO;
    let mut modulus = BigInt::one();
    for (value, prime) in residues {
        // solve acc + modulus * t = value (mod prime)
        let inv = mod_inverse(&modulus, prime).ok_or_else(|| {
            Error::Math(format!("moduli {modulus} and {prime} are not coprime"))
        })?;
        let mut t = ((value - &acc) * inv).mod_floor(prime);
        if t.is_negative() {
            t += prime;
        }
        acc += &modulus * t;
        modulus *= prime;
    }
    Ok((acc.mod_floor(&modulus), modulus))
}

/// Modular inverse via the extended Euclidean algorithm.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, x, _) = extended_gcd(&a.mod_floor(m), m);
    if g.is_one() {
        Some(x.mod_floor(m))
    } else {
        None
    }
}

/// Returns `(g, x, y)` with `a x + b y = g = gcd(a, b)`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::ZERO);
    let (mut t0, mut t1) = (BigInt::ZERO, BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

use num_traits::Zero;

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn two_residue_example() {
        let (r, m) = crt_combine(&[(bi(2), bi(3)), (bi(3), bi(5))]).unwrap();
        assert_eq!(r, bi(8));
        assert_eq!(m, bi(15));
    }

    #[test]
    fn zero_residues() {
        let (r, m) = crt_combine(&[(bi(0), bi(3)), (bi(0), bi(5)), (bi(0), bi(7))]).unwrap();
        assert_eq!(r, bi(0));
        assert_eq!(m, bi(105));
    }

    #[test]
    fn constant_residue() {
        let (r, m) = crt_combine(&[(bi(1), bi(1009)), (bi(1), bi(1013))]).unwrap();
        assert_eq!(r, bi(1));
        assert_eq!(m, bi(1009) * bi(1013));
    }

    #[test]
    fn duplicate_primes_rejected() {
        assert!(matches!(
            crt_combine(&[(bi(1), bi(7)), (bi(2), bi(7))]),
            Err(crate::Error::DuplicatePrime(_))
        ));
    }

    #[test]
    fn combine_then_reduce_is_identity() {
        let input = [(bi(17), bi(101)), (bi(90), bi(103)), (bi(4), bi(107))];
        let (r, _) = crt_combine(&input).unwrap();
        for (v, p) in &input {
            assert_eq!(r.mod_floor(p), *v);
        }
    }
}
