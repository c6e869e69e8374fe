//! Exact arithmetic foundation.
//!
//! Arbitrary-precision rationals ([`Rat`]), the quadratic extension Q(omega)
//! with omega^2 + omega + 1 = 0 ([`Eisenstein`]), word-size prime fields
//! ([`PrimeField`]), Chinese remaindering, rational reconstruction, integer
//! content, and the integer certification bound for lifted null vectors.
//!
//! All values are immutable once built; every function here is pure.

mod certify;
mod crt;
mod eisenstein;
mod primefield;
mod ratrec;
mod residues;

pub use certify::{certify_nullvector, Certification};
pub use crt::crt_combine;
pub use eisenstein::Eisenstein;
pub use primefield::PrimeField;
pub use ratrec::rational_reconstruct;
pub use residues::{read_shard_file, write_shard_file, ResidueVector, Shard};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Exact rational number, always reduced, denominator always positive.
pub type Rat = num_rational::BigRational;

/// Rational from an integer literal.
pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair of integer literals.
pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse an exact rational literal: an optionally signed integer or `num/den`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidArgument(format!("malformed rational literal `{s}`"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|_| bad())?;
        let den: BigInt = d.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rat::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rat::from_integer(num))
    }
}

/// Format a rational as `num` or `num/den`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// gcd of the absolute values of all entries; errors on the zero vector.
pub fn content(values: &[BigInt]) -> Result<BigInt> {
    let mut g = BigInt::zero();
    for v in values {
        g = g.gcd(v);
    }
    if g.is_zero() {
        Err(Error::ZeroContent)
    } else {
        Ok(g)
    }
}

/// Divide a vector by its content, returning the primitive vector.
pub fn primitive_part(values: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = content(values)?;
    Ok(values.iter().map(|v| v / &g).collect())
}

/// Clear denominators of a rational vector: returns (integers, common denominator)
/// with the integer vector equal to the input scaled by the lcm of denominators.
pub fn clear_denominators(values: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let mut lcm = BigInt::from(1);
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    let ints = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    (ints, lcm)
}

/// Floor of the integer square root.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// Consecutive primes strictly above `start` (trial division; fine for the
/// four-digit range the pipeline uses).
pub fn primes_above(start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = start;
    while out.len() < count {
        n += 1;
        if is_prime_u64(n) {
            out.push(n);
        }
    }
    out
}

/// Deterministic primality by trial division; intended for small moduli.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["5", "-7", "1/2", "-188875/1526823", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s.trim_start_matches('+'));
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn content_examples() {
        let v: Vec<BigInt> = [6, -9, 15].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(content(&v).unwrap(), BigInt::from(3));
        let one = vec![BigInt::from(1)];
        assert_eq!(content(&one).unwrap(), BigInt::from(1));
        assert!(content(&[BigInt::zero(), BigInt::zero()]).is_err());
    }

    #[test]
    fn primes_above_1000_start_at_1009() {
        assert_eq!(primes_above(1000, 5), vec![1009, 1013, 1019, 1021, 1031]);
    }
}
