//! Rational reconstruction from a single modular image.

use super::{isqrt, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Recover the unique `p/q` with `q r = p (mod m)`, `|p| <= sqrt(m/2)`,
/// `0 < q <= sqrt(m/2)`, `gcd(p, q) = 1` and `gcd(q, m) = 1`, if it exists.
///
/// Extended Euclid on `(m, r)` stopped at the first remainder below the
/// symmetric bound. `None` means no pair satisfies the bounds: the caller
/// does not have enough modular information yet.
pub fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<Rat> {
    assert!(!r.is_negative() && r < m, "need 0 <= r < m");
    let bound = isqrt(&(m / BigInt::from(2)));
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    // candidate p/q = r1/t1
    let (p, q) = if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if q.is_zero() || q > bound || p.abs() > bound {
        return None;
    }
    if !p.gcd(&q).is_one() || !q.gcd(m).is_one() {
        return None;
    }
    Some(Rat::new(p, q))
}
