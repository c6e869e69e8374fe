//! Rationals extended by a primitive cube root of unity.

use super::Rat;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// `re + om * omega` with `omega = e^{2 i pi / 3}`, so `omega^2 = -1 - omega`.
///
/// Coordinates over the basis `{1, omega}`; equality and zero tests are exact
/// and componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub re: Rat,
    pub om: Rat,
}

impl Eisenstein {
    pub fn new(re: Rat, om: Rat) -> Self {
        Eisenstein { re, om }
    }

    pub fn from_i64(re: i64, om: i64) -> Self {
        Eisenstein::new(super::rat_i64(re), super::rat_i64(om))
    }

    pub fn zero() -> Self {
        Eisenstein::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Eisenstein::new(Rat::one(), Rat::zero())
    }

    pub fn omega() -> Self {
        Eisenstein::new(Rat::zero(), Rat::one())
    }

    /// `omega^2 = conj(omega) = -1 - omega`.
    pub fn omega_bar() -> Self {
        Eisenstein::from_i64(-1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }

    /// True when the omega coordinate vanishes.
    pub fn is_rational(&self) -> bool {
        self.om.is_zero()
    }

    /// Complex conjugation: omega -> omega^2.
    pub fn conj(&self) -> Self {
        Eisenstein::new(&self.re - &self.om, -self.om.clone())
    }

    /// Field norm `a^2 - a b + b^2` (positive unless zero).
    pub fn norm(&self) -> Rat {
        &self.re * &self.re - &self.re * &self.om + &self.om * &self.om
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Eisenstein::new(c.re / &n, c.om / &n))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Eisenstein::new(&self.re * r, &self.om * r)
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.re + &rhs.re, &self.om + &rhs.om)
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.re - &rhs.re, &self.om - &rhs.om)
    }
}

impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
        let bd = &self.om * &rhs.om;
        Eisenstein::new(
            &self.re * &rhs.re - &bd,
            &self.re * &rhs.om + &self.om * &rhs.re - &bd,
        )
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-self.re.clone(), -self.om.clone())
    }
}

impl AddAssign<&Eisenstein> for Eisenstein {
    fn add_assign(&mut self, rhs: &Eisenstein) {
        self.re += &rhs.re;
        self.om += &rhs.om;
    }
}

impl SubAssign<&Eisenstein> for Eisenstein {
    fn sub_assign(&mut self, rhs: &Eisenstein) {
        self.re -= &rhs.re;
        self.om -= &rhs.om;
    }
}

impl MulAssign<&Eisenstein> for Eisenstein {
    fn mul_assign(&mut self, rhs: &Eisenstein) {
        *self = (&*self) * rhs;
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {} w)", self.re, self.om)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_cubed_is_one() {
        let w = Eisenstein::omega();
        let w2 = &w * &w;
        assert_eq!(w2, Eisenstein::omega_bar());
        let w3 = &w2 * &w;
        assert_eq!(w3, Eisenstein::one());
    }

    #[test]
    fn omega_sum_is_zero() {
        let s = &(&Eisenstein::one() + &Eisenstein::omega()) + &Eisenstein::omega_bar();
        assert!(s.is_zero());
    }

    #[test]
    fn conjugation_and_norm() {
        let x = Eisenstein::from_i64(3, -2);
        let n = &x * &x.conj();
        assert!(n.is_rational());
        assert_eq!(n.re, x.norm());
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, Eisenstein::one());
    }
}
