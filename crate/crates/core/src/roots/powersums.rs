//! Power sums of restricted roots: the fundamental invariants on the
//! semi-simple slices.

use super::poly::CoordinatePolynomial;
use super::systems::RestrictedRootSystem;
use crate::exactnum::Rat;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// `sum over roots of alpha^d`, expanded, checked free of omega, divided by
/// its integer content and sign-fixed so the pure power of the first
/// coordinate (when present) is positive.
///
/// `d` must be even and one of the family's fundamental degrees.
pub fn power_sum_invariant(system: &RestrictedRootSystem, d: u32) -> Result<CoordinatePolynomial> {
    let degrees = system.family.fundamental_degrees();
    if d % 2 != 0 || !degrees.contains(&d) {
        return Err(Error::InvalidArgument(format!(
            "degree {d} is not a fundamental degree of {}",
            system.family.name()
        )));
    }
    let nvars = system.family.coordinate_count();

    // roots have small Eisenstein-integer coordinates; accumulate in i128
    let small: Vec<Vec<(i128, i128)>> = system
        .roots
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| {
                    let re = c
                        .re
                        .to_integer()
                        .to_i128()
                        .expect("root coordinate fits i128");
                    debug_assert!(c.re.denom().is_one() && c.om.denom().is_one());
                    let om = c.om.to_integer().to_i128().unwrap();
                    (re, om)
                })
                .collect()
        })
        .collect();

    let total: BTreeMap<Vec<u8>, (i128, i128)> = small
        .par_iter()
        .map(|root| linear_power(root, d as usize, nvars))
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, (re, om)) in b {
                let slot = a.entry(k).or_insert((0, 0));
                slot.0 += re;
                slot.1 += om;
            }
            a
        });

    let mut terms: BTreeMap<Vec<u8>, Rat> = BTreeMap::new();
    for (k, (re, om)) in total {
        if om != 0 {
            return Err(Error::Math(format!(
                "power sum of degree {d} has a nonzero omega part at {k:?}; labeling convention is broken"
            )));
        }
        if re != 0 {
            terms.insert(k, Rat::from_integer(BigInt::from(re)));
        }
    }
    let raw = CoordinatePolynomial::from_terms(system.family.coordinate_names(), terms);
    let (normalized, _content) = raw.normalize_content()?;
    Ok(normalized)
}

/// Expand `(sum_i c_i x_i)^d` over Eisenstein-integer coefficients.
fn linear_power(coeffs: &[(i128, i128)], d: usize, nvars: usize) -> BTreeMap<Vec<u8>, (i128, i128)> {
    let mut acc: BTreeMap<Vec<u8>, (i128, i128)> = BTreeMap::new();
    acc.insert(vec![0u8; nvars], (1, 0));
    for _ in 0..d {
        let mut next: BTreeMap<Vec<u8>, (i128, i128)> = BTreeMap::new();
        for (exps, (a, b)) in &acc {
            for (i, &(ca, cb)) in coeffs.iter().enumerate() {
                if ca == 0 && cb == 0 {
                    continue;
                }
                // (a + b w)(ca + cb w), w^2 = -1 - w
                let re = a * ca - b * cb;
                let om = a * cb + b * ca - b * cb;
                let mut e = exps.clone();
                e[i] += 1;
                let slot = next.entry(e).or_insert((0, 0));
                slot.0 += re;
                slot.1 += om;
            }
        }
        next.retain(|_, v| v.0 != 0 || v.1 != 0);
        acc = next;
    }
    acc
}

/// All power sums for the family's fundamental degrees, keyed by degree.
pub fn all_power_sums(system: &RestrictedRootSystem) -> Result<BTreeMap<u32, CoordinatePolynomial>> {
    system
        .family
        .fundamental_degrees()
        .par_iter()
        .map(|&d| Ok((d, power_sum_invariant(system, d)?)))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}

/// Evaluate the degree-d invariant at a rational point (for tests and small
/// jobs; interpolation uses the precomputed polynomials directly).
pub fn power_sum_value(system: &RestrictedRootSystem, d: u32, point: &[Rat]) -> Result<Rat> {
    Ok(power_sum_invariant(system, d)?.evaluate(point))
}
