//! Random points on (and off) the dual loci, in semi-simple coordinates.

use crate::exactnum::{rat_i64, Rat};
use crate::roots::{
    cube2222_slice_factors, gr39_slice_factors, gr48_slice_factors, Family,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

fn nonzero_int<R: Rng>(rng: &mut R, b: i64) -> i64 {
    loop {
        let v = rng.gen_range(-b..=b);
        if v != 0 {
            return v;
        }
    }
}

fn count_vanishing_rational(factors: &[Vec<Rat>], point: &[Rat]) -> usize {
    factors
        .iter()
        .filter(|co| {
            co.iter()
                .zip(point)
                .map(|(c, x)| c * x)
                .sum::<Rat>()
                .is_zero()
        })
        .count()
}

fn count_vanishing(family: Family, point: &[Rat]) -> Result<usize> {
    match family {
        Family::Gr39 => Ok(crate::roots::gr39_vanishing_factor_count(point)),
        Family::Gr48 => Ok(count_vanishing_rational(&gr48_slice_factors(), point)),
        Family::Cube2222 => Ok(count_vanishing_rational(&cube2222_slice_factors(), point)),
        Family::Cube333 => Err(Error::InvalidArgument(
            "cube333 has no sampling support".into(),
        )),
    }
}

/// Draw a semi-simple coordinate vector annihilating the family's restricted
/// discriminant: exactly one linear factor of the slice discriminant is
/// forced to vanish; draws where a second factor vanishes by coincidence are
/// rejected and redrawn.
pub fn sample_dual_point<R: Rng>(family: Family, rng: &mut R, box_b: i64) -> Result<Vec<BigInt>> {
    let n = family.coordinate_count();
    for _ in 0..10_000 {
        let mut point: Vec<i64> = (0..n).map(|_| nonzero_int(rng, box_b)).collect();
        match family {
            Family::Gr39 => {
                let zero_at = rng.gen_range(0..n);
                point[zero_at] = 0;
            }
            Family::Gr48 => {
                // force a random factor of the degree-63 slice polynomial
                let factors = gr48_slice_factors();
                let f = &factors[rng.gen_range(0..factors.len())];
                let support: Vec<usize> =
                    (0..n).filter(|&i| !f[i].is_zero()).collect();
                if support.len() == 1 {
                    point[support[0]] = 0;
                } else {
                    // solve for the first support variable (coefficient +-1)
                    let lead = support[0];
                    let mut rhs = 0i64;
                    for &i in &support[1..] {
                        let c = f[i].numer().try_into().unwrap_or(0i64);
                        rhs += c * point[i];
                    }
                    let lead_c: i64 = f[lead].numer().try_into().unwrap_or(1);
                    point[lead] = -rhs * lead_c;
                }
            }
            Family::Cube2222 => {
                let i = rng.gen_range(0..4);
                let mut j = rng.gen_range(0..4);
                while j == i {
                    j = rng.gen_range(0..4);
                }
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                point[i] = sign * point[j];
            }
            Family::Cube333 => unreachable!(),
        }
        let rat_point: Vec<Rat> = point.iter().map(|&x| rat_i64(x)).collect();
        if rat_point.iter().all(|x| x.is_zero()) {
            continue;
        }
        if count_vanishing(family, &rat_point)? == 1 {
            return Ok(point.into_iter().map(BigInt::from).collect());
        }
    }
    Err(Error::Math(format!(
        "could not draw a nondegenerate dual point for {} in 10000 tries; enlarge the box",
        family.name()
    )))
}

/// Draw a point with all coordinates nonzero at which no slice factor
/// vanishes (the discriminant is nonzero there).
pub fn sample_generic_point<R: Rng>(
    family: Family,
    rng: &mut R,
    box_b: i64,
) -> Result<Vec<BigInt>> {
    let n = family.coordinate_count();
    for _ in 0..10_000 {
        let point: Vec<i64> = (0..n).map(|_| nonzero_int(rng, box_b)).collect();
        let rat_point: Vec<Rat> = point.iter().map(|&x| rat_i64(x)).collect();
        if count_vanishing(family, &rat_point)? == 0 {
            return Ok(point.into_iter().map(BigInt::from).collect());
        }
    }
    Err(Error::Math("could not draw a generic point".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{restricted_roots, root_product_value};
    use rand::SeedableRng;

    fn to_rat(v: &[BigInt]) -> Vec<Rat> {
        v.iter().map(|x| Rat::from_integer(x.clone())).collect()
    }

    #[test]
    fn dual_points_annihilate_the_root_product() {
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(7);
        for family in [Family::Gr39, Family::Gr48, Family::Cube2222] {
            let sys = restricted_roots(family).unwrap();
            for _ in 0..5 {
                let p = sample_dual_point(family, &mut rng, 20).unwrap();
                let v = root_product_value(&sys, &to_rat(&p)).unwrap();
                assert!(v.is_zero(), "{family:?} {p:?}");
            }
        }
    }

    #[test]
    fn generic_points_do_not() {
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(8);
        for family in [Family::Gr39, Family::Gr48, Family::Cube2222] {
            let sys = restricted_roots(family).unwrap();
            for _ in 0..5 {
                let p = sample_generic_point(family, &mut rng, 20).unwrap();
                let v = root_product_value(&sys, &to_rat(&p)).unwrap();
                assert!(!v.is_zero());
            }
        }
    }

    #[test]
    fn gr39_draws_have_one_zero_coordinate() {
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(9);
        for _ in 0..10 {
            let p = sample_dual_point(Family::Gr39, &mut rng, 50).unwrap();
            assert_eq!(p.iter().filter(|x| x.is_zero()).count(), 1);
        }
    }

    #[test]
    fn same_seed_same_points() {
        let mut a = rand_chacha::ChaCha20Rng::seed_from_u64(42);
        let mut b = rand_chacha::ChaCha20Rng::seed_from_u64(42);
        for family in [Family::Gr39, Family::Gr48, Family::Cube2222] {
            for _ in 0..3 {
                assert_eq!(
                    sample_dual_point(family, &mut a, 50).unwrap(),
                    sample_dual_point(family, &mut b, 50).unwrap()
                );
            }
        }
    }
}
