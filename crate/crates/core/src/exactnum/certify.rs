//! Integer certification of modular null vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

/// Outcome of the certification test for `A y = 0`.
///
/// `certified()` is true iff `A y = 0 (mod m)` and
/// `n * max|A| * max|y| < m/2`, which together force `A y = 0` over the
/// integers (the homogeneous case of the exact-solution bound).
#[derive(Debug, Clone)]
pub struct Certification {
    pub residual_zero_mod_m: bool,
    pub bound_lhs: BigInt,
    pub half_m: BigInt,
}

impl Certification {
    pub fn bound_holds(&self) -> bool {
        self.bound_lhs < self.half_m
    }

    pub fn certified(&self) -> bool {
        self.residual_zero_mod_m && self.bound_holds()
    }
}

/// Check `A y = 0 (mod m)` and the magnitude bound; `rows` is A row-major.
pub fn certify_nullvector(rows: &[Vec<BigInt>], y: &[BigInt], m: &BigInt) -> Certification {
    let residual_zero_mod_m = rows.par_iter().all(|row| {
        debug_assert_eq!(row.len(), y.len());
        let dot: BigInt = row.iter().zip(y).map(|(a, b)| a * b).sum();
        dot.mod_floor(m).is_zero()
    });
    let a_max = rows
        .iter()
        .flat_map(|r| r.iter())
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let y_max = y.iter().map(|v| v.abs()).max().unwrap_or_else(BigInt::zero);
    let n = BigInt::from(rows.first().map_or(0, |r| r.len()));
    Certification {
        residual_zero_mod_m,
        bound_lhs: n * a_max * y_max,
        half_m: m / BigInt::from(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn exact_nullvector_certifies() {
        let rows = vec![vec![bi(1), bi(-1)]];
        let y = vec![bi(1), bi(1)];
        let c = certify_nullvector(&rows, &y, &bi(1_000_000));
        assert!(c.certified());
    }

    #[test]
    fn bound_violation_fails() {
        // y = (m): residual is 0 mod m but the bound cannot hold
        let m = bi(97);
        let rows = vec![vec![bi(1)]];
        let y = vec![m.clone()];
        let c = certify_nullvector(&rows, &y, &m);
        assert!(c.residual_zero_mod_m);
        assert!(!c.bound_holds());
        assert!(!c.certified());
    }

    #[test]
    fn reported_magnitudes_satisfy_reported_bound() {
        // n < 10^6, max|A| < 10^200, max|y| < 10^115, m ~ 0.2e360:
        // n*max|A|*max|y| < 10^321 < m/2
        let big = |exp: u32| BigInt::from(10u32).pow(exp);
        let lhs = big(6) * big(200) * big(115);
        let m = BigInt::from(2) * big(359);
        assert!(lhs < m / BigInt::from(2));
    }

    #[test]
    fn certified_implies_exact_nullvector() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let m = BigInt::from(10u64.pow(12));
        for _ in 0..100 {
            let n = rng.gen_range(2..6usize);
            let y: Vec<BigInt> = (0..n).map(|_| bi(rng.gen_range(-50..=50i64))).collect();
            // rows of the form y_j e_i - y_i e_j are integral and orthogonal to y
            let mut rows = Vec::new();
            for _ in 0..n {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                if j == i {
                    j = (j + 1) % n;
                }
                let mut row = vec![BigInt::zero(); n];
                row[i] = y[j].clone();
                row[j] = -y[i].clone();
                rows.push(row);
            }
            let c = certify_nullvector(&rows, &y, &m);
            if c.certified() {
                for row in &rows {
                    let dot: BigInt = row.iter().zip(&y).map(|(a, b)| a * b).sum();
                    assert!(dot.is_zero());
                }
            }
        }
    }

    #[test]
    fn residual_multiple_of_m_is_not_certified() {
        // A y = m exactly: zero mod m but nonzero, so the bound must fail
        let m = bi(10_007);
        let rows = vec![vec![m.clone(), bi(0)], vec![bi(0), bi(1)]];
        let y = vec![bi(1), bi(0)];
        let c = certify_nullvector(&rows, &y, &m);
        assert!(c.residual_zero_mod_m);
        assert!(!c.certified());
    }
}
