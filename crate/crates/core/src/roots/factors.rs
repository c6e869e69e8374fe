//! Factored forms of the restricted discriminants, root products, and the
//! ratio tests relating them.

use super::poly::CoordinatePolynomial;
use super::systems::{Family, RestrictedRootSystem};
use crate::exactnum::{rat_i64, Eisenstein, Rat};
use crate::{Error, Result};
use num_traits::{One, Zero};

/// The 40 linear factors of the degree-40 polynomial h with
/// `(restricted E8 discriminant) = const * h^6` on the z slice, as
/// Eisenstein pairs `(a, b)` per coordinate. Transcribed from the published
/// display with its omega symbols read as primitive sixth roots and the
/// columns in the canonical z labeling; as printed, 32 of the 40 lines are
/// not root lines under the cube-root reading.
pub const GR39_SLICE_FACTORS: [[(i64, i64); 4]; 40] = [
    [(0, 0), (0, 0), (0, 0), (1, 0)],
    [(1, 0), (1, 0), (-1, 0), (0, 0)],
    [(1, 0), (1, 0), (1, 1), (0, 0)],
    [(1, 0), (-1, -1), (-1, 0), (0, 0)],
    [(1, 0), (1, 0), (0, -1), (0, 0)],
    [(1, 0), (0, 1), (-1, 0), (0, 0)],
    [(1, 0), (-1, -1), (1, 1), (0, 0)],
    [(1, 0), (0, 1), (1, 1), (0, 0)],
    [(1, 0), (-1, -1), (0, -1), (0, 0)],
    [(1, 0), (0, 1), (0, -1), (0, 0)],
    [(0, 0), (1, 0), (0, 0), (0, 0)],
    [(1, 0), (0, 0), (1, 0), (-1, 0)],
    [(1, 0), (0, 0), (-1, -1), (-1, 0)],
    [(1, 0), (0, 0), (1, 0), (1, 1)],
    [(1, 0), (0, 0), (0, 1), (-1, 0)],
    [(1, 0), (0, 0), (1, 0), (0, -1)],
    [(1, 0), (0, 0), (-1, -1), (1, 1)],
    [(1, 0), (0, 0), (0, 1), (1, 1)],
    [(1, 0), (0, 0), (-1, -1), (0, -1)],
    [(1, 0), (0, 0), (0, 1), (0, -1)],
    [(0, 0), (0, 0), (1, 0), (0, 0)],
    [(1, 0), (-1, 0), (0, 0), (1, 0)],
    [(1, 0), (1, 1), (0, 0), (1, 0)],
    [(1, 0), (-1, 0), (0, 0), (-1, -1)],
    [(1, 0), (0, -1), (0, 0), (1, 0)],
    [(1, 0), (-1, 0), (0, 0), (0, 1)],
    [(1, 0), (1, 1), (0, 0), (-1, -1)],
    [(1, 0), (1, 1), (0, 0), (0, 1)],
    [(1, 0), (0, -1), (0, 0), (-1, -1)],
    [(1, 0), (0, -1), (0, 0), (0, 1)],
    [(1, 0), (0, 0), (0, 0), (0, 0)],
    [(0, 0), (1, 0), (1, 0), (1, 0)],
    [(0, 0), (-1, -1), (1, 0), (1, 0)],
    [(0, 0), (1, 0), (1, 0), (-1, -1)],
    [(0, 0), (0, 1), (1, 0), (1, 0)],
    [(0, 0), (1, 0), (1, 0), (0, 1)],
    [(0, 0), (-1, -1), (1, 0), (-1, -1)],
    [(0, 0), (0, 1), (1, 0), (-1, -1)],
    [(0, 0), (-1, -1), (1, 0), (0, 1)],
    [(0, 0), (0, 1), (1, 0), (0, 1)],
];

/// Quadruples carrying the sign-pattern factors of the degree-63 polynomial
/// h with `(restricted E7 discriminant) = const * h^2` on the y slice.
/// Each contributes the eight factors `y_a + s2 y_b + s3 y_c + s4 y_d`.
pub const GR48_FACTOR_QUADS: [[usize; 4]; 7] = [
    [1, 2, 3, 6],
    [1, 3, 4, 5],
    [1, 2, 5, 7],
    [1, 4, 6, 7],
    [2, 3, 4, 7],
    [2, 4, 5, 6],
    [3, 5, 6, 7],
];

/// The 63 linear factors of the Gr(4,8) slice discriminant h: 56 quadruple
/// sign patterns plus the 7 coordinates.
pub fn gr48_slice_factors() -> Vec<Vec<Rat>> {
    let mut out = Vec::with_capacity(63);
    for quad in GR48_FACTOR_QUADS {
        for bits in 0..8u8 {
            let mut co = vec![Rat::zero(); 7];
            co[quad[0] - 1] = rat_i64(1);
            for (pos, &var) in quad[1..].iter().enumerate() {
                let sign = if bits >> pos & 1 == 0 { 1 } else { -1 };
                co[var - 1] = rat_i64(sign);
            }
            out.push(co);
        }
    }
    for i in 0..7 {
        let mut co = vec![Rat::zero(); 7];
        co[i] = rat_i64(1);
        out.push(co);
    }
    out
}

/// Gr39 slice factors as Eisenstein coordinate vectors.
pub fn gr39_slice_factors() -> Vec<Vec<Eisenstein>> {
    GR39_SLICE_FACTORS
        .iter()
        .map(|row| row.iter().map(|&(a, b)| Eisenstein::from_i64(a, b)).collect())
        .collect()
}

/// The 12 linear factors of the Vandermonde form on the 2x2x2x2 slice:
/// `(t_i - t_j)` and `(t_i + t_j)` for `i < j`.
pub fn cube2222_slice_factors() -> Vec<Vec<Rat>> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for sign in [-1i64, 1] {
                let mut co = vec![Rat::zero(); 4];
                co[i] = rat_i64(1);
                co[j] = rat_i64(sign);
                out.push(co);
            }
        }
    }
    out
}

/// Linear factors (with rational coordinates) of the slice discriminant used
/// for dual-point sampling; Gr39's are Eisenstein, so it is handled apart.
pub fn rational_slice_factors(family: Family) -> Result<Vec<Vec<Rat>>> {
    match family {
        Family::Gr48 => Ok(gr48_slice_factors()),
        Family::Cube2222 => Ok(cube2222_slice_factors()),
        _ => Err(Error::InvalidArgument(format!(
            "{} has no rational linear factor table",
            family.name()
        ))),
    }
}

fn eval_eis_linear(co: &[Eisenstein], point: &[Rat]) -> Eisenstein {
    let mut acc = Eisenstein::zero();
    for (c, x) in co.iter().zip(point) {
        acc += &c.scale(x);
    }
    acc
}

fn eval_rat_linear(co: &[Rat], point: &[Rat]) -> Rat {
    co.iter().zip(point).map(|(c, x)| c * x).sum()
}

/// Number of Gr39 slice factors vanishing at the point.
pub fn gr39_vanishing_factor_count(point: &[Rat]) -> usize {
    gr39_slice_factors()
        .iter()
        .filter(|co| eval_eis_linear(co, point).is_zero())
        .count()
}

/// Value of the degree-40 factored polynomial h on the z slice; always
/// rational (the factor list is stable under conjugation).
pub fn gr39_slice_h(point: &[Rat]) -> Rat {
    let mut acc = Eisenstein::one();
    for co in gr39_slice_factors() {
        acc = &acc * &eval_eis_linear(&co, point);
    }
    debug_assert!(acc.is_rational());
    acc.re
}

/// Value of the degree-63 factored polynomial h on the y slice.
pub fn gr48_slice_h(point: &[Rat]) -> Rat {
    gr48_slice_factors()
        .iter()
        .map(|co| eval_rat_linear(co, point))
        .product()
}

/// `prod_{i<j} (t_i - t_j)(t_i + t_j)`, all squared: the 2x2x2x2
/// hyperdeterminant on its semi-simple slice.
pub fn vandermonde_2222(t: &[Rat]) -> Rat {
    assert_eq!(t.len(), 4);
    let mut acc = Rat::one();
    for i in 0..4 {
        for j in i + 1..4 {
            let d = &t[i] - &t[j];
            let s = &t[i] + &t[j];
            acc *= &d * &d * (&s * &s);
        }
    }
    acc
}

/// Product of the restricted roots evaluated at a point. Roots that restrict
/// to zero on a sub-slice were already dropped by the family constructor, so
/// this is the product over the stored (nonzero) restricted roots; the
/// result is rational for every family (conjugation-stable root sets).
pub fn root_product_value(system: &RestrictedRootSystem, point: &[Rat]) -> Result<Rat> {
    if point.len() != system.family.coordinate_count() {
        return Err(Error::DimensionMismatch("root product point".into()));
    }
    let mut acc = Eisenstein::one();
    for root in &system.roots {
        acc = &acc * &eval_eis_linear(root, point);
    }
    if !acc.is_rational() {
        return Err(Error::Math(
            "root product has a nonzero omega part; root set is not conjugation-stable".into(),
        ));
    }
    Ok(acc.re)
}

/// Expand the product of the restricted roots into a polynomial. Rational
/// coordinates only (Gr48/Cube2222); the Gr39 product of 240 Eisenstein
/// forms is evaluate-only.
pub fn expand_root_product(system: &RestrictedRootSystem) -> Result<CoordinatePolynomial> {
    let names = system.family.coordinate_names();
    let mut acc = CoordinatePolynomial::from_terms(
        names.clone(),
        [(vec![0u8; names.len()], Rat::one())].into_iter().collect(),
    );
    for root in &system.roots {
        let mut lin = CoordinatePolynomial::zero(names.clone());
        for (i, c) in root.iter().enumerate() {
            if !c.is_rational() {
                return Err(Error::Math(
                    "expansion over Eisenstein coordinates is not supported; use evaluation".into(),
                ));
            }
            if !c.re.is_zero() {
                let mut e = vec![0u8; names.len()];
                e[i] = 1;
                lin.add_term(e, c.re.clone());
            }
        }
        acc = acc.mul(&lin)?;
    }
    Ok(acc)
}

/// The displayed degree-120 factorization of the 2x2x2x2 slice restriction
/// of the E7 root product (after deleting the six vanishing roots):
/// `prod (t_i +- t_j)^8 * prod (t1 +- t2 +- t3 +- t4)^2 * (t1 t2 t3 t4)^2`.
pub fn cube2222_deleted_product_display(t: &[Rat]) -> Rat {
    assert_eq!(t.len(), 4);
    let mut acc = Rat::one();
    for i in 0..4 {
        for j in i + 1..4 {
            let d = &t[i] - &t[j];
            let s = &t[i] + &t[j];
            let p = d * s;
            let p2 = &p * &p;
            let p4 = &p2 * &p2;
            acc *= &p4 * &p4;
        }
    }
    for bits in 0..8u8 {
        let mut v = t[0].clone();
        for k in 0..3 {
            let sign = if bits >> k & 1 == 0 { 1 } else { -1 };
            v += rat_i64(sign) * &t[k + 1];
        }
        acc *= &v * &v;
    }
    let prod = &t[0] * &t[1] * (&t[2] * &t[3]);
    acc *= &prod * &prod;
    acc
}

/// The 24 printed factors (8 linear, 16 quadratic) of the degree-40
/// polynomial h with `Delta_Gr(3,9) = const * h^3` on the z slice,
/// evaluated at a point.
pub fn del39_slice_h(z: &[Rat]) -> Rat {
    assert_eq!(z.len(), 4);
    let lin = |c: [i64; 4]| -> Rat {
        c.iter()
            .zip(z)
            .map(|(&a, x)| rat_i64(a) * x)
            .sum()
    };
    // coefficient order: z1^2, z1z2, z2^2, z1z3, z2z3, z3^2, z1z4, z2z4, z3z4, z4^2
    let quad = |c: [i64; 10]| -> Rat {
        let q = [
            (0, 0, c[0]),
            (0, 1, c[1]),
            (1, 1, c[2]),
            (0, 2, c[3]),
            (1, 2, c[4]),
            (2, 2, c[5]),
            (0, 3, c[6]),
            (1, 3, c[7]),
            (2, 3, c[8]),
            (3, 3, c[9]),
        ];
        q.iter()
            .map(|&(i, j, a)| rat_i64(a) * &z[i] * &z[j])
            .sum()
    };
    let mut acc = &z[0] * &z[1] * (&z[2] * &z[3]);
    for c in [
        [1, 1, -1, 0],
        [1, 0, 1, -1],
        [1, -1, 0, 1],
        [0, 1, 1, 1],
    ] {
        acc *= lin(c);
    }
    for c in [
        [1, -1, 1, 1, -2, 1, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, -1, -2, 0, 1],
        [1, 0, 0, -1, 0, 1, 1, 0, -2, 1],
        [0, 0, 1, 0, -1, 1, 0, -1, 2, 1],
        [1, -2, 1, 0, 0, 0, -1, 1, 0, 1],
        [1, -1, 1, -2, 1, 1, 0, 0, 0, 0],
        [1, -1, 1, 1, 1, 1, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, -1, 1, 0, 1],
        [1, 1, 1, 0, 0, 0, 2, 1, 0, 1],
        [1, 2, 1, 1, 1, 1, 0, 0, 0, 0],
        [1, 0, 0, -1, 0, 1, -2, 0, 1, 1],
        [1, 0, 0, -1, 0, 1, 1, 0, 1, 1],
        [1, 0, 0, 2, 0, 1, 1, 0, 1, 1],
        [0, 0, 1, 0, -1, 1, 0, -1, -1, 1],
        [0, 0, 1, 0, -1, 1, 0, 2, -1, 1],
        [0, 0, 1, 0, 2, 1, 0, -1, -1, 1],
    ] {
        acc *= quad(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::systems::{
        cube2222_restricted_roots, e7_restricted_roots, e8_restricted_roots,
    };
    use num_bigint::BigInt;

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_i64(x)).collect()
    }

    #[test]
    fn vandermonde_examples() {
        assert!(vandermonde_2222(&pt(&[1, 1, 2, 3])).is_zero());
        assert!(vandermonde_2222(&pt(&[1, -1, 2, 3])).is_zero());
        let v = vandermonde_2222(&pt(&[1, 2, 3, 4]));
        let expected = rat_i64(12 * 12600) * rat_i64(12 * 12600);
        assert_eq!(v, expected);
    }

    #[test]
    fn e8_product_is_constant_times_h_sixth() {
        let sys = e8_restricted_roots();
        // 3^132 for the stored 3*alpha scaling
        let expected = Rat::from_integer(BigInt::from(3u32).pow(132));
        for z in [&[2i64, 5, 7, 11][..], &[1, -3, 4, 9], &[6, 1, 1, 2]] {
            let z = pt(z);
            let h = gr39_slice_h(&z);
            if h.is_zero() {
                continue;
            }
            let p = root_product_value(&sys, &z).unwrap();
            assert_eq!(p / (h.clone() * &h * &h * &h * &h * &h), expected);
        }
    }

    #[test]
    fn e7_product_is_constant_times_h_squared() {
        let sys = e7_restricted_roots();
        let expected = -Rat::from_integer(BigInt::from(2u32).pow(140));
        for y in [
            &[2i64, 5, 7, 11, 3, 1, 4][..],
            &[1, -3, 4, 9, 2, 8, 5],
        ] {
            let y = pt(y);
            let h = gr48_slice_h(&y);
            if h.is_zero() {
                continue;
            }
            let p = root_product_value(&sys, &y).unwrap();
            assert_eq!(p / (&h * &h), expected);
        }
    }

    #[test]
    fn deleted_2222_product_matches_display() {
        let sys = cube2222_restricted_roots();
        let expected = Rat::from_integer(BigInt::from(2u32).pow(128));
        for t in [&[2i64, 5, 7, 11][..], &[1, -3, 4, 9]] {
            let t = pt(t);
            let disp = cube2222_deleted_product_display(&t);
            if disp.is_zero() {
                continue;
            }
            let p = root_product_value(&sys, &t).unwrap();
            assert_eq!(p / disp, expected);
        }
    }

    #[test]
    fn gr39_product_vanishes_when_a_coordinate_is_zero() {
        let sys = e8_restricted_roots();
        for i in 0..4 {
            let mut z = pt(&[3, 5, 7, 11]);
            z[i] = Rat::zero();
            assert!(root_product_value(&sys, &z).unwrap().is_zero());
        }
    }

    #[test]
    fn expand_matches_evaluation_on_cube2222() {
        let sys = cube2222_restricted_roots();
        let expanded = expand_root_product(&sys).unwrap();
        for t in [&[1i64, 2, 3, 4][..], &[2, -1, 5, 3]] {
            let t = pt(t);
            assert_eq!(expanded.evaluate(&t), root_product_value(&sys, &t).unwrap());
        }
    }

    #[test]
    fn factor_counts() {
        assert_eq!(gr39_slice_factors().len(), 40);
        assert_eq!(gr48_slice_factors().len(), 63);
        assert_eq!(cube2222_slice_factors().len(), 12);
    }
}
