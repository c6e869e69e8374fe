//! Restricted root systems of E8 and E7 on the semi-simple coordinate spaces.

use crate::exactnum::Eisenstein;
use crate::{Error, Result};

/// The semi-simple families the pipeline works with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `wedge^3 C^9`, coordinates z1..z4, invariant degrees 12, 18, 24, 30.
    Gr39,
    /// `wedge^4 C^8`, coordinates y1..y7, invariant degrees 2..18.
    Gr48,
    /// 3x3x3 tensors, coordinates b, c, d.
    Cube333,
    /// 2x2x2x2 tensors, coordinates t1..t4, invariant degrees 2, 6, 8, 12.
    Cube2222,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Gr39 => "gr39",
            Family::Gr48 => "gr48",
            Family::Cube333 => "cube333",
            Family::Cube2222 => "cube2222",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "gr39" => Ok(Family::Gr39),
            "gr48" => Ok(Family::Gr48),
            "cube333" => Ok(Family::Cube333),
            "cube2222" | "hd2222" => Ok(Family::Cube2222),
            _ => Err(Error::UnknownName(s.into())),
        }
    }

    pub fn coordinate_count(&self) -> usize {
        match self {
            Family::Gr39 => 4,
            Family::Gr48 => 7,
            Family::Cube333 => 3,
            Family::Cube2222 => 4,
        }
    }

    pub fn coordinate_names(&self) -> Vec<String> {
        match self {
            Family::Gr39 => (1..=4).map(|i| format!("z{i}")).collect(),
            Family::Gr48 => (1..=7).map(|i| format!("y{i}")).collect(),
            Family::Cube333 => ["b", "c", "d"].iter().map(|s| s.to_string()).collect(),
            Family::Cube2222 => (1..=4).map(|i| format!("t{i}")).collect(),
        }
    }

    /// Degrees of the fundamental invariants restricted to this family.
    pub fn fundamental_degrees(&self) -> &'static [u32] {
        match self {
            Family::Gr39 => &[12, 18, 24, 30],
            Family::Gr48 => &[2, 6, 8, 10, 12, 14, 18],
            Family::Cube333 => &[],
            Family::Cube2222 => &[2, 6, 8, 12],
        }
    }
}

/// Restricted roots: one linear form (Eisenstein-rational coordinates) per
/// root of the ambient Lie algebra, expressed in the family's semi-simple
/// coordinates. The stored E8 forms are 3*alpha (Eisenstein integers); the
/// global power of 3 cancels in content normalization and ratio tests.
#[derive(Clone, Debug)]
pub struct RestrictedRootSystem {
    pub family: Family,
    pub roots: Vec<Vec<Eisenstein>>,
}

/// Coordinate transposition relating a published table to the canonical
/// coordinates used throughout this crate (0-based indices, 1-based names):
///
/// * `Gr39 -> (1, 2)`: the printed 3*epsilon restriction table transposes
///   z2 and z3 relative to the labeling in which the invariant tables, the
///   slice discriminant display and the trace-matrix invariants live. The
///   canonical root system below already applies the swap.
/// * `Gr48 -> (3, 5)`: the published fundamental-invariant tables transpose
///   y4 and y6 relative to the epsilon substitution table; here the
///   substitution labeling is canonical and the swap is applied when
///   checking the published tables.
pub fn table_transposition(family: Family) -> Option<(usize, usize)> {
    match family {
        Family::Gr39 => Some((1, 2)),
        Family::Gr48 => Some((3, 5)),
        _ => None,
    }
}

/// The nine rows of the E8 weight restriction table: `3 eps_i(p)` as
/// Eisenstein-integer pairs `(a, b)` meaning `a + b*omega`, columns z1..z4,
/// in the printed column order.
pub const E8_EPSILON_TABLE: [[(i64, i64); 4]; 9] = [
    [(1, 0), (1, 0), (1, 0), (1, 0)],
    [(1, 0), (0, 1), (0, 1), (0, 1)],
    [(1, 0), (-1, -1), (-1, -1), (-1, -1)],
    [(0, 1), (1, 0), (-1, -1), (0, 1)],
    [(0, 1), (0, 1), (1, 0), (-1, -1)],
    [(0, 1), (-1, -1), (0, 1), (1, 0)],
    [(-1, -1), (1, 0), (0, 1), (-1, -1)],
    [(-1, -1), (0, 1), (-1, -1), (1, 0)],
    [(-1, -1), (-1, -1), (1, 0), (0, 1)],
];

/// The eight rows of the E7 weight substitution table: `eps_i(p)` signs,
/// columns y1..y7.
pub const E7_EPSILON_TABLE: [[i64; 7]; 8] = [
    [1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, -1, -1, -1, 1],
    [1, 1, -1, 1, -1, -1, -1],
    [1, -1, -1, -1, 1, 1, -1],
    [-1, 1, 1, -1, 1, -1, -1],
    [-1, -1, 1, 1, -1, 1, -1],
    [-1, 1, -1, -1, -1, 1, 1],
    [-1, -1, -1, 1, 1, -1, 1],
];

fn e8_rows_canonical() -> Vec<Vec<Eisenstein>> {
    E8_EPSILON_TABLE
        .iter()
        .map(|row| {
            let mut r: Vec<Eisenstein> = row
                .iter()
                .map(|&(a, b)| Eisenstein::from_i64(a, b))
                .collect();
            r.swap(1, 2); // canonical labeling; see table_transposition
            r
        })
        .collect()
}

fn vec_sub(a: &[Eisenstein], b: &[Eisenstein]) -> Vec<Eisenstein> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_neg(a: &[Eisenstein]) -> Vec<Eisenstein> {
    a.iter().map(|x| -x).collect()
}

/// All 240 roots of E8 restricted to the z coordinates: the 72 differences
/// `eps_i - eps_j` and the 168 triple sums `+-(eps_i + eps_j + eps_k)`, each
/// substituted through the restriction table (scaled by 3).
pub fn e8_restricted_roots() -> RestrictedRootSystem {
    let rows = e8_rows_canonical();
    let mut roots = Vec::with_capacity(240);
    for i in 0..9 {
        for j in 0..9 {
            if i != j {
                roots.push(vec_sub(&rows[i], &rows[j]));
            }
        }
    }
    for i in 0..9 {
        for j in i + 1..9 {
            for k in j + 1..9 {
                let mut s = rows[i].clone();
                for (x, y) in s.iter_mut().zip(&rows[j]) {
                    *x += y;
                }
                for (x, y) in s.iter_mut().zip(&rows[k]) {
                    *x += y;
                }
                roots.push(vec_neg(&s));
                roots.push(s);
            }
        }
    }
    debug_assert_eq!(roots.len(), 240);
    RestrictedRootSystem {
        family: Family::Gr39,
        roots,
    }
}

/// All 126 roots of E7 restricted to the y coordinates: the 56 differences
/// `eps_i - eps_j` and the 70 four-subset sums (weights of `wedge^4 C^8`).
pub fn e7_restricted_roots() -> RestrictedRootSystem {
    let rows: Vec<Vec<Eisenstein>> = E7_EPSILON_TABLE
        .iter()
        .map(|row| row.iter().map(|&s| Eisenstein::from_i64(s, 0)).collect())
        .collect();
    let mut roots = Vec::with_capacity(126);
    for i in 0..8 {
        for j in 0..8 {
            if i != j {
                roots.push(vec_sub(&rows[i], &rows[j]));
            }
        }
    }
    for a in 0..8 {
        for b in a + 1..8 {
            for c in b + 1..8 {
                for d in c + 1..8 {
                    let mut s = rows[a].clone();
                    for other in [b, c, d] {
                        for (x, y) in s.iter_mut().zip(&rows[other]) {
                            *x += y;
                        }
                    }
                    roots.push(s);
                }
            }
        }
    }
    debug_assert_eq!(roots.len(), 126);
    RestrictedRootSystem {
        family: Family::Gr48,
        roots,
    }
}

/// E7 roots restricted further to the 2x2x2x2 semi-simple coordinates via
/// `y = (t1, 0, 0, t2, 0, t3, t4)`; the six roots that restrict to zero are
/// dropped (they contribute nothing to power sums, and products are taken
/// over the surviving 120).
pub fn cube2222_restricted_roots() -> RestrictedRootSystem {
    let e7 = e7_restricted_roots();
    let picks = [0usize, 3, 5, 6]; // y1, y4, y6, y7 carry t1..t4
    let mut roots = Vec::new();
    for r in &e7.roots {
        let restricted: Vec<Eisenstein> = picks.iter().map(|&i| r[i].clone()).collect();
        if restricted.iter().any(|c| !c.is_zero()) {
            roots.push(restricted);
        }
    }
    debug_assert_eq!(roots.len(), 120);
    RestrictedRootSystem {
        family: Family::Cube2222,
        roots,
    }
}

/// Restricted roots for a family that has them.
pub fn restricted_roots(family: Family) -> Result<RestrictedRootSystem> {
    match family {
        Family::Gr39 => Ok(e8_restricted_roots()),
        Family::Gr48 => Ok(e7_restricted_roots()),
        Family::Cube2222 => Ok(cube2222_restricted_roots()),
        Family::Cube333 => Err(Error::InvalidArgument(
            "the 3x3x3 family carries no root system in this pipeline".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_i64;

    #[test]
    fn root_counts() {
        assert_eq!(e8_restricted_roots().roots.len(), 240);
        assert_eq!(e7_restricted_roots().roots.len(), 126);
        assert_eq!(cube2222_restricted_roots().roots.len(), 120);
    }

    #[test]
    fn epsilon_rows_sum_to_zero() {
        for table in [true, false] {
            let rows = if table {
                e8_rows_canonical()
            } else {
                E8_EPSILON_TABLE
                    .iter()
                    .map(|r| r.iter().map(|&(a, b)| Eisenstein::from_i64(a, b)).collect())
                    .collect()
            };
            for col in 0..4 {
                let mut s = Eisenstein::zero();
                for row in &rows {
                    s += &row[col];
                }
                assert!(s.is_zero());
            }
        }
        for col in 0..7 {
            let s: i64 = E7_EPSILON_TABLE.iter().map(|r| r[col]).sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn first_triple_sum_is_pure_z1() {
        // eps1 + eps2 + eps3 restricted -> 3 z1 (table rows scaled by 3)
        let rows = e8_rows_canonical();
        let mut s = rows[0].clone();
        for (x, y) in s.iter_mut().zip(&rows[1]) {
            *x += y;
        }
        for (x, y) in s.iter_mut().zip(&rows[2]) {
            *x += y;
        }
        assert_eq!(s[0], Eisenstein::from_i64(3, 0));
        for c in &s[1..] {
            assert!(c.is_zero());
        }
    }

    #[test]
    fn first_quad_sum_is_pure_y1() {
        // eps1 + eps2 + eps3 + eps4 restricted -> 4 y1
        let mut s = [0i64; 7];
        for row in &E7_EPSILON_TABLE[..4] {
            for (a, b) in s.iter_mut().zip(row) {
                *a += b;
            }
        }
        assert_eq!(s, [4, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn roots_come_in_opposite_pairs() {
        for system in [e8_restricted_roots(), e7_restricted_roots()] {
            for r in &system.roots {
                let neg: Vec<Eisenstein> = r.iter().map(|c| -c).collect();
                assert!(
                    system.roots.contains(&neg),
                    "missing negative in {:?}",
                    system.family
                );
                assert!(r.iter().any(|c| !c.is_zero()));
            }
        }
    }

    #[test]
    fn family_names_roundtrip() {
        for f in [Family::Gr39, Family::Gr48, Family::Cube333, Family::Cube2222] {
            assert_eq!(Family::from_name(f.name()).unwrap(), f);
        }
        assert_eq!(Family::from_name("hd2222").unwrap(), Family::Cube2222);
        assert!(Family::from_name("nope").is_err());
        let _ = rat_i64(0);
    }
}
