//! Basic semi-simple elements of each family and the tensors they span.

use super::systems::Family;
use crate::exactnum::{Rat, rat_i64};
use crate::exterior::{HypercubeTensor, Multivector, TensorData};
use crate::{Error, Result};
use num_traits::Zero;

/// Index triples of the four basic semi-simple elements of `wedge^3 C^9`.
pub const GR39_BASIS: [[[u8; 3]; 3]; 4] = [
    [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
    [[1, 4, 7], [2, 5, 8], [3, 6, 9]],
    [[1, 5, 9], [2, 6, 7], [3, 4, 8]],
    [[1, 6, 8], [2, 4, 9], [3, 5, 7]],
];

/// Index quadruples of the seven basic semi-simple elements of `wedge^4 C^8`.
pub const GR48_BASIS: [[[u8; 4]; 2]; 7] = [
    [[1, 2, 3, 4], [5, 6, 7, 8]],
    [[1, 3, 5, 7], [6, 8, 2, 4]],
    [[1, 5, 6, 2], [8, 4, 3, 7]],
    [[1, 6, 8, 3], [4, 7, 5, 2]],
    [[1, 8, 4, 5], [7, 2, 6, 3]],
    [[1, 4, 7, 6], [2, 3, 8, 5]],
    [[1, 7, 2, 8], [3, 5, 4, 6]],
];

/// 3x3x3 basic elements (x-coordinate index triples).
pub const CUBE333_BASIS: [[[u8; 3]; 3]; 3] = [
    [[0, 0, 0], [1, 1, 1], [2, 2, 2]],
    [[0, 1, 2], [2, 0, 1], [1, 2, 0]],
    [[0, 2, 1], [1, 0, 2], [2, 1, 0]],
];

/// 2x2x2x2 basic elements (x-coordinate index quadruples).
pub const CUBE2222_BASIS: [[[u8; 4]; 2]; 4] = [
    [[0, 0, 0, 0], [1, 1, 1, 1]],
    [[0, 1, 0, 1], [1, 0, 1, 0]],
    [[0, 1, 1, 0], [1, 0, 0, 1]],
    [[0, 0, 1, 1], [1, 1, 0, 0]],
];

/// Basic semi-simple tensors of a family, in coordinate order.
pub fn basis_tensors(family: Family) -> Vec<TensorData> {
    match family {
        Family::Gr39 => GR39_BASIS
            .iter()
            .map(|terms| {
                let mut t = Multivector::zero(9, 3);
                for idx in terms {
                    t.add_term(idx.to_vec(), rat_i64(1));
                }
                TensorData::Wedge(t)
            })
            .collect(),
        Family::Gr48 => GR48_BASIS
            .iter()
            .map(|terms| {
                let mut t = Multivector::zero(8, 4);
                for idx in terms {
                    t.add_term(idx.to_vec(), rat_i64(1));
                }
                TensorData::Wedge(t)
            })
            .collect(),
        Family::Cube333 => CUBE333_BASIS
            .iter()
            .map(|terms| {
                let mut t = HypercubeTensor::zero(vec![3, 3, 3]);
                for idx in terms {
                    t.add_entry(idx, rat_i64(1)).unwrap();
                }
                TensorData::Cube(t)
            })
            .collect(),
        Family::Cube2222 => CUBE2222_BASIS
            .iter()
            .map(|terms| {
                let mut t = HypercubeTensor::zero(vec![2, 2, 2, 2]);
                for idx in terms {
                    t.add_entry(idx, rat_i64(1)).unwrap();
                }
                TensorData::Cube(t)
            })
            .collect(),
    }
}

/// `sum_i coords[i] * p_i` as a concrete tensor.
pub fn semisimple_tensor(family: Family, coords: &[Rat]) -> Result<TensorData> {
    if coords.len() != family.coordinate_count() {
        return Err(Error::DimensionMismatch(format!(
            "{} needs {} coordinates, got {}",
            family.name(),
            family.coordinate_count(),
            coords.len()
        )));
    }
    let basis = basis_tensors(family);
    match family {
        Family::Gr39 | Family::Gr48 => {
            let (n, k) = if family == Family::Gr39 { (9, 3) } else { (8, 4) };
            let mut acc = Multivector::zero(n, k);
            for (c, b) in coords.iter().zip(&basis) {
                let t = b.as_wedge()?.scale(c);
                acc = acc.add(&t)?;
            }
            Ok(TensorData::Wedge(acc))
        }
        Family::Cube333 | Family::Cube2222 => {
            let dims = if family == Family::Cube333 {
                vec![3, 3, 3]
            } else {
                vec![2, 2, 2, 2]
            };
            let mut acc = HypercubeTensor::zero(dims);
            for (c, b) in coords.iter().zip(&basis) {
                let t = b.as_cube()?.scale(c);
                acc = acc.add(&t)?;
            }
            Ok(TensorData::Cube(acc))
        }
    }
}

/// The y coordinates of the Gr48 slice carrying the 2x2x2x2 sub-slice point
/// `t`: the basic elements p1, p4, p6, p7 project onto q1..q4 and the others
/// project to zero.
pub fn cube2222_y_point(t: &[Rat]) -> Vec<Rat> {
    assert_eq!(t.len(), 4);
    vec![
        t[0].clone(),
        Rat::zero(),
        Rat::zero(),
        t[1].clone(),
        Rat::zero(),
        t[2].clone(),
        t[3].clone(),
    ]
}

/// Block structure identifying `C^2 x C^2 x C^2 x C^2` inside `wedge^4 C^8`.
pub fn cube2222_grouping() -> Vec<Vec<u8>> {
    vec![vec![1, 5], vec![2, 6], vec![3, 7], vec![4, 8]]
}

/// Block structure identifying `C^3 x C^3 x C^3` inside `wedge^3 C^9`.
pub fn cube333_grouping() -> Vec<Vec<u8>> {
    vec![vec![1, 4, 7], vec![2, 5, 8], vec![3, 6, 9]]
}
