//! Exact exterior-algebra arithmetic on `wedge^k C^n` and the hypercube
//! tensor formats it projects onto.

mod hypercube;
mod io;
mod multivector;

pub use hypercube::HypercubeTensor;
pub use io::{read_tensor, write_tensor, TensorData};
pub use multivector::{merge_sign, sort_with_sign, Multivector};

use crate::exactnum::Rat;
use crate::{Error, Result};
use num_traits::Zero;

/// Project a multivector into a hypercube tensor format determined by a
/// partition of `{1..n}` into equal-size blocks, one block per tensor mode.
///
/// A wedge basis element with exactly one index in each block maps to the
/// corresponding `x_I` (the position of the index inside its block), signed
/// by the permutation that rearranges the indices into block order. Basis
/// elements with two indices in one block map to zero.
pub fn project_to_hypercube(t: &Multivector, grouping: &[Vec<u8>]) -> Result<HypercubeTensor> {
    validate_grouping(t.ambient(), grouping)?;
    let modes = grouping.len();
    let block_size = grouping[0].len() as u8;
    let mut out = HypercubeTensor::zero(vec![block_size; modes]);
    'entry: for (key, coeff) in t.entries() {
        if key.len() != modes {
            return Err(Error::DimensionMismatch(format!(
                "degree {} tensor cannot project onto {} modes",
                key.len(),
                modes
            )));
        }
        // block-ordered index list: one entry per mode or bail
        let mut placed: Vec<Option<u8>> = vec![None; modes];
        let mut block_ordered = vec![0u8; modes];
        for &idx in key {
            let Some((b, pos)) = locate(grouping, idx) else {
                unreachable!("index within ambient dimension");
            };
            if placed[b].is_some() {
                continue 'entry; // two indices in one block
            }
            placed[b] = Some(pos);
            block_ordered[b] = idx;
        }
        let sign = permutation_sign(&block_ordered);
        let digits: Vec<u8> = placed.into_iter().map(|p| p.unwrap()).collect();
        let val = if sign < 0 { -coeff.clone() } else { coeff.clone() };
        out.add_entry(&digits, val)?;
    }
    Ok(out)
}

/// Inverse of [`project_to_hypercube`] on its image: embed a hypercube tensor
/// into `wedge^modes C^n`, sending `x_I` to the block-ordered wedge monomial.
pub fn embed_hypercube(x: &HypercubeTensor, grouping: &[Vec<u8>], n: u8) -> Result<Multivector> {
    validate_grouping(n, grouping)?;
    if x.dims().len() != grouping.len() {
        return Err(Error::DimensionMismatch(
            "mode count does not match grouping".into(),
        ));
    }
    let mut out = Multivector::zero(n, grouping.len() as u8);
    for (digits, coeff) in x.entries() {
        let block_ordered: Vec<u8> = digits
            .iter()
            .enumerate()
            .map(|(b, &d)| grouping[b][d as usize])
            .collect();
        let (sign, sorted) = sort_with_sign(&block_ordered)
            .expect("blocks are disjoint, indices distinct");
        let val = if sign < 0 { -coeff.clone() } else { coeff.clone() };
        out.add_term(sorted, val);
    }
    Ok(out)
}

fn validate_grouping(n: u8, grouping: &[Vec<u8>]) -> Result<()> {
    if grouping.is_empty() {
        return Err(Error::InvalidArgument("empty grouping".into()));
    }
    let size = grouping[0].len();
    let mut seen = vec![false; n as usize + 1];
    let mut total = 0usize;
    for block in grouping {
        if block.len() != size {
            return Err(Error::InvalidArgument(
                "grouping blocks must have equal size".into(),
            ));
        }
        for &i in block {
            if i == 0 || i > n || seen[i as usize] {
                return Err(Error::InvalidArgument(format!(
                    "grouping is not a partition of 1..={n}"
                )));
            }
            seen[i as usize] = true;
            total += 1;
        }
    }
    if total != n as usize {
        return Err(Error::InvalidArgument(format!(
            "grouping covers {total} of {n} indices"
        )));
    }
    Ok(())
}

fn locate(grouping: &[Vec<u8>], idx: u8) -> Option<(usize, u8)> {
    for (b, block) in grouping.iter().enumerate() {
        if let Some(pos) = block.iter().position(|&x| x == idx) {
            return Some((b, pos as u8));
        }
    }
    None
}

fn permutation_sign(seq: &[u8]) -> i8 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Average a hypercube tensor with equal mode sizes over all permutations of
/// each multi-index; the result is indexed by sorted multi-indices.
pub fn symmetrize(x: &HypercubeTensor) -> Result<Vec<(Vec<u8>, Rat)>> {
    let dims = x.dims();
    let d0 = dims[0];
    if dims.iter().any(|&d| d != d0) {
        return Err(Error::InvalidArgument(
            "symmetrize needs equal mode sizes".into(),
        ));
    }
    let modes = dims.len();
    let mut acc: std::collections::BTreeMap<Vec<u8>, Rat> = Default::default();
    for (digits, coeff) in x.entries() {
        let mut key = digits.to_vec();
        key.sort_unstable();
        *acc.entry(key).or_insert_with(Rat::zero) += coeff;
    }
    let fact: usize = (1..=modes).product();
    let mut out = Vec::new();
    for (key, total) in acc {
        // number of distinct permutations of this multiset
        let mut perms = fact;
        let mut run = 1usize;
        for i in 1..key.len() {
            if key[i] == key[i - 1] {
                run += 1;
                perms /= run;
            } else {
                run = 1;
            }
        }
        let avg = total / Rat::from_integer(perms.into());
        if !avg.is_zero() {
            out.push((key, avg));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_i64;

    fn blocks_2222() -> Vec<Vec<u8>> {
        vec![vec![1, 5], vec![2, 6], vec![3, 7], vec![4, 8]]
    }

    #[test]
    fn projection_of_first_basic_element() {
        // e1234 + e5678 -> x0000 + x1111
        let mut t = Multivector::zero(8, 4);
        t.add_term(vec![1, 2, 3, 4], rat_i64(1));
        t.add_term(vec![5, 6, 7, 8], rat_i64(1));
        let q = project_to_hypercube(&t, &blocks_2222()).unwrap();
        assert_eq!(q.get(&[0, 0, 0, 0]), rat_i64(1));
        assert_eq!(q.get(&[1, 1, 1, 1]), rat_i64(1));
        assert_eq!(q.entries().count(), 2);
    }

    #[test]
    fn projection_kills_blocked_monomials() {
        // e1357 + e2468: 1,5 share a block; 2,6 share a block
        let mut t = Multivector::zero(8, 4);
        t.add_term(vec![1, 3, 5, 7], rat_i64(1));
        t.add_term(vec![2, 4, 6, 8], rat_i64(1));
        let q = project_to_hypercube(&t, &blocks_2222()).unwrap();
        assert_eq!(q.entries().count(), 0);
    }

    #[test]
    fn six_dim_triple_blocks() {
        let mut t = Multivector::zero(6, 3);
        t.add_term(vec![1, 2, 3], rat_i64(1));
        let q =
            project_to_hypercube(&t, &[vec![1, 4], vec![2, 5], vec![3, 6]]).unwrap();
        assert_eq!(q.get(&[0, 0, 0]), rat_i64(1));
        assert_eq!(q.entries().count(), 1);
    }

    #[test]
    fn embed_then_project_is_identity() {
        let mut x = HypercubeTensor::zero(vec![2, 2, 2, 2]);
        x.add_entry(&[0, 1, 1, 0], rat_i64(3)).unwrap();
        x.add_entry(&[1, 0, 1, 1], rat_i64(-2)).unwrap();
        let t = embed_hypercube(&x, &blocks_2222(), 8).unwrap();
        let back = project_to_hypercube(&t, &blocks_2222()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn symmetrize_examples() {
        let mut x = HypercubeTensor::zero(vec![2, 2, 2]);
        x.add_entry(&[0, 0, 1], rat_i64(1)).unwrap();
        x.add_entry(&[0, 1, 0], rat_i64(1)).unwrap();
        x.add_entry(&[1, 0, 0], rat_i64(1)).unwrap();
        let s = symmetrize(&x).unwrap();
        assert_eq!(s, vec![(vec![0, 0, 1], rat_i64(1))]);

        let zero = HypercubeTensor::zero(vec![2, 2, 2]);
        assert!(symmetrize(&zero).unwrap().is_empty());

        let bad = HypercubeTensor::zero(vec![2, 3]);
        assert!(symmetrize(&bad).is_err());
    }

    #[test]
    fn invalid_partition_rejected() {
        let t = Multivector::zero(8, 4);
        assert!(project_to_hypercube(&t, &[vec![1, 2], vec![3, 4]]).is_err());
        assert!(project_to_hypercube(&t, &[vec![1, 2], vec![3], vec![4, 5], vec![6, 7]]).is_err());
    }
}
