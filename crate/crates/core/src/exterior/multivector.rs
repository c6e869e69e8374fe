//! Sparse multivectors with exact rational coefficients.

use crate::exactnum::Rat;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Element of `wedge^k C^n`, stored sparsely on the basis of strictly
/// increasing index tuples (1-based indices). Absent keys are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    n: u8,
    k: u8,
    entries: BTreeMap<Vec<u8>, Rat>,
}

/// Sign of sorting `idx` ascending, or `None` if an index repeats.
pub fn sort_with_sign(idx: &[u8]) -> Option<(i8, Vec<u8>)> {
    let mut v = idx.to_vec();
    let mut inv = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    v.sort_unstable();
    Some((if inv % 2 == 0 { 1 } else { -1 }, v))
}

/// Sign of merging two disjoint sorted tuples into one sorted tuple, and the
/// merged tuple; `None` when they intersect.
pub fn merge_sign(a: &[u8], b: &[u8]) -> Option<(i8, Vec<u8>)> {
    let mut inv = 0usize;
    for &x in a {
        for &y in b {
            if x == y {
                return None;
            }
            if x > y {
                inv += 1;
            }
        }
    }
    let mut merged = Vec::with_capacity(a.len() + b.len());
    merged.extend_from_slice(a);
    merged.extend_from_slice(b);
    merged.sort_unstable();
    Some((if inv % 2 == 0 { 1 } else { -1 }, merged))
}

impl Multivector {
    pub fn zero(n: u8, k: u8) -> Self {
        assert!(k <= n, "degree exceeds ambient dimension");
        Multivector {
            n,
            k,
            entries: BTreeMap::new(),
        }
    }

    /// Basis element `e_{i1} ^ ... ^ e_{ik}` for an arbitrary-order index
    /// tuple; the stored key is sorted and the sign applied. Repeated indices
    /// give zero.
    pub fn basis(n: u8, idx: &[u8]) -> Self {
        let mut t = Multivector::zero(n, idx.len() as u8);
        t.add_term(idx.to_vec(), Rat::from_integer(1.into()));
        t
    }

    pub fn ambient(&self) -> u8 {
        self.n
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u8>, &Rat)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: &[u8]) -> Rat {
        match sort_with_sign(idx) {
            None => Rat::zero(),
            Some((sign, key)) => {
                let v = self.entries.get(&key).cloned().unwrap_or_else(Rat::zero);
                if sign < 0 {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// Add `coeff * e_idx` (any index order, sign normalized; zero on repeats).
    pub fn add_term(&mut self, idx: Vec<u8>, coeff: Rat) {
        debug_assert!(idx.iter().all(|&i| i >= 1 && i <= self.n));
        debug_assert_eq!(idx.len(), self.k as usize);
        let Some((sign, key)) = sort_with_sign(&idx) else {
            return;
        };
        let add = if sign < 0 { -coeff } else { coeff };
        let slot = self.entries.entry(key).or_insert_with(Rat::zero);
        *slot += add;
        if slot.is_zero() {
            let key2 = {
                let mut k2 = idx;
                k2.sort_unstable();
                k2
            };
            self.entries.remove(&key2);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Multivector::zero(self.n, self.k);
        }
        Multivector {
            n: self.n,
            k: self.k,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DimensionMismatch("multivector addition".into()));
        }
        let mut out = self.clone();
        for (key, v) in &other.entries {
            let slot = out.entries.entry(key.clone()).or_insert_with(Rat::zero);
            *slot += v;
            if slot.is_zero() {
                out.entries.remove(key);
            }
        }
        Ok(out)
    }

    /// Alternating bilinear product; sign is the parity of the merge.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch("wedge of different ambients".into()));
        }
        if self.k + other.k > self.n {
            return Err(Error::DimensionMismatch(format!(
                "wedge degree {} + {} exceeds n = {}",
                self.k, other.k, self.n
            )));
        }
        let mut out = Multivector::zero(self.n, self.k + other.k);
        for (a, ca) in &self.entries {
            for (b, cb) in &other.entries {
                if let Some((sign, key)) = merge_sign(a, b) {
                    let term = ca * cb;
                    let term = if sign < 0 { -term } else { term };
                    let slot = out.entries.entry(key.clone()).or_insert_with(Rat::zero);
                    *slot += term;
                    if slot.is_zero() {
                        out.entries.remove(&key);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Interior pairing of `t` against `self`, adjoint to wedging by `t`:
    /// `<self.contract(t), b> = <self, t ^ b>` for every `b`, with the
    /// orthonormal pairing on sorted basis elements.
    pub fn contract(&self, t: &Multivector) -> Result<Multivector> {
        if self.n != t.n {
            return Err(Error::DimensionMismatch(
                "contraction of different ambients".into(),
            ));
        }
        if self.k < t.k {
            return Err(Error::DimensionMismatch(format!(
                "cannot contract degree {} against degree {}",
                t.k, self.k
            )));
        }
        let mut out = Multivector::zero(self.n, self.k - t.k);
        for (a, ca) in &self.entries {
            for (s, cs) in &t.entries {
                if !s.iter().all(|i| a.binary_search(i).is_ok()) {
                    continue;
                }
                let b: Vec<u8> = a.iter().copied().filter(|i| !s.contains(i)).collect();
                let (sign, merged) = merge_sign(s, &b).expect("disjoint by construction");
                debug_assert_eq!(&merged, a);
                let term = ca * cs;
                let term = if sign < 0 { -term } else { term };
                let slot = out.entries.entry(b.clone()).or_insert_with(Rat::zero);
                *slot += term;
                if slot.is_zero() {
                    out.entries.remove(&b);
                }
            }
        }
        Ok(out)
    }

    /// Isomorphism `wedge^k -> wedge^{n-k}` induced by the volume form
    /// `e_1 ^ ... ^ e_n`: sends `e_A` to `sgn(A, A^c) e_{A^c}`, so that
    /// `e_A ^ dual(e_A)` is the volume form.
    pub fn volume_dual(&self) -> Multivector {
        let mut out = Multivector::zero(self.n, self.n - self.k);
        for (a, ca) in &self.entries {
            let comp: Vec<u8> = (1..=self.n).filter(|i| !a.contains(i)).collect();
            let (sign, _) = merge_sign(a, &comp).expect("complement is disjoint");
            let term = if sign < 0 { -ca.clone() } else { ca.clone() };
            out.entries.insert(comp, term);
        }
        out
    }

    /// Induced action of an `n x n` matrix `g` on `wedge^k`:
    /// `e_{i1...ik} -> g e_{i1} ^ ... ^ g e_{ik}`.
    pub fn apply_group_element(&self, g: &[Vec<Rat>]) -> Result<Multivector> {
        let n = self.n as usize;
        if g.len() != n || g.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "group element must be {n} x {n}"
            )));
        }
        let mut out = Multivector::zero(self.n, self.k);
        for (a, ca) in &self.entries {
            // product over columns a[j]: image of each e_{a_j} is column a_j of g
            let mut images: Vec<Vec<(u8, Rat)>> = Vec::with_capacity(a.len());
            for &col in a {
                let mut v = Vec::new();
                for (row, grow) in g.iter().enumerate() {
                    let c = &grow[col as usize - 1];
                    if !c.is_zero() {
                        v.push((row as u8 + 1, c.clone()));
                    }
                }
                images.push(v);
            }
            // expand the wedge of the image vectors
            let mut terms: Vec<(Vec<u8>, Rat)> = vec![(Vec::new(), ca.clone())];
            for img in &images {
                let mut next = Vec::new();
                for (idx, coeff) in &terms {
                    for (row, c) in img {
                        if idx.contains(row) {
                            continue;
                        }
                        let mut idx2 = idx.clone();
                        idx2.push(*row);
                        next.push((idx2, coeff * c));
                    }
                }
                terms = next;
            }
            for (idx, coeff) in terms {
                out.add_term(idx, coeff);
            }
        }
        Ok(out)
    }

    /// Orthonormal pairing with a same-degree multivector.
    pub fn inner(&self, other: &Multivector) -> Rat {
        let mut acc = Rat::zero();
        for (k, v) in &self.entries {
            if let Some(w) = other.entries.get(k) {
                acc += v * w;
            }
        }
        acc
    }
}

impl std::fmt::Debug for Multivector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multivector(n={}, k={}, {{", self.n, self.k)?;
        for (key, v) in &self.entries {
            write!(f, " e{key:?}: {v},")?;
        }
        write!(f, " }})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_i64;

    #[test]
    fn wedge_basic() {
        let e12 = Multivector::basis(6, &[1, 2]);
        let e3 = Multivector::basis(6, &[3]);
        let w = e12.wedge(&e3).unwrap();
        assert_eq!(w.get(&[1, 2, 3]), rat_i64(1));
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn wedge_repeated_index_is_zero() {
        let e12 = Multivector::basis(6, &[1, 2]);
        let e1 = Multivector::basis(6, &[1]);
        assert!(e12.wedge(&e1).unwrap().is_empty());
    }

    #[test]
    fn wedge_across_basic_elements() {
        // e12 ^ e5678 = +e125678 (eight inversions)
        let e12 = Multivector::basis(8, &[1, 2]);
        let e5678 = Multivector::basis(8, &[5, 6, 7, 8]);
        let w = e12.wedge(&e5678).unwrap();
        assert_eq!(w.get(&[1, 2, 5, 6, 7, 8]), rat_i64(1));
    }

    #[test]
    fn contract_examples() {
        let e1234 = Multivector::basis(8, &[1, 2, 3, 4]);
        let scalar = e1234.contract(&e1234).unwrap();
        assert_eq!(scalar.get(&[]), rat_i64(1));

        let e5678 = Multivector::basis(8, &[5, 6, 7, 8]);
        assert!(e1234.contract(&e5678).unwrap().is_empty());

        let e125678 = Multivector::basis(8, &[1, 2, 5, 6, 7, 8]);
        let c = e125678.contract(&e5678).unwrap();
        assert_eq!(c.get(&[1, 2]), rat_i64(1));
    }

    #[test]
    fn contract_wrong_degree_errors() {
        let small = Multivector::basis(8, &[1, 2]);
        let big = Multivector::basis(8, &[1, 2, 3, 4]);
        assert!(small.contract(&big).is_err());
    }

    #[test]
    fn volume_dual_complement_and_involution() {
        let t = Multivector::basis(6, &[1, 2, 3, 4]);
        let d = t.volume_dual();
        assert_eq!(d.get(&[5, 6]), rat_i64(1));
        // involution sign (-1)^{k(n-k)} exhaustive for n = 6
        for k in 0..=6u8 {
            let sign = if (k as usize * (6 - k) as usize) % 2 == 0 {
                1
            } else {
                -1
            };
            let combos = combinations(6, k);
            for c in combos {
                let v = Multivector::basis(6, &c);
                let dd = v.volume_dual().volume_dual();
                assert_eq!(dd.get(&c), rat_i64(sign));
            }
        }
    }

    #[test]
    fn group_action_examples() {
        let t = Multivector::basis(5, &[1, 2]);
        let id: Vec<Vec<Rat>> = (0..5)
            .map(|i| (0..5).map(|j| rat_i64((i == j) as i64)).collect())
            .collect();
        assert_eq!(t.apply_group_element(&id).unwrap(), t);

        let mut diag = id.clone();
        diag[0][0] = rat_i64(2);
        let scaled = t.apply_group_element(&diag).unwrap();
        assert_eq!(scaled.get(&[1, 2]), rat_i64(2));
    }

    #[test]
    fn adjoint_identity_exhaustive_n8() {
        // <a.contract(t), b> = <a, t ^ b> over all basis elements,
        // a in wedge^6, t in wedge^4, b in wedge^2
        let sixes = combinations(8, 6);
        let fours = combinations(8, 4);
        let twos = combinations(8, 2);
        for a in &sixes {
            let av = Multivector::basis(8, a);
            for t in &fours {
                let tv = Multivector::basis(8, t);
                let left = av.contract(&tv).unwrap();
                for b in &twos {
                    let bv = Multivector::basis(8, b);
                    let lhs = left.inner(&bv);
                    let rhs = av.inner(&tv.wedge(&bv).unwrap());
                    assert_eq!(lhs, rhs, "a={a:?} t={t:?} b={b:?}");
                }
            }
        }
    }

    fn combinations(n: u8, k: u8) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: u8, n: u8, k: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if cur.len() == k as usize {
                out.push(cur.clone());
                return;
            }
            for i in start..=n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(1, n, k, &mut cur, &mut out);
        out
    }
}
