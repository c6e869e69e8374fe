//! Monomial bases of weighted-homogeneous polynomials in the fundamental
//! invariants.

use crate::roots::Family;

/// All exponent vectors `e` with `sum e_i * degrees_i = total`, in graded
/// lexicographic order (descending lex; the pure power of the first
/// generator comes first, the pure power of the last comes last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    pub degrees: Vec<u32>,
    pub names: Vec<String>,
    pub total: u32,
    pub exponents: Vec<Vec<u8>>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn position(&self, exps: &[u8]) -> Option<usize> {
        self.exponents.iter().position(|e| e == exps)
    }

    /// Basis for a family's fundamental degrees at its discriminant degree.
    pub fn for_family(family: Family, total: u32) -> Self {
        let degrees: Vec<u32> = family.fundamental_degrees().to_vec();
        let names = degrees.iter().map(|d| format!("f{d}")).collect();
        let exponents = enumerate_exponents(&degrees, total);
        MonomialBasis {
            degrees,
            names,
            total,
            exponents,
        }
    }
}

/// Enumerate the solutions of `sum e_i d_i = total` over nonnegative
/// integers, graded-lex ordered (descending).
pub fn enumerate_monomials(degrees: &[u32], total: u32) -> MonomialBasis {
    MonomialBasis {
        degrees: degrees.to_vec(),
        names: degrees.iter().map(|d| format!("f{d}")).collect(),
        total,
        exponents: enumerate_exponents(degrees, total),
    }
}

fn enumerate_exponents(degrees: &[u32], total: u32) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; degrees.len()];
    fn rec(degrees: &[u32], i: usize, rem: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i == degrees.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = degrees[i];
        let max = rem / d;
        for e in 0..=max {
            cur[i] = e as u8;
            rec(degrees, i + 1, rem - e * d, cur, out);
        }
        cur[i] = 0;
    }
    rec(degrees, 0, total, &mut cur, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
