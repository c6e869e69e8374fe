//! Sparse multivariate polynomials with exact rational coefficients,
//! the carrier for restricted invariants and slice discriminants.

use crate::exactnum::{format_rat, parse_rat, PrimeField, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

/// Polynomial in named coordinates; terms keyed by exponent vectors in
/// canonical (BTreeMap) order, zero coefficients never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct CoordinatePolynomial {
    pub vars: Vec<String>,
    terms: BTreeMap<Vec<u8>, Rat>,
}

impl CoordinatePolynomial {
    pub fn zero(vars: Vec<String>) -> Self {
        CoordinatePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(vars: Vec<String>, terms: BTreeMap<Vec<u8>, Rat>) -> Self {
        let mut p = CoordinatePolynomial { vars, terms };
        p.terms.retain(|_, v| !v.is_zero());
        p
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u8]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u8>, coeff: Rat) {
        debug_assert_eq!(exps.len(), self.nvars());
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rat::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Fast evaluation at an integer point (requires integer coefficients),
    /// using per-variable power tables.
    pub fn evaluate_int(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars());
        debug_assert!(self.has_integer_coefficients());
        let max_exp: Vec<u8> = (0..self.nvars())
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<BigInt>> = point
            .iter()
            .zip(&max_exp)
            .map(|(x, &m)| {
                let mut tab = Vec::with_capacity(m as usize + 1);
                tab.push(BigInt::one());
                for e in 1..=m as usize {
                    let next = &tab[e - 1] * x;
                    tab.push(next);
                }
                tab
            })
            .collect();
        let mut acc = BigInt::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.numer().clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term *= &powers[i][e as usize];
                }
            }
            acc += term;
        }
        acc
    }

    /// Evaluation mod p at a residue point (requires integer coefficients).
    pub fn evaluate_modp(&self, field: &PrimeField, point: &[u64]) -> u64 {
        assert_eq!(point.len(), self.nvars());
        let mut acc = 0u64;
        for (exps, coeff) in &self.terms {
            let mut term = field.reduce_bigint(coeff.numer());
            if !coeff.denom().is_one() {
                let d = field.reduce_bigint(coeff.denom());
                term = field.mul(term, field.inv(d));
            }
            for (&x, &e) in point.iter().zip(exps) {
                term = field.mul(term, field.pow(x, e as u64));
            }
            acc = field.add(acc, term);
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return CoordinatePolynomial::zero(self.vars.clone());
        }
        CoordinatePolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch("polynomial addition".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch("polynomial product".into()));
        }
        let mut out = CoordinatePolynomial::zero(self.vars.clone());
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let key: Vec<u8> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(key, va * vb);
            }
        }
        Ok(out)
    }

    /// Apply a signed permutation of the variables: `map[i] = (j, sign)`
    /// substitutes `x_i -> sign * x_j`.
    pub fn signed_permutation(&self, map: &[(usize, i8)]) -> Self {
        assert_eq!(map.len(), self.nvars());
        let mut out = CoordinatePolynomial::zero(self.vars.clone());
        for (exps, coeff) in &self.terms {
            let mut new_exps = vec![0u8; self.nvars()];
            let mut sign = 1i8;
            for (i, &e) in exps.iter().enumerate() {
                let (j, s) = map[i];
                new_exps[j] += e;
                if s < 0 && e % 2 == 1 {
                    sign = -sign;
                }
            }
            let c = if sign < 0 { -coeff.clone() } else { coeff.clone() };
            out.add_term(new_exps, c);
        }
        out
    }

    /// Swap two variables (exponent relabeling).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut map: Vec<(usize, i8)> = (0..self.nvars()).map(|k| (k, 1)).collect();
        map[i] = (j, 1);
        map[j] = (i, 1);
        self.signed_permutation(&map)
    }

    /// Divide by the integer content and fix the sign so the pure power of
    /// the first variable (if present) has a positive coefficient. Requires
    /// integer coefficients.
    pub fn normalize_content(&self) -> Result<(Self, BigInt)> {
        if !self.has_integer_coefficients() {
            return Err(Error::Math(
                "content normalization needs integer coefficients".into(),
            ));
        }
        let ints: Vec<BigInt> = self.terms.values().map(|v| v.numer().clone()).collect();
        let g = crate::exactnum::content(&ints)?;
        let mut out = CoordinatePolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), Rat::from_integer(v.numer() / &g)))
                .collect(),
        };
        let d = out.total_degree();
        let mut pure = vec![0u8; self.nvars()];
        if self.nvars() > 0 {
            pure[0] = d as u8;
        }
        if let Some(c) = out.terms.get(&pure) {
            if c.is_negative() {
                out = out.scale(&Rat::from_integer(BigInt::from(-1)));
            }
        }
        Ok((out, g))
    }

    /// Serialize as one `e1 e2 ... ek value` line per term.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        writeln!(f, "vars: {}", self.vars.join(" "))?;
        for (exps, coeff) in &self.terms {
            let e: Vec<String> = exps.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{} {}", e.join(" "), format_rat(coeff))?;
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        let mut lines = BufReader::new(f).lines();
        let header = lines
            .next()
            .ok_or(Error::Parse {
                line: 1,
                msg: "empty polynomial file".into(),
            })??;
        let vars: Vec<String> = header
            .strip_prefix("vars:")
            .ok_or(Error::Parse {
                line: 1,
                msg: "missing `vars:` header".into(),
            })?
            .split_whitespace()
            .map(String::from)
            .collect();
        let nvars = vars.len();
        let mut out = CoordinatePolynomial::zero(vars);
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            let line = line?;
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let parts: Vec<&str> = t.split_whitespace().collect();
            if parts.len() != nvars + 1 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected {nvars} exponents and a value"),
                });
            }
            let mut exps = Vec::with_capacity(nvars);
            for p in &parts[..nvars] {
                exps.push(p.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad exponent `{p}`"),
                })?);
            }
            let coeff = parse_rat(parts[nvars]).map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad rational `{}`", parts[nvars]),
            })?;
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

impl std::fmt::Debug for CoordinatePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CoordinatePolynomial[{} terms in {:?}]", self.len(), self.vars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_i64;

    fn vars(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("z{i}")).collect()
    }

    #[test]
    fn arithmetic_and_eval() {
        let mut p = CoordinatePolynomial::zero(vars(2));
        p.add_term(vec![2, 0], rat_i64(1));
        p.add_term(vec![0, 2], rat_i64(-1));
        let at = p.evaluate(&[rat_i64(5), rat_i64(3)]);
        assert_eq!(at, rat_i64(16));
        assert_eq!(
            p.evaluate_int(&[BigInt::from(5), BigInt::from(3)]),
            BigInt::from(16)
        );
        let q = p.mul(&p).unwrap();
        assert_eq!(q.evaluate(&[rat_i64(5), rat_i64(3)]), rat_i64(256));
    }

    #[test]
    fn content_normalization() {
        let mut p = CoordinatePolynomial::zero(vars(1));
        p.add_term(vec![2], rat_i64(-6));
        p.add_term(vec![0], rat_i64(-9));
        let (n, g) = p.normalize_content().unwrap();
        assert_eq!(g, BigInt::from(3));
        assert_eq!(n.coefficient(&[2]), rat_i64(2)); // sign flipped: pure power positive
        assert_eq!(n.coefficient(&[0]), rat_i64(3));
    }

    #[test]
    fn signed_permutation_and_swap() {
        let mut p = CoordinatePolynomial::zero(vars(2));
        p.add_term(vec![3, 0], rat_i64(1));
        p.add_term(vec![1, 1], rat_i64(2));
        // z1 -> -z2, z2 -> z1
        let q = p.signed_permutation(&[(1, -1), (0, 1)]);
        assert_eq!(q.coefficient(&[0, 3]), rat_i64(-1));
        assert_eq!(q.coefficient(&[1, 1]), rat_i64(-2));
        let r = p.swap_vars(0, 1);
        assert_eq!(r.coefficient(&[0, 3]), rat_i64(1));
        assert_eq!(r.coefficient(&[1, 1]), rat_i64(2));
    }

    #[test]
    fn save_load_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.poly");
        let mut p = CoordinatePolynomial::zero(vars(3));
        p.add_term(vec![1, 2, 0], crate::exactnum::rat_frac(-7, 5));
        p.add_term(vec![0, 0, 3], rat_i64(4));
        p.save(&path).unwrap();
        assert_eq!(CoordinatePolynomial::load(&path).unwrap(), p);
    }

    #[test]
    fn modp_matches_integer_eval() {
        let field = PrimeField::new(1009);
        let mut p = CoordinatePolynomial::zero(vars(2));
        p.add_term(vec![5, 1], rat_i64(17));
        p.add_term(vec![0, 2], rat_i64(-3));
        let x = [BigInt::from(12), BigInt::from(-7)];
        let exact = p.evaluate_int(&x);
        let residues: Vec<u64> = x.iter().map(|v| field.reduce_bigint(v)).collect();
        assert_eq!(p.evaluate_modp(&field, &residues), field.reduce_bigint(&exact));
    }
}
