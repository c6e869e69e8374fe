//! Polynomials in named fundamental invariants.

use crate::exactnum::{format_rat, parse_rat, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

/// Weighted-homogeneous polynomial in named generators, each with a weight
/// (the invariant's degree). Every stored term has the same weighted total
/// degree; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct InvariantExpression {
    /// Generator names with their weights, in evaluation order.
    pub generators: Vec<(String, u32)>,
    /// Common weighted degree of all terms.
    pub degree: u32,
    terms: BTreeMap<Vec<u8>, Rat>,
}

impl InvariantExpression {
    pub fn new(generators: Vec<(String, u32)>, degree: u32) -> Self {
        InvariantExpression {
            generators,
            degree,
            terms: BTreeMap::new(),
        }
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

    fn weighted_degree(&self, exps: &[u8]) -> u32 {
        exps.iter()
            .zip(&self.generators)
            .map(|(&e, (_, w))| e as u32 * w)
            .sum()
    }

    /// Insert a term; the exponent vector must match the expression's
    /// weighted degree.
    pub fn add_term(&mut self, exps: Vec<u8>, coeff: Rat) -> Result<()> {
        if exps.len() != self.generators.len() {
            return Err(Error::DimensionMismatch(format!(
                "term has {} exponents, expression has {} generators",
                exps.len(),
                self.generators.len()
            )));
        }
        let wd = self.weighted_degree(&exps);
        if wd != self.degree {
            return Err(Error::Math(format!(
                "term {exps:?} has weighted degree {wd}, expression degree is {}",
                self.degree
            )));
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
        Ok(())
    }

    /// Exact value at generator values keyed by name; missing names error.
    pub fn evaluate(&self, values: &BTreeMap<String, Rat>) -> Result<Rat> {
        let mut vals = Vec::with_capacity(self.generators.len());
        for (name, _) in &self.generators {
            vals.push(
                values
                    .get(name)
                    .ok_or_else(|| Error::MissingGenerator(name.clone()))?
                    .clone(),
            );
        }
        let mut acc = Rat::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (v, &e) in vals.iter().zip(exps) {
                for _ in 0..e {
                    term *= v;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
        } else {
            for v in out.terms.values_mut() {
                *v *= c;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.generators != other.generators || self.degree != other.degree {
            return Err(Error::DimensionMismatch("expression subtraction".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v.clone())?;
        }
        Ok(out)
    }

    /// Write the text format: `generators:` line, `degree:` line, one term
    /// per line (`e1 .. ek value`).
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|(n, w)| format!("{n}:{w}"))
            .collect();
        writeln!(f, "generators: {}", gens.join(" "))?;
        writeln!(f, "degree: {}", self.degree)?;
        for (exps, coeff) in &self.terms {
            let e: Vec<String> = exps.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{} {}", e.join(" "), format_rat(coeff))?;
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        let mut lines = BufReader::new(f).lines();
        let gen_line = lines
            .next()
            .ok_or(Error::Parse {
                line: 1,
                msg: "empty expression file".into(),
            })??;
        let gens_str = gen_line.strip_prefix("generators:").ok_or(Error::Parse {
            line: 1,
            msg: "missing `generators:` header".into(),
        })?;
        let mut generators = Vec::new();
        for word in gens_str.split_whitespace() {
            let (name, weight) = word.split_once(':').ok_or(Error::Parse {
                line: 1,
                msg: format!("generator `{word}` needs a `name:weight` form"),
            })?;
            let weight: u32 = weight.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad weight in `{word}`"),
            })?;
            generators.push((name.to_string(), weight));
        }
        let deg_line = lines
            .next()
            .ok_or(Error::Parse {
                line: 2,
                msg: "missing `degree:` line".into(),
            })??;
        let degree: u32 = deg_line
            .strip_prefix("degree:")
            .ok_or(Error::Parse {
                line: 2,
                msg: "missing `degree:` header".into(),
            })?
            .trim()
            .parse()
            .map_err(|_| Error::Parse {
                line: 2,
                msg: format!("bad degree `{deg_line}`"),
            })?;
        let ngens = generators.len();
        let mut out = InvariantExpression::new(generators, degree);
        for (i, line) in lines.enumerate() {
            let lineno = i + 3;
            let line = line?;
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let parts: Vec<&str> = t.split_whitespace().collect();
            if parts.len() != ngens + 1 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected {ngens} exponents and a value"),
                });
            }
            let mut exps = Vec::with_capacity(ngens);
            for p in &parts[..ngens] {
                exps.push(p.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad exponent `{p}`"),
                })?);
            }
            let coeff = parse_rat(parts[ngens]).map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad rational `{}`", parts[ngens]),
            })?;
            // homogeneity check happens in add_term
            out.add_term(exps, coeff).map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
        }
        Ok(out)
    }
}

impl std::fmt::Debug for InvariantExpression {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "InvariantExpression[degree {}, {} terms in {:?}]",
            self.degree,
            self.len(),
            self.generators
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_frac, rat_i64};

    fn gens() -> Vec<(String, u32)> {
        [("f2", 2u32), ("f6", 6), ("f8", 8), ("f12", 12)]
            .iter()
            .map(|(n, w)| (n.to_string(), *w))
            .collect()
    }

    #[test]
    fn homogeneity_enforced() {
        let mut e = InvariantExpression::new(gens(), 24);
        assert!(e.add_term(vec![0, 0, 0, 2], rat_i64(1)).is_ok());
        assert!(e.add_term(vec![1, 0, 0, 2], rat_i64(1)).is_err());
    }

    #[test]
    fn evaluation_and_missing_generator() {
        let mut e = InvariantExpression::new(gens(), 24);
        e.add_term(vec![0, 0, 3, 0], rat_frac(4, 421875)).unwrap();
        let mut vals = BTreeMap::new();
        vals.insert("f2".to_string(), rat_i64(1));
        vals.insert("f6".to_string(), rat_i64(1));
        vals.insert("f8".to_string(), rat_i64(15));
        assert!(e.evaluate(&vals).is_err());
        vals.insert("f12".to_string(), rat_i64(0));
        assert_eq!(e.evaluate(&vals).unwrap(), rat_frac(4 * 3375, 421875));
    }

    #[test]
    fn save_load_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("e.expr");
        let mut e = InvariantExpression::new(gens(), 24);
        e.add_term(vec![0, 0, 0, 2], rat_frac(-1, 151875)).unwrap();
        e.add_term(vec![12, 0, 0, 0], rat_frac(-1733509, 1366875))
            .unwrap();
        e.save(&path).unwrap();
        assert_eq!(InvariantExpression::load(&path).unwrap(), e);
    }

    #[test]
    fn load_rejects_inhomogeneous_and_malformed() {
        let dir = tempfile::tempdir().unwrap();
        let bad1 = dir.path().join("bad1.expr");
        std::fs::write(&bad1, "generators: f2:2 f6:6\ndegree: 12\n0 2 1\n3 0 1\n").unwrap();
        assert!(matches!(
            InvariantExpression::load(&bad1),
            Err(Error::Parse { line: 4, .. })
        ));
        let bad2 = dir.path().join("bad2.expr");
        std::fs::write(&bad2, "generators: f2:2\ndegree: 2\n1 1//2\n").unwrap();
        assert!(matches!(
            InvariantExpression::load(&bad2),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
