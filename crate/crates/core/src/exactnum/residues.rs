//! Per-prime residue vectors and their text-file shards.
//!
//! One file per prime: the prime on line 1, then (optionally) an
//! `anchor <rational>` line recording the scaling convention, then one residue
//! per line.

use super::{crt_combine, format_rat, parse_rat, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

/// One prime's worth of interpolation output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shard {
    pub prime: u64,
    /// Scaling convention: value pinned on the anchor coordinate, if recorded.
    pub anchor: Option<Rat>,
    pub residues: Vec<u64>,
}

/// Residue vectors over several distinct primes, all of one length.
#[derive(Debug, Clone)]
pub struct ResidueVector {
    pub primes: Vec<u64>,
    /// `residues[i]` belongs to `primes[i]`.
    pub residues: Vec<Vec<u64>>,
}

impl ResidueVector {
    pub fn from_shards(shards: &[Shard]) -> Result<Self> {
        if shards.is_empty() {
            return Err(Error::InvalidArgument("no shards".into()));
        }
        let len = shards[0].residues.len();
        for s in shards {
            if s.residues.len() != len {
                return Err(Error::DimensionMismatch(format!(
                    "shard for prime {} has {} residues, expected {len}",
                    s.prime,
                    s.residues.len()
                )));
            }
        }
        Ok(ResidueVector {
            primes: shards.iter().map(|s| s.prime).collect(),
            residues: shards.iter().map(|s| s.residues.clone()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.residues.first().map_or(0, |r| r.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// CRT-combine each coordinate; returns the combined vector and modulus.
    pub fn combine(&self) -> Result<(Vec<BigInt>, BigInt)> {
        let mut out = Vec::with_capacity(self.len());
        let mut modulus = BigInt::from(1);
        for coord in 0..self.len() {
            let input: Vec<(BigInt, BigInt)> = self
                .primes
                .iter()
                .zip(&self.residues)
                .map(|(p, v)| (BigInt::from(v[coord]), BigInt::from(*p)))
                .collect();
            let (r, m) = crt_combine(&input)?;
            modulus = m;
            out.push(r);
        }
        Ok((out, modulus))
    }
}

pub fn write_shard_file(path: &Path, shard: &Shard) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    writeln!(f, "{}", shard.prime)?;
    if let Some(a) = &shard.anchor {
        writeln!(f, "anchor {}", format_rat(a))?;
    }
    for r in &shard.residues {
        writeln!(f, "{r}")?;
    }
    Ok(())
}

pub fn read_shard_file(path: &Path) -> Result<Shard> {
    let f = std::fs::File::open(path)?;
    let mut lines = BufReader::new(f).lines();
    let first = lines
        .next()
        .ok_or(Error::Parse {
            line: 1,
            msg: "empty shard file".into(),
        })??;
    let prime: u64 = first.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        msg: format!("bad prime `{first}`"),
    })?;
    let mut anchor = None;
    let mut residues = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix("anchor ") {
            anchor = Some(parse_rat(rest).map_err(|_| Error::Parse {
                line: i + 2,
                msg: format!("bad anchor `{rest}`"),
            })?);
            continue;
        }
        let r: u64 = t.parse().map_err(|_| Error::Parse {
            line: i + 2,
            msg: format!("bad residue `{t}`"),
        })?;
        if r >= prime {
            return Err(Error::Parse {
                line: i + 2,
                msg: format!("residue {r} not reduced mod {prime}"),
            });
        }
        residues.push(r);
    }
    Ok(Shard {
        prime,
        anchor,
        residues,
    })
}
