//! Text format for exact tensors.
//!
//! Header line `wedge n k` or `cube d1 d2 ...`, then one entry per line:
//! the index tuple followed by a rational literal. Wedge indices are
//! 1-based; hypercube indices are 0-based.

use super::{HypercubeTensor, Multivector};
use crate::exactnum::{format_rat, parse_rat};
use crate::{Error, Result};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

/// A tensor in either of the two supported formats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorData {
    Wedge(Multivector),
    Cube(HypercubeTensor),
}

impl TensorData {
    pub fn as_wedge(&self) -> Result<&Multivector> {
        match self {
            TensorData::Wedge(t) => Ok(t),
            TensorData::Cube(_) => Err(Error::InvalidArgument(
                "expected a wedge tensor, found a hypercube tensor".into(),
            )),
        }
    }

    pub fn as_cube(&self) -> Result<&HypercubeTensor> {
        match self {
            TensorData::Cube(t) => Ok(t),
            TensorData::Wedge(_) => Err(Error::InvalidArgument(
                "expected a hypercube tensor, found a wedge tensor".into(),
            )),
        }
    }
}

pub fn write_tensor(path: &Path, t: &TensorData) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    match t {
        TensorData::Wedge(t) => {
            writeln!(f, "wedge {} {}", t.ambient(), t.degree())?;
            for (key, v) in t.entries() {
                let idx: Vec<String> = key.iter().map(|i| i.to_string()).collect();
                writeln!(f, "{} {}", idx.join(" "), format_rat(v))?;
            }
        }
        TensorData::Cube(t) => {
            let dims: Vec<String> = t.dims().iter().map(|d| d.to_string()).collect();
            writeln!(f, "cube {}", dims.join(" "))?;
            for (key, v) in t.entries() {
                let idx: Vec<String> = key.iter().map(|i| i.to_string()).collect();
                writeln!(f, "{} {}", idx.join(" "), format_rat(v))?;
            }
        }
    }
    Ok(())
}

pub fn read_tensor(path: &Path) -> Result<TensorData> {
    let f = std::fs::File::open(path)?;
    let mut lines = BufReader::new(f).lines();
    let header = lines
        .next()
        .ok_or(Error::Parse {
            line: 1,
            msg: "empty tensor file".into(),
        })??;
    let words: Vec<&str> = header.split_whitespace().collect();
    let parse_u8 = |s: &str, line: usize| -> Result<u8> {
        s.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad integer `{s}`"),
        })
    };
    match words.first() {
        Some(&"wedge") => {
            if words.len() != 3 {
                return Err(Error::Parse {
                    line: 1,
                    msg: "wedge header needs `wedge n k`".into(),
                });
            }
            let n = parse_u8(words[1], 1)?;
            let k = parse_u8(words[2], 1)?;
            if k > n {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("degree {k} exceeds ambient {n}"),
                });
            }
            let mut t = Multivector::zero(n, k);
            for (i, line) in lines.enumerate() {
                let lineno = i + 2;
                let line = line?;
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    continue;
                }
                let parts: Vec<&str> = trimmed.split_whitespace().collect();
                if parts.len() != k as usize + 1 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("expected {k} indices and a value"),
                    });
                }
                let mut idx = Vec::with_capacity(k as usize);
                for p in &parts[..k as usize] {
                    let v = parse_u8(p, lineno)?;
                    if v == 0 || v > n {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("index {v} out of range 1..={n}"),
                        });
                    }
                    idx.push(v);
                }
                let coeff = parse_rat(parts[k as usize]).map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad rational `{}`", parts[k as usize]),
                })?;
                t.add_term(idx, coeff);
            }
            Ok(TensorData::Wedge(t))
        }
        Some(&"cube") => {
            let dims: Result<Vec<u8>> = words[1..].iter().map(|w| parse_u8(w, 1)).collect();
            let dims = dims?;
            if dims.is_empty() {
                return Err(Error::Parse {
                    line: 1,
                    msg: "cube header needs at least one mode".into(),
                });
            }
            let modes = dims.len();
            let mut t = HypercubeTensor::zero(dims);
            for (i, line) in lines.enumerate() {
                let lineno = i + 2;
                let line = line?;
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    continue;
                }
                let parts: Vec<&str> = trimmed.split_whitespace().collect();
                if parts.len() != modes + 1 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("expected {modes} indices and a value"),
                    });
                }
                let mut idx = Vec::with_capacity(modes);
                for p in &parts[..modes] {
                    idx.push(parse_u8(p, lineno)?);
                }
                let coeff = parse_rat(parts[modes]).map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad rational `{}`", parts[modes]),
                })?;
                t.add_entry(&idx, coeff).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?;
            }
            Ok(TensorData::Cube(t))
        }
        _ => Err(Error::Parse {
            line: 1,
            msg: format!("unknown tensor header `{header}`"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_frac, rat_i64};

    #[test]
    fn wedge_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.tensor");
        let mut t = Multivector::zero(9, 3);
        t.add_term(vec![1, 2, 3], rat_i64(1));
        t.add_term(vec![4, 5, 6], rat_frac(-7, 3));
        let data = TensorData::Wedge(t);
        write_tensor(&path, &data).unwrap();
        assert_eq!(read_tensor(&path).unwrap(), data);
    }

    #[test]
    fn cube_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.tensor");
        let mut t = HypercubeTensor::zero(vec![2, 2, 2, 2]);
        t.add_entry(&[0, 0, 0, 0], rat_i64(1)).unwrap();
        t.add_entry(&[1, 0, 1, 0], rat_frac(2, 5)).unwrap();
        let data = TensorData::Cube(t);
        write_tensor(&path, &data).unwrap();
        assert_eq!(read_tensor(&path).unwrap(), data);
    }

    #[test]
    fn malformed_rational_names_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.tensor");
        std::fs::write(&path, "wedge 6 3\n1 2 3 1\n1 2 4 x/y\n").unwrap();
        match read_tensor(&path) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
