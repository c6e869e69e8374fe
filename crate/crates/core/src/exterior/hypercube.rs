//! Sparse hypercube tensors (0-based indices, one digit per mode).

use crate::exactnum::Rat;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Element of a tensor product with the given mode sizes, e.g. 2x2x2x2 or
/// 3x3x3. Keys are index tuples `I` with `I[j] < dims[j]`; absent keys are 0.
#[derive(Clone, PartialEq, Eq)]
pub struct HypercubeTensor {
    dims: Vec<u8>,
    entries: BTreeMap<Vec<u8>, Rat>,
}

impl HypercubeTensor {
    pub fn zero(dims: Vec<u8>) -> Self {
        assert!(!dims.is_empty());
        HypercubeTensor {
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> &[u8] {
        &self.dims
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
        self.entries.get(idx).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_entry(&mut self, idx: &[u8], coeff: Rat) -> Result<()> {
        if idx.len() != self.dims.len() || idx.iter().zip(&self.dims).any(|(&i, &d)| i >= d) {
            return Err(Error::DimensionMismatch(format!(
                "index {idx:?} out of bounds for modes {:?}",
                self.dims
            )));
        }
        let slot = self.entries.entry(idx.to_vec()).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.entries.remove(idx);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return HypercubeTensor::zero(self.dims.clone());
        }
        HypercubeTensor {
            dims: self.dims.clone(),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &HypercubeTensor) -> Result<HypercubeTensor> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch("hypercube addition".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_entry(k, v.clone())?;
        }
        Ok(out)
    }
}

impl std::fmt::Debug for HypercubeTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HypercubeTensor({:?}, {{", self.dims)?;
        for (key, v) in &self.entries {
            write!(f, " x{key:?}: {v},")?;
        }
        write!(f, " }})")
    }
}
