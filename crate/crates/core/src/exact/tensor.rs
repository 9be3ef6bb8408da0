use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::scalar::{render, Scalar};
use crate::error::{dim_err, Result};

/// Sparse tensor of fixed shape. Only nonzero entries are stored; iteration
/// is lexicographic in the multi-index.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    shape: Vec<usize>,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        Self { shape: shape.to_vec(), entries: BTreeMap::new() }
    }

    /// Builds from `(index, value)` pairs, summing repeated indices.
    pub fn from_entries<I>(shape: &[usize], items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut t = Self::zeros(shape);
        for (idx, v) in items {
            t.check_index(&idx)?;
            t.add_at(&idx, &v);
        }
        Ok(t)
    }

    fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.shape.len() || idx.iter().zip(&self.shape).any(|(i, n)| i >= n) {
            return Err(dim_err(format!("index {idx:?} out of range for shape {:?}", self.shape)));
        }
        Ok(())
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.entries.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn get_ref(&self, idx: &[usize]) -> Option<&Scalar> {
        self.entries.get(idx)
    }

    /// Sets an entry; zero removes it.
    ///
    /// # Panics
    /// Panics on an out-of-range index.
    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        self.check_index(idx).expect("tensor index");
        if v.is_zero() {
            self.entries.remove(idx);
        } else {
            self.entries.insert(idx.to_vec(), v);
        }
    }

    /// Adds `v` to an entry, dropping it if the sum is zero.
    pub fn add_at(&mut self, idx: &[usize], v: &Scalar) {
        if v.is_zero() {
            return;
        }
        match self.entries.get_mut(idx) {
            Some(x) => {
                *x += v;
                if x.is_zero() {
                    self.entries.remove(idx);
                }
            }
            None => {
                self.entries.insert(idx.to_vec(), v.clone());
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(dim_err(format!("shapes {:?} and {:?}", self.shape, other.shape)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_at(k, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_at(k, &-v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zeros(&self.shape);
        }
        Self {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Outer product; the result's shape is the concatenation of shapes.
    pub fn outer(&self, other: &Self) -> Self {
        let mut shape = self.shape.clone();
        shape.extend_from_slice(&other.shape);
        let mut entries = BTreeMap::new();
        for (a, x) in &self.entries {
            for (b, y) in &other.entries {
                let mut k = a.clone();
                k.extend_from_slice(b);
                entries.insert(k, x * y);
            }
        }
        Self { shape, entries }
    }

    /// Reorders axes: axis `k` of the result is axis `perm[k]` of `self`.
    pub fn permute_axes(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.rank()];
        if perm.len() != self.rank() || perm.iter().any(|&p| p >= seen.len() || std::mem::replace(&mut seen[p], true)) {
            return Err(dim_err(format!("{perm:?} is not a permutation of {} axes", self.rank())));
        }
        let shape = perm.iter().map(|&p| self.shape[p]).collect();
        let entries = self
            .entries
            .iter()
            .map(|(k, v)| (perm.iter().map(|&p| k[p]).collect(), v.clone()))
            .collect();
        Ok(Self { shape, entries })
    }

    /// The first `limit` nonzero entries, rendered.
    pub fn witnesses(&self, limit: usize) -> Vec<(Vec<usize>, String)> {
        self.entries.iter().take(limit).map(|(k, v)| (k.clone(), render(v))).collect()
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{:?}{{", self.shape)?;
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k:?}: {v}")?;
        }
        write!(f, "}}")
    }
}
