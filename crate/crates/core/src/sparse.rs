//! Sparse feature vectors stored as sorted (index, value) pairs.
//!
//! Bag-of-words style data is extremely sparse, so every per-example loop in
//! the crate walks nonzeros only. Indices are 0-based in memory; file formats
//! deal with 1-based conventions at the parsing layer.

use crate::error::Error;
use crate::Result;

/// A sparse vector: strictly increasing indices, explicitly stored values.
///
/// Stored zeros are allowed (they can arise from file input) but never
/// created by this crate's own operations.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVec {
    indices: Vec<u32>,
    values: Vec<f64>,
}

impl SparseVec {
    /// Empty vector (all coordinates zero).
    pub fn empty() -> Self {
        SparseVec { indices: Vec::new(), values: Vec::new() }
    }

    /// Builds from (index, value) pairs. Pairs are sorted; duplicate indices
    /// or non-finite values are rejected.
    pub fn from_pairs(mut pairs: Vec<(u32, f64)>) -> Result<Self> {
        pairs.sort_unstable_by_key(|&(i, _)| i);
        let mut indices = Vec::with_capacity(pairs.len());
        let mut values = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            if !v.is_finite() {
                return Err(Error::domain(format!("non-finite value at index {i}")));
            }
            if indices.last() == Some(&i) {
                return Err(Error::domain(format!("duplicate feature index {i}")));
            }
            indices.push(i);
            values.push(v);
        }
        Ok(SparseVec { indices, values })
    }

    /// Builds from a dense slice, dropping exact zeros.
    pub fn from_dense(dense: &[f64]) -> Self {
        let mut indices = Vec::new();
        let mut values = Vec::new();
        for (i, &v) in dense.iter().enumerate() {
            if v != 0.0 {
                indices.push(i as u32);
                values.push(v);
            }
        }
        SparseVec { indices, values }
    }

    /// Internal constructor for callers that guarantee sorted unique indices.
    pub(crate) fn from_sorted_unchecked(indices: Vec<u32>, values: Vec<f64>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        SparseVec { indices, values }
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Iterates (index, value) pairs in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.indices.iter().zip(self.values.iter()).map(|(&i, &v)| (i as usize, v))
    }

    /// Value at coordinate `d` (zero if not stored).
    pub fn get(&self, d: usize) -> f64 {
        match self.indices.binary_search(&(d as u32)) {
            Ok(pos) => self.values[pos],
            Err(_) => 0.0,
        }
    }

    /// Largest stored index, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.indices.last().map(|&i| i as usize)
    }

    /// Dot product against a dense weight slice. The slice may be longer than
    /// the vector's support (extra coordinates are implicit zeros here).
    pub fn dot(&self, dense: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (d, v) in self.iter() {
            acc += dense[d] * v;
        }
        acc
    }

    /// Sum of squared stored values.
    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    pub fn to_dense(&self, dim: usize) -> Vec<f64> {
        let mut out = vec![0.0; dim];
        for (d, v) in self.iter() {
            out[d] = v;
        }
        out
    }
}
