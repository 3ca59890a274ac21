use alloc::vec::Vec;

use super::DenseMatrix;
use crate::error::{Error, Result};
use crate::numerics::C64;

/// A bijection on basis-state indices. Applying it moves the amplitude at
/// index `i` to index `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = alloc::vec![false; map.len()];
        for &j in &map {
            if j >= map.len() || seen[j] {
                return Err(Error::NotAPermutation);
            }
            seen[j] = true;
        }
        Ok(Self { map })
    }

    pub fn identity(len: usize) -> Self {
        Self {
            map: (0..len).collect(),
        }
    }

    /// Product of disjoint or overlapping transpositions, applied left to right.
    pub fn from_swaps(len: usize, swaps: &[(usize, usize)]) -> Result<Self> {
        let mut p = Self::identity(len);
        for &(a, b) in swaps {
            if a >= len || b >= len {
                return Err(Error::NotAPermutation);
            }
            p = p.then(&Self::transposition(len, a, b))?;
        }
        Ok(p)
    }

    fn transposition(len: usize, a: usize, b: usize) -> Self {
        let mut map: Vec<usize> = (0..len).collect();
        map.swap(a, b);
        Self { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Self { map: inv }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Self) -> Result<Self> {
        if next.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: next.len(),
            });
        }
        Ok(Self {
            map: self.map.iter().map(|&j| next.map[j]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Matrix `P` with `P[map[i]][i] = 1`, so `P x` equals the permuted vector.
    pub fn to_matrix(&self) -> DenseMatrix {
        let n = self.map.len();
        let mut m = DenseMatrix::zeros(n);
        for (i, &j) in self.map.iter().enumerate() {
            m.set(j, i, C64::new(1.0, 0.0));
        }
        m
    }

    pub(crate) fn apply_to(&self, values: &[C64]) -> Vec<C64> {
        let mut out = alloc::vec![C64::new(0.0, 0.0); values.len()];
        for (i, &j) in self.map.iter().enumerate() {
            out[j] = values[i];
        }
        out
    }
}
