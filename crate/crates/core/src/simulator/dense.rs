use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::numerics::C64;

/// Square complex matrix, row-major. Used as a test oracle and for
/// unitarity audits of whole circuits.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: alloc::vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| C64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn from_rows(rows: &[&[C64]]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::LengthMismatch {
                left: dim,
                right: bad.len(),
            });
        }
        Ok(Self::from_fn(dim, |i, j| rows[i][j]))
    }

    /// Builds the matrix whose column `j` is `f(e_j)`.
    pub fn from_columns(dim: usize, mut f: impl FnMut(usize) -> Result<Vec<C64>>) -> Result<Self> {
        let mut m = Self::zeros(dim);
        for j in 0..dim {
            let col = f(j)?;
            if col.len() != dim {
                return Err(Error::LengthMismatch {
                    left: dim,
                    right: col.len(),
                });
            }
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Normalized DFT matrix, `W^{jk} / sqrt(N)`.
    pub fn dft(dim: usize) -> Self {
        let s = 1.0 / (dim as f64).sqrt();
        Self::from_fn(dim, |j, k| crate::numerics::twiddle(dim, j * k) * s)
    }

    /// Block-diagonal `a ⊕ b`.
    pub fn direct_sum(a: &Self, b: &Self) -> Self {
        let dim = a.dim + b.dim;
        Self::from_fn(dim, |i, j| match (i < a.dim, j < a.dim) {
            (true, true) => a.get(i, j),
            (false, false) => b.get(i - a.dim, j - a.dim),
            _ => C64::new(0.0, 0.0),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if rhs.dim != self.dim {
            return Err(Error::LengthMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(Self::from_fn(self.dim, |i, j| {
            (0..self.dim).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        }))
    }

    pub fn mul_vec(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok(self
            .data
            .chunks_exact(self.dim.max(1))
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `max |M^dagger M - I|` over entries.
    pub fn unitarity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let g: C64 = (0..self.dim)
                    .map(|k| self.get(k, i).conj() * self.get(k, j))
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((g - C64::new(target, 0.0)).norm());
            }
        }
        dev
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    /// Entrywise max of `|re|` and `|im|` differences.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        crate::numerics::max_abs_diff(&self.data, &other.data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dft_matrix_is_unitary() {
        for n in [2, 4, 8, 16, 32] {
            assert!(DenseMatrix::dft(n).unitarity_deviation() < 1e-13);
        }
    }

    #[test]
    fn direct_sum_layout() {
        let a = DenseMatrix::identity(2);
        let b = DenseMatrix::dft(2);
        let s = DenseMatrix::direct_sum(&a, &b);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.get(0, 0), C64::new(1.0, 0.0));
        assert_eq!(s.get(0, 2), C64::new(0.0, 0.0));
        assert_eq!(s.get(3, 3), b.get(1, 1));
    }

    #[test]
    fn from_rows_checks_shape() {
        let one = [C64::new(1.0, 0.0)];
        assert!(DenseMatrix::from_rows(&[&one, &one]).is_err());
    }
}
