//! Dense r-qubit state vectors.
//!
//! Qubit 0 is the most significant bit of the basis index. On an `r`-qubit
//! register, qubit `q` therefore selects bit `r - 1 - q`.

mod dense;
mod gate;
mod permutation;

use alloc::vec::Vec;

use num_traits::Float;

pub use dense::DenseMatrix;
pub use gate::{ControlPattern, SingleQubitGate, UNITARY_TOLERANCE};
pub use permutation::Permutation;

use crate::error::{Error, Result};
use crate::numerics::{check_finite, energy, Signal, C64};

/// Allowed drift of the squared norm at operation boundaries.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Below this a norm or a probability counts as zero.
pub const ZERO_THRESHOLD: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<C64>,
    qubits: usize,
}

impl StateVector {
    /// Wraps amplitudes, requiring a power-of-two length and unit norm.
    pub fn from_amplitudes(amps: Vec<C64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidLength(len));
        }
        check_finite(&amps)?;
        let e = energy(&amps);
        if (e - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(e));
        }
        Ok(Self::raw(amps))
    }

    /// Amplitudes of a unit-norm signal.
    pub fn from_signal(signal: &Signal) -> Result<Self> {
        Self::from_amplitudes(signal.samples().to_vec())
    }

    /// Normalizes `amps` first; returns the state and the input norm.
    pub fn normalized(amps: &[C64]) -> Result<(Self, f64)> {
        let (unit, norm) = crate::numerics::normalize(amps)?;
        Ok((Self::from_amplitudes(unit)?, norm))
    }

    pub fn basis(qubits: usize, index: usize) -> Result<Self> {
        if qubits == 0 {
            return Err(Error::InvalidLength(1));
        }
        let len = 1usize << qubits;
        if index >= len {
            return Err(Error::InvalidLength(index));
        }
        let mut amps = alloc::vec![C64::new(0.0, 0.0); len];
        amps[index] = C64::new(1.0, 0.0);
        Ok(Self::raw(amps))
    }

    pub fn zero(qubits: usize) -> Result<Self> {
        Self::basis(qubits, 0)
    }

    /// Skips validation. Linear maps applied to sub-blocks of a register go
    /// through this, since a block need not have unit norm.
    pub(crate) fn raw(amps: Vec<C64>) -> Self {
        let qubits = amps.len().trailing_zeros() as usize;
        Self { amps, qubits }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        energy(&self.amps)
    }

    fn bit(&self, qubit: usize) -> Result<usize> {
        if qubit >= self.qubits {
            return Err(Error::QubitOutOfRange {
                qubit,
                qubits: self.qubits,
            });
        }
        Ok(1 << (self.qubits - 1 - qubit))
    }

    /// Applies a unitary single-qubit gate on `target` wherever the control
    /// pattern matches.
    pub fn apply_gate(
        &self,
        gate: &SingleQubitGate,
        target: usize,
        controls: &ControlPattern,
    ) -> Result<Self> {
        if !gate.is_unitary() {
            return Err(Error::NotUnitary(gate.unitarity_deviation()));
        }
        self.apply_gate_linear(gate, target, controls)
    }

    /// Opt-in path for non-unitary gates: applies the gate and rescales the
    /// result to unit norm. Returns the norm before rescaling.
    pub fn apply_gate_renormalized(
        &self,
        gate: &SingleQubitGate,
        target: usize,
        controls: &ControlPattern,
    ) -> Result<(Self, f64)> {
        self.apply_gate_linear(gate, target, controls)?
            .renormalize()
    }

    fn apply_gate_linear(
        &self,
        gate: &SingleQubitGate,
        target: usize,
        controls: &ControlPattern,
    ) -> Result<Self> {
        let tbit = self.bit(target)?;
        let (mask, value) = controls.masks(target, self.qubits)?;
        let mut amps = self.amps.clone();
        for i in 0..amps.len() {
            if i & tbit != 0 || i & mask != value {
                continue;
            }
            let j = i | tbit;
            let (a, b) = gate.apply_pair(amps[i], amps[j]);
            amps[i] = a;
            amps[j] = b;
        }
        Ok(Self::raw(amps))
    }

    /// Multiplies by a diagonal of unit-modulus entries.
    pub fn apply_phases(&self, diagonal: &[C64]) -> Result<Self> {
        self.check_len(diagonal.len())?;
        let dev = diagonal
            .iter()
            .map(|d| (d.norm() - 1.0).abs())
            .fold(0.0, f64::max);
        if dev > UNITARY_TOLERANCE {
            return Err(Error::NotUnitary(dev));
        }
        Ok(self.scale_by(diagonal))
    }

    /// Non-unitary diagonal followed by renormalization. Returns the norm of
    /// the product before rescaling.
    pub fn apply_diagonal(&self, diagonal: &[C64]) -> Result<(Self, f64)> {
        self.check_len(diagonal.len())?;
        self.scale_by(diagonal).renormalize()
    }

    fn scale_by(&self, diagonal: &[C64]) -> Self {
        Self::raw(self.amps.iter().zip(diagonal).map(|(a, d)| a * d).collect())
    }

    fn renormalize(self) -> Result<(Self, f64)> {
        let norm = self.norm_sqr().sqrt();
        if norm <= ZERO_THRESHOLD {
            return Err(Error::Annihilation(norm));
        }
        let amps = self.amps.into_iter().map(|a| a / norm).collect();
        Ok((Self::raw(amps), norm))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.amps.len() {
            return Err(Error::LengthMismatch {
                left: self.amps.len(),
                right: len,
            });
        }
        Ok(())
    }

    /// `out[p(i)] = in[i]`.
    pub fn apply_permutation(&self, perm: &Permutation) -> Result<Self> {
        self.check_len(perm.len())?;
        Ok(Self::raw(perm.apply_to(&self.amps)))
    }

    /// Plain matrix-vector product with a unitary matrix.
    pub fn apply_dense(&self, m: &DenseMatrix) -> Result<Self> {
        self.check_len(m.dim())?;
        let dev = m.unitarity_deviation();
        if dev > UNITARY_TOLERANCE {
            return Err(Error::NotUnitary(dev));
        }
        Ok(Self::raw(m.mul_vec(&self.amps)?))
    }

    /// Opt-in dense product with an arbitrary matrix, renormalized.
    pub fn apply_dense_renormalized(&self, m: &DenseMatrix) -> Result<(Self, f64)> {
        self.check_len(m.dim())?;
        Self::raw(m.mul_vec(&self.amps)?).renormalize()
    }

    /// Prepends an ancilla qubit in `|0>` as the new qubit 0, so the result is
    /// `[amps; 0 ... 0]`.
    pub fn extend_with_ancilla(&self) -> Self {
        let mut amps = self.amps.clone();
        amps.resize(2 * self.amps.len(), C64::new(0.0, 0.0));
        Self::raw(amps)
    }

    /// Probability of reading `outcome` on `qubit`.
    pub fn outcome_probability(&self, qubit: usize, outcome: bool) -> Result<f64> {
        let bit = self.bit(qubit)?;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| (i & bit != 0) == outcome)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Conditions on `qubit` reading `outcome`. Returns the surviving branch
    /// with that qubit removed, renormalized, and the branch probability.
    pub fn postselect(&self, qubit: usize, outcome: bool) -> Result<(Self, f64)> {
        if self.qubits < 2 {
            return Err(Error::TooFewQubits {
                required: 2,
                found: self.qubits,
            });
        }
        let bit = self.bit(qubit)?;
        let probability = self.outcome_probability(qubit, outcome)?;
        if probability < ZERO_THRESHOLD {
            return Err(Error::ImpossibleOutcome(probability));
        }
        let scale = 1.0 / probability.sqrt();
        let amps = self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| (i & bit != 0) == outcome)
            .map(|(_, a)| a * scale)
            .collect();
        Ok((Self::raw(amps), probability))
    }

    /// Applies `op` to the half of the register where qubit 0 equals `msb`,
    /// leaving the other half untouched. `op` must be linear.
    pub fn map_block(
        &self,
        msb: bool,
        op: impl FnOnce(&StateVector) -> Result<StateVector>,
    ) -> Result<Self> {
        if self.qubits < 2 {
            return Err(Error::TooFewQubits {
                required: 2,
                found: self.qubits,
            });
        }
        let half = self.amps.len() / 2;
        let range = if msb { half..2 * half } else { 0..half };
        let block = Self::raw(self.amps[range.clone()].to_vec());
        let mapped = op(&block)?;
        self.check_len(2 * mapped.len())?;
        let mut amps = self.amps.clone();
        amps[range].copy_from_slice(mapped.amplitudes());
        Ok(Self::raw(amps))
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}
