use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::numerics::C64;

/// Tolerance for the unitarity flag, `max |G^dagger G - I| <= UNITARY_TOLERANCE`.
pub const UNITARY_TOLERANCE: f64 = 1e-12;

/// A 2x2 complex matrix acting on one qubit.
///
/// The `unitary` flag is computed on construction; gates built with
/// [`SingleQubitGate::new_nonunitary`] never carry it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitGate {
    matrix: [[C64; 2]; 2],
    unitary: bool,
}

impl SingleQubitGate {
    /// Builds a gate, failing if it is not unitary within [`UNITARY_TOLERANCE`].
    pub fn new(matrix: [[C64; 2]; 2]) -> Result<Self> {
        let dev = unitarity_deviation(&matrix);
        if dev > UNITARY_TOLERANCE {
            return Err(Error::NotUnitary(dev));
        }
        Ok(Self {
            matrix,
            unitary: true,
        })
    }

    /// Builds a gate without the unitary flag, whatever its entries.
    pub fn new_nonunitary(matrix: [[C64; 2]; 2]) -> Self {
        Self {
            matrix,
            unitary: false,
        }
    }

    pub fn identity() -> Self {
        Self::diagonal_unchecked(C64::new(1.0, 0.0), C64::new(1.0, 0.0))
    }

    pub fn not() -> Self {
        let (o, l) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0));
        Self {
            matrix: [[o, l], [l, o]],
            unitary: true,
        }
    }

    pub fn hadamard() -> Self {
        let s = C64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            matrix: [[s, s], [s, -s]],
            unitary: true,
        }
    }

    /// `diag(a, b)`; unitary iff `|a| = |b| = 1`.
    pub fn diagonal(a: C64, b: C64) -> Result<Self> {
        Self::new([[a, C64::new(0.0, 0.0)], [C64::new(0.0, 0.0), b]])
    }

    fn diagonal_unchecked(a: C64, b: C64) -> Self {
        Self {
            matrix: [[a, C64::new(0.0, 0.0)], [C64::new(0.0, 0.0), b]],
            unitary: true,
        }
    }

    /// `diag(e^{-i phi}, e^{i phi})`.
    pub fn phase_pair(phi: f64) -> Self {
        Self::diagonal_unchecked(C64::from_polar(1.0, -phi), C64::from_polar(1.0, phi))
    }

    /// `diag(1, e^{i theta})`.
    pub fn phase(theta: f64) -> Self {
        Self::diagonal_unchecked(C64::new(1.0, 0.0), C64::from_polar(1.0, theta))
    }

    pub fn matrix(&self) -> &[[C64; 2]; 2] {
        &self.matrix
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn determinant(&self) -> C64 {
        let m = &self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// `max |G^dagger G - I|` over entries.
    pub fn unitarity_deviation(&self) -> f64 {
        unitarity_deviation(&self.matrix)
    }

    pub(crate) fn apply_pair(&self, a0: C64, a1: C64) -> (C64, C64) {
        let m = &self.matrix;
        (m[0][0] * a0 + m[0][1] * a1, m[1][0] * a0 + m[1][1] * a1)
    }
}

fn unitarity_deviation(m: &[[C64; 2]; 2]) -> f64 {
    let mut dev: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let g: C64 = (0..2).map(|k| m[k][i].conj() * m[k][j]).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((g - C64::new(target, 0.0)).norm());
        }
    }
    dev
}

/// Control qubits and the bit each must hold for a gate to act.
///
/// A `true` entry is a filled bullet (control on `|1>`), `false` an open
/// circle (control on `|0>`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ControlPattern {
    controls: Vec<(usize, bool)>,
}

impl ControlPattern {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn new(controls: &[(usize, bool)]) -> Result<Self> {
        for (i, (q, _)) in controls.iter().enumerate() {
            if controls[..i].iter().any(|(p, _)| p == q) {
                return Err(Error::InvalidControls("duplicate control qubit"));
            }
        }
        Ok(Self {
            controls: controls.to_vec(),
        })
    }

    pub fn controls(&self) -> &[(usize, bool)] {
        &self.controls
    }

    pub fn is_empty(&self) -> bool {
        self.controls.is_empty()
    }

    /// Checks the pattern against a target on a register of `qubits` qubits and
    /// returns `(mask, value)` bit masks over basis indices.
    pub(crate) fn masks(&self, target: usize, qubits: usize) -> Result<(usize, usize)> {
        let (mut mask, mut value) = (0usize, 0usize);
        for &(q, bit) in &self.controls {
            if q >= qubits {
                return Err(Error::QubitOutOfRange { qubit: q, qubits });
            }
            if q == target {
                return Err(Error::InvalidControls("control coincides with target"));
            }
            let b = 1 << (qubits - 1 - q);
            mask |= b;
            if bit {
                value |= b;
            }
        }
        Ok((mask, value))
    }
}
