//! Convolution of a unit-norm signal with a filter whose frequency response
//! is known in advance.
//!
//! Every pipeline runs the QFT of the signal, multiplies the spectrum by
//! `H_p` (split into a unitary phase part and a non-unitary magnitude part),
//! and returns through the inverse QFT. The magnitude part is modeled
//! analytically: the state is rescaled and the rescaling factor kept as `A`.
//! For ideal filters with `|H_p|` in `{0, 1}` the magnitude part is instead
//! realized unitarily with an ancilla, a permutation and post-selection.

mod ideal;
mod operators;
mod pipeline;
mod response;

use alloc::vec::Vec;

use num_traits::Float;

pub use ideal::{
    build_highpass_p4, build_lowpass_p4, convolve_ideal_filter, ideal_filter_circuit,
    ideal_filter_circuit_matrix, FilterKind,
};
pub use operators::{
    apply_magnitude_diagonal, apply_phase_bank, conv1_matrix, phases_from_response,
    pointwise_qubit_multiply, unit_determinant_diagonal, MagnitudeDiagonal, PhaseBank,
};
pub use pipeline::{
    convolve_2qubit, convolve_abstract, convolve_with_zero_workaround, DPlacement,
    WorkaroundResult, WORKAROUND_CONSTANTS,
};
pub use response::{FrequencyResponse, PHASE_THRESHOLD, SYMMETRY_TOLERANCE};

use crate::error::{Error, Result};
use crate::numerics::{SpectralOrder, C64};
use crate::simulator::StateVector;

/// A register holding spectral amplitudes, tagged with their layout.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralState {
    pub state: StateVector,
    pub order: SpectralOrder,
}

impl SpectralState {
    fn expect_order(&self, expected: SpectralOrder) -> Result<()> {
        if self.order != expected {
            return Err(Error::OrderingMismatch {
                expected,
                found: self.order,
            });
        }
        Ok(())
    }
}

/// How a pipeline realized the multiplication by `H_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Paired 3-qubit QFT, controlled phase bank, permutation to natural
    /// order, magnitude diagonal.
    PhaseBank,
    /// Natural-order QFT with a per-index phase diagonal, for any length.
    Diagonal,
    /// Conjugate-pair 2-qubit QFT, controlled phases, swap `(0, 3)`.
    TwoQubit,
    /// Unitary ancilla embedding with post-selection.
    Ancilla,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineResult {
    /// Final register, proportional to the convolution `y`.
    pub output_state: StateVector,
    /// `A = sqrt(sum_p |Y_p|^2) = sqrt(N sum_n |y_n|^2)`.
    pub scale_a: f64,
    /// Post-selection probability; 1 when the magnitude step is analytic.
    pub success_probability: f64,
    /// `y` recovered from the output state and `A`.
    pub recovered_y: Vec<C64>,
    pub route: Route,
}

impl PipelineResult {
    fn from_output(
        output_state: StateVector,
        scale_a: f64,
        success_probability: f64,
        route: Route,
    ) -> Self {
        let k = scale_a / (output_state.len() as f64).sqrt();
        let recovered_y = output_state.amplitudes().iter().map(|a| a * k).collect();
        Self {
            output_state,
            scale_a,
            success_probability,
            recovered_y,
            route,
        }
    }
}
