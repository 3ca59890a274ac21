use core::f64::consts::PI;

use num_traits::Float;

use super::{FrequencyResponse, PipelineResult, Route};
use crate::error::{Error, Result};
use crate::numerics::{Signal, SpectralOrder};
use crate::qft::{conjugate_pairs_to_natural, controlled_iqft, paired_to_conjugate_pairs, qft};
use crate::simulator::{ControlPattern, DenseMatrix, Permutation, SingleQubitGate, StateVector};

/// Ideal 8-point filters realized with one ancilla qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterKind {
    /// Passes `p = 0, 1, 7` with phases `0, pi/12, -pi/12`. Low-pass `P_4`,
    /// inverse QFT and post-selection on ancilla `0`.
    LowPass,
    /// Passes `p = 2..=6` with unit gain. High-pass `P_4` moves the low band
    /// out of the ancilla-zero block, so the filtered branch is ancilla `0`.
    HighPass,
    /// The low-pass circuit with the inverse QFT and post-selection moved to
    /// ancilla `1`. The stop band of the low-pass filter lands there, so this
    /// also computes the high-pass convolution.
    LowPassComplement,
}

impl FilterKind {
    /// Ancilla value that selects the filtered branch.
    pub fn control_value(self) -> bool {
        matches!(self, Self::LowPassComplement)
    }

    pub fn passes(self, p: usize) -> bool {
        let low = matches!(p, 0 | 1 | 7);
        match self {
            Self::LowPass => low,
            Self::HighPass | Self::LowPassComplement => !low,
        }
    }

    pub fn response(self) -> FrequencyResponse {
        match self {
            Self::LowPass => FrequencyResponse::ideal_lowpass(),
            Self::HighPass | Self::LowPassComplement => FrequencyResponse::ideal_highpass(),
        }
    }

    pub fn p4(self) -> Permutation {
        match self {
            Self::LowPass | Self::LowPassComplement => build_lowpass_p4(),
            Self::HighPass => build_highpass_p4(),
        }
    }

    fn has_phase_gate(self) -> bool {
        self != Self::HighPass
    }
}

fn block_swap(indices: &[usize]) -> Permutation {
    let swaps: alloc::vec::Vec<_> = indices.iter().map(|&i| (i, 8 + i)).collect();
    Permutation::from_swaps(16, &swaps).expect("indices below 8")
}

/// Swaps `i <-> 8 + i` for `i = 2..=6`, moving the stop band of a
/// natural-order spectrum into the ancilla-one block.
pub fn build_lowpass_p4() -> Permutation {
    block_swap(&[2, 3, 4, 5, 6])
}

/// Swaps `i <-> 8 + i` for `i = 0, 1, 7`.
pub fn build_highpass_p4() -> Permutation {
    block_swap(&[0, 1, 7])
}

/// The 3-qubit part applied to each ancilla block: paired QFT, reordering
/// to conjugate pairs, the low-pass phase operator under controls `00`, and
/// reordering to natural order.
fn spectral_stage(block: &StateVector, kind: FilterKind) -> Result<StateVector> {
    let mut s =
        qft(block, SpectralOrder::Paired)?.apply_permutation(&paired_to_conjugate_pairs())?;
    if kind.has_phase_gate() {
        let u1 = SingleQubitGate::phase_pair(PI / 12.0);
        s = s.apply_gate(&u1, 2, &ControlPattern::new(&[(0, false), (1, false)])?)?;
    }
    s.apply_permutation(&conjugate_pairs_to_natural(8)?)
}

/// Pre-measurement 4-qubit circuit: the spectral stage on both ancilla
/// blocks, `P_4`, then the inverse QFT on the block selected by the ancilla.
pub fn ideal_filter_circuit(state: &StateVector, kind: FilterKind) -> Result<StateVector> {
    if state.qubits() != 4 {
        return Err(Error::LengthMismatch {
            left: 16,
            right: state.len(),
        });
    }
    let s = state
        .map_block(false, |b| spectral_stage(b, kind))?
        .map_block(true, |b| spectral_stage(b, kind))?
        .apply_permutation(&kind.p4())?;
    controlled_iqft(&s, kind.control_value())
}

/// Dense 16x16 matrix of [`ideal_filter_circuit`].
pub fn ideal_filter_circuit_matrix(kind: FilterKind) -> Result<DenseMatrix> {
    DenseMatrix::from_columns(16, |j| {
        Ok(ideal_filter_circuit(&StateVector::basis(4, j)?, kind)?.into_amplitudes())
    })
}

/// Convolves a unit-norm 8-point signal with an ideal filter: append an
/// ancilla in `|0>`, run [`ideal_filter_circuit`], post-select the ancilla on
/// [`FilterKind::control_value`].
pub fn convolve_ideal_filter(f: &Signal, kind: FilterKind) -> Result<PipelineResult> {
    if f.len() != 8 {
        return Err(Error::LengthMismatch {
            left: 8,
            right: f.len(),
        });
    }
    let input = StateVector::from_signal(f)?.extend_with_ancilla();
    let pre = ideal_filter_circuit(&input, kind)?;
    let (out, probability) = pre.postselect(0, kind.control_value())?;
    let scale_a = (8.0 * probability).sqrt();
    Ok(PipelineResult::from_output(
        out,
        scale_a,
        probability,
        Route::Ancilla,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{circular_convolve, max_abs_diff};

    #[test]
    fn p4_are_involutions() {
        for p in [build_lowpass_p4(), build_highpass_p4()] {
            assert!(p.then(&p).unwrap().is_identity());
        }
        let low = build_lowpass_p4();
        assert_eq!(&low.map()[..8], &[0, 1, 10, 11, 12, 13, 14, 7]);
        let high = build_highpass_p4();
        assert_eq!(&high.map()[..8], &[8, 9, 2, 3, 4, 5, 6, 15]);
    }

    #[test]
    fn lowpass_delta() {
        let r = convolve_ideal_filter(&Signal::delta(8).unwrap(), FilterKind::LowPass).unwrap();
        assert!((r.success_probability - 0.375).abs() < 1e-15);
        let h = FrequencyResponse::ideal_lowpass().impulse_response();
        assert!(max_abs_diff(&r.recovered_y, h.samples()) < 1e-14);
    }

    #[test]
    fn highpass_alternating() {
        let a = 1.0 / 8f64.sqrt();
        let f = Signal::from_real(&[a, -a, a, -a, a, -a, a, -a]).unwrap();
        for kind in [FilterKind::HighPass, FilterKind::LowPassComplement] {
            let r = convolve_ideal_filter(&f, kind).unwrap();
            assert!((r.success_probability - 1.0).abs() < 1e-14);
            assert!(max_abs_diff(r.output_state.amplitudes(), f.samples()) < 1e-14);
            let y = circular_convolve(&f, &kind.response().impulse_response()).unwrap();
            assert!(max_abs_diff(&r.recovered_y, y.samples()) < 1e-14);
        }
    }

    #[test]
    fn lowpass_alternating_is_impossible() {
        let a = 1.0 / 8f64.sqrt();
        let f = Signal::from_real(&[a, -a, a, -a, a, -a, a, -a]).unwrap();
        assert!(matches!(
            convolve_ideal_filter(&f, FilterKind::LowPass),
            Err(Error::ImpossibleOutcome(_))
        ));
    }

    #[test]
    fn circuit_is_unitary() {
        for kind in [
            FilterKind::LowPass,
            FilterKind::HighPass,
            FilterKind::LowPassComplement,
        ] {
            let m = ideal_filter_circuit_matrix(kind).unwrap();
            assert!(m.unitarity_deviation() <= 1e-12);
        }
    }

    #[test]
    fn wrong_length() {
        assert!(convolve_ideal_filter(&Signal::delta(4).unwrap(), FilterKind::LowPass).is_err());
        let s = StateVector::zero(3).unwrap();
        assert!(ideal_filter_circuit(&s, FilterKind::LowPass).is_err());
    }
}
