use alloc::vec::Vec;

use num_traits::Float;

use super::{
    apply_magnitude_diagonal, apply_phase_bank, phases_from_response, FrequencyResponse,
    MagnitudeDiagonal, PipelineResult, Route, SpectralState,
};
use crate::error::{Error, Result};
use crate::numerics::{Signal, SpectralOrder, C64};
use crate::qft::{conjugate_pairs_to_natural, iqft, paired_to_conjugate_pairs, qft};
use crate::simulator::{ControlPattern, Permutation, SingleQubitGate, StateVector};

/// Where the magnitude diagonal sits relative to the phase operators. Both
/// are diagonal in the same basis, so the result does not depend on it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DPlacement {
    #[default]
    AfterPhases,
    BeforePhases,
}

/// Offsets tried, in order, by [`convolve_with_zero_workaround`].
pub const WORKAROUND_CONSTANTS: [f64; 3] = [1.0, 2.0, 3.0];

const WORKAROUND_MARGIN: f64 = 1e-6;

impl SpectralState {
    fn permuted(self, perm: &Permutation, order: SpectralOrder) -> Result<Self> {
        Ok(Self {
            state: self.state.apply_permutation(perm)?,
            order,
        })
    }

    fn phased(self, phases: &[C64]) -> Result<Self> {
        Ok(Self {
            state: self.state.apply_phases(phases)?,
            order: self.order,
        })
    }
}

fn prepare(f: &Signal, response: &FrequencyResponse) -> Result<StateVector> {
    if response.len() != f.len() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: response.len(),
        });
    }
    StateVector::from_signal(f)
}

fn finish(spectrum: SpectralState, norm: f64, route: Route) -> Result<PipelineResult> {
    spectrum.expect_order(SpectralOrder::Natural)?;
    let out = iqft(&spectrum.state, SpectralOrder::Natural)?;
    let scale_a = norm * (out.len() as f64).sqrt();
    Ok(PipelineResult::from_output(out, scale_a, 1.0, route))
}

/// Convolves a unit-norm `f` with the filter `response`, modeling the
/// magnitude step as a renormalized diagonal.
///
/// Eight-point real-impulse responses whose `H_1, H_2, H_3` are nonzero run
/// through the paired QFT and the controlled phase bank. Everything else
/// (any power-of-two length, complex impulse responses, zeros among
/// `H_1..H_3`) runs in natural order with one phase per index.
pub fn convolve_abstract(
    f: &Signal,
    response: &FrequencyResponse,
    placement: DPlacement,
) -> Result<PipelineResult> {
    let input = prepare(f, response)?;
    if input.len() == 8 {
        if let Ok(bank) = phases_from_response(response) {
            return phase_bank_route(&input, response, &bank, placement);
        }
    }
    diagonal_route(&input, response, placement)
}

fn phase_bank_route(
    input: &StateVector,
    response: &FrequencyResponse,
    bank: &super::PhaseBank,
    placement: DPlacement,
) -> Result<PipelineResult> {
    let spectrum = SpectralState {
        state: qft(input, SpectralOrder::Paired)?,
        order: SpectralOrder::Paired,
    }
    .permuted(&paired_to_conjugate_pairs(), SpectralOrder::ConjugatePairs)?;
    let to_natural = conjugate_pairs_to_natural(8)?;

    let (spectrum, norm) = match placement {
        DPlacement::AfterPhases => {
            let v =
                apply_phase_bank(&spectrum, bank)?.permuted(&to_natural, SpectralOrder::Natural)?;
            let d = MagnitudeDiagonal::from_response(response, SpectralOrder::Natural)?;
            apply_magnitude_diagonal(&v, &d)?
        }
        DPlacement::BeforePhases => {
            let d = MagnitudeDiagonal::from_response(response, SpectralOrder::ConjugatePairs)?;
            let (v, norm) = apply_magnitude_diagonal(&spectrum, &d)?;
            let v = apply_phase_bank(&v, bank)?.permuted(&to_natural, SpectralOrder::Natural)?;
            (v, norm)
        }
    };
    finish(spectrum, norm, Route::PhaseBank)
}

fn diagonal_route(
    input: &StateVector,
    response: &FrequencyResponse,
    placement: DPlacement,
) -> Result<PipelineResult> {
    let spectrum = SpectralState {
        state: qft(input, SpectralOrder::Natural)?,
        order: SpectralOrder::Natural,
    };
    let phases: Vec<C64> = (0..response.len())
        .map(|p| {
            response
                .phase(p)
                .map_or(C64::new(1.0, 0.0), |t| C64::from_polar(1.0, t))
        })
        .collect();
    let d = MagnitudeDiagonal::from_response(response, SpectralOrder::Natural)?;
    let (spectrum, norm) = match placement {
        DPlacement::AfterPhases => apply_magnitude_diagonal(&spectrum.phased(&phases)?, &d)?,
        DPlacement::BeforePhases => {
            let (v, norm) = apply_magnitude_diagonal(&spectrum, &d)?;
            (v.phased(&phases)?, norm)
        }
    };
    finish(spectrum, norm, Route::Diagonal)
}

#[derive(Debug, Clone, PartialEq)]
pub struct WorkaroundResult {
    /// Pipeline run on `H + constant`; its output is proportional to
    /// `y' = y + constant * f`.
    pub shifted: PipelineResult,
    pub constant: f64,
    /// `y = y' - constant * f`.
    pub recovered_y: Vec<C64>,
}

/// Handles responses with zeros by convolving with `H_p + c` instead, for
/// the first `c` in [`WORKAROUND_CONSTANTS`] that keeps every coefficient away
/// from zero, then subtracting `c f`.
pub fn convolve_with_zero_workaround(
    f: &Signal,
    response: &FrequencyResponse,
) -> Result<WorkaroundResult> {
    let (constant, shifted_response) = WORKAROUND_CONSTANTS
        .iter()
        .map(|&c| (c, response.offset(c)))
        .find(|(_, r)| r.min_magnitude() > WORKAROUND_MARGIN)
        .ok_or(Error::NoWorkaroundConstant)?;
    let shifted = convolve_abstract(f, &shifted_response, DPlacement::AfterPhases)?;
    let recovered_y = shifted
        .recovered_y
        .iter()
        .zip(f.samples())
        .map(|(y, x)| y - x * constant)
        .collect();
    Ok(WorkaroundResult {
        shifted,
        constant,
        recovered_y,
    })
}

/// Two-qubit convolution with a real impulse response: QFT into the order
/// `F_3, F_1, F_2, F_0`, controlled phases, the swap `(0, 3)` back to natural
/// order, then `D = diag(|H_0|, |H_1|, |H_2|, |H_1|)`.
pub fn convolve_2qubit(f: &Signal, response: &FrequencyResponse) -> Result<PipelineResult> {
    if f.len() != 4 {
        return Err(Error::LengthMismatch {
            left: 4,
            right: f.len(),
        });
    }
    let input = prepare(f, response)?;
    if !response.is_real_impulse() {
        return Err(Error::NotConjugateSymmetric);
    }
    let h = response.values();
    let sign = |x: f64| if x < 0.0 { -1.0 } else { 1.0 };

    let mut s = qft(&input, SpectralOrder::ConjugatePairs)?;
    let phi1 = response.phase(1).unwrap_or(0.0);
    s = s.apply_gate(
        &SingleQubitGate::phase_pair(phi1),
        1,
        &ControlPattern::new(&[(0, false)])?,
    )?;
    let signs =
        SingleQubitGate::diagonal(C64::new(sign(h[2].re), 0.0), C64::new(sign(h[0].re), 0.0))?;
    s = s.apply_gate(&signs, 1, &ControlPattern::new(&[(0, true)])?)?;
    let spectrum = SpectralState {
        state: s,
        order: SpectralOrder::ConjugatePairs,
    }
    .permuted(&conjugate_pairs_to_natural(4)?, SpectralOrder::Natural)?;

    let m = response.magnitudes();
    let d = MagnitudeDiagonal::new(alloc::vec![m[0], m[1], m[2], m[1]], SpectralOrder::Natural)?;
    let (spectrum, norm) = apply_magnitude_diagonal(&spectrum, &d)?;
    finish(spectrum, norm, Route::TwoQubit)
}
