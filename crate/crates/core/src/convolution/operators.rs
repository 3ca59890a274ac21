use alloc::vec::Vec;

use num_traits::Float;

use super::{FrequencyResponse, SpectralState};
use crate::error::{Error, Result};
use crate::numerics::{SpectralOrder, C64};
use crate::simulator::{ControlPattern, SingleQubitGate, StateVector, ZERO_THRESHOLD};

/// Phases of `H_1, H_2, H_3` and signs of `H_0, H_4` for a real 8-point
/// impulse response.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseBank {
    pub phases: [f64; 3],
    pub sign0: f64,
    pub sign4: f64,
}

impl PhaseBank {
    /// All phases zero, both signs positive.
    pub fn trivial() -> Self {
        Self {
            phases: [0.0; 3],
            sign0: 1.0,
            sign4: 1.0,
        }
    }

    /// `U_0 = diag(s_4, s_0)` and `U_k = diag(e^{-i phi_k}, e^{i phi_k})`.
    pub fn unitaries(&self) -> [SingleQubitGate; 4] {
        let u0 = SingleQubitGate::diagonal(C64::new(self.sign4, 0.0), C64::new(self.sign0, 0.0))
            .expect("signs have unit modulus");
        [
            u0,
            SingleQubitGate::phase_pair(self.phases[0]),
            SingleQubitGate::phase_pair(self.phases[1]),
            SingleQubitGate::phase_pair(self.phases[2]),
        ]
    }
}

fn sign(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// Reads the phase bank off an 8-point real-impulse frequency response.
pub fn phases_from_response(response: &FrequencyResponse) -> Result<PhaseBank> {
    if response.len() != 8 {
        return Err(Error::LengthMismatch {
            left: 8,
            right: response.len(),
        });
    }
    if !response.is_real_impulse() {
        return Err(Error::NotConjugateSymmetric);
    }
    let mut phases = [0.0; 3];
    for (k, phase) in phases.iter_mut().enumerate() {
        *phase = response.phase(k + 1).ok_or(Error::UndefinedPhase(k + 1))?;
    }
    let v = response.values();
    Ok(PhaseBank {
        phases,
        sign0: sign(v[0].re),
        sign4: sign(v[4].re),
    })
}

/// Applies the controlled phase bank to an 8-point spectrum in
/// conjugate-pair order `[F7, F1, F6, F2, F5, F3, F4, F0]`.
///
/// Qubits 0 and 1 select the operator on qubit 2: `00 -> U_1`, `01 -> U_2`,
/// `10 -> U_3`, `11 -> U_0`.
pub fn apply_phase_bank(spectrum: &SpectralState, bank: &PhaseBank) -> Result<SpectralState> {
    spectrum.expect_order(SpectralOrder::ConjugatePairs)?;
    if spectrum.state.len() != 8 {
        return Err(Error::LengthMismatch {
            left: 8,
            right: spectrum.state.len(),
        });
    }
    let [u0, u1, u2, u3] = bank.unitaries();
    let mut s = spectrum.state.clone();
    for (gate, c0, c1) in [
        (u1, false, false),
        (u2, false, true),
        (u3, true, false),
        (u0, true, true),
    ] {
        let controls = ControlPattern::new(&[(0, c0), (1, c1)])?;
        s = s.apply_gate(&gate, 2, &controls)?;
    }
    Ok(SpectralState {
        state: s,
        order: spectrum.order,
    })
}

/// Multiplies a one-qubit state by `diag(b0, b1)` and renormalizes.
/// Returns the new state and `A = sqrt(|a0 b0|^2 + |a1 b1|^2)`.
pub fn pointwise_qubit_multiply(a: &StateVector, b: (C64, C64)) -> Result<(StateVector, f64)> {
    if a.qubits() != 1 {
        return Err(Error::LengthMismatch {
            left: 2,
            right: a.len(),
        });
    }
    a.apply_diagonal(&[b.0, b.1])
}

/// `diag(b0, b1) / sqrt(b0 b1)`, the determinant-one form of a positive
/// diagonal. Only unitary when `b0 = b1`.
pub fn unit_determinant_diagonal(b0: f64, b1: f64) -> Result<SingleQubitGate> {
    for b in [b0, b1] {
        if !b.is_finite() || b <= 0.0 {
            return Err(Error::NonPositive(b));
        }
    }
    let s = (b0 * b1).sqrt();
    let z = C64::new(0.0, 0.0);
    let m = [[C64::new(b0 / s, 0.0), z], [z, C64::new(b1 / s, 0.0)]];
    Ok(SingleQubitGate::new(m).unwrap_or_else(|_| SingleQubitGate::new_nonunitary(m)))
}

/// Non-negative diagonal of `|H_p|` laid out in a spectral ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct MagnitudeDiagonal {
    entries: Vec<f64>,
    order: SpectralOrder,
}

impl MagnitudeDiagonal {
    pub fn new(entries: Vec<f64>, order: SpectralOrder) -> Result<Self> {
        order.sequence(entries.len())?;
        if let Some(&bad) = entries.iter().find(|e| !e.is_finite() || **e < 0.0) {
            return Err(Error::NonPositive(bad));
        }
        Ok(Self { entries, order })
    }

    /// `|H_p|` placed per `order`.
    pub fn from_response(response: &FrequencyResponse, order: SpectralOrder) -> Result<Self> {
        let seq = order.sequence(response.len())?;
        let m = response.magnitudes();
        Ok(Self {
            entries: seq.iter().map(|&p| m[p]).collect(),
            order,
        })
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn order(&self) -> SpectralOrder {
        self.order
    }
}

/// Applies `D` and renormalizes; returns the state and the norm `|D psi|`.
pub fn apply_magnitude_diagonal(
    spectrum: &SpectralState,
    d: &MagnitudeDiagonal,
) -> Result<(SpectralState, f64)> {
    spectrum.expect_order(d.order)?;
    let diag: Vec<C64> = d.entries.iter().map(|&m| C64::new(m, 0.0)).collect();
    let (state, norm) = spectrum.state.apply_diagonal(&diag)?;
    Ok((
        SpectralState {
            state,
            order: spectrum.order,
        },
        norm,
    ))
}

const CONV1_PRODUCT_TOLERANCE: f64 = 1e-10;

/// `[[h0, h1], [h1, h0]] / sqrt(h0^2 + h1^2)` together with whether it is
/// unitary. The off-diagonal of `M^dagger M` is twice the product of the
/// normalized entries, so the matrix counts as unitary when that product is
/// at most `1e-10`.
pub fn conv1_matrix(h0: f64, h1: f64) -> Result<(SingleQubitGate, bool)> {
    let norm = (h0 * h0 + h1 * h1).sqrt();
    if norm.is_nan() || norm <= ZERO_THRESHOLD {
        return Err(Error::ZeroImpulse);
    }
    let (a, b) = (C64::new(h0 / norm, 0.0), C64::new(h1 / norm, 0.0));
    let m = [[a, b], [b, a]];
    let gate = SingleQubitGate::new(m).unwrap_or_else(|_| SingleQubitGate::new_nonunitary(m));
    let unitary = (a.re * b.re).abs() <= CONV1_PRODUCT_TOLERANCE;
    Ok((gate, unitary))
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;
    use crate::numerics::max_abs_diff;
    use core::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn moving_average_bank() {
        let bank = phases_from_response(&FrequencyResponse::moving_average()).unwrap();
        let expect = [-0.3927, -0.7854, -1.1781];
        for (got, want) in bank.phases.iter().zip(expect) {
            assert!((got - want).abs() < 1e-4);
        }
        assert_eq!((bank.sign0, bank.sign4), (1.0, 1.0));
    }

    #[test]
    fn bank_errors() {
        assert_eq!(
            phases_from_response(&FrequencyResponse::ideal_lowpass()),
            Err(Error::UndefinedPhase(2))
        );
        let h = FrequencyResponse::identity(4).unwrap();
        assert!(phases_from_response(&h).is_err());
        let bank = phases_from_response(&FrequencyResponse::identity(8).unwrap()).unwrap();
        assert_eq!(bank, PhaseBank::trivial());
    }

    #[test]
    fn negative_signs() {
        // h = [0, 1, 0, ..., 0] shifted by 4 gives H_p = (-1)^p
        let mut h = [0.0; 8];
        h[4] = 1.0;
        let bank =
            phases_from_response(&FrequencyResponse::from_real_impulse(&h).unwrap()).unwrap();
        assert_eq!(bank.sign0, 1.0);
        assert_eq!(bank.sign4, 1.0);
        h[4] = -1.0;
        let bank =
            phases_from_response(&FrequencyResponse::from_real_impulse(&h).unwrap()).unwrap();
        assert_eq!((bank.sign0, bank.sign4), (-1.0, -1.0));
    }

    #[test]
    fn pointwise_multiply_cases() {
        let plus = StateVector::from_amplitudes(alloc::vec![c(FRAC_1_SQRT_2, 0.0); 2]).unwrap();
        let (out, a) = pointwise_qubit_multiply(&plus, (c(1.0, 0.0), c(0.0, 0.0))).unwrap();
        assert!((a - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(max_abs_diff(out.amplitudes(), &[c(1.0, 0.0), c(0.0, 0.0)]) < 1e-15);

        let s = StateVector::from_amplitudes(alloc::vec![c(0.6, 0.0), c(0.8, 0.0)]).unwrap();
        let (out, a) = pointwise_qubit_multiply(&s, (c(1.0, 0.0), c(1.0, 0.0))).unwrap();
        assert!((a - 1.0).abs() < 1e-15);
        assert!(max_abs_diff(out.amplitudes(), s.amplitudes()) < 1e-15);

        // A = sqrt(0.3^2 + 0.4^2) = 0.5
        let (out, a) = pointwise_qubit_multiply(&s, (c(0.5, 0.0), c(0.5, 0.0))).unwrap();
        assert!((a - 0.5).abs() < 1e-15);
        assert!(max_abs_diff(out.amplitudes(), s.amplitudes()) < 1e-15);

        let zero = StateVector::zero(1).unwrap();
        assert!(matches!(
            pointwise_qubit_multiply(&zero, (c(0.0, 0.0), c(1.0, 0.0))),
            Err(Error::Annihilation(_))
        ));
    }

    #[test]
    fn unit_determinant_cases() {
        let g = unit_determinant_diagonal(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap();
        assert!(g.is_unitary());
        assert!(max_abs_diff(&g.matrix()[0], &[c(1.0, 0.0), c(0.0, 0.0)]) < 1e-15);

        let (b0, b1) = ((PI / 6.0).cos(), (PI / 6.0).sin());
        let g = unit_determinant_diagonal(b0, b1).unwrap();
        assert!(!g.is_unitary());
        let m = g.matrix();
        assert!((m[0][0].re - 1.3161).abs() < 1e-4);
        assert!((m[1][1].re - 0.7599).abs() < 1e-4);
        let prefactor = 1.0 / ((2.0 * PI / 6.0).sin() / 2.0).sqrt();
        assert!((m[0][0].re - prefactor * b0).abs() < 1e-14);
        assert!((g.determinant() - c(1.0, 0.0)).norm() < 1e-12);

        assert!(unit_determinant_diagonal(0.0, 1.0).is_err());
        assert!(unit_determinant_diagonal(1.0, -2.0).is_err());
    }

    #[test]
    fn magnitude_diagonal_layout() {
        let d = MagnitudeDiagonal::from_response(
            &FrequencyResponse::moving_average(),
            SpectralOrder::ConjugatePairs,
        )
        .unwrap();
        let expect = [0.9239, 0.9239, 0.7071, 0.7071, 0.3827, 0.3827, 0.0, 1.0];
        for (got, want) in d.entries().iter().zip(expect) {
            assert!((got - want).abs() < 1e-4);
        }
        assert!(MagnitudeDiagonal::new(alloc::vec![1.0, -1.0], SpectralOrder::Natural).is_err());
    }

    #[test]
    fn magnitude_diagonal_checks_order() {
        let d = MagnitudeDiagonal::new(alloc::vec![1.0; 8], SpectralOrder::Natural).unwrap();
        let s = SpectralState {
            state: StateVector::zero(3).unwrap(),
            order: SpectralOrder::ConjugatePairs,
        };
        assert!(matches!(
            apply_magnitude_diagonal(&s, &d),
            Err(Error::OrderingMismatch { .. })
        ));
    }

    #[test]
    fn conv1_unitarity_report() {
        let (g, u) = conv1_matrix(1.0, 0.0).unwrap();
        assert!(u);
        assert_eq!(*g.matrix(), *SingleQubitGate::identity().matrix());
        let (g, u) = conv1_matrix(0.0, 1.0).unwrap();
        assert!(u);
        assert_eq!(*g.matrix(), *SingleQubitGate::not().matrix());
        let (g, u) = conv1_matrix(0.6, 0.8).unwrap();
        assert!(!u);
        // Gram off-diagonal 2 * 0.6 * 0.8
        assert!((g.unitarity_deviation() - 0.96).abs() < 1e-12);
        assert_eq!(conv1_matrix(0.0, 0.0), Err(Error::ZeroImpulse));
    }
}
