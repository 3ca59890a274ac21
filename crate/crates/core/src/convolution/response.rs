use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::Result;
use crate::numerics::{check_finite, dft, idft, log2_len, Signal, Spectrum, C64};

/// Tolerance for conjugate symmetry and realness checks.
pub const SYMMETRY_TOLERANCE: f64 = 1e-10;

/// Below this magnitude a coefficient has no defined phase.
pub const PHASE_THRESHOLD: f64 = 1e-12;

/// Natural-order frequency response `H_p` of a linear time-invariant system.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyResponse {
    values: Vec<C64>,
    magnitudes: Vec<f64>,
    real_impulse: bool,
}

impl FrequencyResponse {
    pub fn from_values(values: Vec<C64>) -> Result<Self> {
        log2_len(values.len())?;
        check_finite(&values)?;
        let magnitudes = values.iter().map(|v| v.norm()).collect();
        let real_impulse = is_conjugate_symmetric(&values);
        Ok(Self {
            values,
            magnitudes,
            real_impulse,
        })
    }

    pub fn from_spectrum(spectrum: &Spectrum) -> Result<Self> {
        let natural = spectrum.reordered(crate::SpectralOrder::Natural)?;
        Self::from_values(natural.values().to_vec())
    }

    /// DFT of an impulse response.
    pub fn from_impulse(h: &Signal) -> Self {
        Self::from_values(dft(h).values().to_vec()).expect("DFT of a valid signal")
    }

    pub fn from_real_impulse(h: &[f64]) -> Result<Self> {
        Ok(Self::from_impulse(&Signal::from_real(h)?))
    }

    /// `H_p = 1` for all `p`.
    pub fn identity(len: usize) -> Result<Self> {
        Self::from_values(alloc::vec![C64::new(1.0, 0.0); len])
    }

    /// Two-tap moving average `h = [1, 1, 0, 0, 0, 0, 0, 0] / 2`.
    pub fn moving_average() -> Self {
        Self::from_real_impulse(&[0.5, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
            .expect("fixed 8-point impulse")
    }

    /// Ideal 8-point low-pass filter passing `p = 0, 1, 7` with phases
    /// `0, pi/12, -pi/12`.
    pub fn ideal_lowpass() -> Self {
        let mut values = alloc::vec![C64::new(0.0, 0.0); 8];
        values[0] = C64::new(1.0, 0.0);
        values[1] = C64::from_polar(1.0, PI / 12.0);
        values[7] = C64::from_polar(1.0, -PI / 12.0);
        Self::from_values(values).expect("fixed 8-point response")
    }

    /// Ideal 8-point high-pass filter, zero at `p = 0, 1, 7` and one elsewhere.
    pub fn ideal_highpass() -> Self {
        let values = (0..8)
            .map(|p| C64::new(if matches!(p, 0 | 1 | 7) { 0.0 } else { 1.0 }, 0.0))
            .collect();
        Self::from_values(values).expect("fixed 8-point response")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn magnitudes(&self) -> &[f64] {
        &self.magnitudes
    }

    /// `arg H_p`, or `None` where `|H_p|` is below [`PHASE_THRESHOLD`].
    pub fn phase(&self, p: usize) -> Option<f64> {
        (self.magnitudes[p] > PHASE_THRESHOLD).then(|| self.values[p].arg())
    }

    /// `H_{N-p} = conj(H_p)` with `H_0` and `H_{N/2}` real, i.e. the impulse
    /// response is real.
    pub fn is_real_impulse(&self) -> bool {
        self.real_impulse
    }

    pub fn impulse_response(&self) -> Signal {
        idft(&Spectrum::natural(self.values.clone()).expect("validated length"))
    }

    /// `H'_p = H_p + c`; the impulse response gains `c` times a unit impulse.
    pub fn offset(&self, c: f64) -> Self {
        Self::from_values(self.values.iter().map(|v| v + c).collect())
            .expect("finite offset of a valid response")
    }

    pub fn min_magnitude(&self) -> f64 {
        self.magnitudes
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

fn is_conjugate_symmetric(values: &[C64]) -> bool {
    let n = values.len();
    let close = |a: C64, b: C64| (a - b).norm() <= SYMMETRY_TOLERANCE;
    (1..n).all(|p| close(values[n - p], values[p].conj()))
        && values[0].im.abs() <= SYMMETRY_TOLERANCE
        && values[n / 2].im.abs() <= SYMMETRY_TOLERANCE
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;
    use crate::numerics::max_abs_diff;
    use num_traits::Float;

    #[test]
    fn lowpass_impulse_closed_form() {
        let h = FrequencyResponse::ideal_lowpass().impulse_response();
        let expect: Vec<C64> = (0..8)
            .map(|n| {
                let x = PI * n as f64 / 4.0 + PI / 12.0;
                C64::new((1.0 + 2.0 * x.cos()) / 8.0, 0.0)
            })
            .collect();
        assert!(max_abs_diff(h.samples(), &expect) < 1e-15);
    }

    #[test]
    fn symmetry_flag() {
        assert!(FrequencyResponse::moving_average().is_real_impulse());
        assert!(FrequencyResponse::ideal_lowpass().is_real_impulse());
        assert!(FrequencyResponse::ideal_highpass().is_real_impulse());
        let complex = FrequencyResponse::from_impulse(
            &Signal::new(alloc::vec![C64::new(0.0, 1.0), C64::new(1.0, 0.0)]).unwrap(),
        );
        assert!(!complex.is_real_impulse());
    }

    #[test]
    fn phase_is_undefined_at_zero() {
        let h = FrequencyResponse::moving_average();
        assert_eq!(h.phase(4), None);
        assert!((h.phase(1).unwrap() + 0.3927).abs() < 1e-4);
        assert_eq!(h.phase(0), Some(0.0));
    }

    #[test]
    fn offset_adds_unit_impulse() {
        let h = FrequencyResponse::moving_average();
        let shifted = h.offset(1.0).impulse_response();
        let mut expect = h.impulse_response().into_samples();
        expect[0] += 1.0;
        assert!(max_abs_diff(shifted.samples(), &expect) < 1e-15);
        assert!(h.offset(1.0).min_magnitude() > 1e-6);
    }
}
