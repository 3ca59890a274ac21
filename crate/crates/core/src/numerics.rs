//! Complex vector helpers, the direct DFT, and circular convolution.
//!
//! Everything here is the classical reference path: the pipelines in
//! [`crate::convolution`] are checked against [`circular_convolve`], which is
//! a plain double loop in the time domain.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};

/// Double-precision complex scalar.
pub type C64 = Complex<f64>;

/// Default absolute tolerance on unit-norm data.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Returns `log2(len)` when `len` is a power of two and at least 2.
pub fn log2_len(len: usize) -> Result<usize> {
    if len >= 2 && len.is_power_of_two() {
        Ok(len.trailing_zeros() as usize)
    } else {
        Err(Error::InvalidLength(len))
    }
}

/// `exp(-i 2 pi k / n)`, with `k` reduced modulo `n` before the angle is formed.
pub fn twiddle(n: usize, k: usize) -> C64 {
    let angle = -2.0 * PI * ((k % n) as f64) / (n as f64);
    C64::new(angle.cos(), angle.sin())
}

/// Sum of squared magnitudes.
pub fn energy(values: &[C64]) -> f64 {
    values.iter().map(|v| v.norm_sqr()).sum()
}

/// Max over components of `max(|re_a - re_b|, |im_a - im_b|)`.
///
/// Returns `f64::INFINITY` for slices of different length.
pub fn max_abs_diff(a: &[C64], b: &[C64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x.re - y.re).abs().max((x.im - y.im).abs()))
        .fold(0.0, f64::max)
}

/// Scales `values` to unit Euclidean norm and returns the original norm.
pub fn normalize(values: &[C64]) -> Result<(Vec<C64>, f64)> {
    check_finite(values)?;
    let norm = energy(values).sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroNorm);
    }
    Ok((values.iter().map(|v| v / norm).collect(), norm))
}

pub(crate) fn check_finite(values: &[C64]) -> Result<()> {
    match values
        .iter()
        .position(|v| !(v.re.is_finite() && v.im.is_finite()))
    {
        Some(i) => Err(Error::NonFinite(i)),
        None => Ok(()),
    }
}

/// A time-domain signal of power-of-two length.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<C64>,
}

impl Signal {
    pub fn new(samples: Vec<C64>) -> Result<Self> {
        log2_len(samples.len())?;
        check_finite(&samples)?;
        Ok(Self { samples })
    }

    pub fn from_real(samples: &[f64]) -> Result<Self> {
        Self::new(samples.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Builds a unit-norm signal, returning it together with the input norm.
    pub fn normalized(samples: Vec<C64>) -> Result<(Self, f64)> {
        log2_len(samples.len())?;
        let (unit, norm) = normalize(&samples)?;
        Ok((Self { samples: unit }, norm))
    }

    /// Unit impulse of length `len`.
    pub fn delta(len: usize) -> Result<Self> {
        let mut samples = alloc::vec![C64::new(0.0, 0.0); len];
        if let Some(first) = samples.first_mut() {
            *first = C64::new(1.0, 0.0);
        }
        Self::new(samples)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Number of qubits needed to hold the signal as amplitudes.
    pub fn qubits(&self) -> usize {
        self.samples.len().trailing_zeros() as usize
    }

    pub fn samples(&self) -> &[C64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<C64> {
        self.samples
    }

    pub fn norm(&self) -> f64 {
        energy(&self.samples).sqrt()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (energy(&self.samples) - 1.0).abs() <= tol
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            samples: self.samples.iter().map(|v| v * factor).collect(),
        }
    }
}

/// Order in which spectral coefficients are laid out across basis states.
///
/// The sequence of an ordering lists, for each basis-state position, the
/// frequency index stored there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectralOrder {
    /// `F_0, F_1, ..., F_{N-1}`.
    Natural,
    /// `F_7, F_3, F_5, F_1, F_6, F_2, F_4, F_0`: the output order of the
    /// paired 3-qubit QFT. Only defined for `N = 8`.
    Paired,
    /// Conjugate pairs `(F_{N-1}, F_1), (F_{N-2}, F_2), ..., (F_{N/2}, F_0)`.
    /// For `N = 8` this is `F_7, F_1, F_6, F_2, F_5, F_3, F_4, F_0`; for
    /// `N = 4` it is `F_3, F_1, F_2, F_0`.
    ConjugatePairs,
}

/// Output order of the paired 3-qubit QFT.
pub const PAIRED_SEQUENCE: [usize; 8] = [7, 3, 5, 1, 6, 2, 4, 0];

impl SpectralOrder {
    /// Frequency index held at each position for a spectrum of length `len`.
    pub fn sequence(self, len: usize) -> Result<Vec<usize>> {
        log2_len(len)?;
        match self {
            Self::Natural => Ok((0..len).collect()),
            Self::Paired if len == 8 => Ok(PAIRED_SEQUENCE.to_vec()),
            Self::Paired => Err(Error::UnsupportedOrdering { order: self, len }),
            Self::ConjugatePairs => {
                let half = len / 2;
                let mut seq = Vec::with_capacity(len);
                for k in 1..half {
                    seq.push(len - k);
                    seq.push(k);
                }
                seq.push(half);
                seq.push(0);
                Ok(seq)
            }
        }
    }
}

/// Reorders natural-order values into `order`.
pub fn to_order(natural: &[C64], order: SpectralOrder) -> Result<Vec<C64>> {
    let seq = order.sequence(natural.len())?;
    Ok(seq.iter().map(|&p| natural[p]).collect())
}

/// Inverse of [`to_order`].
pub fn from_order(ordered: &[C64], order: SpectralOrder) -> Result<Vec<C64>> {
    let seq = order.sequence(ordered.len())?;
    let mut natural = alloc::vec![C64::new(0.0, 0.0); ordered.len()];
    for (pos, &p) in seq.iter().enumerate() {
        natural[p] = ordered[pos];
    }
    Ok(natural)
}

/// Spectral coefficients tagged with their layout.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<C64>,
    ordering: SpectralOrder,
}

impl Spectrum {
    pub fn new(values: Vec<C64>, ordering: SpectralOrder) -> Result<Self> {
        ordering.sequence(values.len())?;
        check_finite(&values)?;
        Ok(Self { values, ordering })
    }

    pub fn natural(values: Vec<C64>) -> Result<Self> {
        Self::new(values, SpectralOrder::Natural)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn ordering(&self) -> SpectralOrder {
        self.ordering
    }

    /// Values in storage order.
    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// Coefficient at frequency index `p`, whatever the storage order.
    pub fn at(&self, p: usize) -> C64 {
        match self.ordering {
            SpectralOrder::Natural => self.values[p],
            order => {
                let seq = order
                    .sequence(self.values.len())
                    .expect("validated on construction");
                let pos = seq
                    .iter()
                    .position(|&q| q == p)
                    .expect("sequence is a bijection");
                self.values[pos]
            }
        }
    }

    pub fn reordered(&self, ordering: SpectralOrder) -> Result<Self> {
        let natural = from_order(&self.values, self.ordering)?;
        Self::new(to_order(&natural, ordering)?, ordering)
    }

    pub fn energy(&self) -> f64 {
        energy(&self.values)
    }
}

/// Direct `O(N^2)` DFT, `F_p = sum_n f_n W^{np}` with `W = exp(-i 2 pi / N)`.
pub fn dft(signal: &Signal) -> Spectrum {
    let n = signal.len();
    let values = (0..n)
        .map(|p| {
            signal
                .samples()
                .iter()
                .enumerate()
                .map(|(k, f)| f * twiddle(n, k * p))
                .sum()
        })
        .collect();
    Spectrum {
        values,
        ordering: SpectralOrder::Natural,
    }
}

/// Inverse DFT, `f_n = (1/N) sum_p F_p W^{-np}`. Non-natural spectra are
/// brought to natural order first.
pub fn idft(spectrum: &Spectrum) -> Signal {
    let natural = from_order(spectrum.values(), spectrum.ordering()).expect("validated length");
    let n = natural.len();
    let scale = 1.0 / n as f64;
    let samples = (0..n)
        .map(|k| {
            natural
                .iter()
                .enumerate()
                .map(|(p, v)| v * twiddle(n, k * p).conj())
                .sum::<C64>()
                * scale
        })
        .collect();
    Signal { samples }
}

/// `y_n = sum_k f_k h_{(n - k) mod N}`, evaluated directly.
pub fn circular_convolve(f: &Signal, h: &Signal) -> Result<Signal> {
    let n = f.len();
    if h.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: h.len(),
        });
    }
    let (fs, hs) = (f.samples(), h.samples());
    let samples = (0..n)
        .map(|i| (0..n).map(|k| fs[k] * hs[(i + n - k) % n]).sum())
        .collect();
    Ok(Signal { samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn dft_of_moving_average() {
        let h = Signal::from_real(&[0.5, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let spec = dft(&h);
        let expect = [
            (0, c(1.0, 0.0)),
            (1, c(0.8536, -0.3536)),
            (2, c(0.5, -0.5)),
            (3, c(0.1464, -0.3536)),
            (4, c(0.0, 0.0)),
        ];
        for (p, v) in expect {
            assert!(
                max_abs_diff(&[spec.at(p)], &[v]) < 1e-4,
                "H_{p} = {}",
                spec.at(p)
            );
        }
    }

    #[test]
    fn delta_and_constant_transforms() {
        let spec = dft(&Signal::delta(8).unwrap());
        assert!(spec
            .values()
            .iter()
            .all(|v| (v - c(1.0, 0.0)).norm() < 1e-15));

        let k = 0.3;
        let spec = dft(&Signal::from_real(&[k; 8]).unwrap());
        assert!((spec.at(0) - c(8.0 * k, 0.0)).norm() < 1e-14);
        assert!((1..8).all(|p| spec.at(p).norm() < 1e-14));
    }

    #[test]
    fn idft_of_ones_is_delta() {
        let spec = Spectrum::natural(vec![c(1.0, 0.0); 8]).unwrap();
        let sig = idft(&spec);
        let delta = Signal::delta(8).unwrap();
        assert!(max_abs_diff(sig.samples(), delta.samples()) < 1e-15);
    }

    #[test]
    fn rejects_bad_lengths() {
        assert_eq!(Signal::from_real(&[1.0; 6]), Err(Error::InvalidLength(6)));
        assert_eq!(Signal::from_real(&[1.0]), Err(Error::InvalidLength(1)));
        let f = Signal::delta(8).unwrap();
        let h = Signal::delta(4).unwrap();
        assert_eq!(
            circular_convolve(&f, &h),
            Err(Error::LengthMismatch { left: 8, right: 4 })
        );
        assert!(Spectrum::new(vec![c(0.0, 0.0); 4], SpectralOrder::Paired).is_err());
    }

    #[test]
    fn normalize_cases() {
        let (v, n) = normalize(&[c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(n, 2.0);
        assert_eq!(v[0], c(1.0, 0.0));

        let (v, n) = normalize(&[c(1.0, 0.0); 4]).unwrap();
        assert_eq!(n, 2.0);
        assert!(v.iter().all(|x| *x == c(0.5, 0.0)));

        assert_eq!(normalize(&[c(0.0, 0.0); 2]), Err(Error::ZeroNorm));
        assert_eq!(normalize(&[c(f64::NAN, 0.0)]), Err(Error::NonFinite(0)));
    }

    #[test]
    fn convolution_identity_element() {
        let h = Signal::from_real(&[0.5, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let d = Signal::delta(8).unwrap();
        assert_eq!(circular_convolve(&d, &h).unwrap(), h);
        assert_eq!(circular_convolve(&h, &d).unwrap(), h);
    }

    #[test]
    fn order_sequences() {
        assert_eq!(
            SpectralOrder::ConjugatePairs.sequence(8).unwrap(),
            vec![7, 1, 6, 2, 5, 3, 4, 0]
        );
        assert_eq!(
            SpectralOrder::ConjugatePairs.sequence(4).unwrap(),
            vec![3, 1, 2, 0]
        );
        assert_eq!(
            SpectralOrder::ConjugatePairs.sequence(2).unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            SpectralOrder::Paired.sequence(8).unwrap(),
            vec![7, 3, 5, 1, 6, 2, 4, 0]
        );
        assert!(SpectralOrder::Paired.sequence(16).is_err());
    }

    #[test]
    fn spectrum_at_ignores_layout() {
        let natural: Vec<C64> = (0..8).map(|p| c(p as f64, 0.0)).collect();
        let spec = Spectrum::natural(natural).unwrap();
        for order in [SpectralOrder::Paired, SpectralOrder::ConjugatePairs] {
            let r = spec.reordered(order).unwrap();
            assert!((0..8).all(|p| r.at(p) == c(p as f64, 0.0)));
            assert_eq!(r.reordered(SpectralOrder::Natural).unwrap(), spec);
        }
    }
}
