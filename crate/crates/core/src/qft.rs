//! Quantum Fourier transform in natural, paired and conjugate-pair output
//! orderings.
//!
//! With `W = exp(-i 2 pi / N)`, the natural-order transform maps amplitudes
//! `a_n` to `(1/sqrt N) sum_n a_n W^{np}`. The other orderings hold the same
//! amplitudes on permuted basis states, see [`SpectralOrder::sequence`].

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::numerics::{from_order, log2_len, to_order, twiddle, SpectralOrder, C64};
use crate::simulator::{ControlPattern, DenseMatrix, Permutation, SingleQubitGate, StateVector};

fn transform(amps: &[C64], inverse: bool) -> Vec<C64> {
    let n = amps.len();
    let scale = 1.0 / (n as f64).sqrt();
    (0..n)
        .map(|p| {
            amps.iter()
                .enumerate()
                .map(|(k, a)| {
                    let w = twiddle(n, k * p);
                    a * if inverse { w.conj() } else { w }
                })
                .sum::<C64>()
                * scale
        })
        .collect()
}

/// QFT with the output laid out in `ordering`.
pub fn qft(state: &StateVector, ordering: SpectralOrder) -> Result<StateVector> {
    let natural = transform(state.amplitudes(), false);
    Ok(StateVector::raw(to_order(&natural, ordering)?))
}

/// Adjoint of [`qft`] for the same ordering.
pub fn iqft(state: &StateVector, ordering: SpectralOrder) -> Result<StateVector> {
    let natural = from_order(state.amplitudes(), ordering)?;
    Ok(StateVector::raw(transform(&natural, true)))
}

/// Dense matrix of [`qft`] in `ordering`.
pub fn qft_matrix(len: usize, ordering: SpectralOrder) -> Result<DenseMatrix> {
    let seq = ordering.sequence(len)?;
    let dft = DenseMatrix::dft(len);
    Ok(DenseMatrix::from_fn(len, |i, j| dft.get(seq[i], j)))
}

/// Natural-order QFT built from Hadamards, controlled phase rotations and a
/// final qubit reversal made of CNOT triples.
pub fn qft_circuit(state: &StateVector) -> Result<StateVector> {
    let r = state.qubits();
    let mut s = state.clone();
    for j in 0..r {
        s = s.apply_gate(&SingleQubitGate::hadamard(), j, &ControlPattern::none())?;
        for m in 2..=(r - j) {
            let rotation = SingleQubitGate::phase(-2.0 * PI / (1u64 << m) as f64);
            let control = ControlPattern::new(&[(j + m - 1, true)])?;
            s = s.apply_gate(&rotation, j, &control)?;
        }
    }
    for j in 0..r / 2 {
        s = swap(&s, j, r - 1 - j)?;
    }
    Ok(s)
}

fn swap(s: &StateVector, a: usize, b: usize) -> Result<StateVector> {
    let not = SingleQubitGate::not();
    let ab = ControlPattern::new(&[(a, true)])?;
    let ba = ControlPattern::new(&[(b, true)])?;
    s.apply_gate(&not, b, &ab)?
        .apply_gate(&not, a, &ba)?
        .apply_gate(&not, b, &ab)
}

/// Permutation moving a spectrum laid out in `from` to the layout `to`.
pub fn order_permutation(
    len: usize,
    from: SpectralOrder,
    to: SpectralOrder,
) -> Result<Permutation> {
    let src = from.sequence(len)?;
    let dst = to.sequence(len)?;
    let mut position = alloc::vec![0; len];
    for (j, &p) in dst.iter().enumerate() {
        position[p] = j;
    }
    Permutation::new(src.iter().map(|&p| position[p]).collect())
}

/// Paired order `[7,3,5,1,6,2,4,0]` to the conjugate-pair order
/// `[7,1,6,2,5,3,4,0]`.
pub fn paired_to_conjugate_pairs() -> Permutation {
    order_permutation(8, SpectralOrder::Paired, SpectralOrder::ConjugatePairs)
        .expect("fixed 8-point orderings")
}

/// Conjugate-pair order to natural order. For `len = 4` this is the swap
/// `(0, 3)`.
pub fn conjugate_pairs_to_natural(len: usize) -> Result<Permutation> {
    order_permutation(len, SpectralOrder::ConjugatePairs, SpectralOrder::Natural)
}

/// Paired order to natural order, the composition of the two maps above.
pub fn paired_to_natural() -> Permutation {
    paired_to_conjugate_pairs()
        .then(&conjugate_pairs_to_natural(8).expect("fixed 8-point ordering"))
        .expect("equal sizes")
}

/// Natural-order inverse QFT on the lower `r` qubits of an `(r+1)`-qubit
/// register, acting only where qubit 0 reads `control_value`.
pub fn controlled_iqft(state: &StateVector, control_value: bool) -> Result<StateVector> {
    if state.qubits() < 2 {
        return Err(Error::TooFewQubits {
            required: 2,
            found: state.qubits(),
        });
    }
    log2_len(state.len() / 2)?;
    state.map_block(control_value, |block| iqft(block, SpectralOrder::Natural))
}
