//! Circular convolution through the quantum Fourier transform, simulated on
//! dense state vectors.
//!
//! The crate is `no_std` (it needs `alloc`). It is organized bottom-up:
//!
//! - [`numerics`]: complex helpers, the direct DFT and the time-domain
//!   circular convolution used as the ground-truth oracle.
//! - [`simulator`]: an r-qubit state vector with controlled single-qubit
//!   gates, permutations, ancilla extension and analytic post-selection.
//! - [`qft`]: the QFT and its inverse in natural, paired and conjugate-pair
//!   output orderings, plus the ancilla-controlled inverse.
//! - [`convolution`]: frequency responses, the controlled phase bank, the
//!   magnitude diagonal, and the complete 1-, 2- and 3-qubit pipelines.
//!
//! Qubits are numbered from 0 with qubit 0 the most significant bit of the
//! basis-state index, so an ancilla prepended with
//! [`StateVector::extend_with_ancilla`] splits the register into a
//! `[top; bottom]` pair of blocks.

#![no_std]
#![forbid(unsafe_code)]
// `Float` supplies sqrt/sin/cos without std. When a std-enabled build pulls in
// num-traits' `std` feature (dev-dependencies do), the inherent methods win
// and the imports look unused.
#![allow(unused_imports)]

extern crate alloc;

pub mod convolution;
mod error;
pub mod numerics;
pub mod qft;
pub mod simulator;

pub use error::{Error, Result};
pub use numerics::{
    circular_convolve, dft, idft, max_abs_diff, normalize, Signal, SpectralOrder, Spectrum, C64,
};
pub use simulator::{ControlPattern, DenseMatrix, Permutation, SingleQubitGate, StateVector};
