//! Shared helpers for integration tests. The reference routines here are
//! written from the formulas directly and do not call into the crate.

#![allow(dead_code)]

use std::f64::consts::PI;

use proptest::prelude::*;
use qconv_core::{Signal, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `y_n = sum_k f_k h_{(n-k) mod N}`.
pub fn naive_convolve(f: &[C64], h: &[C64]) -> Vec<C64> {
    let n = f.len();
    let mut y = vec![c(0.0, 0.0); n];
    for (i, out) in y.iter_mut().enumerate() {
        for k in 0..n {
            *out += f[k] * h[(i + n - k) % n];
        }
    }
    y
}

/// `F_p = sum_n f_n exp(-2 pi i n p / N)`.
pub fn naive_dft(f: &[C64]) -> Vec<C64> {
    let n = f.len();
    (0..n)
        .map(|p| {
            (0..n)
                .map(|k| f[k] * C64::from_polar(1.0, -2.0 * PI * (k * p) as f64 / n as f64))
                .sum()
        })
        .collect()
}

pub fn max_dev(a: &[C64], b: &[C64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x.re - y.re).abs().max((x.im - y.im).abs()))
        .fold(0.0, f64::max)
}

pub fn unit(values: Vec<C64>) -> Vec<C64> {
    let norm = values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    values.into_iter().map(|v| v / norm).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut impl Rng, len: usize) -> Vec<C64> {
    (0..len)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

pub fn random_real(rng: &mut impl Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn random_unit_signal(rng: &mut impl Rng, len: usize) -> Signal {
    Signal::normalized(random_complex(rng, len)).unwrap().0
}

/// Complex vectors of the given length with norm bounded away from zero.
pub fn complex_vec(len: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), len)
        .prop_map(|v| v.into_iter().map(|(a, b)| c(a, b)).collect::<Vec<_>>())
        .prop_filter("norm bounded away from zero", |v: &Vec<C64>| {
            v.iter().map(|x| x.norm_sqr()).sum::<f64>() > 1e-3
        })
}

pub fn unit_vec(len: usize) -> impl Strategy<Value = Vec<C64>> {
    complex_vec(len).prop_map(unit)
}

pub fn real_vec(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0..1.0f64, len)
}

/// Power-of-two length `2^r` with `r` in the given range.
pub fn pow2_len(r: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = usize> {
    r.prop_map(|r| 1usize << r)
}
